/**
 * Server-sent-events reader built on fetch + ReadableStream.
 *
 * EventSource cannot send the x-api-token header and offers no clean way to
 * resume from a journal offset, so the console reads the stream by hand.
 * Frames are separated by a blank line; fields are "id", "event" and "data".
 */

export interface SseFrame {
  id: number | null;
  event: string;
  data: string;
}

/** Split buffered stream text into complete frames plus the unfinished tail. */
export function parseSseChunk(buffer: string): { frames: SseFrame[]; rest: string } {
  const frames: SseFrame[] = [];
  let rest = buffer;
  for (;;) {
    const cut = rest.indexOf('\n\n');
    if (cut < 0) break;
    const block = rest.slice(0, cut);
    rest = rest.slice(cut + 2);
    const frame = parseBlock(block);
    if (frame) frames.push(frame);
  }
  return { frames, rest };
}

/** Blocks with no data field (keepalive comments, retry hints) are dropped. */
function parseBlock(block: string): SseFrame | null {
  let id: number | null = null;
  let event = 'message';
  let sawData = false;
  const data: string[] = [];
  for (const line of block.split('\n')) {
    const sep = line.indexOf(':');
    if (sep <= 0) continue;
    const field = line.slice(0, sep);
    let value = line.slice(sep + 1);
    if (value.startsWith(' ')) value = value.slice(1);
    if (field === 'id') {
      const seq = Number(value);
      id = Number.isFinite(seq) ? seq : null;
    } else if (field === 'event') {
      event = value;
    } else if (field === 'data') {
      sawData = true;
      data.push(value);
    }
  }
  if (!sawData) return null;
  return { id, event, data: data.join('\n') };
}

export interface JournalSubscription {
  close(): void;
  /** Highest frame id seen so far; reconnects resume after it. */
  lastSeq(): number;
}

export interface SubscribeOptions {
  /** Builds the stream URL for a given resume offset. */
  url: (after: number) => string;
  after?: number;
  headers?: Record<string, string>;
  onFrame: (frame: SseFrame) => void;
  /** Called when the server closes the stream and reconnection is off. */
  onEnd?: () => void;
  onError?: (error: Error) => void;
  /** Delay before resuming after a drop; null disables reconnection. */
  reconnectDelayMs?: number | null;
  fetchFn?: typeof fetch;
}

/**
 * Open a long-lived subscription. The reader loop survives connection drops
 * by reconnecting with ?after=<last seen id>, so no frame is delivered twice
 * and none is skipped as long as the server keeps the journal.
 */
export function subscribeJournal(options: SubscribeOptions): JournalSubscription {
  const fetchFn = options.fetchFn ?? ((input: RequestInfo | URL, init?: RequestInit) => fetch(input, init));
  const reconnectDelayMs = options.reconnectDelayMs === undefined ? 1000 : options.reconnectDelayMs;
  let lastSeq = options.after ?? 0;
  let closed = false;
  let controller: AbortController | null = null;
  let timer: ReturnType<typeof setTimeout> | null = null;

  const scheduleOrStop = (error?: Error) => {
    if (closed) return;
    if (reconnectDelayMs === null) {
      if (error) options.onError?.(error);
      else options.onEnd?.();
      return;
    }
    timer = setTimeout(() => {
      timer = null;
      void connect();
    }, reconnectDelayMs);
  };

  const connect = async (): Promise<void> => {
    controller = new AbortController();
    let response: Response;
    try {
      response = await fetchFn(options.url(lastSeq), {
        headers: { accept: 'text/event-stream', ...options.headers },
        signal: controller.signal,
      });
    } catch (err) {
      if (!closed) scheduleOrStop(asError(err));
      return;
    }
    if (!response.ok || !response.body) {
      scheduleOrStop(new Error(`event stream failed: ${response.status}`));
      return;
    }
    const reader = response.body.getReader();
    const decoder = new TextDecoder();
    let buffer = '';
    try {
      for (;;) {
        const { done, value } = await reader.read();
        if (done) break;
        buffer += decoder.decode(value, { stream: true });
        const { frames, rest } = parseSseChunk(buffer);
        buffer = rest;
        for (const frame of frames) {
          if (frame.id !== null && frame.id > lastSeq) lastSeq = frame.id;
          options.onFrame(frame);
        }
      }
    } catch (err) {
      if (!closed) scheduleOrStop(asError(err));
      return;
    }
    scheduleOrStop();
  };

  void connect();

  return {
    close() {
      closed = true;
      if (timer !== null) clearTimeout(timer);
      controller?.abort();
    },
    lastSeq: () => lastSeq,
  };
}

function asError(err: unknown): Error {
  return err instanceof Error ? err : new Error(String(err));
}
