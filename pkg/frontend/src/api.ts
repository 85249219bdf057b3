/**
 * Typed client for the scene session service HTTP/JSON API.
 *
 * Mutations return the post-operation state, but the console deliberately
 * renders only from the journal stream plus fresh state fetches, so the
 * return values here are for callers that want them (tests, scripts).
 */

export interface Diagnostic {
  code: string;
  message: string;
  span: [number, number] | null;
}

export interface ProposedCommand {
  line: string;
  canonical: string | null;
  executable: boolean;
  errors: Diagnostic[];
  warnings: Diagnostic[];
}

export interface EditPlan {
  thinking: string;
  reflection: string;
  adjustments: string;
  output: string;
}

export interface PendingEdit {
  stage: string;
  plan: EditPlan;
  code: string;
}

export interface DatabaseRef {
  path: string;
  sha256: string;
}

export interface ServerError {
  code: string;
  message: string;
  fatal: boolean;
}

export interface SessionState {
  session_id: string;
  phase: string;
  proposed_command: ProposedCommand | null;
  approved_command: string | null;
  selection: string[];
  scene_paths: string[];
  scene_text: string | null;
  coarse_db: DatabaseRef | null;
  fine_db: DatabaseRef | null;
  pending_edit: PendingEdit | null;
  render_command: string | null;
  last_error: ServerError | null;
  journal_offset: number;
}

/** Error payloads arrive as {"detail": {"error": code, "message": text}}. */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = 'ApiError';
    this.status = status;
    this.code = code;
  }
}

export interface ApiOptions {
  /** Origin prefix, e.g. "http://127.0.0.1:8000"; empty for same origin. */
  baseUrl?: string;
  /** Optional x-api-token value. */
  token?: string | null;
  /** Injection point for tests. */
  fetchFn?: typeof fetch;
}

/**
 * The surface the console needs; SessionApi is the real implementation,
 * tests may substitute a scripted one.
 */
export interface SessionClient {
  createSession(sessionId?: string): Promise<{ session_id: string; state: SessionState }>;
  submitPrompt(sid: string, text: string): Promise<SessionState>;
  approveCommand(sid: string): Promise<SessionState>;
  rejectCommand(sid: string): Promise<SessionState>;
  submitEdit(sid: string, text: string, selection: string[]): Promise<SessionState>;
  approveEdit(sid: string): Promise<SessionState>;
  rejectEdit(sid: string): Promise<SessionState>;
  requestRender(sid: string): Promise<SessionState>;
  getState(sid: string): Promise<SessionState>;
  getScene(sid: string): Promise<string>;
  eventsUrl(sid: string, after?: number, stream?: 'live' | 'snapshot'): string;
  headers(): Record<string, string>;
}

export class SessionApi implements SessionClient {
  private readonly baseUrl: string;
  private readonly token: string | null;
  private readonly fetchFn: typeof fetch;

  constructor(options: ApiOptions = {}) {
    this.baseUrl = (options.baseUrl ?? '').replace(/\/+$/, '');
    this.token = options.token ?? null;
    // Wrap the global so the call is not an unbound window.fetch invocation.
    this.fetchFn = options.fetchFn ?? ((input, init) => fetch(input, init));
  }

  headers(): Record<string, string> {
    const out: Record<string, string> = {};
    if (this.token) out['x-api-token'] = this.token;
    return out;
  }

  eventsUrl(sid: string, after = 0, stream: 'live' | 'snapshot' = 'live'): string {
    const query = new URLSearchParams({ after: String(after), stream });
    return `${this.baseUrl}/sessions/${encodeURIComponent(sid)}/events?${query}`;
  }

  async createSession(sessionId?: string): Promise<{ session_id: string; state: SessionState }> {
    const body = sessionId ? { session_id: sessionId } : {};
    const data = await this.request('POST', '/sessions', body);
    return data as { session_id: string; state: SessionState };
  }

  async submitPrompt(sid: string, text: string): Promise<SessionState> {
    return this.mutate(sid, 'prompt', { text });
  }

  async approveCommand(sid: string): Promise<SessionState> {
    return this.mutate(sid, 'approve-command');
  }

  async rejectCommand(sid: string): Promise<SessionState> {
    return this.mutate(sid, 'reject-command');
  }

  async submitEdit(sid: string, text: string, selection: string[]): Promise<SessionState> {
    return this.mutate(sid, 'edit', { text, selection });
  }

  async approveEdit(sid: string): Promise<SessionState> {
    return this.mutate(sid, 'approve-edit');
  }

  async rejectEdit(sid: string): Promise<SessionState> {
    return this.mutate(sid, 'reject-edit');
  }

  async requestRender(sid: string): Promise<SessionState> {
    return this.mutate(sid, 'render');
  }

  async getState(sid: string): Promise<SessionState> {
    const data = await this.request('GET', `/sessions/${encodeURIComponent(sid)}/state`);
    return data as SessionState;
  }

  async getScene(sid: string): Promise<string> {
    const response = await this.send('GET', `/sessions/${encodeURIComponent(sid)}/scene`);
    return response.text();
  }

  private async mutate(sid: string, op: string, body?: unknown): Promise<SessionState> {
    const data = await this.request('POST', `/sessions/${encodeURIComponent(sid)}/${op}`, body);
    return (data as { state: SessionState }).state;
  }

  private async send(method: string, path: string, body?: unknown): Promise<Response> {
    const headers = this.headers();
    const init: RequestInit = { method, headers };
    if (body !== undefined) {
      headers['content-type'] = 'application/json';
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      throw await errorFromResponse(response);
    }
    return response;
  }

  private async request(method: string, path: string, body?: unknown): Promise<unknown> {
    const response = await this.send(method, path, body);
    return response.json();
  }
}

async function errorFromResponse(response: Response): Promise<ApiError> {
  let code = 'HttpError';
  let message = `${response.status} ${response.statusText}`.trim();
  try {
    const payload = (await response.json()) as { detail?: { error?: string; message?: string } };
    if (payload.detail && typeof payload.detail === 'object') {
      code = payload.detail.error ?? code;
      message = payload.detail.message ?? message;
    }
  } catch {
    // Non-JSON error body; keep the status line.
  }
  return new ApiError(response.status, code, message);
}
