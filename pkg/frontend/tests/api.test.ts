import { describe, expect, it } from 'vitest';

import { ApiError, SessionApi, type SessionState } from '../src/api.js';

interface Call {
  url: string;
  method: string;
  headers: Record<string, string>;
  body: string | null;
}

function stubFetch(responder: (call: Call) => Response): { calls: Call[]; fetchFn: typeof fetch } {
  const calls: Call[] = [];
  const fetchFn: typeof fetch = async (input, init) => {
    const call: Call = {
      url: String(input),
      method: init?.method ?? 'GET',
      headers: (init?.headers as Record<string, string>) ?? {},
      body: typeof init?.body === 'string' ? init.body : null,
    };
    calls.push(call);
    return responder(call);
  };
  return { calls, fetchFn };
}

function json(data: unknown, status = 200): Response {
  return new Response(JSON.stringify(data), {
    status,
    headers: { 'content-type': 'application/json' },
  });
}

const STATE: Partial<SessionState> = { session_id: 's1', phase: 'AwaitingPrompt', journal_offset: 0 };

describe('SessionApi', () => {
  it('creates sessions with and without an explicit id', async () => {
    const { calls, fetchFn } = stubFetch(() => json({ session_id: 's1', state: STATE }, 201));
    const api = new SessionApi({ baseUrl: 'http://host:9', fetchFn });

    const created = await api.createSession();
    expect(created.session_id).toBe('s1');
    expect(calls[0].url).toBe('http://host:9/sessions');
    expect(calls[0].method).toBe('POST');
    expect(calls[0].body).toBe('{}');

    await api.createSession('demo');
    expect(JSON.parse(calls[1].body ?? '')).toEqual({ session_id: 'demo' });
  });

  it('unwraps the state envelope on mutations', async () => {
    const { calls, fetchFn } = stubFetch(() => json({ state: { ...STATE, phase: 'CommandProposed' } }));
    const api = new SessionApi({ fetchFn });

    const state = await api.submitPrompt('s1', 'a desert');
    expect(state.phase).toBe('CommandProposed');
    expect(calls[0].url).toBe('/sessions/s1/prompt');
    expect(JSON.parse(calls[0].body ?? '')).toEqual({ text: 'a desert' });
    expect(calls[0].headers['content-type']).toBe('application/json');
  });

  it('sends edit text with the selection pass-through', async () => {
    const { calls, fetchFn } = stubFetch(() => json({ state: STATE }));
    const api = new SessionApi({ fetchFn });

    await api.submitEdit('s1', 'tilt the camera', ['/World/Camera', '/World/Terrain']);
    expect(JSON.parse(calls[0].body ?? '')).toEqual({
      text: 'tilt the camera',
      selection: ['/World/Camera', '/World/Terrain'],
    });
  });

  it('returns scene text verbatim', async () => {
    const { fetchFn } = stubFetch(() => new Response('{\n  "/World": {}\n}', { status: 200 }));
    const api = new SessionApi({ fetchFn });
    expect(await api.getScene('s1')).toBe('{\n  "/World": {}\n}');
  });

  it('maps error envelopes to ApiError with status and code', async () => {
    const { fetchFn } = stubFetch(() =>
      json({ detail: { error: 'WrongPhase', message: 'operation requires phase X' } }, 409),
    );
    const api = new SessionApi({ fetchFn });

    const err = await api.approveCommand('s1').catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(409);
    expect((err as ApiError).code).toBe('WrongPhase');
    expect((err as ApiError).message).toBe('operation requires phase X');
  });

  it('falls back to the status line for non-JSON error bodies', async () => {
    const { fetchFn } = stubFetch(() => new Response('gone', { status: 502, statusText: 'Bad Gateway' }));
    const api = new SessionApi({ fetchFn });

    const err = await api.getState('s1').catch((e: unknown) => e);
    expect((err as ApiError).code).toBe('HttpError');
    expect((err as ApiError).message).toContain('502');
  });

  it('adds the token header everywhere when configured', async () => {
    const { calls, fetchFn } = stubFetch(() => json(STATE));
    const api = new SessionApi({ token: 'hunter2', fetchFn });

    await api.getState('s1');
    expect(calls[0].headers['x-api-token']).toBe('hunter2');
    expect(api.headers()).toEqual({ 'x-api-token': 'hunter2' });
  });

  it('builds event stream URLs with resume offset and mode', () => {
    const api = new SessionApi({ baseUrl: 'http://host:9/' });
    expect(api.eventsUrl('s1')).toBe('http://host:9/sessions/s1/events?after=0&stream=live');
    expect(api.eventsUrl('s1', 4, 'snapshot')).toBe('http://host:9/sessions/s1/events?after=4&stream=snapshot');
  });
});
