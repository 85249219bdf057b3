import { beforeEach, describe, expect, it } from 'vitest';

import { ApiError, type SessionClient, type SessionState } from '../src/api.js';
import { SessionApp } from '../src/app.js';
import type { SseFrame } from '../src/sse.js';

function baseState(overrides: Partial<SessionState> = {}): SessionState {
  return {
    session_id: 's1',
    phase: 'AwaitingPrompt',
    proposed_command: null,
    approved_command: null,
    selection: [],
    scene_paths: [],
    scene_text: null,
    coarse_db: null,
    fine_db: null,
    pending_edit: null,
    render_command: null,
    last_error: null,
    journal_offset: 0,
    ...overrides,
  };
}

const SCENE_TEXT = JSON.stringify({
  '/World': {},
  '/World/Camera': { focalLength: 'NUM' },
  '/World/Terrain': { size: 'NUM' },
});

const PROPOSED = {
  line: 'python -m Infinigen.datagen.manage_jobs --output_folder out --num_scenes 1',
  canonical: 'python -m Infinigen.datagen.manage_jobs --num_scenes 1 --output_folder out',
  executable: true,
  errors: [],
  warnings: [],
};

/** Scripted server: state is whatever the test put there; calls recorded. */
class FakeServer implements SessionClient {
  state = baseState();
  scene = '';
  calls: unknown[][] = [];
  failWith: ApiError | null = null;

  private op(name: string, ...args: unknown[]): Promise<SessionState> {
    this.calls.push([name, ...args]);
    if (this.failWith) return Promise.reject(this.failWith);
    return Promise.resolve(structuredClone(this.state));
  }

  createSession(sessionId?: string) {
    this.calls.push(['createSession', sessionId]);
    return Promise.resolve({ session_id: 's1', state: structuredClone(this.state) });
  }
  submitPrompt(sid: string, text: string) {
    return this.op('submitPrompt', text);
  }
  approveCommand() {
    return this.op('approveCommand');
  }
  rejectCommand() {
    return this.op('rejectCommand');
  }
  submitEdit(sid: string, text: string, selection: string[]) {
    return this.op('submitEdit', text, selection);
  }
  approveEdit() {
    return this.op('approveEdit');
  }
  rejectEdit() {
    return this.op('rejectEdit');
  }
  requestRender() {
    return this.op('requestRender');
  }
  getState() {
    return Promise.resolve(structuredClone(this.state));
  }
  getScene() {
    return Promise.resolve(this.scene);
  }
  eventsUrl() {
    return 'http://unused/events';
  }
  headers(): Record<string, string> {
    return {};
  }
}

interface Harness {
  server: FakeServer;
  root: HTMLElement;
  app: SessionApp;
  inject: (seq: number, kind: string) => Promise<void>;
  emitRaw: (frame: SseFrame) => void;
}

async function makeApp(): Promise<Harness> {
  const server = new FakeServer();
  const root = document.createElement('div');
  document.body.appendChild(root);
  let emit: (frame: SseFrame) => void = () => {};
  const app = new SessionApp({
    api: server,
    sessionId: 's1',
    root,
    subscribe: (_after, onFrame) => {
      emit = onFrame;
      return { close: () => {}, lastSeq: () => 0 };
    },
  });
  await app.open();
  const inject = async (seq: number, kind: string) => {
    emit({ id: seq, event: 'journal', data: JSON.stringify({ seq, kind, timestamp: seq, payload: {} }) });
    await app.settled();
  };
  return { server, root, app, inject, emitRaw: (f) => emit(f) };
}

function text(root: HTMLElement, selector: string): string {
  return root.querySelector(selector)?.textContent ?? '';
}

async function flush(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
}

beforeEach(() => {
  document.body.innerHTML = '';
});

describe('SessionApp', () => {
  it('renders the initial awaiting-prompt view', async () => {
    const { root } = await makeApp();
    expect(text(root, '#phase-badge')).toBe('AwaitingPrompt');
    expect(root.querySelector('#prompt-form')).not.toBeNull();
    expect(root.querySelector('#approval-card')).toBeNull();
    expect(text(root, '#journal-panel')).toContain('No events yet.');
  });

  it('updates only after journal events arrive, never optimistically', async () => {
    const { server, root, inject } = await makeApp();
    const input = root.querySelector<HTMLTextAreaElement>('#prompt-input')!;
    input.value = 'A desert scene with a snake';
    root.querySelector<HTMLButtonElement>('#prompt-send')!.click();
    await flush();

    expect(server.calls).toContainEqual(['submitPrompt', 'A desert scene with a snake']);
    // The mutation response is ignored; the badge waits for the stream.
    expect(text(root, '#phase-badge')).toBe('AwaitingPrompt');

    server.state = baseState({ phase: 'CommandProposed', proposed_command: PROPOSED, journal_offset: 2 });
    await inject(1, 'UserPrompt');
    await inject(2, 'CommandProposed');

    expect(text(root, '#phase-badge')).toBe('CommandProposed');
    const card = root.querySelector('#approval-card')!;
    expect(card.getAttribute('data-kind')).toBe('command');
    expect(text(root, '#card-command')).toBe(PROPOSED.line);
    expect(text(root, '#card-canonical')).toBe(PROPOSED.canonical);
    const logSeqs = [...root.querySelectorAll('#event-log li')].map((li) => li.getAttribute('data-seq'));
    expect(logSeqs).toEqual(['1', '2']);
  });

  it('shows validation diagnostics on a non-executable command card', async () => {
    const { server, root, inject } = await makeApp();
    server.state = baseState({
      phase: 'CommandProposed',
      journal_offset: 2,
      proposed_command: {
        line: 'python -m Infinigen.datagen.manage_jobs --cleanup sometimes',
        canonical: null,
        executable: false,
        errors: [{ code: 'BadEnumValue', message: 'sometimes is not a valid choice', span: null }],
        warnings: [],
      },
    });
    await inject(1, 'UserPrompt');
    await inject(2, 'CommandProposed');

    expect(text(root, '#approval-card h2')).toContain('not executable');
    expect(text(root, '.diagnostic.error')).toBe('BadEnumValue: sometimes is not a valid choice');
  });

  it('shows API errors inline and leaves the card alone', async () => {
    const { server, root, inject } = await makeApp();
    server.state = baseState({ phase: 'CommandProposed', proposed_command: PROPOSED, journal_offset: 1 });
    await inject(1, 'CommandProposed');

    server.failWith = new ApiError(409, 'NotExecutable', 'command not executable');
    root.querySelector<HTMLButtonElement>('#approve-command-btn')!.click();
    await flush();

    const notice = root.querySelector<HTMLElement>('#notice')!;
    expect(notice.hidden).toBe(false);
    expect(notice.textContent).toBe('NotExecutable: command not executable');
    expect(root.querySelector('#approval-card')).not.toBeNull();
    expect(text(root, '#phase-badge')).toBe('CommandProposed');

    // The next user action clears the stale notice before the call runs.
    server.failWith = null;
    root.querySelector<HTMLButtonElement>('#reject-command-btn')!.click();
    await flush();
    expect(root.querySelector<HTMLElement>('#notice')!.hidden).toBe(true);
  });

  it('renders the scene outline and passes the selection through to edits', async () => {
    const { server, root, inject } = await makeApp();
    server.scene = SCENE_TEXT;
    server.state = baseState({
      phase: 'EditingCoarse',
      journal_offset: 3,
      scene_text: SCENE_TEXT,
      scene_paths: ['/World', '/World/Camera', '/World/Terrain'],
      coarse_db: { path: 'artifacts/index_coarse.json', sha256: 'x' },
    });
    await inject(3, 'SceneIngested');

    expect(text(root, '#scene-panel h2')).toContain('coarse');
    expect(text(root, '#scene-tree')).toContain('focalLength: NUM');

    for (const path of ['/World/Camera', '/World/Terrain']) {
      const box = root.querySelector<HTMLInputElement>(`input[data-path="${path}"]`)!;
      box.checked = true;
      box.dispatchEvent(new Event('change'));
    }
    const edit = root.querySelector<HTMLTextAreaElement>('#edit-input')!;
    edit.value = 'Point the camera at the terrain';
    root.querySelector<HTMLButtonElement>('#edit-send')!.click();
    await flush();

    expect(server.calls).toContainEqual([
      'submitEdit',
      'Point the camera at the terrain',
      ['/World/Camera', '/World/Terrain'],
    ]);
  });

  it('reseeds the selection checkboxes from the journaled server state', async () => {
    const { server, root, app, inject } = await makeApp();
    server.scene = SCENE_TEXT;
    server.state = baseState({
      phase: 'EditingCoarse',
      journal_offset: 4,
      scene_text: SCENE_TEXT,
      scene_paths: ['/World', '/World/Camera', '/World/Terrain'],
      selection: ['/World/Camera'],
      pending_edit: {
        stage: 'coarse',
        plan: { thinking: 't', reflection: 'r', adjustments: 'a', output: '1. step' },
        code: "import bpy\ncam = bpy.data.objects['Camera']\n",
      },
    });
    await inject(4, 'EditProposed');

    expect(app.selected).toEqual(new Set(['/World/Camera']));
    expect(root.querySelector<HTMLInputElement>('input[data-path="/World/Camera"]')!.checked).toBe(true);
    expect(root.querySelector('#approval-card')!.getAttribute('data-kind')).toBe('edit');
    expect(text(root, '#card-code')).toContain("bpy.data.objects['Camera']");
    // A pending card hides the edit form until the user decides.
    expect(root.querySelector('#edit-form')).toBeNull();
  });

  it('ignores non-journal frames, malformed data, and duplicate seqs', async () => {
    const { root, app, inject, emitRaw } = await makeApp();
    emitRaw({ id: 9, event: 'ping', data: '{}' });
    emitRaw({ id: 9, event: 'journal', data: 'not json' });
    emitRaw({ id: 9, event: 'journal', data: '{"seq": "x", "kind": 3}' });
    await app.settled();
    expect(root.querySelectorAll('#event-log li')).toHaveLength(0);

    await inject(1, 'UserPrompt');
    await inject(1, 'UserPrompt');
    expect(root.querySelectorAll('#event-log li')).toHaveLength(1);
  });

  it('shows scene parse diagnostics verbatim', async () => {
    const { server, root, inject } = await makeApp();
    server.scene = 'not a dictionary';
    server.state = baseState({ phase: 'EditingCoarse', journal_offset: 3, scene_text: 'not a dictionary' });
    await inject(3, 'SceneIngested');

    let expected = '';
    try {
      JSON.parse('not a dictionary');
    } catch (err) {
      expected = (err as Error).message;
    }
    const diag = root.querySelector<HTMLElement>('#scene-error')!;
    expect(diag.hidden).toBe(false);
    expect(diag.textContent).toBe(expected);
  });

  it('surfaces journaled server errors and the finished render command', async () => {
    const { server, root, inject } = await makeApp();
    server.state = baseState({
      phase: 'Done',
      journal_offset: 11,
      render_command: 'python -m Infinigen.datagen.manage_jobs --num_scenes 1 --output_folder outputs/demo',
      last_error: { code: 'NoCommandFound', message: 'response contains no command', fatal: false },
    });
    await inject(11, 'RenderRequested');

    expect(text(root, '#phase-badge')).toBe('Done');
    expect(text(root, '#render-command')).toContain('--output_folder outputs/demo');
    expect(text(root, '#server-error')).toBe('NoCommandFound: response contains no command');
    expect(root.querySelector('#prompt-form')).toBeNull();
    expect(root.querySelector('#render-panel')).toBeNull();
  });

  it('keeps a typed draft across event-driven re-renders', async () => {
    const { root, inject } = await makeApp();
    const input = root.querySelector<HTMLTextAreaElement>('#prompt-input')!;
    input.value = 'half-typed idea';
    await inject(1, 'UserPrompt');
    expect(root.querySelector<HTMLTextAreaElement>('#prompt-input')!.value).toBe('half-typed idea');
  });
});
