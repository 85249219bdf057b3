/**
 * Session console view.
 *
 * The view is a pure projection of server state: user actions fire API
 * calls, and the DOM re-renders only once the journal stream delivers the
 * resulting events and a fresh `GET state` lands. Nothing here re-derives
 * phase transitions, so a reload rebuilds the exact same view from the
 * server's journal.
 */

import { ApiError, type SessionClient, type SessionState } from './api.js';
import { subscribeJournal, type JournalSubscription, type SseFrame } from './sse.js';
import { parseSceneDict, renderTree, SceneDictError, type PrimNode } from './tree.js';

export interface LogEntry {
  seq: number;
  kind: string;
}

export interface AppDeps {
  api: SessionClient;
  sessionId: string;
  root: HTMLElement;
  /** Test seam; defaults to a live SSE subscription on the API origin. */
  subscribe?: (after: number, onFrame: (frame: SseFrame) => void) => JournalSubscription;
}

const EDITING_PHASES = ['EditingCoarse', 'EditingFine'];

export class SessionApp {
  state: SessionState | null = null;
  sceneText = '';
  log: LogEntry[] = [];
  selected = new Set<string>();
  notice: string | null = null;

  private appliedSeq = 0;
  private refreshChain: Promise<void> = Promise.resolve();
  private subscription: JournalSubscription | null = null;

  constructor(private readonly deps: AppDeps) {}

  /** Fetch the current state, render, and start following the journal. */
  async open(): Promise<void> {
    const { api, sessionId } = this.deps;
    this.state = await api.getState(sessionId);
    this.appliedSeq = this.state.journal_offset;
    this.sceneText = await api.getScene(sessionId);
    this.selected = new Set(this.state.selection);
    this.render();
    const subscribe =
      this.deps.subscribe ??
      ((after: number, onFrame: (frame: SseFrame) => void) =>
        subscribeJournal({
          url: (offset) => api.eventsUrl(sessionId, offset, 'live'),
          after,
          headers: api.headers(),
          onFrame,
        }));
    this.subscription = subscribe(0, (frame) => this.onFrame(frame));
  }

  close(): void {
    this.subscription?.close();
    this.subscription = null;
  }

  /** Wait for queued event-driven refreshes to settle (used by tests). */
  async settled(): Promise<void> {
    await this.refreshChain;
  }

  // -- journal stream --

  private onFrame(frame: SseFrame): void {
    if (frame.event !== 'journal') return;
    let entry: { seq: number; kind: string };
    try {
      const parsed = JSON.parse(frame.data) as { seq?: unknown; kind?: unknown };
      if (typeof parsed.seq !== 'number' || typeof parsed.kind !== 'string') return;
      entry = { seq: parsed.seq, kind: parsed.kind };
    } catch {
      return;
    }
    if (!this.log.some((e) => e.seq === entry.seq)) {
      this.log.push(entry);
      this.log.sort((a, b) => a.seq - b.seq);
    }
    this.refreshChain = this.refreshChain
      .then(() => this.refresh(entry.seq))
      .catch((err) => {
        this.notice = describeError(err);
        this.render();
      });
  }

  private async refresh(seq: number): Promise<void> {
    if (seq <= this.appliedSeq) {
      this.render();
      return;
    }
    const { api, sessionId } = this.deps;
    const state = await api.getState(sessionId);
    const scene = await api.getScene(sessionId);
    if (state.journal_offset > this.appliedSeq) {
      this.state = state;
      this.appliedSeq = state.journal_offset;
      this.sceneText = scene;
      // Selection restarts from what the server journaled, so a reloaded
      // tab shows the same checkboxes as one that never went away.
      this.selected = new Set(state.selection);
    }
    this.render();
  }

  // -- user intents (no optimistic updates; errors shown inline) --

  async sendPrompt(): Promise<void> {
    const input = this.input('#prompt-input');
    if (!input) return;
    await this.attempt(async () => {
      await this.deps.api.submitPrompt(this.deps.sessionId, input.value);
      input.value = '';
    });
  }

  async approveCommand(): Promise<void> {
    await this.attempt(() => this.deps.api.approveCommand(this.deps.sessionId));
  }

  async rejectCommand(): Promise<void> {
    await this.attempt(() => this.deps.api.rejectCommand(this.deps.sessionId));
  }

  async sendEdit(): Promise<void> {
    const input = this.input('#edit-input');
    if (!input) return;
    await this.attempt(async () => {
      await this.deps.api.submitEdit(this.deps.sessionId, input.value, [...this.selected]);
      input.value = '';
    });
  }

  async approveEdit(): Promise<void> {
    await this.attempt(() => this.deps.api.approveEdit(this.deps.sessionId));
  }

  async rejectEdit(): Promise<void> {
    await this.attempt(() => this.deps.api.rejectEdit(this.deps.sessionId));
  }

  async requestRender(): Promise<void> {
    await this.attempt(() => this.deps.api.requestRender(this.deps.sessionId));
  }

  private async attempt(op: () => Promise<unknown>): Promise<void> {
    this.notice = null;
    this.renderNotice();
    try {
      await op();
    } catch (err) {
      this.notice = describeError(err);
      this.renderNotice();
    }
  }

  // -- rendering --

  private input(selector: string): HTMLTextAreaElement | null {
    return this.deps.root.querySelector<HTMLTextAreaElement>(selector);
  }

  private render(): void {
    const root = this.deps.root;
    const promptDraft = this.input('#prompt-input')?.value ?? '';
    const editDraft = this.input('#edit-input')?.value ?? '';

    root.innerHTML = this.viewHtml();

    const promptInput = this.input('#prompt-input');
    if (promptInput) promptInput.value = promptDraft;
    const editInput = this.input('#edit-input');
    if (editInput) editInput.value = editDraft;

    this.renderScene();
    this.bind();
  }

  private renderNotice(): void {
    const banner = this.deps.root.querySelector<HTMLElement>('#notice');
    if (!banner) return;
    banner.textContent = this.notice ?? '';
    banner.hidden = this.notice === null;
  }

  private renderScene(): void {
    const host = this.deps.root.querySelector<HTMLElement>('#scene-tree');
    const diag = this.deps.root.querySelector<HTMLElement>('#scene-error');
    if (!host || !diag) return;
    let nodes: PrimNode[];
    try {
      nodes = parseSceneDict(this.sceneText);
    } catch (err) {
      diag.hidden = false;
      diag.textContent = err instanceof SceneDictError ? err.message : String(err);
      host.textContent = '';
      return;
    }
    diag.hidden = true;
    diag.textContent = '';
    renderTree(nodes, host, {
      selected: this.selected,
      onToggle: (path, checked) => {
        if (checked) this.selected.add(path);
        else this.selected.delete(path);
      },
    });
  }

  private bind(): void {
    const on = (selector: string, handler: () => Promise<void>) => {
      const el = this.deps.root.querySelector<HTMLButtonElement>(selector);
      if (el) el.addEventListener('click', () => void handler());
    };
    on('#prompt-send', () => this.sendPrompt());
    on('#approve-command-btn', () => this.approveCommand());
    on('#reject-command-btn', () => this.rejectCommand());
    on('#edit-send', () => this.sendEdit());
    on('#approve-edit-btn', () => this.approveEdit());
    on('#reject-edit-btn', () => this.rejectEdit());
    on('#render-btn', () => this.requestRender());
  }

  private viewHtml(): string {
    const state = this.state;
    if (!state) return '<p class="empty">Loading…</p>';
    const parts: string[] = [];

    parts.push(`
      <header class="console-header">
        <h1>Scene session</h1>
        <span class="session-id">${esc(state.session_id)}</span>
        <span id="phase-badge" class="phase-badge phase-${esc(state.phase)}">${esc(state.phase)}</span>
      </header>`);

    parts.push(`<div id="notice" class="notice"${this.notice === null ? ' hidden' : ''}>${esc(this.notice ?? '')}</div>`);

    if (state.last_error) {
      parts.push(`
      <div id="server-error" class="server-error">${esc(state.last_error.code)}: ${esc(state.last_error.message)}${
        state.last_error.fatal ? ' (fatal)' : ''
      }</div>`);
    }

    if (state.phase === 'AwaitingPrompt') {
      parts.push(`
      <section class="panel" id="prompt-form">
        <h2>Describe a scene</h2>
        <textarea id="prompt-input" placeholder="A desert scene with a snake"></textarea>
        <button id="prompt-send">Propose command</button>
      </section>`);
    }

    if (state.proposed_command) {
      parts.push(this.commandCardHtml(state));
    }
    if (state.pending_edit) {
      parts.push(this.editCardHtml(state));
    }

    const editing = EDITING_PHASES.includes(state.phase);
    if (editing || state.scene_text) {
      parts.push(`
      <section class="panel" id="scene-panel">
        <h2>Scene outline${state.fine_db ? ' (fine)' : state.coarse_db ? ' (coarse)' : ''}</h2>
        <div id="scene-error" class="notice" hidden></div>
        <div id="scene-tree" class="scene-tree"></div>
      </section>`);
    }

    if (editing && !state.pending_edit) {
      parts.push(`
      <section class="panel" id="edit-form">
        <h2>Request an edit</h2>
        <textarea id="edit-input" placeholder="Make the camera follow the snake"></textarea>
        <button id="edit-send">Propose edit</button>
      </section>`);
    }

    if (state.phase === 'RenderQueued') {
      parts.push(`
      <section class="panel" id="render-panel">
        <h2>Render</h2>
        <button id="render-btn">Request render</button>
      </section>`);
    }

    if (state.render_command) {
      parts.push(`
      <section class="panel" id="render-done">
        <h2>Render requested</h2>
        <pre id="render-command">${esc(state.render_command)}</pre>
      </section>`);
    }

    parts.push(`
      <section class="panel" id="journal-panel">
        <h2>Journal</h2>
        ${
          this.log.length === 0
            ? '<p class="empty">No events yet.</p>'
            : `<ol id="event-log" class="event-log">${this.log
                .map((e) => `<li data-seq="${e.seq}">${e.seq} <span class="kind">${esc(e.kind)}</span></li>`)
                .join('')}</ol>`
        }
      </section>`);

    return parts.join('\n');
  }

  private commandCardHtml(state: SessionState): string {
    const cmd = state.proposed_command;
    if (!cmd) return '';
    const diagnostics = [
      ...cmd.errors.map((d) => `<p class="diagnostic error">${esc(d.code)}: ${esc(d.message)}</p>`),
      ...cmd.warnings.map((d) => `<p class="diagnostic warning">${esc(d.code)}: ${esc(d.message)}</p>`),
    ].join('');
    return `
      <section class="panel" id="approval-card" data-kind="command">
        <h2>Proposed command ${cmd.executable ? '(executable)' : '(not executable)'}</h2>
        <pre id="card-command">${esc(cmd.line)}</pre>
        ${cmd.canonical && cmd.canonical !== cmd.line ? `<p class="plan-field"><span class="label">canonical</span></p><pre id="card-canonical">${esc(cmd.canonical)}</pre>` : ''}
        ${diagnostics}
        <button id="approve-command-btn" class="approve">Approve</button>
        <button id="reject-command-btn" class="reject">Reject</button>
      </section>`;
  }

  private editCardHtml(state: SessionState): string {
    const edit = state.pending_edit;
    if (!edit) return '';
    const field = (label: string, value: string) =>
      `<div class="plan-field"><span class="label">${esc(label)}</span><div>${esc(value)}</div></div>`;
    return `
      <section class="panel" id="approval-card" data-kind="edit">
        <h2>Proposed ${esc(edit.stage)} edit</h2>
        ${field('thinking', edit.plan.thinking)}
        ${field('reflection', edit.plan.reflection)}
        ${field('adjustments', edit.plan.adjustments)}
        ${field('plan', edit.plan.output)}
        <p class="plan-field"><span class="label">generated code</span></p>
        <pre id="card-code">${esc(edit.code)}</pre>
        <button id="approve-edit-btn" class="approve">Approve</button>
        <button id="reject-edit-btn" class="reject">Reject</button>
      </section>`;
  }
}

function esc(text: string): string {
  return text
    .replaceAll('&', '&amp;')
    .replaceAll('<', '&lt;')
    .replaceAll('>', '&gt;')
    .replaceAll('"', '&quot;')
    .replaceAll("'", '&#39;');
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) return `${err.code}: ${err.message}`;
  if (err instanceof Error) return err.message;
  return String(err);
}
