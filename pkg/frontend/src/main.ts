/**
 * Console entry point. The page is served by the session service itself
 * (static mount), so the API lives on the same origin. A session id in the
 * URL fragment attaches to an existing session; otherwise one is created
 * and the fragment updated so reloads keep the session.
 */

import { SessionApi } from './api.js';
import { SessionApp } from './app.js';

async function boot(): Promise<void> {
  const root = document.getElementById('app');
  if (!root) throw new Error('missing #app container');
  const params = new URLSearchParams(window.location.search);
  const api = new SessionApi({ baseUrl: '', token: params.get('token') });

  let sessionId = window.location.hash.replace(/^#/, '');
  if (!sessionId) {
    const created = await api.createSession();
    sessionId = created.session_id;
    window.location.hash = sessionId;
  }

  const app = new SessionApp({ api, sessionId, root });
  await app.open();
}

boot().catch((err) => {
  const root = document.getElementById('app');
  if (root) root.textContent = `failed to start console: ${err instanceof Error ? err.message : String(err)}`;
});
