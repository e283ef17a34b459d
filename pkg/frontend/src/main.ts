/**
 * Browser entry point: mount the app and, when the URL carries a
 * #sessionId fragment, re-attach to that session.
 */

import { createApp } from './app.js';

const root = document.getElementById('app');
if (root) {
  const app = createApp(root);
  const fragment = window.location.hash.slice(1);
  if (fragment) void app.attach(fragment);
}
