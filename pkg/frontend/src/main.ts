import { StudioApi } from './api.js';
import { Studio } from './studio.js';

const root = document.getElementById('app');
if (root) {
  // same-origin service: the studio is served by the process it talks to
  new Studio(root, new StudioApi());
}
