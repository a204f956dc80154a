/**
 * Bootstrap: build the controller against the configured service origin,
 * load the bundled preset and wire the page.
 */

import { ApiClient } from './api.js';
import { WorkbenchController } from './controller.js';
import { bindEvents, renderAll, renderMatrices } from './dom.js';
import { PAPER_PRESET } from './preset.js';

const params = new URLSearchParams(window.location.search);
const serviceUrl = params.get('service') ?? 'http://127.0.0.1:8080';

const client = new ApiClient(serviceUrl);
const controller = new WorkbenchController(client, PAPER_PRESET, {
  onChange: (state) => renderAll(state),
});

renderMatrices(controller.state);
bindEvents(controller);

void controller.loadPreset(PAPER_PRESET).then(() => {
  renderMatrices(controller.state);
  renderAll(controller.state);
}).catch((err: unknown) => {
  const banner = document.querySelector<HTMLElement>('#banner');
  if (banner) {
    banner.hidden = false;
    banner.textContent = `cannot reach the ranking service at ${serviceUrl}: ${String(err)}`;
  }
});
