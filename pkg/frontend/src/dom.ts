/**
 * DOM rendering for the workbench. Everything shown is either a label, a
 * value from a service response run through the shared formatter, or a
 * value the analyst typed.
 */

import { formatScore } from './format.js';
import type { WorkbenchState } from './state.js';
import { diffView, rankingLadder } from './viewmodel.js';
import type { WorkbenchController } from './controller.js';

const escapeHtml = (value: unknown): string =>
  String(value ?? '')
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');

const $ = <T extends HTMLElement = HTMLElement>(sel: string): T | null =>
  document.querySelector(sel);

export const renderMatrices = (state: WorkbenchState): void => {
  const host = $('#matrices');
  if (!host) return;
  const { draft } = state;
  host.innerHTML = draft.experts
    .map((expert, k) => {
      const head = draft.criteria.map((c) => `<th>${escapeHtml(c)}</th>`).join('');
      const rows = draft.alternatives
        .map((alt, i) => {
          const cells = draft.criteria
            .map((_, j) => {
              const value = draft.evaluations[k][i][j];
              return `<td><input type="number" min="0" max="1" step="0.1"
                data-role="cell" data-expert="${k + 1}" data-alt="${i + 1}" data-crit="${j + 1}"
                value="${escapeHtml(value)}" /></td>`;
            })
            .join('');
          return `<tr><th>${escapeHtml(alt)}</th>${cells}</tr>`;
        })
        .join('');
      return `
<details class="expert" ${k === 0 ? 'open' : ''}>
  <summary>${escapeHtml(expert)}</summary>
  <table class="grid"><thead><tr><th></th>${head}</tr></thead><tbody>${rows}</tbody></table>
</details>`;
    })
    .join('');
};

export const renderControls = (state: WorkbenchState): void => {
  const weightsHost = $('#weights');
  if (weightsHost) {
    weightsHost.innerHTML = state.draft.criteria
      .map((c, j) => `
<label class="weight-field">
  <span>${escapeHtml(c)}</span>
  <input type="number" min="0" step="0.01" data-role="weight" data-crit="${j}"
    value="${escapeHtml(state.rawWeights[j])}" />
  <small>normalized ${escapeHtml(formatScore(state.draft.weights[j]))}</small>
</label>`)
      .join('');
  }
  const tauHost = $('#tau-list');
  if (tauHost) {
    tauHost.innerHTML = state.draft.order.tau
      .map((slot, idx) => `
<li draggable="true" data-role="tau-item" data-index="${idx}">
  scan ${idx + 1}: slot ${escapeHtml(slot)}
</li>`)
      .join('');
  }
  const aggSelect = $<HTMLSelectElement>('#aggregator-select');
  if (aggSelect && aggSelect.value !== state.draft.aggregator.name) {
    aggSelect.value = state.draft.aggregator.name;
  }
  const orderSelect = $<HTMLSelectElement>('#order-kind-select');
  if (orderSelect && orderSelect.value !== state.draft.order.kind) {
    orderSelect.value = state.draft.order.kind;
  }
};

export const renderRanking = (state: WorkbenchState): void => {
  const host = $('#ranking');
  if (!host) return;
  if (!state.rank) {
    host.innerHTML = '<p class="empty">No ranking yet.</p>';
    return;
  }
  const rows = rankingLadder(state.rank)
    .map((row) => `
<li class="ladder-row ${row.tied ? 'tied' : ''}">
  <span class="pos">${row.position}</span>
  <span class="label">${escapeHtml(row.label)}</span>
  <span class="score">(${row.display.map(escapeHtml).join(', ')})</span>
  ${row.tied ? '<span class="tie-badge">tie</span>' : ''}
</li>`)
    .join('');
  const chips = state.rank.annotations
    .map((a) => `<span class="chip" title="${escapeHtml(a)}">i</span> ${escapeHtml(a)}`)
    .join('<br/>');
  host.innerHTML = `<ol class="ladder">${rows}</ol>
<p class="annotations">${chips}</p>`;
};

export const renderContributions = (state: WorkbenchState): void => {
  const host = $('#contributions');
  if (!host || !state.rank) return;
  // range bars over each score tuple: first and last components straight
  // from the response
  host.innerHTML = state.rank.alternatives
    .map((label, i) => {
      const score = state.rank!.scores[i];
      const lo = score[0];
      const hi = score[score.length - 1];
      return `
<div class="bar-row">
  <span class="label">${escapeHtml(label)}</span>
  <div class="bar">
    <div class="fill" style="margin-left:${lo * 100}%;width:${(hi - lo) * 100}%"></div>
  </div>
  <span class="range">[${escapeHtml(formatScore(lo))}, ${escapeHtml(formatScore(hi))}]</span>
</div>`;
    })
    .join('');
};

export const renderWhatIf = (state: WorkbenchState): void => {
  const host = $('#whatif');
  if (!host) return;
  if (!state.sensitivity) {
    host.innerHTML = '<p class="empty">Edit the draft to compare it against the baseline.</p>';
    return;
  }
  const view = diffView(state.sensitivity);
  const flips = view.flippedPairs
    .map((f) => `<li class="flip-badge">${escapeHtml(f.text)}</li>`)
    .join('');
  const ladders = (rows: ReturnType<typeof rankingLadder>) => rows
    .map((r) => `<li>${escapeHtml(r.label)} <small>(${r.display.map(escapeHtml).join(', ')})</small></li>`)
    .join('');
  host.innerHTML = `
<div class="whatif-columns">
  <div><h3>Baseline</h3><ol>${ladders(view.baselineLadder)}</ol></div>
  <div><h3>Edited</h3><ol>${ladders(view.editedLadder)}</ol></div>
</div>
<h3>Flipped relations ${view.hasChanges ? '' : '(none)'}</h3>
<ul class="flips">${flips}</ul>`;
};

export const renderBanner = (state: WorkbenchState): void => {
  const host = $('#banner');
  if (!host) return;
  if (state.banner) {
    host.textContent = state.banner;
    host.hidden = false;
  } else {
    host.hidden = true;
  }
};

export const renderAll = (state: WorkbenchState): void => {
  renderControls(state);
  renderRanking(state);
  renderContributions(state);
  renderWhatIf(state);
  renderBanner(state);
};

/**
 * Event wiring. Matrix cells validate inline and block the commit when out
 * of range; weights renormalize on change; the scan list reorders by drag.
 */
export const bindEvents = (controller: WorkbenchController): void => {
  const matrices = $('#matrices');
  matrices?.addEventListener('change', (event) => {
    const target = event.target as HTMLInputElement;
    if (target.getAttribute('data-role') !== 'cell') return;
    const value = Number(target.value);
    const outcome = controller.commitCell(
      Number(target.dataset.expert), Number(target.dataset.alt),
      Number(target.dataset.crit), value);
    target.classList.toggle('invalid', !outcome.ok);
    target.title = outcome.ok ? '' : outcome.error;
  });

  const weights = $('#weights');
  weights?.addEventListener('change', () => {
    const inputs = [...document.querySelectorAll<HTMLInputElement>('[data-role="weight"]')];
    const raw = inputs.map((el) => Number(el.value));
    const outcome = controller.commitWeights(raw);
    inputs.forEach((el) => el.classList.toggle('invalid', !outcome.ok));
    if (outcome.ok) renderControls(controller.state);
  });

  const tauList = $('#tau-list');
  let dragFrom: number | null = null;
  tauList?.addEventListener('dragstart', (event) => {
    const item = (event.target as HTMLElement).closest('[data-role="tau-item"]') as HTMLElement;
    dragFrom = item ? Number(item.dataset.index) : null;
  });
  tauList?.addEventListener('dragover', (event) => event.preventDefault());
  tauList?.addEventListener('drop', (event) => {
    event.preventDefault();
    const item = (event.target as HTMLElement).closest('[data-role="tau-item"]') as HTMLElement;
    if (item === null || dragFrom === null) return;
    const to = Number(item.dataset.index);
    const tau = [...controller.state.draft.order.tau];
    const [moved] = tau.splice(dragFrom, 1);
    tau.splice(to, 0, moved);
    dragFrom = null;
    controller.commitTau(tau);
    renderControls(controller.state);
  });

  $('#set-baseline')?.addEventListener('click', () => controller.freezeBaseline());
  $('#load-preset')?.addEventListener('click', () => {
    void controller.loadPreset(JSON.parse(JSON.stringify(controller.state.draft)));
  });

  $<HTMLSelectElement>('#aggregator-select')?.addEventListener('change', (event) => {
    const name = (event.target as HTMLSelectElement).value;
    controller.commitAggregator({ name });
  });
  $<HTMLSelectElement>('#order-kind-select')?.addEventListener('change', (event) => {
    const kind = (event.target as HTMLSelectElement).value as 'LexTau' | 'WeightedLex' | 'AggLex';
    const tau = controller.state.draft.order.tau;
    if (kind === 'WeightedLex') {
      controller.commitOrder({ kind, tau, omega: tau.map(() => 1 / tau.length) });
    } else if (kind === 'AggLex') {
      controller.commitOrder({ kind, tau, agg: { name: 'mean' } });
    } else {
      controller.commitOrder({ kind, tau });
    }
  });
};
