/**
 * Workbench state: the problem draft, the frozen baseline, the latest
 * service responses and per-section dirty flags. The client never computes
 * scores; numeric state holds input values only.
 */

import type {
  AggregatorSpec,
  DecisionProblem,
  Edit,
  OrderSpec,
  RankResponse,
  SensitivityResponse,
} from './types.js';

export interface Baseline {
  problem: DecisionProblem;
  rank: RankResponse | null;
}

export interface WorkbenchState {
  draft: DecisionProblem;
  baseline: Baseline | null;
  editsSinceBaseline: Edit[];
  rank: RankResponse | null;
  sensitivity: SensitivityResponse | null;
  /** weight inputs as typed, before normalization, for display */
  rawWeights: number[];
  dirty: { matrices: boolean; weights: boolean; order: boolean; aggregator: boolean };
  banner: string | null;
}

export type EditOutcome = { ok: true } | { ok: false; error: string };

const cloneProblem = (problem: DecisionProblem): DecisionProblem =>
  JSON.parse(JSON.stringify(problem)) as DecisionProblem;

export const createState = (preset: DecisionProblem): WorkbenchState => ({
  draft: cloneProblem(preset),
  baseline: null,
  editsSinceBaseline: [],
  rank: null,
  sensitivity: null,
  rawWeights: [...preset.weights],
  dirty: { matrices: false, weights: false, order: false, aggregator: false },
  banner: null,
});

/**
 * One evaluation cell; indices are 1-based to match the service edit
 * vocabulary. Out-of-range values are rejected, never clamped silently.
 */
export const setCell = (state: WorkbenchState, expert: number, alt: number,
                        crit: number, value: number): EditOutcome => {
  const { draft } = state;
  if (!(expert >= 1 && expert <= draft.experts.length &&
        alt >= 1 && alt <= draft.alternatives.length &&
        crit >= 1 && crit <= draft.criteria.length)) {
    return { ok: false, error: `cell (${expert}, ${alt}, ${crit}) is out of range` };
  }
  if (!Number.isFinite(value) || value < 0 || value > 1) {
    return { ok: false, error: 'evaluations must lie in [0, 1]' };
  }
  draft.evaluations[expert - 1][alt - 1][crit - 1] = value;
  state.editsSinceBaseline.push({ kind: 'cell', expert, alt, crit, value });
  state.dirty.matrices = true;
  return { ok: true };
};

/**
 * Weight edits renormalize on commit; the typed values stay around so the
 * inputs keep showing what the analyst wrote.
 */
export const commitWeights = (state: WorkbenchState, raw: number[]): EditOutcome => {
  if (raw.length !== state.draft.criteria.length) {
    return { ok: false, error: 'one weight per criterion' };
  }
  if (raw.some((w) => !Number.isFinite(w) || w < 0)) {
    return { ok: false, error: 'weights must be nonnegative numbers' };
  }
  const total = raw.reduce((acc, w) => acc + w, 0);
  if (total <= 0) {
    return { ok: false, error: 'weights must not all be zero' };
  }
  const normalized = raw.map((w) => w / total);
  state.rawWeights = [...raw];
  state.draft.weights = normalized;
  state.editsSinceBaseline.push({ kind: 'weights', weights: normalized });
  state.dirty.weights = true;
  return { ok: true };
};

export const isBijection = (tau: number[], n: number): boolean => {
  if (tau.length !== n) return false;
  const seen = new Set(tau);
  if (seen.size !== n) return false;
  for (let i = 1; i <= n; i += 1) if (!seen.has(i)) return false;
  return true;
};

export const commitTau = (state: WorkbenchState, tau: number[]): EditOutcome => {
  if (!isBijection(tau, state.draft.experts.length)) {
    return { ok: false, error: `scan order must be a bijection on 1..${state.draft.experts.length}` };
  }
  const order: OrderSpec = { ...state.draft.order, tau: [...tau] };
  state.draft.order = order;
  state.editsSinceBaseline.push({ kind: 'order', order });
  state.dirty.order = true;
  return { ok: true };
};

export const commitOrder = (state: WorkbenchState, order: OrderSpec): EditOutcome => {
  if (!isBijection(order.tau, state.draft.experts.length)) {
    return { ok: false, error: 'order tau must be a bijection over the experts' };
  }
  state.draft.order = { ...order, tau: [...order.tau] };
  state.editsSinceBaseline.push({ kind: 'order', order: state.draft.order });
  state.dirty.order = true;
  return { ok: true };
};

export const commitAggregator = (state: WorkbenchState, aggregator: AggregatorSpec): EditOutcome => {
  if (!aggregator.name) {
    return { ok: false, error: 'aggregator needs a name' };
  }
  state.draft.aggregator = JSON.parse(JSON.stringify(aggregator)) as AggregatorSpec;
  state.editsSinceBaseline.push({ kind: 'aggregator', aggregator: state.draft.aggregator });
  state.dirty.aggregator = true;
  return { ok: true };
};

/**
 * Freeze the current draft (and its ranking) as the what-if reference.
 */
export const setBaseline = (state: WorkbenchState): void => {
  state.baseline = { problem: cloneProblem(state.draft), rank: state.rank };
  state.editsSinceBaseline = [];
  state.sensitivity = null;
  state.dirty = { matrices: false, weights: false, order: false, aggregator: false };
};

export const loadProblem = (state: WorkbenchState, problem: DecisionProblem): void => {
  state.draft = cloneProblem(problem);
  state.rawWeights = [...problem.weights];
  state.baseline = null;
  state.editsSinceBaseline = [];
  state.rank = null;
  state.sensitivity = null;
  state.banner = null;
  state.dirty = { matrices: false, weights: false, order: false, aggregator: false };
};
