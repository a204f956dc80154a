/**
 * Glue between state, transport and rendering: every committed edit
 * schedules exactly one debounced recompute; responses apply only while
 * their request token is still the latest.
 */

import { ApiClient, RequestGate } from './api.js';
import { debounce, realScheduler, Scheduler } from './debounce.js';
import {
  commitAggregator, commitOrder, commitTau, commitWeights, createState, EditOutcome,
  loadProblem, setBaseline, setCell, WorkbenchState,
} from './state.js';
import type { AggregatorSpec, DecisionProblem, OrderSpec } from './types.js';

export interface ControllerOptions {
  debounceMs?: number;
  scheduler?: Scheduler;
  onChange?: (state: WorkbenchState) => void;
}

export class WorkbenchController {
  readonly state: WorkbenchState;
  /** counts issued recompute rounds; tests watch it */
  recomputeCount = 0;

  private readonly gate = new RequestGate();
  private readonly onChange: (state: WorkbenchState) => void;
  private readonly scheduleRecompute: () => void;
  private inFlight: Promise<void> = Promise.resolve();

  constructor(private readonly client: ApiClient, preset: DecisionProblem,
              options: ControllerOptions = {}) {
    this.state = createState(preset);
    this.onChange = options.onChange ?? (() => undefined);
    this.scheduleRecompute = debounce(
      () => { this.inFlight = this.recompute(); },
      options.debounceMs ?? 250,
      options.scheduler ?? realScheduler,
    );
  }

  /** Await the last scheduled recompute; for tests and initial load. */
  settled(): Promise<void> {
    return this.inFlight;
  }

  async loadPreset(problem: DecisionProblem): Promise<void> {
    loadProblem(this.state, problem);
    await (this.inFlight = this.recompute());
    setBaseline(this.state);
    this.onChange(this.state);
  }

  freezeBaseline(): void {
    setBaseline(this.state);
    this.onChange(this.state);
  }

  commitCell(expert: number, alt: number, crit: number, value: number): EditOutcome {
    return this.afterEdit(setCell(this.state, expert, alt, crit, value));
  }

  commitWeights(raw: number[]): EditOutcome {
    return this.afterEdit(commitWeights(this.state, raw));
  }

  commitTau(tau: number[]): EditOutcome {
    return this.afterEdit(commitTau(this.state, tau));
  }

  commitOrder(order: OrderSpec): EditOutcome {
    return this.afterEdit(commitOrder(this.state, order));
  }

  commitAggregator(aggregator: AggregatorSpec): EditOutcome {
    return this.afterEdit(commitAggregator(this.state, aggregator));
  }

  private afterEdit(outcome: EditOutcome): EditOutcome {
    if (outcome.ok) {
      this.scheduleRecompute();
    }
    this.onChange(this.state);
    return outcome;
  }

  private async recompute(): Promise<void> {
    const token = this.gate.next();
    this.recomputeCount += 1;
    const state = this.state;
    const rankResult = await this.client.rank(state.draft);
    if (!this.gate.isCurrent(token)) return;
    if (!rankResult.ok) {
      state.banner = rankResult.status === 422 && rankResult.error.detail?.axiom
        ? `order rejected: the configured aggregator needs ${rankResult.error.detail.axiom}, `
          + `which this order fails`
        : rankResult.error.message;
      state.rank = null;
      this.onChange(state);
      return;
    }
    state.banner = null;
    state.rank = rankResult.body;
    if (state.baseline && state.editsSinceBaseline.length > 0) {
      const sensResult = await this.client.sensitivity(
        state.baseline.problem, state.editsSinceBaseline);
      if (!this.gate.isCurrent(token)) return;
      state.sensitivity = sensResult.ok ? sensResult.body : null;
    } else {
      state.sensitivity = null;
    }
    this.onChange(state);
  }
}
