import assert from 'node:assert/strict';
import { test } from 'node:test';
import { readFileSync } from 'node:fs';

import { ApiClient, FetchLike } from '../src/api.js';
import { WorkbenchController } from '../src/controller.js';
import { ManualScheduler } from '../src/debounce.js';
import { formatScore } from '../src/format.js';
import { diffView, rankingLadder } from '../src/viewmodel.js';
import type { DecisionProblem, RankResponse, SensitivityResponse } from '../src/types.js';

const fixture = <T>(name: string): T => JSON.parse(readFileSync(
  new URL(`../../test/fixtures/${name}.json`, import.meta.url), 'utf-8')) as T;

const preset = fixture<DecisionProblem>('problem_preset');
const rankBaseline = fixture<RankResponse>('rank_baseline');
const rankEdited = fixture<RankResponse>('rank_edited');
const sensitivityEdit = fixture<SensitivityResponse>('sensitivity_edit');

/**
 * Replay transport: serves the service responses recorded from the real
 * backend for this exact scenario.
 */
const makeReplayFetch = (log: string[]): FetchLike => async (url, init) => {
  log.push(url.replace(/^.*\/api/, '/api'));
  const body = init?.body ? JSON.parse(init.body) : null;
  const respond = (payload: unknown) => ({ status: 200, json: async () => payload });
  if (url.endsWith('/api/v1/rank')) {
    const problem = body as DecisionProblem;
    const edited = problem.evaluations[1][3][2] === 0.1;
    return respond(edited ? rankEdited : rankBaseline);
  }
  if (url.endsWith('/api/v1/sensitivity')) {
    return respond(sensitivityEdit);
  }
  throw new Error(`unexpected request ${url}`);
};

const makeController = () => {
  const log: string[] = [];
  const scheduler = new ManualScheduler();
  const client = new ApiClient('http://service', makeReplayFetch(log));
  const controller = new WorkbenchController(client, preset, { scheduler });
  return { controller, scheduler, log };
};

test('loading the preset applies the service ranking and freezes a baseline', async () => {
  const { controller, log } = makeController();
  await controller.loadPreset(preset);
  assert.deepEqual(controller.state.rank?.ranking.worst_to_best,
    rankBaseline.ranking.worst_to_best);
  assert.ok(controller.state.baseline);
  assert.deepEqual(log, ['/api/v1/rank']);
  assert.ok(controller.state.rank?.annotations.some((a) => a.includes('reference example')));
});

test('committing the reference edit yields a non-empty what-if diff from service data', async () => {
  const { controller, scheduler, log } = makeController();
  await controller.loadPreset(preset);

  const outcome = controller.commitCell(2, 4, 3, 0.1);
  assert.deepEqual(outcome, { ok: true });
  assert.equal(scheduler.pendingCount, 1);
  scheduler.flush();
  await controller.settled();

  assert.deepEqual(controller.state.rank?.ranking.worst_to_best,
    rankEdited.ranking.worst_to_best);
  assert.ok(controller.state.sensitivity);
  const view = diffView(controller.state.sensitivity!);
  assert.ok(view.hasChanges);
  assert.ok(view.flippedPairs.length > 0);
  assert.deepEqual(view.flippedPairs.map((f) => f.pair),
    sensitivityEdit.flipped_pairs.map((f) => f.pair));
  assert.deepEqual(log, ['/api/v1/rank', '/api/v1/rank', '/api/v1/sensitivity']);
});

test('every displayed score digit comes from the service response', async () => {
  const { controller, scheduler } = makeController();
  await controller.loadPreset(preset);
  controller.commitCell(2, 4, 3, 0.1);
  scheduler.flush();
  await controller.settled();

  const rank = controller.state.rank!;
  for (const row of rankingLadder(rank)) {
    const serviceScore = rank.scores[rank.alternatives.indexOf(row.label)];
    assert.equal(row.score, serviceScore); // same array, no client arithmetic
    row.display.forEach((digits, i) => {
      assert.equal(digits, formatScore(serviceScore[i]));
    });
  }
  const view = diffView(controller.state.sensitivity!);
  view.deltaRows.forEach((row, i) => {
    assert.equal(row.deltas, controller.state.sensitivity!.score_deltas[i]);
  });
});

test('a burst of edits triggers exactly one recompute round', async () => {
  const { controller, scheduler, log } = makeController();
  await controller.loadPreset(preset);
  controller.commitCell(1, 1, 1, 0.45);
  controller.commitCell(1, 1, 2, 0.55);
  controller.commitCell(2, 4, 3, 0.1);
  assert.equal(scheduler.pendingCount, 1);
  scheduler.flush();
  await controller.settled();
  assert.equal(controller.recomputeCount, 2); // preset load plus one batch
  assert.deepEqual(log.filter((p) => p === '/api/v1/rank').length, 2);
});

test('stale responses are discarded by sequence number', async () => {
  const resolvers: ((payload: RankResponse) => void)[] = [];
  const fetchFn: FetchLike = async (url) => {
    if (url.endsWith('/api/v1/rank')) {
      const payload = await new Promise<RankResponse>((resolve) => resolvers.push(resolve));
      return { status: 200, json: async () => payload };
    }
    return { status: 200, json: async () => sensitivityEdit };
  };
  const scheduler = new ManualScheduler();
  const controller = new WorkbenchController(
    new ApiClient('http://service', fetchFn), preset, { scheduler });

  controller.commitCell(1, 1, 1, 0.4);
  scheduler.flush();
  const firstSettled = controller.settled();
  controller.commitCell(1, 1, 1, 0.6);
  scheduler.flush();
  const secondSettled = controller.settled();
  assert.equal(resolvers.length, 2);

  // the newer request answers first; the older answer must not clobber it
  resolvers[1](rankEdited);
  await secondSettled;
  resolvers[0](rankBaseline);
  await firstSettled;
  assert.deepEqual(controller.state.rank?.ranking.worst_to_best,
    rankEdited.ranking.worst_to_best);
});

test('a 422 from the service becomes a banner naming the failed axiom', async () => {
  const fetchFn: FetchLike = async () => ({
    status: 422,
    json: async () => ({
      code: 'VALIDATION',
      message: 'ndimOWA needs an order compatible with the algebra',
      detail: { axiom: 'SV9' },
    }),
  });
  const scheduler = new ManualScheduler();
  const controller = new WorkbenchController(
    new ApiClient('http://service', fetchFn), preset, { scheduler });
  controller.commitAggregator({ name: 'ndimOWA' });
  scheduler.flush();
  await controller.settled();
  assert.ok(controller.state.banner?.includes('SV9'));
  assert.equal(controller.state.rank, null);
});

test('invalid edits never schedule a request', async () => {
  const { controller, scheduler } = makeController();
  await controller.loadPreset(preset);
  const outcome = controller.commitCell(1, 1, 1, 1.2);
  assert.equal(outcome.ok, false);
  assert.equal(scheduler.pendingCount, 0);
  assert.equal(controller.commitTau([1, 1, 2, 3, 4]).ok, false);
  assert.equal(scheduler.pendingCount, 0);
});
