/**
 * View models: rows the renderer can drop straight into the page. Score
 * arrays are the response arrays by reference; `display` is formatting of
 * exactly those numbers and nothing else.
 */

import { formatDelta, formatScore, formatTuple } from './format.js';
import type { RankResponse, SensitivityResponse } from './types.js';

export interface LadderRow {
  position: number;
  label: string;
  score: number[];
  display: string[];
  tied: boolean;
}

export const rankingLadder = (rank: RankResponse): LadderRow[] => {
  const tied = new Set(rank.ranking.ties.flat());
  return rank.ranking.worst_to_best.map((label, idx) => {
    const score = rank.scores[rank.alternatives.indexOf(label)];
    return {
      position: idx + 1,
      label,
      score,
      display: score.map(formatScore),
      tied: tied.has(label),
    };
  });
};

export interface DiffView {
  flippedPairs: { pair: [string, string]; text: string }[];
  deltaRows: { label: string; deltas: number[]; display: string[] }[];
  baselineLadder: LadderRow[];
  editedLadder: LadderRow[];
  hasChanges: boolean;
}

export const diffView = (sens: SensitivityResponse): DiffView => {
  const flippedPairs = sens.flipped_pairs.map((f) => ({
    pair: f.pair,
    text: f.after < 0 ? `${f.pair[0]} now below ${f.pair[1]}` : `${f.pair[0]} now above ${f.pair[1]}`,
  }));
  const deltaRows = sens.baseline.alternatives.map((label, i) => ({
    label,
    deltas: sens.score_deltas[i],
    display: sens.score_deltas[i].map(formatDelta),
  }));
  const hasChanges = flippedPairs.length > 0 ||
    sens.score_deltas.some((row) => row.some((d) => d !== 0));
  return {
    flippedPairs,
    deltaRows,
    baselineLadder: rankingLadder(sens.baseline),
    editedLadder: rankingLadder(sens.edited),
    hasChanges,
  };
};

export const scoreSummary = (rank: RankResponse, label: string): string => {
  const score = rank.scores[rank.alternatives.indexOf(label)];
  return formatTuple(score);
};
