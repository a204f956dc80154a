/**
 * JSON shapes shared with the ranking service.
 */

export interface OrderSpec {
  kind: 'LexTau' | 'WeightedLex' | 'AggLex';
  tau: number[];
  omega?: number[];
  agg?: { name: string; [key: string]: unknown };
}

export interface AggregatorSpec {
  name: string;
  omega?: number[];
  order?: OrderSpec;
  components?: { name: string; [key: string]: unknown }[];
}

export interface DecisionProblem {
  alternatives: string[];
  criteria: string[];
  experts: string[];
  /** expert-major cube: evaluations[expert][alternative][criterion] */
  evaluations: number[][][];
  weights: number[];
  order: OrderSpec;
  aggregator: AggregatorSpec;
}

export interface RankingSection {
  worst_to_best: string[];
  best_to_worst: string[];
  ties: string[][];
}

export interface RankResponse {
  alternatives: string[];
  scores: number[][];
  ranking: RankingSection;
  annotations: string[];
}

export interface CollectiveResponse {
  alternatives: string[];
  criteria: string[];
  entries: number[][][];
}

export interface FlippedPair {
  pair: [string, string];
  before: number;
  after: number;
}

export interface SensitivityResponse {
  baseline: RankResponse;
  edited: RankResponse;
  score_deltas: number[][];
  flipped_pairs: FlippedPair[];
}

export interface ApiErrorBody {
  code: 'VALIDATION' | 'NOT_FOUND' | 'INTERNAL';
  message: string;
  detail: { axiom?: string; [key: string]: unknown } | null;
}

export type Edit =
  | { kind: 'cell'; expert: number; alt: number; crit: number; value: number }
  | { kind: 'weights'; weights: number[] }
  | { kind: 'order'; order: OrderSpec }
  | { kind: 'aggregator'; aggregator: AggregatorSpec };

export interface CatalogResponse {
  orders: { kind: string }[];
  aggregators: { name: string; params: Record<string, string> }[];
  scalar_aggregations: { name: string; params: Record<string, string> }[];
}
