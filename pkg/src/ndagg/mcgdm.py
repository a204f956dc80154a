"""Group ranking pipeline over expert evaluation cubes.

Input is one evaluation matrix per expert (alternatives by criteria).  The
pipeline sorts each (alternative, criterion) column of expert grades into an
n-dimensional interval, aggregates each alternative's row of intervals into
a score, and ranks alternatives by score under the configured admissible
order.  The property checkers at the bottom exercise the three behaviours a
sane ranking method must keep: a raised grade never demotes its
alternative, full domination never loses at score level, and relabeling
experts, alternatives or criteria never changes the outcome.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Optional, Sequence

from .core import (NDimInterval, Permutation, ValidationError, WeightingVector,
                   check_unit, sorted_interval)
from .ndim_agg import NDimAggregation, build_ndim_aggregation
from .orders import AdmissibleOrder, Ordering, order_from_spec
from .report import CompatibilityReport, failed, passed
from .sampling import DEFAULT_SEED, Sampler


@dataclass
class DecisionProblem:
    """A full ranking problem: labels, the evaluation cube, and the
    pipeline configuration."""

    alternatives: list[str]
    criteria: list[str]
    experts: list[str]
    evaluations: tuple  # expert-major cube [k][i][j]
    weights: Optional[WeightingVector] = None
    order_spec: Optional[dict] = None
    aggregator_spec: Optional[dict] = None

    @property
    def p(self) -> int:
        return len(self.alternatives)

    @property
    def m(self) -> int:
        return len(self.criteria)

    @property
    def n(self) -> int:
        return len(self.experts)

    @classmethod
    def from_json(cls, doc: dict, require_pipeline: bool = True) -> "DecisionProblem":
        for key in ("alternatives", "criteria", "experts", "evaluations"):
            if key not in doc:
                raise ValidationError(f"problem is missing '{key}'")
        alternatives = [str(a) for a in doc["alternatives"]]
        criteria = [str(c) for c in doc["criteria"]]
        experts = [str(e) for e in doc["experts"]]
        p, m, n = len(alternatives), len(criteria), len(experts)
        if p < 1 or m < 1 or n < 1:
            raise ValidationError("alternatives, criteria and experts must be nonempty")
        raw = doc["evaluations"]
        if len(raw) != n:
            raise ValidationError(f"evaluations must hold {n} expert matrices, got {len(raw)}")
        cube = []
        for k, matrix in enumerate(raw):
            if len(matrix) != p:
                raise ValidationError(f"evaluations[{k}] must have {p} rows, got {len(matrix)}")
            rows = []
            for i, row in enumerate(matrix):
                if len(row) != m:
                    raise ValidationError(f"evaluations[{k}][{i}] must have {m} entries, got {len(row)}")
                vals = []
                for j, v in enumerate(row):
                    try:
                        vals.append(check_unit(v))
                    except ValidationError as exc:
                        raise ValidationError(f"evaluations[{k}][{i}][{j}]: {exc}") from exc
                rows.append(tuple(vals))
            cube.append(tuple(rows))
        weights = WeightingVector.from_json(doc["weights"]) if doc.get("weights") is not None else None
        order_spec = doc.get("order")
        aggregator_spec = doc.get("aggregator")
        problem = cls(alternatives, criteria, experts, tuple(cube), weights, order_spec, aggregator_spec)
        if require_pipeline:
            problem.validate_pipeline()
        return problem

    def validate_pipeline(self) -> None:
        if self.p < 2 or self.m < 2 or self.n < 2:
            raise ValidationError("a ranking problem needs at least 2 alternatives, criteria and experts")
        if self.weights is None:
            raise ValidationError("a ranking problem needs criterion weights")
        if self.weights.size != self.m:
            raise ValidationError(f"weights must have one entry per criterion ({self.m}), got {self.weights.size}")
        if not self.weights.strictly_positive:
            raise ValidationError("criterion weights must be strictly positive")
        if self.order_spec is None:
            raise ValidationError("a ranking problem needs an order")
        if self.aggregator_spec is None:
            raise ValidationError("a ranking problem needs an aggregator")
        order = self.make_order()
        if order.dimension != self.n:
            raise ValidationError(f"order dimension {order.dimension} does not match expert count {self.n}")

    def make_order(self) -> AdmissibleOrder:
        if self.order_spec is None:
            raise ValidationError("problem has no order")
        return order_from_spec(self.order_spec)

    def make_aggregator(self, order: Optional[AdmissibleOrder] = None,
                        seed: int = DEFAULT_SEED) -> NDimAggregation:
        if self.aggregator_spec is None:
            raise ValidationError("problem has no aggregator")
        if order is None:
            order = self.make_order()
        return build_ndim_aggregation(self.aggregator_spec, arity=self.m,
                                      order=order, default_omega=self.weights, seed=seed)

    def to_json(self) -> dict:
        doc: dict = {
            "alternatives": list(self.alternatives),
            "criteria": list(self.criteria),
            "experts": list(self.experts),
            "evaluations": [[list(row) for row in matrix] for matrix in self.evaluations],
        }
        if self.weights is not None:
            doc["weights"] = self.weights.to_json()
        if self.order_spec is not None:
            doc["order"] = self.order_spec
        if self.aggregator_spec is not None:
            doc["aggregator"] = self.aggregator_spec
        return doc

    def canonical_hash(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def replace_cell(self, expert: int, alt: int, crit: int, value: float) -> "DecisionProblem":
        """A copy with one cube entry changed; indices are 1-based."""
        if not (1 <= expert <= self.n and 1 <= alt <= self.p and 1 <= crit <= self.m):
            raise ValidationError(f"cell ({expert},{alt},{crit}) is out of range")
        v = check_unit(value)
        cube = [list(list(row) for row in matrix) for matrix in self.evaluations]
        cube[expert - 1][alt - 1][crit - 1] = v
        frozen = tuple(tuple(tuple(row) for row in matrix) for matrix in cube)
        return DecisionProblem(list(self.alternatives), list(self.criteria), list(self.experts),
                               frozen, self.weights, self.order_spec, self.aggregator_spec)


@dataclass
class CollectiveMatrix:
    """Per (alternative, criterion): the sorted tuple of all experts' grades."""

    entries: list  # p rows of m NDimIntervals

    def to_json(self) -> list:
        return [[cell.to_json() for cell in row] for row in self.entries]


def build_collective(problem: DecisionProblem) -> CollectiveMatrix:
    p, m, n = problem.p, problem.m, problem.n
    rows = []
    for i in range(p):
        row = []
        for j in range(m):
            row.append(sorted_interval(problem.evaluations[k][i][j] for k in range(n)))
        rows.append(row)
    return CollectiveMatrix(rows)


def score_alternatives(collective: CollectiveMatrix, aggregator: NDimAggregation) -> list[NDimInterval]:
    return [aggregator(row) for row in collective.entries]


@dataclass
class Ranking:
    """Alternatives ordered worst to best by score, with exact-tie groups."""

    scores: list
    worst_to_best: list[int]
    groups: list[list[int]]  # equality groups, worst to best, each sorted by index

    def position(self, alt_index: int) -> int:
        for rank, group in enumerate(self.groups):
            if alt_index in group:
                return rank
        raise ValidationError(f"alternative index {alt_index} not ranked")

    def to_json(self, labels: Sequence[str]) -> dict:
        worst = [labels[i] for i in self.worst_to_best]
        return {
            "worst_to_best": worst,
            "best_to_worst": list(reversed(worst)),
            "ties": [[labels[i] for i in g] for g in self.groups if len(g) > 1],
        }


def rank(scores: Sequence[NDimInterval], order: AdmissibleOrder) -> Ranking:
    indices = list(range(len(scores)))
    # insertion sort against the comparator keeps this dependency free and stable
    ordered: list[int] = []
    for i in indices:
        pos = len(ordered)
        while pos > 0 and order.compare(scores[i], scores[ordered[pos - 1]]) == Ordering.LESS:
            pos -= 1
        ordered.insert(pos, i)
    groups: list[list[int]] = []
    for i in ordered:
        if groups and scores[i] == scores[groups[-1][0]]:
            groups[-1].append(i)
        else:
            groups.append([i])
    groups = [sorted(g) for g in groups]
    flat = [i for g in groups for i in g]
    return Ranking(list(scores), flat, groups)


@dataclass
class PipelineResult:
    problem: DecisionProblem
    collective: CollectiveMatrix
    scores: list
    ranking: Ranking
    annotations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "alternatives": list(self.problem.alternatives),
            "scores": [s.to_json() for s in self.scores],
            "ranking": self.ranking.to_json(self.problem.alternatives),
            "annotations": list(self.annotations),
        }


_REFERENCE_HASH: Optional[str] = None

REFERENCE_EXAMPLE_NOTE = (
    "reference example: a widely circulated transcription garbles three intermediate "
    "products; recomputing from the collective matrix gives a_2 slot 3 = 0.45788 "
    "(not 0.50736, which comes from a non-monotone intermediate and swaps the two "
    "lowest ranks) and a_4 slots 1-2 = 0.27176/0.34465 (not 0.2859/0.30931, which "
    "leave the ranking unchanged). Values reported here are the recomputed ones; "
    "both variants ship as fixtures.")


def load_fixture(name: str) -> dict:
    with resources.files("ndagg").joinpath(f"fixtures/{name}").open("r", encoding="utf-8") as fh:
        return json.load(fh)


def reference_example_hash() -> str:
    global _REFERENCE_HASH
    if _REFERENCE_HASH is None:
        problem = DecisionProblem.from_json(load_fixture("paper_example.json"))
        _REFERENCE_HASH = problem.canonical_hash()
    return _REFERENCE_HASH


def run_pipeline(problem: DecisionProblem, seed: int = DEFAULT_SEED) -> PipelineResult:
    problem.validate_pipeline()
    order = problem.make_order()
    aggregator = problem.make_aggregator(order, seed=seed)
    collective = build_collective(problem)
    scores = score_alternatives(collective, aggregator)
    ranking = rank(scores, order)
    annotations = []
    for w in aggregator.warnings:
        annotations.append(f"order compatibility warning ({w['axiom']}): {w['message']}")
    if (aggregator.name == "ndimWeightedAverage"
            and problem.weights is not None
            and len(set(problem.weights.weights)) > 1):
        annotations.append(
            "aggregator weighs criteria unequally, so it is not symmetric in its "
            "arguments; criteria relabeling keeps the ranking only when the weights move along")
    if problem.canonical_hash() == reference_example_hash():
        annotations.append(REFERENCE_EXAMPLE_NOTE)
    return PipelineResult(problem, collective, scores, ranking, annotations)


# --- CSV ingestion -----------------------------------------------------------

def load_expert_matrix_csv(path: str) -> tuple[list[str], list[str], list[list[float]]]:
    """One expert's grid: header row of criterion labels, then one row per
    alternative starting with its label."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and any(cell.strip() for cell in r)]
    if len(rows) < 2:
        raise ValidationError(f"{path}: need a header row and at least one alternative row")
    header = rows[0]
    criteria = [c.strip() for c in header[1:]]
    if not criteria:
        raise ValidationError(f"{path}: header row carries no criterion labels")
    alternatives = []
    values = []
    for r in rows[1:]:
        if len(r) != len(criteria) + 1:
            raise ValidationError(f"{path}: row {r!r} does not match the header width")
        alternatives.append(r[0].strip())
        values.append([check_unit(float(cell)) for cell in r[1:]])
    return criteria, alternatives, values


def problem_from_csv(paths: Sequence[str], weights: Optional[WeightingVector],
                     order_spec: Optional[dict], aggregator_spec: Optional[dict],
                     expert_labels: Optional[Sequence[str]] = None) -> DecisionProblem:
    """Assemble the cube from one CSV file per expert."""
    if not paths:
        raise ValidationError("need at least one expert CSV")
    criteria: Optional[list[str]] = None
    alternatives: Optional[list[str]] = None
    cube = []
    for path in paths:
        crit, alts, values = load_expert_matrix_csv(path)
        if criteria is None:
            criteria, alternatives = crit, alts
        elif crit != criteria or alts != alternatives:
            raise ValidationError(f"{path}: labels disagree with the first expert file")
        cube.append(tuple(tuple(row) for row in values))
    labels = list(expert_labels) if expert_labels else [f"e_{k + 1}" for k in range(len(paths))]
    if len(labels) != len(paths):
        raise ValidationError("expert label count does not match file count")
    return DecisionProblem(list(alternatives or []), list(criteria or []), labels,
                           tuple(cube), weights, order_spec, aggregator_spec)


# --- method principles --------------------------------------------------------

def _strictly_below(scores: Sequence[NDimInterval], order: AdmissibleOrder, i: int) -> set[int]:
    return {j for j in range(len(scores))
            if j != i and order.compare(scores[j], scores[i]) == Ordering.LESS}


def check_increasingness(problem: DecisionProblem, trials: int = 50,
                         seed: int = DEFAULT_SEED) -> CompatibilityReport:
    """Raise one cube entry and re-run: nobody previously beaten by the
    touched alternative may escape."""
    sampler = Sampler(seed)
    order = problem.make_order()
    base = run_pipeline(problem, seed=seed)
    for _ in range(trials):
        k = sampler.randint(1, problem.n)
        i = sampler.randint(1, problem.p)
        j = sampler.randint(1, problem.m)
        old = problem.evaluations[k - 1][i - 1][j - 1]
        new = old + (1.0 - old) * sampler.unit()
        bumped = problem.replace_cell(k, i, j, new)
        result = run_pipeline(bumped, seed=seed)
        before = _strictly_below(base.scores, order, i - 1)
        after = _strictly_below(result.scores, order, i - 1)
        if not before.issubset(after):
            return failed("increasingness",
                          {"expert": k, "alt": i, "crit": j, "old": old, "new": new,
                           "escaped": sorted(problem.alternatives[x] for x in before - after)},
                          seed, trials)
    return passed("increasingness", seed, trials)


def check_domination(problem: DecisionProblem, trials: int = 50,
                     seed: int = DEFAULT_SEED) -> CompatibilityReport:
    """Force one alternative to dominate another cell by cell, then demand
    the dominated score never ends up above."""
    sampler = Sampler(seed)
    order = problem.make_order()
    for _ in range(trials):
        i = sampler.randint(1, problem.p)
        j = sampler.randint(1, problem.p)
        if i == j:
            j = i % problem.p + 1
        dominated = problem
        for k in range(1, problem.n + 1):
            for c in range(1, problem.m + 1):
                low = dominated.evaluations[k - 1][j - 1][c - 1]
                lift = min(1.0, low + sampler.unit() * (1.0 - low))
                dominated = dominated.replace_cell(k, i, c, max(lift, dominated.evaluations[k - 1][i - 1][c - 1]))
        result = run_pipeline(dominated, seed=seed)
        if order.compare(result.scores[j - 1], result.scores[i - 1]) == Ordering.GREATER:
            return failed("domination",
                          {"dominating": problem.alternatives[i - 1],
                           "dominated": problem.alternatives[j - 1],
                           "scores": [s.to_json() for s in result.scores]},
                          seed, trials)
    return passed("domination", seed, trials)


def _group_labels(result: PipelineResult) -> list[frozenset]:
    return [frozenset(result.problem.alternatives[i] for i in g) for g in result.ranking.groups]


def permute_problem(problem: DecisionProblem, expert_perm: Permutation,
                    alt_perm: Permutation, crit_perm: Permutation) -> DecisionProblem:
    """Relabel experts, alternatives and criteria; criterion weights move
    with their criteria."""
    n, p, m = problem.n, problem.p, problem.m
    cube = tuple(
        tuple(
            tuple(problem.evaluations[k - 1][i - 1][j - 1] for j in crit_perm.order)
            for i in alt_perm.order)
        for k in expert_perm.order)
    weights = problem.weights
    agg_spec = problem.aggregator_spec
    if (agg_spec is not None and agg_spec.get("name") == "ndimOWA"
            and "omega" not in agg_spec and weights is not None):
        # OWA weights are positional in the sorted sequence, not per criterion;
        # pin the inherited vector so relabeling criteria cannot reorder it
        agg_spec = dict(agg_spec)
        agg_spec["omega"] = weights.to_json()
    if weights is not None:
        weights = WeightingVector(weights.weights[j - 1] for j in crit_perm.order)
    if agg_spec is not None and "omega" in agg_spec and agg_spec.get("name") == "ndimWeightedAverage":
        agg_spec = dict(agg_spec)
        agg_spec["omega"] = [agg_spec["omega"][j - 1] for j in crit_perm.order]
    return DecisionProblem(
        [problem.alternatives[i - 1] for i in alt_perm.order],
        [problem.criteria[j - 1] for j in crit_perm.order],
        [problem.experts[k - 1] for k in expert_perm.order],
        cube, weights, problem.order_spec, agg_spec)


def check_indexation_insensitivity(problem: DecisionProblem, trials: int = 50,
                                   seed: int = DEFAULT_SEED) -> CompatibilityReport:
    """Shuffle the expert, alternative and criterion labels; the ranking,
    read as label groups from worst to best, must not move."""
    sampler = Sampler(seed)
    base_groups = _group_labels(run_pipeline(problem, seed=seed))
    for _ in range(trials):
        expert_perm = sampler.permutation(problem.n)
        alt_perm = sampler.permutation(problem.p)
        crit_perm = sampler.permutation(problem.m)
        permuted = permute_problem(problem, expert_perm, alt_perm, crit_perm)
        groups = _group_labels(run_pipeline(permuted, seed=seed))
        if groups != base_groups:
            return failed("indexation-insensitivity",
                          {"experts": expert_perm.to_json(), "alternatives": alt_perm.to_json(),
                           "criteria": crit_perm.to_json(),
                           "base": [sorted(g) for g in base_groups],
                           "permuted": [sorted(g) for g in groups]},
                          seed, trials)
    return passed("indexation-insensitivity", seed, trials)


# --- what-if ------------------------------------------------------------------

def apply_edit(problem: DecisionProblem, edit: dict) -> DecisionProblem:
    kind = edit.get("kind", "cell")
    if kind == "cell":
        try:
            return problem.replace_cell(int(edit["expert"]), int(edit["alt"]),
                                        int(edit["crit"]), float(edit["value"]))
        except KeyError as exc:
            raise ValidationError(f"cell edit is missing {exc}") from exc
    if kind == "weights":
        weights = WeightingVector.from_json(edit["weights"])
        return DecisionProblem(list(problem.alternatives), list(problem.criteria), list(problem.experts),
                               problem.evaluations, weights, problem.order_spec, problem.aggregator_spec)
    if kind == "order":
        return DecisionProblem(list(problem.alternatives), list(problem.criteria), list(problem.experts),
                               problem.evaluations, problem.weights, edit["order"], problem.aggregator_spec)
    if kind == "aggregator":
        return DecisionProblem(list(problem.alternatives), list(problem.criteria), list(problem.experts),
                               problem.evaluations, problem.weights, problem.order_spec, edit["aggregator"])
    raise ValidationError(f"unknown edit kind {kind!r}")


def sensitivity(problem: DecisionProblem, edits: Sequence[dict],
                seed: int = DEFAULT_SEED) -> dict:
    """Run the pipeline before and after a batch of edits and report what
    moved: score deltas per alternative and every strict pairwise relation
    that flipped."""
    baseline = run_pipeline(problem, seed=seed)
    edited_problem = problem
    for edit in edits:
        edited_problem = apply_edit(edited_problem, edit)
    edited = run_pipeline(edited_problem, seed=seed)

    order = problem.make_order()
    edited_order = edited_problem.make_order()
    deltas = []
    for a, b in zip(baseline.scores, edited.scores):
        deltas.append([eb - ea for ea, eb in zip(a, b)])
    flipped = []
    labels = problem.alternatives
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            before = order.compare(baseline.scores[i], baseline.scores[j])
            after = edited_order.compare(edited.scores[i], edited.scores[j])
            if int(before) != int(after):
                flipped.append({"pair": [labels[i], labels[j]],
                                "before": int(before), "after": int(after)})
    return {
        "baseline": baseline.to_json(),
        "edited": edited.to_json(),
        "score_deltas": deltas,
        "flipped_pairs": flipped,
    }


# --- random problems for the property suites ----------------------------------

def random_problem(sampler: Sampler, p: int, m: int, n: int,
                   aggregator: str = "ndimWeightedAverage") -> DecisionProblem:
    cube = tuple(
        tuple(tuple(sampler.dyadic() for _ in range(m)) for _ in range(p))
        for _ in range(n))
    weights = sampler.dyadic_weights(m, strictly_positive=True)
    order_spec = {"kind": "LexTau", "tau": sampler.permutation(n).to_json()}
    agg_spec: dict = {"name": aggregator}
    return DecisionProblem(
        [f"a_{i + 1}" for i in range(p)],
        [f"C_{j + 1}" for j in range(m)],
        [f"e_{k + 1}" for k in range(n)],
        cube, weights, order_spec, agg_spec)
