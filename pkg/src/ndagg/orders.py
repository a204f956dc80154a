"""Admissible total orders on n-dimensional intervals.

Three families, each refining the componentwise order: a positional scan
driven by a permutation, the scan keyed first by a weighted upward-deviation
comparison, and the scan keyed first by a scalar aggregation value.  All
comparators are exact; the tie branches fire only on exact float equality,
which keeps the orders genuinely total and antisymmetric.
"""

from __future__ import annotations

import enum
from typing import Iterable, Optional, Sequence

from .core import (DimensionMismatch, NDimInterval, Permutation, ValidationError,
                   WeightingVector, degenerate, product_order_leq, same_dimension)
from .report import CompatibilityReport, failed, passed
from .sampling import DEFAULT_SEED, Sampler
from .scalar_agg import ScalarAggregation, build_scalar_aggregation


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def lex_compare(perm: Permutation, x: NDimInterval, y: NDimInterval) -> Ordering:
    """Scan positions in the permutation's visiting order; first strict
    difference decides."""
    n = same_dimension(x, y)
    if perm.size != n:
        raise DimensionMismatch("permutation size does not match interval dimension")
    for k in perm.order:
        a, b = x.proj(k), y.proj(k)
        if a < b:
            return Ordering.LESS
        if a > b:
            return Ordering.GREATER
    return Ordering.EQUAL


def weighted_excess(omega: WeightingVector, x: NDimInterval, y: NDimInterval) -> float:
    """Weighted sum of how far x rises above y, slot by slot."""
    n = same_dimension(x, y)
    if omega.size != n:
        raise DimensionMismatch("weight count does not match interval dimension")
    acc = 0.0
    for w, a, b in zip(omega.weights, x, y):
        if a > b:
            acc += w * (a - b)
    return acc


def weighted_lex_compare(omega: WeightingVector, perm: Permutation,
                         x: NDimInterval, y: NDimInterval) -> Ordering:
    fxy = weighted_excess(omega, x, y)
    fyx = weighted_excess(omega, y, x)
    if fxy < fyx:
        return Ordering.LESS
    if fxy > fyx:
        return Ordering.GREATER
    return lex_compare(perm, x, y)


def agg_lex_compare(agg: ScalarAggregation, perm: Permutation,
                    x: NDimInterval, y: NDimInterval) -> Ordering:
    n = same_dimension(x, y)
    if agg.arity != n:
        raise DimensionMismatch("aggregation arity does not match interval dimension")
    ax, ay = agg(x.components), agg(y.components)
    if ax < ay:
        return Ordering.LESS
    if ax > ay:
        return Ordering.GREATER
    return lex_compare(perm, x, y)


# --- order objects -----------------------------------------------------------

class AdmissibleOrder:
    """A total-order comparator of fixed dimension, with a JSON spec."""

    kind: str = ""

    def __init__(self, perm: Permutation):
        self.perm = perm

    @property
    def dimension(self) -> int:
        return self.perm.size

    def compare(self, x: NDimInterval, y: NDimInterval) -> Ordering:
        raise NotImplementedError

    def stress_probes(self) -> dict:
        """Deterministic inputs known to defeat particular order families
        under the truncated addition; consumed by the compatibility checker."""
        return {}

    def to_json(self) -> dict:
        raise NotImplementedError

    def describe(self) -> str:
        return f"{self.kind}(tau={list(self.perm.order)})"


class LexOrder(AdmissibleOrder):
    kind = "LexTau"

    def compare(self, x, y):
        return lex_compare(self.perm, x, y)

    def to_json(self):
        return {"kind": "LexTau", "tau": self.perm.to_json()}


def _pad_interval(head: Sequence[float], n: int) -> NDimInterval:
    if n < len(head):
        raise ValidationError("dimension too small for probe")
    return NDimInterval(tuple(head) + (1.0,) * (n - len(head)))


def _descent_probe_pairs(perm: Permutation) -> list[tuple[NDimInterval, NDimInterval]]:
    """Pairs shaped around the first descent of the scan order.

    The two tuples agree everywhere except at the descent's two positions,
    where they straddle each other; adding the degenerate tuple /0.5/
    saturates the later position and flips the scan.  Built only for
    non-identity permutations.
    """
    order = perm.order
    n = perm.size
    descent = None
    for m in range(n - 1):
        if order[m] > order[m + 1]:
            descent = (order[m], order[m + 1])
            break
    if descent is None:
        return []
    a, b = descent  # positions, 1-based, b < a
    pairs = []
    for da, db in ((0.1, 0.1), (0.2, 0.01), (0.02, 0.2)):
        x = [0.0] * n
        y = [0.0] * n
        for pos in range(1, n + 1):
            if pos < b:
                x[pos - 1] = y[pos - 1] = 0.0
            elif pos == b:
                x[pos - 1], y[pos - 1] = 0.3, 0.3 - db
            elif pos < a:
                x[pos - 1] = y[pos - 1] = 0.4
            elif pos == a:
                x[pos - 1], y[pos - 1] = 0.5, 0.5 + da
            else:
                x[pos - 1] = y[pos - 1] = 1.0
        pairs.append((NDimInterval(x), NDimInterval(y)))
    return pairs


def _saturating_sv9_probes(perm: Permutation) -> list[tuple[NDimInterval, NDimInterval, NDimInterval]]:
    n = perm.size
    probes = []
    if n >= 2:
        probes.append((
            _pad_interval((0.5, 0.6), n),
            _pad_interval((0.3, 0.9), n),
            _pad_interval((0.1, 0.3), n),
        ))
        probes.append((
            _pad_interval((0.1, 0.2), n),
            _pad_interval((0.0, 0.4), n),
            _pad_interval((0.6, 0.9), n),
        ))
    half = degenerate(0.5, n)
    for x, y in _descent_probe_pairs(perm):
        probes.append((x, y, half))
    return probes


class WeightedLexOrder(AdmissibleOrder):
    kind = "WeightedLex"

    def __init__(self, omega: WeightingVector, perm: Permutation):
        if omega.size != perm.size:
            raise DimensionMismatch("weights and permutation disagree on dimension")
        super().__init__(perm)
        self.omega = omega

    def compare(self, x, y):
        return weighted_lex_compare(self.omega, self.perm, x, y)

    def stress_probes(self):
        return {"SV9": _saturating_sv9_probes(self.perm)}

    def to_json(self):
        return {"kind": "WeightedLex", "tau": self.perm.to_json(), "omega": self.omega.to_json()}


class AggLexOrder(AdmissibleOrder):
    kind = "AggLex"

    def __init__(self, agg: ScalarAggregation, perm: Permutation):
        if agg.arity != perm.size:
            raise DimensionMismatch("aggregation arity and permutation disagree on dimension")
        super().__init__(perm)
        self.agg = agg

    def compare(self, x, y):
        return agg_lex_compare(self.agg, self.perm, x, y)

    def stress_probes(self):
        probes: dict = {}
        if self.dimension == 4:
            probes["SV8"] = [(
                0.5,
                NDimInterval((0.4, 0.6, 0.7, 0.8)),
                NDimInterval((0.2, 0.2, 0.2, 0.9)),
            )]
        if not self.perm.is_identity:
            probes["SV9"] = _saturating_sv9_probes(self.perm)
        return probes

    def to_json(self):
        return {"kind": "AggLex", "tau": self.perm.to_json(), "agg": self.agg.to_json()}


ORDER_KINDS = ("LexTau", "WeightedLex", "AggLex")


def order_from_spec(spec: dict) -> AdmissibleOrder:
    """Instantiate an order from its JSON description."""
    kind = spec.get("kind")
    if "tau" not in spec:
        raise ValidationError("order spec needs a 'tau' permutation")
    perm = Permutation.from_json(spec["tau"])
    if kind == "LexTau":
        return LexOrder(perm)
    if kind == "WeightedLex":
        if "omega" not in spec:
            raise ValidationError("WeightedLex needs 'omega'")
        return WeightedLexOrder(WeightingVector.from_json(spec["omega"]), perm)
    if kind == "AggLex":
        if "agg" not in spec:
            raise ValidationError("AggLex needs 'agg'")
        agg = build_scalar_aggregation(spec["agg"], arity=perm.size)
        return AggLexOrder(agg, perm)
    raise ValidationError(f"unknown order kind {kind!r}")


def min_under(order: AdmissibleOrder, items: Iterable[NDimInterval]) -> NDimInterval:
    seq = list(items)
    if not seq:
        raise ValidationError("min_under of an empty collection")
    best = seq[0]
    for it in seq[1:]:
        if order.compare(it, best) == Ordering.LESS:
            best = it
    return best


def max_under(order: AdmissibleOrder, items: Iterable[NDimInterval]) -> NDimInterval:
    seq = list(items)
    if not seq:
        raise ValidationError("max_under of an empty collection")
    best = seq[0]
    for it in seq[1:]:
        if order.compare(it, best) == Ordering.GREATER:
            best = it
    return best


def verify_admissibility(order: AdmissibleOrder, samples: int = 1000,
                         seed: int = DEFAULT_SEED) -> list[CompatibilityReport]:
    """Check totality, antisymmetry, transitivity and refinement of the
    componentwise order on sampled tuples.

    Any sampled failure is reported as a genuine finding; no family is
    assumed correct by fiat.
    """
    sampler = Sampler(seed)
    n = order.dimension

    totality_w = None
    antisym_w = None
    transitivity_w = None
    refinement_w = None

    for i in range(samples):
        x = sampler.ndim_dyadic(n)
        # share a prefix with positive probability to exercise tie branches
        if i % 4 == 0:
            y = NDimInterval(sorted(x.components[: n // 2] + tuple(sampler.dyadic() for _ in range(n - n // 2))))
        elif i % 7 == 0:
            y = x
        else:
            y = sampler.ndim_dyadic(n)
        z = sampler.ndim_dyadic(n)

        if totality_w is None:
            cxy, cyx = order.compare(x, y), order.compare(y, x)
            if cxy not in (Ordering.LESS, Ordering.EQUAL, Ordering.GREATER) or int(cxy) != -int(cyx):
                totality_w = {"x": x.to_json(), "y": y.to_json(),
                              "compare(x,y)": int(cxy), "compare(y,x)": int(cyx)}
        if antisym_w is None and order.compare(x, y) == Ordering.EQUAL and x != y:
            antisym_w = {"x": x.to_json(), "y": y.to_json()}
        if transitivity_w is None:
            if order.compare(x, y) <= 0 and order.compare(y, z) <= 0 and order.compare(x, z) > 0:
                transitivity_w = {"x": x.to_json(), "y": y.to_json(), "z": z.to_json()}
        if refinement_w is None:
            lo, hi = sampler.comparable_pair(n)
            if order.compare(lo, hi) > 0:
                refinement_w = {"lo": lo.to_json(), "hi": hi.to_json()}

    out = []
    for axiom, witness in (("totality", totality_w), ("antisymmetry", antisym_w),
                           ("transitivity", transitivity_w), ("admissibility", refinement_w)):
        if witness is None:
            out.append(passed(axiom, seed, samples))
        else:
            out.append(failed(axiom, witness, seed, samples))
    return out
