"""Catalog of m-ary aggregation functions on the unit interval.

Every aggregation is registered through `ScalarAggregation`, which runs a
boundary check on the cube corners and a monotonicity spot check on a
deterministic low-discrepancy batch.  The weighted min and max carry an
exemption flag: under the value-at-extremizing-index reading they can
genuinely jump downward when an input rises, so their monotonicity findings
are recorded instead of raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .core import NDimInterval, ValidationError, WeightingVector
from .report import CompatibilityReport, failed, passed
from .sampling import DEFAULT_SEED, Sampler, corner_points, quasi_random_points

REGISTRATION_SAMPLES = 256


@dataclass
class ScalarAggregation:
    """An m-ary function on [0, 1] with the aggregation boundary contract."""

    name: str
    arity: int
    fn: Callable[[Sequence[float]], float]
    params: dict = field(default_factory=dict)
    monotonicity_exempt: bool = False
    findings: list = field(default_factory=list)

    def __post_init__(self):
        if self.arity < 1:
            raise ValidationError("aggregation arity must be at least 1")
        self._register()

    def __call__(self, xs: Sequence[float]) -> float:
        if len(xs) != self.arity:
            raise ValidationError(f"{self.name} expects {self.arity} inputs, got {len(xs)}")
        return self.fn(xs)

    def _register(self) -> None:
        zeros = (0.0,) * self.arity
        ones = (1.0,) * self.arity
        # the upper corner inherits the weighting-vector sum slack (1e-9)
        if self.fn(zeros) != 0.0 or abs(self.fn(ones) - 1.0) > 1e-9:
            raise ValidationError(
                f"{self.name} breaks the boundary contract: "
                f"A(0..0)={self.fn(zeros)!r}, A(1..1)={self.fn(ones)!r}")
        points = corner_points(self.arity) + quasi_random_points(self.arity, REGISTRATION_SAMPLES)
        bump = quasi_random_points(2, len(points))
        for pt, (sel, mag) in zip(points, bump):
            i = min(int(sel * self.arity), self.arity - 1)
            raised = list(pt)
            raised[i] = min(1.0, raised[i] + mag)
            lo, hi = self.fn(pt), self.fn(tuple(raised))
            if lo > hi:
                finding = {"kind": "monotonicity", "x": list(pt), "y": raised, "Ax": lo, "Ay": hi}
                self.findings.append(finding)
                if not self.monotonicity_exempt:
                    raise ValidationError(f"{self.name} is not monotone: {finding}")
                break

    def to_json(self) -> dict:
        return {"name": self.name, **self.params}


# --- factories ---------------------------------------------------------------

def power_product(r: float, arity: int) -> ScalarAggregation:
    """((prod of (x_i**r + 1)) - 1) / (2**n - 1); strict, never homogeneous."""
    if r <= 0:
        raise ValidationError("exponent must be positive")
    denom = 2.0 ** arity - 1.0

    def fn(xs: Sequence[float]) -> float:
        prod = 1.0
        for x in xs:
            prod *= x ** r + 1.0
        return (prod - 1.0) / denom

    return ScalarAggregation("pR", arity, fn, {"r": r})


def _extremizing_value(omega: WeightingVector, xs: Sequence[float], pick_max: bool) -> float:
    # value at the extremizing index of w_i * x_i; ties go to the smallest index
    best_i = 0
    best = omega.weights[0] * xs[0]
    for i in range(1, len(xs)):
        p = omega.weights[i] * xs[i]
        if (p > best) if pick_max else (p < best):
            best, best_i = p, i
    return xs[best_i]


def weighted_min(omega: WeightingVector) -> ScalarAggregation:
    """Input value at the index minimizing w_i * x_i (smallest index on ties)."""
    agg = ScalarAggregation(
        "weightedMin", omega.size,
        lambda xs: _extremizing_value(omega, xs, pick_max=False),
        {"omega": omega.to_json()},
        monotonicity_exempt=True)
    return agg


def weighted_max(omega: WeightingVector) -> ScalarAggregation:
    """Input value at the index maximizing w_i * x_i (smallest index on ties)."""
    return ScalarAggregation(
        "weightedMax", omega.size,
        lambda xs: _extremizing_value(omega, xs, pick_max=True),
        {"omega": omega.to_json()},
        monotonicity_exempt=True)


def weighted_average(omega: WeightingVector) -> ScalarAggregation:
    def fn(xs: Sequence[float]) -> float:
        acc = 0.0
        for w, x in zip(omega.weights, xs):
            acc += w * x
        return min(1.0, acc)

    return ScalarAggregation("weightedAverage", omega.size, fn, {"omega": omega.to_json()})


def geometric_mean(omega: WeightingVector) -> ScalarAggregation:
    """Weighted geometric mean with the 0**0 = 1 convention."""
    def fn(xs: Sequence[float]) -> float:
        prod = 1.0
        for w, x in zip(omega.weights, xs):
            prod *= x ** w
        return prod

    return ScalarAggregation("geometricMean", omega.size, fn, {"omega": omega.to_json()})


def max_exp(exponents: Sequence[float]) -> ScalarAggregation:
    """Maximum of componentwise powers x_i**e_i."""
    es = tuple(float(e) for e in exponents)
    if any(e <= 0 for e in es):
        raise ValidationError("all exponents must be positive")

    def fn(xs: Sequence[float]) -> float:
        return max(x ** e for x, e in zip(xs, es))

    return ScalarAggregation("maxExp", len(es), fn, {"e": list(es)})


def owa(omega: WeightingVector) -> ScalarAggregation:
    """Ordered weighted averaging: weights meet the inputs sorted descending."""
    def fn(xs: Sequence[float]) -> float:
        ordered = sorted(xs, reverse=True)
        acc = 0.0
        for w, x in zip(omega.weights, ordered):
            acc += w * x
        return min(1.0, acc)

    return ScalarAggregation("owa", omega.size, fn, {"omega": omega.to_json()})


def plain_min(arity: int) -> ScalarAggregation:
    return ScalarAggregation("min", arity, lambda xs: min(xs), {})


def plain_max(arity: int) -> ScalarAggregation:
    return ScalarAggregation("max", arity, lambda xs: max(xs), {})


def arithmetic_mean(arity: int) -> ScalarAggregation:
    return ScalarAggregation("mean", arity, lambda xs: sum(xs) / len(xs), {})


def build_scalar_aggregation(spec: dict, arity: Optional[int] = None) -> ScalarAggregation:
    """Instantiate an aggregation from its registry entry."""
    name = spec.get("name")
    if name == "pR":
        if arity is None:
            raise ValidationError("pR needs an explicit arity")
        return power_product(spec["r"], arity)
    if name in ("weightedMin", "weightedMax", "weightedAverage", "geometricMean", "owa"):
        omega = WeightingVector.from_json(spec["omega"])
        factory = {
            "weightedMin": weighted_min,
            "weightedMax": weighted_max,
            "weightedAverage": weighted_average,
            "geometricMean": geometric_mean,
            "owa": owa,
        }[name]
        agg = factory(omega)
        if arity is not None and agg.arity != arity:
            raise ValidationError(f"{name} has arity {agg.arity}, expected {arity}")
        return agg
    if name == "maxExp":
        agg = max_exp(spec["e"])
        if arity is not None and agg.arity != arity:
            raise ValidationError(f"maxExp has arity {agg.arity}, expected {arity}")
        return agg
    if name in ("min", "max", "mean"):
        if arity is None:
            raise ValidationError(f"{name} needs an explicit arity")
        return {"min": plain_min, "max": plain_max, "mean": arithmetic_mean}[name](arity)
    raise ValidationError(f"unknown aggregation {name!r}")


SCALAR_FAMILIES = {
    "pR": {"r": "positive real"},
    "weightedMin": {"omega": "weighting vector"},
    "weightedMax": {"omega": "weighting vector"},
    "weightedAverage": {"omega": "weighting vector"},
    "geometricMean": {"omega": "weighting vector"},
    "maxExp": {"e": "positive exponent per slot"},
    "owa": {"omega": "weighting vector"},
    "min": {},
    "max": {},
    "mean": {},
}


# --- classification checks ----------------------------------------------------

def dominates(a: ScalarAggregation, b: ScalarAggregation,
              samples: int = 1000, seed: int = DEFAULT_SEED,
              dyadic: bool = False) -> CompatibilityReport:
    """Check a(xs) <= b(xs) over sampled points."""
    if a.arity != b.arity:
        raise ValidationError("dominance needs equal arity")
    sampler = Sampler(seed)
    for _ in range(samples):
        xs = tuple(sampler.dyadic() if dyadic else sampler.unit() for _ in range(a.arity))
        va, vb = a(xs), b(xs)
        if va > vb:
            return failed("dominance", {"x": list(xs), "A": va, "B": vb}, seed, samples)
    return passed("dominance", seed, samples)


def check_homogeneity(agg: ScalarAggregation, k: float,
                      samples: int = 1000, seed: int = DEFAULT_SEED) -> CompatibilityReport:
    """Check A(lam * xs) = lam**k * A(xs) with exact comparison on dyadic draws."""
    sampler = Sampler(seed)
    for _ in range(samples):
        xs = tuple(sampler.dyadic() for _ in range(agg.arity))
        lam = sampler.dyadic()
        lhs = agg(tuple(lam * x for x in xs))
        rhs = (lam ** k) * agg(xs)
        if lhs != rhs:
            return failed(f"homogeneity(k={k})", {"lambda": lam, "x": list(xs), "lhs": lhs, "rhs": rhs},
                          seed, samples)
    return passed(f"homogeneity(k={k})", seed, samples)


def check_strict_on_sorted(agg: ScalarAggregation,
                           samples: int = 1000, seed: int = DEFAULT_SEED) -> CompatibilityReport:
    """Strict increase in one slot, with both points kept inside the sorted cone."""
    sampler = Sampler(seed)
    tried = 0
    for _ in range(samples * 4):
        if tried >= samples:
            break
        xs = sorted(sampler.unit() for _ in range(agg.arity))
        i = sampler.randint(0, agg.arity - 1)
        upper = xs[i + 1] if i + 1 < agg.arity else 1.0
        if upper <= xs[i]:
            continue
        tried += 1
        raised = list(xs)
        raised[i] = xs[i] + (upper - xs[i]) * max(sampler.unit(), 0.25)
        lo, hi = agg(tuple(xs)), agg(tuple(raised))
        if not lo < hi:
            return failed("strict-on-sorted", {"x": xs, "y": raised, "Ax": lo, "Ay": hi}, seed, tried)
    return passed("strict-on-sorted", seed, tried)


def check_internal(agg: ScalarAggregation,
                   samples: int = 1000, seed: int = DEFAULT_SEED) -> CompatibilityReport:
    """The output must equal one of the inputs, exactly."""
    sampler = Sampler(seed)
    for _ in range(samples):
        xs = tuple(sampler.unit() for _ in range(agg.arity))
        v = agg(xs)
        if v not in xs:
            return failed("internal", {"x": list(xs), "A": v}, seed, samples)
    return passed("internal", seed, samples)
