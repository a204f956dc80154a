"""m-ary aggregation of n-dimensional intervals under an admissible order.

The two workhorse operators fold scalar-weighted tuples with the truncated
sum: the weighted average in argument order, the ordered weighted average
after sorting arguments descending under the attached order.  Because the
weights sum to one, no partial sum of the fold can exceed one, so the
truncation never actually bites; each output component is the exactly
rounded weighted sum of the input components, capped once at one.  That
single-cap form is algebraically identical to folding the truncated sum
pairwise and makes evaluation permutation invariant at the bit level.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Callable, Optional, Sequence

from .core import (NDimInterval, Permutation, ValidationError, WeightingVector,
                   degenerate, lattice_inf, lattice_sup)
from .orders import AdmissibleOrder, LexOrder, Ordering, max_under, min_under, order_from_spec
from .report import CompatibilityReport, failed, passed
from .sampling import DEFAULT_SEED, Sampler
from .scalar_agg import ScalarAggregation, build_scalar_aggregation, dominates
from .semivector import check_order_compatibility, scalar_mul, vec_add

GATE_SAMPLES = 256


class ContractViolation(ValidationError):
    """An evaluation broke a guarantee its construction-time checks promised."""


class OrderCompatibilityError(ValidationError):
    """The attached order failed the compatibility gate (SV8 or SV9)."""

    def __init__(self, axiom: str, report: CompatibilityReport, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.report = report


@dataclass
class NDimAggregation:
    """An m-ary operator on n-dimensional intervals, tied to an order."""

    name: str
    arity: int
    dimension: int
    evaluate: Callable[[Sequence[NDimInterval]], NDimInterval]
    order: Optional[AdmissibleOrder] = None
    params: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def __call__(self, args: Sequence[NDimInterval]) -> NDimInterval:
        if len(args) != self.arity:
            raise ValidationError(f"{self.name} expects {self.arity} arguments, got {len(args)}")
        for a in args:
            if a.dimension != self.dimension:
                raise ValidationError(f"{self.name} works on dimension {self.dimension}, got {a.dimension}")
        return self.evaluate(args)

    def to_json(self) -> dict:
        return {"name": self.name, **self.params}


def weighted_fold(omega: WeightingVector, args: Sequence[NDimInterval]) -> NDimInterval:
    """Sum of w_j-scaled arguments under the truncated addition.

    Single cap at one per component; exact-rounded inner sums (fsum) keep
    the fold independent of argument order whenever the weights are too.
    """
    n = args[0].dimension
    comps = []
    for i in range(n):
        comps.append(min(1.0, math.fsum(w * a.components[i] for w, a in zip(omega.weights, args))))
    return NDimInterval(comps)


_GATE_CACHE: dict = {}


def _run_gate(order: AdmissibleOrder, seed: int) -> Optional[tuple[str, CompatibilityReport]]:
    # orders are value-determined, so the verdict is a pure function of the
    # spec; caching spares pipeline re-runs the repeated sampling cost
    try:
        key = (json.dumps(order.to_json(), sort_keys=True), seed)
    except NotImplementedError:
        key = None
    if key is not None and key in _GATE_CACHE:
        return _GATE_CACHE[key]
    sv8, sv9 = check_order_compatibility(order, samples=GATE_SAMPLES, seed=seed)
    if not sv8.holds:
        verdict: Optional[tuple[str, CompatibilityReport]] = ("SV8", sv8)
    elif not sv9.holds:
        verdict = ("SV9", sv9)
    else:
        verdict = None
    if key is not None:
        _GATE_CACHE[key] = verdict
    return verdict


def ndim_owa(order: AdmissibleOrder, omega: WeightingVector,
             seed: int = DEFAULT_SEED) -> NDimAggregation:
    """Ordered weighted average: arguments sorted descending under the order,
    then folded against the weights.

    Construction runs the order through the compatibility gate and refuses
    orders that fail it; the operator's monotonicity depends on both SV8 and
    SV9 holding.
    """
    failure = _run_gate(order, seed)
    if failure is not None:
        axiom, report = failure
        raise OrderCompatibilityError(
            axiom, report,
            f"ndimOWA needs an order compatible with the algebra; {order.describe()} fails {axiom}")

    def evaluate(args: Sequence[NDimInterval]) -> NDimInterval:
        ordered = sorted(args, key=cmp_to_key(lambda a, b: int(order.compare(a, b))), reverse=True)
        return weighted_fold(omega, ordered)

    return NDimAggregation(
        "ndimOWA", omega.size, order.dimension, evaluate, order,
        {"omega": omega.to_json(), "order": order.to_json()})


def ndim_weighted_average(omega: WeightingVector, order: Optional[AdmissibleOrder] = None,
                          dimension: Optional[int] = None,
                          seed: int = DEFAULT_SEED) -> NDimAggregation:
    """Weighted average in argument order.

    The raw formula never needs the order, so construction succeeds even
    when the gate fails; the failure is kept as a warning because the
    monotonicity claim relies on it.
    """
    if order is None and dimension is None:
        raise ValidationError("need an order or an explicit dimension")
    n = order.dimension if order is not None else int(dimension)  # type: ignore[arg-type]
    warnings: list = []
    if order is not None:
        failure = _run_gate(order, seed)
        if failure is not None:
            axiom, report = failure
            warnings.append({"axiom": axiom,
                             "message": f"{order.describe()} fails {axiom}; "
                                        "order-monotonicity is not guaranteed",
                             "witness": report.witness})

    def evaluate(args: Sequence[NDimInterval]) -> NDimInterval:
        return weighted_fold(omega, args)

    params = {"omega": omega.to_json()}
    if order is not None:
        params["order"] = order.to_json()
    return NDimAggregation("ndimWeightedAverage", omega.size, n, evaluate, order, params, warnings)


def lift_componentwise(components: Sequence[ScalarAggregation],
                       perm: Optional[Permutation] = None,
                       seed: int = DEFAULT_SEED) -> NDimAggregation:
    """Apply one scalar aggregation per slot across the arguments.

    Construction verifies the dominance chain A_1 <= ... <= A_n on samples;
    that chain is what keeps the output sorted.  If a sampled evaluation
    still comes out unsorted, it is raised as a contract violation rather
    than silently repaired.
    """
    comps = list(components)
    if not comps:
        raise ValidationError("lift needs at least one component aggregation")
    m = comps[0].arity
    for c in comps[1:]:
        if c.arity != m:
            raise ValidationError("all component aggregations must share one arity")
    for a, b in zip(comps, comps[1:]):
        report = dominates(a, b, samples=GATE_SAMPLES, seed=seed)
        if not report.holds:
            raise ValidationError(
                f"lift components must be dominance ordered; {a.name} > {b.name} at {report.witness}")
    n = len(comps)
    order = LexOrder(perm if perm is not None else Permutation.identity(n))

    def evaluate(args: Sequence[NDimInterval]) -> NDimInterval:
        values = [agg(tuple(x.components[i] for x in args)) for i, agg in enumerate(comps)]
        try:
            return NDimInterval(values)
        except ValidationError as exc:
            raise ContractViolation(f"lift produced an unsorted tuple {values}") from exc

    return NDimAggregation(
        "lift", m, n, evaluate, order,
        {"components": [c.to_json() for c in comps]})


def order_extremum_aggregation(order: AdmissibleOrder, arity: int, pick_max: bool) -> NDimAggregation:
    """The order-minimum or order-maximum of the arguments, as an operator."""
    name = "maxUnder" if pick_max else "minUnder"

    def evaluate(args: Sequence[NDimInterval]) -> NDimInterval:
        return max_under(order, args) if pick_max else min_under(order, args)

    return NDimAggregation(name, arity, order.dimension, evaluate, order, {"order": order.to_json()})


def build_ndim_aggregation(spec: dict, arity: int, order: Optional[AdmissibleOrder] = None,
                           default_omega: Optional[WeightingVector] = None,
                           seed: int = DEFAULT_SEED) -> NDimAggregation:
    """Instantiate an operator from its JSON description.

    The omega defaults to the caller's weighting vector and the order to the
    caller's order, so a pipeline spec only has to name the family.
    """
    name = spec.get("name")
    own_order = order_from_spec(spec["order"]) if "order" in spec else order
    omega = WeightingVector.from_json(spec["omega"]) if "omega" in spec else default_omega
    if name == "ndimWeightedAverage":
        if omega is None:
            raise ValidationError("ndimWeightedAverage needs a weighting vector")
        if omega.size != arity:
            raise ValidationError(f"aggregator weights have size {omega.size}, expected {arity}")
        return ndim_weighted_average(omega, own_order, seed=seed)
    if name == "ndimOWA":
        if omega is None:
            raise ValidationError("ndimOWA needs a weighting vector")
        if omega.size != arity:
            raise ValidationError(f"aggregator weights have size {omega.size}, expected {arity}")
        if own_order is None:
            raise ValidationError("ndimOWA needs an order")
        return ndim_owa(own_order, omega, seed=seed)
    if name == "lift":
        comps = [build_scalar_aggregation(c, arity=arity) for c in spec["components"]]
        perm = own_order.perm if own_order is not None else None
        return lift_componentwise(comps, perm, seed=seed)
    if name in ("minUnder", "maxUnder"):
        if own_order is None:
            raise ValidationError(f"{name} needs an order")
        return order_extremum_aggregation(own_order, arity, pick_max=(name == "maxUnder"))
    raise ValidationError(f"unknown n-dimensional aggregation {name!r}")


NDIM_FAMILIES = {
    "ndimWeightedAverage": {"omega": "weighting vector (defaults to the problem weights)"},
    "ndimOWA": {"omega": "weighting vector", "order": "admissible order (defaults to the problem order)"},
    "lift": {"components": "dominance-ordered scalar aggregations, one per dimension"},
    "minUnder": {}, "maxUnder": {},
}


# --- classification ----------------------------------------------------------

IDEMPOTENCE_TOL = 1e-12


def _close(x: NDimInterval, y: NDimInterval, tol: float) -> bool:
    return all(abs(a - b) <= tol for a, b in zip(x, y))


def classify(func: NDimAggregation, samples: int = 400, seed: int = DEFAULT_SEED,
             idempotence_tol: float = IDEMPOTENCE_TOL) -> dict[str, CompatibilityReport]:
    """Sampled classification of one operator against its own order.

    Order-based verdicts (conjunctive, average, monotone, ...) compare exact
    outputs under the attached order.  Idempotence alone is a value identity
    on the float pipeline, so it carries a small tolerance for weight
    vectors that are not exactly representable; pass 0.0 to demand bitwise
    equality.
    """
    if func.order is None:
        raise ValidationError("classification needs the operator's order")
    order = func.order
    sampler = Sampler(seed)
    m, n = func.arity, func.dimension

    witnesses: dict[str, Optional[dict]] = {k: None for k in (
        "conjunctive", "disjunctive", "average", "idempotent", "strict",
        "internal", "symmetric", "monotone")}

    for trial in range(samples):
        args = [sampler.ndim(n) for _ in range(m)]
        out = func(args)
        lo, hi = min_under(order, args), max_under(order, args)
        doc = {"args": [a.to_json() for a in args], "out": out.to_json()}

        if witnesses["conjunctive"] is None and order.compare(out, lo) > 0:
            witnesses["conjunctive"] = doc
        if witnesses["disjunctive"] is None and order.compare(hi, out) > 0:
            witnesses["disjunctive"] = doc
        if witnesses["average"] is None and (order.compare(lo, out) > 0 or order.compare(out, hi) > 0):
            witnesses["average"] = doc
        if witnesses["internal"] is None and out not in args:
            witnesses["internal"] = doc

        if witnesses["idempotent"] is None:
            x = sampler.ndim(n)
            fx = func([x] * m)
            if not _close(fx, x, idempotence_tol):
                witnesses["idempotent"] = {"x": x.to_json(), "out": fx.to_json()}

        if witnesses["symmetric"] is None and m >= 2:
            shuffled = sampler.shuffled(args)
            if func(shuffled) != out:
                witnesses["symmetric"] = {"args": [a.to_json() for a in args],
                                          "shuffled": [a.to_json() for a in shuffled]}

        t = sampler.randint(0, m - 1)
        lo_t, hi_t = sampler.comparable_pair(n)
        if lo_t != hi_t:
            lo_args = list(args)
            hi_args = list(args)
            lo_args[t], hi_args[t] = lo_t, hi_t
            out_lo, out_hi = func(lo_args), func(hi_args)
            mono_doc = {"slot": t, "lo": lo_t.to_json(), "hi": hi_t.to_json(),
                        "out_lo": out_lo.to_json(), "out_hi": out_hi.to_json()}
            if witnesses["monotone"] is None and order.compare(out_lo, out_hi) > 0:
                witnesses["monotone"] = mono_doc
            if witnesses["strict"] is None and order.compare(out_lo, out_hi) >= 0:
                witnesses["strict"] = mono_doc

    out_reports: dict[str, CompatibilityReport] = {}
    for prop, witness in witnesses.items():
        if witness is None:
            out_reports[prop] = passed(prop, seed, samples)
        else:
            out_reports[prop] = failed(prop, witness, seed, samples)
    mixed = not (out_reports["conjunctive"].holds or out_reports["disjunctive"].holds
                 or out_reports["average"].holds)
    out_reports["mixed"] = CompatibilityReport(
        axiom="mixed", holds=mixed, witness=None, seed=seed, samples=samples,
        note="derived from the conjunctive, disjunctive and average verdicts")
    return out_reports


def check_idempotent_iff_average(func: NDimAggregation, samples: int = 400,
                                 seed: int = DEFAULT_SEED) -> CompatibilityReport:
    """Both classification verdicts must agree: an operator is an average
    exactly when it is idempotent."""
    reports = classify(func, samples=samples, seed=seed)
    idem, avg = reports["idempotent"], reports["average"]
    holds = idem.holds == avg.holds
    witness = None if holds else {"idempotent": idem.to_json(), "average": avg.to_json()}
    return CompatibilityReport("idempotent-iff-average", holds, witness, seed, samples)


def check_mw_properties(omega: WeightingVector, perm: Permutation, dimension: int,
                        samples: int = 400, seed: int = DEFAULT_SEED) -> dict[str, CompatibilityReport]:
    """Four sampled facts about the weighted average under the scan order:
    strictness, symmetry, additivity, homogeneity.

    All draws come from the dyadic grid with exact-sum weights, so every
    verdict is an exact float comparison.  Strict-increase witnesses are
    only demanded where the fold stays below saturation, which the
    weight-sum guarantees by itself; additivity sampling keeps the pairwise
    sums unclipped for the same reason.
    """
    sampler = Sampler(seed)
    m = omega.size
    n = dimension
    order = LexOrder(perm)
    func = ndim_weighted_average(omega, order, seed=seed)

    strict_w = None
    symmetric_w = None
    additive_w = None
    homogeneous_w = None

    for _ in range(samples):
        args = [sampler.ndim_dyadic(n) for _ in range(m)]
        out = func(args)

        if strict_w is None:
            t = sampler.randint(0, m - 1)
            y = sampler.ndim_dyadic(n)
            c = order.compare(args[t], y)
            if c != Ordering.EQUAL:
                lo_args, hi_args = list(args), list(args)
                if c == Ordering.LESS:
                    hi_args[t] = y
                else:
                    lo_args[t] = y
                if order.compare(func(lo_args), func(hi_args)) >= 0:
                    strict_w = {"slot": t,
                                "lo": [a.to_json() for a in lo_args],
                                "hi": [a.to_json() for a in hi_args]}

        if symmetric_w is None and m >= 2:
            shuffled = sampler.shuffled(args)
            if func(shuffled) != out:
                symmetric_w = {"args": [a.to_json() for a in args],
                               "shuffled": [a.to_json() for a in shuffled]}
            else:
                # basis probe: a lone full tuple moved across slots reads the weights off directly
                j = sampler.randint(0, m - 1)
                k = sampler.randint(0, m - 1)
                if j != k:
                    basis = [degenerate(0.0, n)] * m
                    basis[j] = degenerate(1.0, n)
                    swapped = [degenerate(0.0, n)] * m
                    swapped[k] = degenerate(1.0, n)
                    if func(basis) != func(swapped):
                        symmetric_w = {"slot_one": j, "slot_two": k,
                                       "value_one": func(basis).to_json(),
                                       "value_two": func(swapped).to_json()}

        if additive_w is None:
            cap_args = args
            ys = [sampler.ndim_dyadic_below(n, 1.0 - a.components[-1]) for a in cap_args]
            lhs = func([vec_add(a, b) for a, b in zip(cap_args, ys)])
            rhs = vec_add(func(cap_args), func(ys))
            if lhs != rhs:
                additive_w = {"x": [a.to_json() for a in cap_args],
                              "y": [b.to_json() for b in ys],
                              "lhs": lhs.to_json(), "rhs": rhs.to_json()}

        if homogeneous_w is None:
            lam = sampler.dyadic()
            lhs = func([scalar_mul(lam, a) for a in args])
            rhs = scalar_mul(lam, out)
            if lhs != rhs:
                homogeneous_w = {"lambda": lam, "args": [a.to_json() for a in args],
                                 "lhs": lhs.to_json(), "rhs": rhs.to_json()}

    def mk(axiom: str, witness, note: str = "") -> CompatibilityReport:
        return passed(axiom, seed, samples, note) if witness is None else failed(axiom, witness, seed, samples, note)

    return {
        "strict": mk("strict", strict_w),
        "symmetric": mk("symmetric", symmetric_w),
        "additive": mk("additive", additive_w, "sampled on the non-saturating cone"),
        "homogeneous": mk("homogeneous", homogeneous_w),
    }
