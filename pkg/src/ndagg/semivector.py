"""Bounded-sum algebra on the unit interval and its lift to interval tuples.

Scalars carry the operations r (+) s = min(1, r + s) and ordinary product;
tuples get the componentwise lift plus multiplication by a scalar.  The law
checkers in this module evaluate the semifield and semi-vector axioms over
sampled batches and report witnesses on failure.

A structural fact drives the sampling domains: the truncation in min(1, .)
breaks every distributivity-shaped law once an addition saturates.  Checks
therefore run on the non-saturating cone by default, which is exactly the
regime the weighted operators occupy (their weights sum to one, so their
partial sums never clip).  Passing `saturating=True` widens sampling to the
whole cube; the truncation counterexamples then surface and are reported as
genuine findings.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .core import DimensionMismatch, NDimInterval, degenerate, product_order_leq, same_dimension
from .report import CompatibilityReport, failed, passed
from .sampling import DEFAULT_SEED, Sampler


def bounded_add(r: float, s: float) -> float:
    """min(1, r + s); the truncated sum on the unit interval."""
    return min(1.0, r + s)


def scalar_mul(r: float, x: NDimInterval) -> NDimInterval:
    """Multiply every component by a scalar in [0, 1]."""
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"scalar must lie in [0, 1], got {r!r}")
    return NDimInterval(r * c for c in x)


def vec_add(x: NDimInterval, y: NDimInterval) -> NDimInterval:
    """Componentwise truncated sum of two tuples of equal dimension."""
    same_dimension(x, y)
    return NDimInterval(bounded_add(a, b) for a, b in zip(x, y))


def _decimal_intent(v: float) -> Fraction:
    """The shortest decimal that round-trips to this float, as an exact
    rational.

    The map is injective and order preserving, so predicates built on it
    stay antisymmetric and transitive over floats; for values that came
    from decimal text (every JSON or CLI input) it recovers the intended
    number exactly, where the raw binary value would carry representation
    noise into difference comparisons.
    """
    return Fraction(Decimal(repr(v)))


def natural_preorder_leq(x: NDimInterval, y: NDimInterval) -> bool:
    """Decide whether some tuple z satisfies x (+) z = y.

    Closed-form feasibility test.  Where y_i < 1 the equation forces
    z_i = y_i - x_i exactly (a saturated slot could not land below 1), and
    since y is sorted those forced slots form a prefix.  The prefix must be
    nonnegative and nondecreasing; every remaining slot has y_i = 1 and can
    absorb z_i = max(previous, 1 - x_i), which never breaks sortedness.
    Differences are compared in exact decimal-intent arithmetic so
    representation noise cannot flip a tie.
    """
    same_dimension(x, y)
    prev = Fraction(0)
    for xi, yi in zip(x, y):
        if yi == 1.0:
            return True
        fx, fy = _decimal_intent(xi), _decimal_intent(yi)
        if fx > fy:
            return False
        forced = fy - fx
        if forced < prev:
            return False
        prev = forced
    return True


def natural_preorder_witness(x: NDimInterval, y: NDimInterval) -> Optional[NDimInterval]:
    """An explicit z with x (+) z = y, or None when none exists."""
    if not natural_preorder_leq(x, y):
        return None
    out: list[float] = []
    prev = 0.0
    for xi, yi in zip(x, y):
        if yi == 1.0:
            prev = max(prev, 1.0 - xi)
        else:
            prev = yi - xi
        out.append(prev)
    return NDimInterval(out)


# --- law checkers -----------------------------------------------------------

Mul = Callable[[float, float], float]
Add = Callable[[float, float], float]


def _in_unit(v: float) -> bool:
    return 0.0 <= v <= 1.0


def check_semifield_axioms(
    samples: int = 1000,
    seed: int = DEFAULT_SEED,
    add: Add = bounded_add,
    mul: Mul = lambda r, s: r * s,
    saturating: bool = False,
) -> list[CompatibilityReport]:
    """Evaluate the scalar-algebra laws on sampled triples.

    The two operations are parameters so a test can hand in a deliberately
    broken algebra and watch the checker catch it.  Distributivity samples
    stay on the cone s + t <= 1 unless `saturating` is set; see the module
    docstring for why.
    """
    sampler = Sampler(seed)
    reports: list[CompatibilityReport] = []
    note_cone = "" if saturating else "sampled on the non-saturating cone"

    closure_witness = None
    wf1_witness = None
    wf2_witness = None
    wf3_witness = None
    wf4_witness = None
    wf5_witness = None
    for _ in range(samples):
        r, s, t = sampler.dyadic(), sampler.dyadic(), sampler.dyadic()
        if closure_witness is None:
            for name, v in (("add", add(r, s)), ("mul", mul(r, s))):
                if not _in_unit(v):
                    closure_witness = {"op": name, "r": r, "s": s, "result": v}
                    break
        if wf1_witness is None:
            if add(r, add(s, t)) != add(add(r, s), t):
                wf1_witness = {"op": "add", "r": r, "s": s, "t": t}
            elif mul(r, mul(s, t)) != mul(mul(r, s), t):
                wf1_witness = {"op": "mul", "r": r, "s": s, "t": t}
        if wf2_witness is None:
            if add(r, s) != add(s, r):
                wf2_witness = {"op": "add", "r": r, "s": s}
            elif mul(r, s) != mul(s, r):
                wf2_witness = {"op": "mul", "r": r, "s": s}
        if wf3_witness is None:
            if saturating:
                s3, t3 = s, t
            else:
                s3 = sampler.dyadic()
                t3 = sampler.dyadic_below(1.0 - s3)
            if mul(r, add(s3, t3)) != add(mul(r, s3), mul(r, t3)):
                wf3_witness = {"r": r, "s": s3, "t": t3}
        if wf4_witness is None and add(r, 0.0) != r:
            wf4_witness = {"r": r}
        if wf5_witness is None and mul(1.0, r) != r:
            wf5_witness = {"r": r}

    def emit(axiom: str, witness, note: str = "") -> None:
        if witness is None:
            reports.append(passed(axiom, seed, samples, note))
        else:
            reports.append(failed(axiom, witness, seed, samples, note))

    emit("WF-closure", closure_witness)
    emit("WF1", wf1_witness)
    emit("WF2", wf2_witness)
    emit("WF3", wf3_witness, note_cone)
    emit("WF4", wf4_witness)
    emit("WF5", wf5_witness)
    return reports


def check_semivector_axioms(
    dimension: int = 4,
    samples: int = 1000,
    seed: int = DEFAULT_SEED,
    saturating: bool = False,
) -> list[CompatibilityReport]:
    """Evaluate the tuple-algebra laws over sampled tuples and scalars."""
    sampler = Sampler(seed)
    n = dimension
    note_cone = "" if saturating else "sampled on the non-saturating cone"

    witnesses: dict[str, Optional[dict]] = {k: None for k in
        ("SV-closure", "SV1", "SV2", "SV3", "SV4", "SV5", "SV6", "SV7")}

    def w(x: NDimInterval) -> list[float]:
        return x.to_json()

    for _ in range(samples):
        x = sampler.ndim_dyadic(n)
        y = sampler.ndim_dyadic(n)
        z = sampler.ndim_dyadic(n)
        r = sampler.dyadic()
        s = sampler.dyadic()

        if witnesses["SV-closure"] is None:
            try:
                vec_add(x, y)
                scalar_mul(r, x)
            except ValueError:
                witnesses["SV-closure"] = {"x": w(x), "y": w(y), "r": r}
        if witnesses["SV1"] is None and vec_add(x, vec_add(y, z)) != vec_add(vec_add(x, y), z):
            witnesses["SV1"] = {"x": w(x), "y": w(y), "z": w(z)}
        if witnesses["SV2"] is None and vec_add(x, y) != vec_add(y, x):
            witnesses["SV2"] = {"x": w(x), "y": w(y)}
        if witnesses["SV3"] is None and scalar_mul(r, scalar_mul(s, x)) != scalar_mul(r * s, x):
            witnesses["SV3"] = {"r": r, "s": s, "x": w(x)}
        if witnesses["SV4"] is None and scalar_mul(1.0, x) != x:
            witnesses["SV4"] = {"x": w(x)}
        if witnesses["SV5"] is None:
            if saturating:
                x5, y5 = x, y
            else:
                x5 = x
                y5 = sampler.ndim_dyadic_below(n, 1.0 - x.components[-1])
            if scalar_mul(r, vec_add(x5, y5)) != vec_add(scalar_mul(r, x5), scalar_mul(r, y5)):
                witnesses["SV5"] = {"r": r, "x": w(x5), "y": w(y5)}
        if witnesses["SV6"] is None:
            if saturating:
                r6, s6 = r, s
            else:
                r6 = sampler.dyadic()
                s6 = sampler.dyadic_below(1.0 - r6)
            if scalar_mul(bounded_add(r6, s6), x) != vec_add(scalar_mul(r6, x), scalar_mul(s6, x)):
                witnesses["SV6"] = {"r": r6, "s": s6, "x": w(x)}
        if witnesses["SV7"] is None and vec_add(degenerate(0.0, n), x) != x:
            witnesses["SV7"] = {"x": w(x)}

    out = []
    for axiom in ("SV-closure", "SV1", "SV2", "SV3", "SV4", "SV5", "SV6", "SV7"):
        note = note_cone if axiom in ("SV5", "SV6") else ""
        if witnesses[axiom] is None:
            out.append(passed(axiom, seed, samples, note))
        else:
            out.append(failed(axiom, witnesses[axiom], seed, samples, note))
    return out


def check_order_compatibility(
    order,
    samples: int = 1000,
    seed: int = DEFAULT_SEED,
    saturating: bool = False,
) -> tuple[CompatibilityReport, CompatibilityReport]:
    """Check a total order against scalar multiplication (SV8) and vector
    addition (SV9).

    The order object supplies `dimension`, `compare(x, y)` and, optionally,
    `stress_probes()`: deterministic inputs known to defeat particular order
    families.  Probes are evaluated first so a failure is reported with its
    canonical witness rather than whatever the sampler happens to hit.
    """
    sampler = Sampler(seed)
    n = order.dimension

    def leq(a: NDimInterval, b: NDimInterval) -> bool:
        return order.compare(a, b) <= 0

    sv8_witness = None
    sv9_witness = None

    probes = order.stress_probes() if hasattr(order, "stress_probes") else {}
    for r, x, y in probes.get("SV8", ()):  # noqa: B007
        if order.compare(x, y) > 0:
            x, y = y, x
        if not leq(scalar_mul(r, x), scalar_mul(r, y)):
            sv8_witness = {"r": r, "x": x.to_json(), "y": y.to_json()}
            break
    for x, y, z in probes.get("SV9", ()):
        if order.compare(x, y) > 0:
            x, y = y, x
        if not leq(vec_add(x, z), vec_add(y, z)):
            sv9_witness = {"x": x.to_json(), "y": y.to_json(), "z": z.to_json()}
            break

    checked = 0
    while checked < samples and (sv8_witness is None or sv9_witness is None):
        checked += 1
        x = sampler.ndim_dyadic(n)
        y = sampler.ndim_dyadic(n)
        if order.compare(x, y) > 0:
            x, y = y, x
        if sv8_witness is None:
            r = sampler.dyadic()
            if not leq(scalar_mul(r, x), scalar_mul(r, y)):
                sv8_witness = {"r": r, "x": x.to_json(), "y": y.to_json()}
        if sv9_witness is None:
            if saturating:
                z = sampler.ndim_dyadic(n)
            else:
                headroom = 1.0 - max(x.components[-1], y.components[-1])
                z = sampler.ndim_dyadic_below(n, headroom)
            if not leq(vec_add(x, z), vec_add(y, z)):
                sv9_witness = {"x": x.to_json(), "y": y.to_json(), "z": z.to_json()}

    note = "" if saturating else "random part sampled on the non-saturating cone"
    sv8 = passed("SV8", seed, samples, "") if sv8_witness is None else failed("SV8", sv8_witness, seed, samples)
    sv9 = passed("SV9", seed, samples, note) if sv9_witness is None else failed("SV9", sv9_witness, seed, samples)
    return sv8, sv9
