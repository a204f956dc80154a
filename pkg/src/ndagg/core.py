"""Primitive structure of n-dimensional intervals.

An n-dimensional interval is a tuple of n values in [0, 1] whose components
never decrease.  These tuples carry membership grades contributed by n
sources at once; all higher layers (the bounded-sum algebra, admissible
orders, aggregation operators, the ranking pipeline) build on the types and
operations defined here.

Values are plain binary floats.  Equality everywhere in this package is
exact numeric equality; order predicates must stay genuine total orders, so
no epsilon comparison is ever applied inside them.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence


class ValidationError(ValueError):
    """A value broke a construction invariant (range, shape, or sum)."""


class DimensionMismatch(ValidationError):
    """Operands of different dimension were mixed in one operation."""


def check_unit(value: float, what: str = "value") -> float:
    """Validate a scalar membership grade. Out of range is an error, never clamped."""
    v = float(value)
    if math.isnan(v) or not 0.0 <= v <= 1.0:
        raise ValidationError(f"{what} must lie in [0, 1], got {value!r}")
    return v


class NDimInterval:
    """An immutable nondecreasing tuple of unit-interval values."""

    __slots__ = ("_components",)

    def __init__(self, components: Iterable[float]):
        comps = tuple(check_unit(c, "component") for c in components)
        if not comps:
            raise ValidationError("an interval needs at least one component")
        for a, b in zip(comps, comps[1:]):
            if a > b:
                raise ValidationError(f"components must be nondecreasing, got {comps}")
        self._components = comps

    @property
    def components(self) -> tuple[float, ...]:
        return self._components

    @property
    def dimension(self) -> int:
        return len(self._components)

    def proj(self, i: int) -> float:
        """The i-th projection, 1-based."""
        if not 1 <= i <= len(self._components):
            raise ValidationError(f"projection index {i} out of range 1..{len(self._components)}")
        return self._components[i - 1]

    def __iter__(self):
        return iter(self._components)

    def __len__(self) -> int:
        return len(self._components)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NDimInterval):
            return self._components == other._components
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._components)

    def __repr__(self) -> str:
        inner = ", ".join(repr(c) for c in self._components)
        return f"NDimInterval(({inner}))"

    def to_json(self) -> list[float]:
        return list(self._components)

    @classmethod
    def from_json(cls, data: Sequence[float]) -> "NDimInterval":
        return cls(data)


def degenerate(value: float, dimension: int) -> NDimInterval:
    """The constant tuple holding one grade in every slot."""
    if dimension < 1:
        raise ValidationError("dimension must be at least 1")
    v = check_unit(value)
    return NDimInterval((v,) * dimension)


def sorted_interval(values: Iterable[float]) -> NDimInterval:
    """Sort raw grades into their unique nondecreasing arrangement.

    This is the immersion that turns one evaluation per source into an
    n-dimensional interval; it is permutation invariant by construction.
    """
    vals = sorted(check_unit(v) for v in values)
    if not vals:
        raise ValidationError("cannot sort an empty sequence into an interval")
    return NDimInterval(vals)


def same_dimension(x: NDimInterval, y: NDimInterval) -> int:
    if x.dimension != y.dimension:
        raise DimensionMismatch(f"dimension mismatch: {x.dimension} vs {y.dimension}")
    return x.dimension


def product_order_leq(x: NDimInterval, y: NDimInterval) -> bool:
    """Componentwise order: true iff no component of x exceeds that of y."""
    same_dimension(x, y)
    return all(a <= b for a, b in zip(x, y))


def lattice_inf(items: Iterable[NDimInterval]) -> NDimInterval:
    """Componentwise minimum of a nonempty collection."""
    seq = list(items)
    if not seq:
        raise ValidationError("lattice_inf of an empty collection")
    n = seq[0].dimension
    for it in seq[1:]:
        same_dimension(seq[0], it)
    return NDimInterval(min(it.components[i] for it in seq) for i in range(n))


def lattice_sup(items: Iterable[NDimInterval]) -> NDimInterval:
    """Componentwise maximum of a nonempty collection."""
    seq = list(items)
    if not seq:
        raise ValidationError("lattice_sup of an empty collection")
    n = seq[0].dimension
    for it in seq[1:]:
        same_dimension(seq[0], it)
    return NDimInterval(max(it.components[i] for it in seq) for i in range(n))


class Permutation:
    """A bijection on positions 1..n, stored as the 1-based visiting order."""

    __slots__ = ("_order",)

    def __init__(self, order: Iterable[int]):
        seq = tuple(int(i) for i in order)
        if sorted(seq) != list(range(1, len(seq) + 1)):
            raise ValidationError(f"not a bijection on 1..{len(seq)}: {seq}")
        self._order = seq

    @property
    def order(self) -> tuple[int, ...]:
        return self._order

    @property
    def size(self) -> int:
        return len(self._order)

    @property
    def is_identity(self) -> bool:
        return self._order == tuple(range(1, len(self._order) + 1))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    def apply(self, values: Sequence) -> tuple:
        """Rearrange a sequence so slot k holds the element at position order[k]."""
        if len(values) != len(self._order):
            raise DimensionMismatch("permutation size does not match sequence length")
        return tuple(values[i - 1] for i in self._order)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Permutation):
            return self._order == other._order
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._order)

    def __repr__(self) -> str:
        return f"Permutation({list(self._order)})"

    def to_json(self) -> list[int]:
        return list(self._order)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Permutation":
        return cls(data)


WEIGHT_SUM_TOLERANCE = 1e-9


class WeightingVector:
    """Nonnegative weights summing to one.

    The plain constructor rejects sums outside 1 +/- 1e-9; silent
    renormalization would hide input errors, so it only happens through the
    explicit `normalize` constructor.
    """

    __slots__ = ("_weights",)

    def __init__(self, weights: Iterable[float]):
        ws = tuple(check_unit(w, "weight") for w in weights)
        if not ws:
            raise ValidationError("a weighting vector needs at least one weight")
        total = math.fsum(ws)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise ValidationError(f"weights must sum to 1 within {WEIGHT_SUM_TOLERANCE}, got {total!r}")
        self._weights = ws

    @classmethod
    def normalize(cls, values: Iterable[float]) -> "WeightingVector":
        vals = [float(v) for v in values]
        if any(v < 0 for v in vals):
            raise ValidationError("weights must be nonnegative")
        total = math.fsum(vals)
        if total <= 0:
            raise ValidationError("cannot normalize weights with zero sum")
        ws = [v / total for v in vals]
        # land the float sum exactly on 1 so boundary identities stay exact
        for _ in range(3):
            residual = 1.0 - math.fsum(ws)
            if residual == 0.0:
                break
            k = max(range(len(ws)), key=lambda i: ws[i])
            ws[k] += residual
        return cls(ws)

    @classmethod
    def uniform(cls, m: int) -> "WeightingVector":
        if m < 1:
            raise ValidationError("need at least one weight")
        return cls((1.0 / m,) * m)

    @property
    def weights(self) -> tuple[float, ...]:
        return self._weights

    @property
    def size(self) -> int:
        return len(self._weights)

    @property
    def strictly_positive(self) -> bool:
        return all(w > 0 for w in self._weights)

    def __iter__(self):
        return iter(self._weights)

    def __len__(self) -> int:
        return len(self._weights)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightingVector):
            return self._weights == other._weights
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._weights)

    def __repr__(self) -> str:
        return f"WeightingVector({list(self._weights)})"

    def to_json(self) -> list[float]:
        return list(self._weights)

    @classmethod
    def from_json(cls, data: Sequence[float]) -> "WeightingVector":
        return cls(data)
