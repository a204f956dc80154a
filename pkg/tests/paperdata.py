"""Exact-rational oracle for the bundled reference example.

Everything here is independent of the library under test: values are parsed
from decimal strings into Fractions and all arithmetic is exact, so golden
comparisons carry zero tolerance.  The scaled-integer idea (every reference
number has five decimals) would choke on intermediate powers like 0.35**3,
so plain rationals do the job instead.
"""

from fractions import Fraction

ONE = Fraction(1)


def fr(text: str) -> Fraction:
    return Fraction(text)


def frs(texts) -> tuple:
    return tuple(fr(t) for t in texts)


def bounded_add_exact(a: Fraction, b: Fraction) -> Fraction:
    return min(ONE, a + b)


def vec_add_exact(xs, ys) -> tuple:
    return tuple(bounded_add_exact(a, b) for a, b in zip(xs, ys))


def scalar_mul_exact(r: Fraction, xs) -> tuple:
    return tuple(r * x for x in xs)


def weighted_fold_exact(weights, rows) -> tuple:
    acc = scalar_mul_exact(weights[0], rows[0])
    for w, row in zip(weights[1:], rows[1:]):
        acc = vec_add_exact(acc, scalar_mul_exact(w, row))
    return acc


def sigma_exact(values) -> tuple:
    return tuple(sorted(values))


def weighted_excess_exact(weights, xs, ys) -> Fraction:
    acc = Fraction(0)
    for w, a, b in zip(weights, xs, ys):
        if a > b:
            acc += w * (a - b)
    return acc


def to_floats(xs) -> tuple:
    return tuple(float(v) for v in xs)


# one matrix per expert; rows are alternatives a_1..a_5, columns criteria C_1..C_4
EXPERT_TABLES = [
    [["0.4", "0.7", "0.2", "0.3"],
     ["0.5", "0.9", "0.1", "0.4"],
     ["0.6", "0.6", "0.5", "0.4"],
     ["0.8", "0.7", "0.8", "0.6"],
     ["0.6", "0.4", "0.7", "0.7"]],
    [["0.5", "0.7", "0.5", "0.5"],
     ["0.5", "0.5", "0.1", "0.4"],
     ["0.7", "0.6", "0.3", "0.6"],
     ["0.7", "0.2", "0.8", "0.8"],
     ["0.9", "0.6", "0.8", "0.3"]],
    [["0.4", "0.8", "0.2", "0.9"],
     ["0.3", "0.7", "0.6", "0.7"],
     ["0.7", "0.6", "0.5", "0.4"],
     ["0.4", "0.4", "0.1", "0.8"],
     ["0.1", "0.6", "0.7", "0.6"]],
    [["0.3", "0.9", "0.4", "0.3"],
     ["0.3", "0.2", "0.8", "0.3"],
     ["0.7", "0.9", "0.3", "0.6"],
     ["0.8", "0.4", "0.8", "0.9"],
     ["0.3", "0.8", "0.9", "0.9"]],
    [["0.5", "0.1", "0.5", "0.6"],
     ["0.3", "0.6", "0.5", "0.7"],
     ["0.6", "0.6", "0.7", "0.6"],
     ["0.3", "0.7", "0.1", "0.6"],
     ["0.7", "0.7", "0.8", "0.6"]],
]

OMEGA = ("0.2341", "0.2474", "0.3181", "0.2004")
TAU = (3, 2, 4, 1, 5)

# expected collective matrix, row major: 5 alternatives x 4 criteria x 5 slots
COLLECTIVE = [
    [["0.3", "0.4", "0.4", "0.5", "0.5"],
     ["0.1", "0.7", "0.7", "0.8", "0.9"],
     ["0.2", "0.2", "0.4", "0.5", "0.5"],
     ["0.3", "0.3", "0.5", "0.6", "0.9"]],
    [["0.3", "0.3", "0.3", "0.5", "0.5"],
     ["0.2", "0.5", "0.6", "0.7", "0.9"],
     ["0.1", "0.1", "0.5", "0.6", "0.8"],
     ["0.3", "0.4", "0.4", "0.7", "0.7"]],
    [["0.6", "0.6", "0.7", "0.7", "0.7"],
     ["0.6", "0.6", "0.6", "0.6", "0.9"],
     ["0.3", "0.3", "0.5", "0.5", "0.7"],
     ["0.4", "0.4", "0.6", "0.6", "0.6"]],
    [["0.3", "0.4", "0.7", "0.8", "0.8"],
     ["0.2", "0.4", "0.4", "0.7", "0.7"],
     ["0.1", "0.1", "0.8", "0.8", "0.8"],
     ["0.6", "0.6", "0.8", "0.8", "0.9"]],
    [["0.1", "0.3", "0.6", "0.7", "0.9"],
     ["0.4", "0.6", "0.6", "0.7", "0.8"],
     ["0.7", "0.7", "0.8", "0.8", "0.9"],
     ["0.3", "0.6", "0.6", "0.7", "0.9"]],
]

# recomputed scores; the circulated transcription differs in a_2 slot 3 and a_4 slots 1-2
SCORES = {
    "a_1": ("0.21871", "0.39056", "0.49426", "0.59426", "0.67912"),
    "a_2": ("0.21164", "0.3059", "0.45788", "0.62137", "0.73447"),
    "a_3": ("0.46449", "0.46449", "0.5916", "0.5916", "0.72944"),
    "a_4": ("0.27176", "0.34465", "0.67763", "0.77526", "0.7953"),
    "a_5": ("0.40516", "0.56158", "0.66362", "0.73181", "0.87526"),
}
PRINTED_S2 = ("0.21164", "0.3059", "0.50736", "0.62137", "0.73447")
PRINTED_S4 = ("0.2859", "0.30931", "0.67763", "0.77526", "0.7953")

RANKING_RECOMPUTED = ["a_2", "a_1", "a_3", "a_5", "a_4"]
RANKING_PRINTED = ["a_1", "a_2", "a_3", "a_5", "a_4"]


def collective_exact() -> list:
    """Collective matrix recomputed from the expert tables, in Fractions."""
    n = len(EXPERT_TABLES)
    p = len(EXPERT_TABLES[0])
    m = len(EXPERT_TABLES[0][0])
    out = []
    for i in range(p):
        row = []
        for j in range(m):
            row.append(sigma_exact(fr(EXPERT_TABLES[k][i][j]) for k in range(n)))
        out.append(row)
    return out


def scores_exact() -> list:
    weights = frs(OMEGA)
    return [weighted_fold_exact(weights, row) for row in collective_exact()]


def lex_key_exact(tau, xs) -> tuple:
    return tuple(xs[k - 1] for k in tau)
