"""Independent brute-force Ehrhart oracle.

Counts lattice points of dilates directly from the defining chain, recovers
the delta-vector by the alternating binomial transform of the first d+1
counts, and interpolates the counting polynomial with exact rationals.
This module never looks at inversion sequences, so it cross-checks the
ascent route in `delta`.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import InconsistentCountsError, PreconditionError
from .polytope import check_budget, check_s, enumeration_estimate

DEFAULT_BUDGET = 10_000_000


def resolve_budget(budget) -> int:
    return DEFAULT_BUDGET if budget is None else int(budget)


def count(s, t: int, budget=None) -> int:
    """Number of lattice points of t*P^(s); 1 for t = 0.

    Computed level by level with prefix sums over the chain bounds, which
    agrees with len(lattice_points(s, t)) but never materializes points.
    """
    seq = check_s(s)
    if t < 0:
        raise ValueError(f"dilation factor must be >= 0, got {t}")
    if t == 0:
        return 1
    check_budget(enumeration_estimate(seq, t), resolve_budget(budget))
    # counts[v] = number of admissible prefixes (x_1, ..., x_i) with x_i = v
    counts = [1] * (t * seq[0] + 1)
    for i in range(1, len(seq)):
        prefix = [0] * len(counts)
        running = 0
        for v, c in enumerate(counts):
            running += c
            prefix[v] = running
        top = t * seq[i]
        counts = [prefix[min(w * seq[i - 1] // seq[i], len(prefix) - 1)] for w in range(top + 1)]
    return sum(counts)


def dilate_counts(s, tmax=None, budget=None) -> list[int]:
    """[i(P, 0), i(P, 1), ..., i(P, tmax)]; tmax defaults to d."""
    seq = check_s(s)
    top = len(seq) if tmax is None else int(tmax)
    if top < 0:
        raise ValueError("tmax must be >= 0")
    return [count(seq, t, budget=budget) for t in range(top + 1)]


def delta_from_counts(counts) -> tuple[int, ...]:
    """Recover (delta_0, ..., delta_d) from the d+1 counts i(P, 0..d).

    delta_j = sum_{i=0}^{j} (-1)^i * C(d+1, i) * counts[j-i].  Any negative
    entry means the counts cannot come from a lattice polytope.
    """
    vals = []
    for c in counts:
        if c != int(c):
            raise PreconditionError(f"counts must be integers, got {c!r}")
        vals.append(int(c))
    if not vals:
        raise PreconditionError("need at least one count")
    if vals[0] != 1:
        raise PreconditionError(f"counts[0] must be 1, got {vals[0]}")
    d = len(vals) - 1
    delta = []
    for j in range(d + 1):
        v = sum((-1) ** i * comb(d + 1, i) * vals[j - i] for i in range(j + 1))
        if v < 0:
            raise InconsistentCountsError(
                f"delta_{j} = {v} < 0; counts {vals} are not Ehrhart counts"
            )
        delta.append(v)
    return tuple(delta)


def ehrhart_polynomial(s, budget=None) -> tuple[Fraction, ...]:
    """Coefficients (c_0, ..., c_d) of the degree-d counting polynomial.

    Newton forward differences on the exact counts at t = 0..d; the leading
    coefficient is the volume (prod s_i) / d!.
    """
    seq = check_s(s)
    d = len(seq)
    table = [Fraction(c) for c in dilate_counts(seq, budget=budget)]
    diffs = []
    for _ in range(d + 1):
        diffs.append(table[0])
        table = [b - a for a, b in zip(table, table[1:])]
    # expand sum_j diffs[j] * C(t, j) into monomial coefficients
    coeffs = [Fraction(0)] * (d + 1)
    basis = [Fraction(1)]  # falling factorial t(t-1)...(t-j+1), as coefficients
    for j, dj in enumerate(diffs):
        scale = dj / factorial(j)
        for power, c in enumerate(basis):
            coeffs[power] += scale * c
        basis = [Fraction(0)] + basis
        for power in range(len(basis) - 1):
            basis[power] -= j * basis[power + 1]
    return tuple(coeffs)


def evaluate(coeffs, t) -> Fraction:
    """Exact value of a coefficient-list polynomial at t."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


@dataclass(frozen=True)
class EhrhartData:
    """Counts at t = 0..tmax, interpolated polynomial, and delta-vector."""

    s: tuple[int, ...]
    counts: tuple[int, ...]
    polynomial: tuple[Fraction, ...]
    delta: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "s": list(self.s),
            "counts": list(self.counts),
            "polynomial": [[c.numerator, c.denominator] for c in self.polynomial],
            "delta": list(self.delta),
        }


def ehrhart_data(s, tmax=None, budget=None) -> EhrhartData:
    """Full oracle bundle; extra counts beyond t = d must match the polynomial."""
    seq = check_s(s)
    d = len(seq)
    top = d if tmax is None else max(int(tmax), d)
    counts = dilate_counts(seq, tmax=top, budget=budget)
    poly = ehrhart_polynomial(seq, budget=budget)
    for t in range(d + 1, top + 1):
        value = evaluate(poly, t)
        if value != counts[t]:
            raise InconsistentCountsError(
                f"polynomial predicts {value} at t={t} but direct count is {counts[t]}"
            )
    delta = delta_from_counts(counts[: d + 1])
    return EhrhartData(seq, tuple(counts), poly, delta)
