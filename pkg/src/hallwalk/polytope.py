"""s-sequences and their lecture hall polytopes.

The polytope of a positive integer sequence s = (s_1, ..., s_d) is

    { x in R^d : 0 <= x_1/s_1 <= x_2/s_2 <= ... <= x_d/s_d <= 1 }.

Points are stored in ascending index order (x_1, ..., x_d) everywhere;
vertex matrices displayed elsewhere with x_d on top are re-indexed at the
boundary.  All arithmetic is exact.
"""

from typing import NamedTuple

from .errors import BudgetExceededError, DimensionError


class HalfSpace(NamedTuple):
    """Inequality a . x <= b with integer data."""

    a: tuple[int, ...]
    b: int

    def slack(self, point):
        if len(point) != len(self.a):
            raise DimensionError(f"point has length {len(point)}, expected {len(self.a)}")
        return self.b - sum(c * x for c, x in zip(self.a, point))


def check_s(s) -> tuple[int, ...]:
    """Validate and normalize an s-sequence to a tuple of positive ints."""
    seq = tuple(int(v) for v in s)
    if not seq:
        raise ValueError("s-sequence must have length >= 1")
    if any(v < 1 for v in seq):
        raise ValueError(f"s-sequence entries must be positive, got {seq}")
    return seq


def parse_s(text: str) -> tuple[int, ...]:
    """Parse a comma-separated sequence such as '2,3,4'."""
    try:
        return check_s(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse s-sequence from {text!r}: {exc}") from None


def reverse(s) -> tuple[int, ...]:
    """The reversed sequence; its polytope is unimodularly equivalent."""
    return tuple(check_s(s)[::-1])


def dilate(s, r: int) -> tuple[int, ...]:
    """Sequence of the r-th dilate: r*P^(s) = P^(r*s)."""
    if r < 1:
        raise ValueError(f"dilation factor must be >= 1, got {r}")
    return tuple(r * v for v in check_s(s))


def vertices(s) -> list[tuple[int, ...]]:
    """All d+1 vertices: vertex j turns on the top j coordinates at s_i."""
    seq = check_s(s)
    d = len(seq)
    return [
        tuple(seq[i] if i >= d - j else 0 for i in range(d))
        for j in range(d + 1)
    ]


def hrep(s, t: int = 1) -> list[HalfSpace]:
    """The d+1 defining half-spaces of the dilate t*P^(s).

    Rows: -x_1 <= 0, then s_{i+1} x_i - s_i x_{i+1} <= 0 for each adjacent
    pair, then x_d <= t*s_d.  Dilation scales only the final bound.
    """
    seq = check_s(s)
    if t < 1:
        raise ValueError(f"dilation factor must be >= 1, got {t}")
    d = len(seq)
    rows = [HalfSpace(tuple(-1 if i == 0 else 0 for i in range(d)), 0)]
    for i in range(d - 1):
        a = [0] * d
        a[i] = seq[i + 1]
        a[i + 1] = -seq[i]
        rows.append(HalfSpace(tuple(a), 0))
    rows.append(HalfSpace(tuple(1 if i == d - 1 else 0 for i in range(d)), t * seq[d - 1]))
    return rows


def contains(s, point, t: int = 1, strict: bool = False) -> bool:
    """Membership of a point (ints or Fractions) in t*P^(s)."""
    seq = check_s(s)
    if len(point) != len(seq):
        raise DimensionError(f"point has length {len(point)}, expected {len(seq)}")
    for row in hrep(seq, t):
        slack = row.slack(point)
        if slack < 0 or (strict and slack == 0):
            return False
    return True


def enumeration_estimate(s, t: int) -> int:
    """Bounding-box cost estimate for enumerating t*P^(s)."""
    est = 1
    for v in check_s(s):
        est *= t * v + 1
    return est


def check_budget(estimate: int, budget) -> None:
    if budget is not None and estimate > budget:
        raise BudgetExceededError(
            f"estimated {estimate} enumeration steps exceeds budget {budget}"
        )


def lattice_points(s, t: int = 1, budget=None) -> list[tuple[int, ...]]:
    """All integer points of t*P^(s), in ascending (x_d, ..., x_1) lex order.

    Recursion descends from x_d with the chain bound
    x_i <= floor(s_i * x_{i+1} / s_{i+1}); only feasible nodes are visited.
    """
    seq = check_s(s)
    if t < 0:
        raise ValueError(f"dilation factor must be >= 0, got {t}")
    d = len(seq)
    if t == 0:
        return [tuple([0] * d)]
    check_budget(enumeration_estimate(seq, t), budget)
    out: list[tuple[int, ...]] = []
    point = [0] * d

    def descend(i: int, bound: int) -> None:
        # i is 1-based; bound is the integer cap for x_i.
        if i == 1:
            for v in range(bound + 1):
                point[0] = v
                out.append(tuple(point))
            return
        for v in range(bound + 1):
            point[i - 1] = v
            descend(i - 1, seq[i - 2] * v // seq[i - 1])

    descend(d, t * seq[d - 1])
    return out


def reflect(s, point, t: int = 1) -> tuple:
    """Map a point of t*P^(s) to t*P^(reverse(s)) via y_i = t*s_{d+1-i} - x_{d+1-i}.

    This is the standard affine unimodular equivalence between a lecture
    hall polytope and its reversed-sequence twin; it is an involution when
    composed with itself across the two sequences.
    """
    seq = check_s(s)
    if len(point) != len(seq):
        raise DimensionError(f"point has length {len(point)}, expected {len(seq)}")
    d = len(seq)
    return tuple(t * seq[d - 1 - i] - point[d - 1 - i] for i in range(d))
