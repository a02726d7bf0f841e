"""Fano / reflexive / Gorenstein classification of lecture hall polytopes.

Two independent verdicts are produced wherever possible:

* theorem verdicts from the arithmetic of s, available for three sequence
  classes (strictly increasing, constant then strictly increasing, and
  weakly increasing by at most one), applied to s or to reverse(s);
* delta verdicts from the ascent-enumerated delta-vector (delta_d = 1 for
  Fano; symmetric of degree d for reflexive-up-to-unimodular-equivalence).

The theorem verdict certifies the property after translating the unique
interior point to the origin; the delta verdict certifies it only up to
unimodular equivalence.  Whenever both exist they are asserted equal, so a
disagreement surfaces as an error instead of a silent wrong answer.
"""

from dataclasses import dataclass

from . import delta as deltas
from .errors import (
    BudgetExceededError,
    MathematicalInconsistencyError,
    OriginNotInteriorError,
    UnsupportedSequenceError,
)
from .polytope import HalfSpace, check_s, contains, dilate, lattice_points, reverse, vertices

STRICTLY_INCREASING = "strictly-increasing"
CONSTANT_THEN_STRICT = "constant-then-strict"
INCREMENT_AT_MOST_ONE = "increment-at-most-one"
WEAKLY_MONOTONE = "weakly-monotone"
GENERAL = "general"

_SPECIFICITY = (
    STRICTLY_INCREASING,
    CONSTANT_THEN_STRICT,
    INCREMENT_AT_MOST_ONE,
    WEAKLY_MONOTONE,
    GENERAL,
)


@dataclass(frozen=True)
class SequenceClass:
    tag: str
    reversed: bool
    all_tags: tuple[tuple[str, bool], ...]

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "reversed": self.reversed,
            "all_tags": [[name, rev] for name, rev in self.all_tags],
        }


def _constant_run(seq) -> int:
    i = 1
    while i < len(seq) and seq[i] == seq[0]:
        i += 1
    return i


def _is_strictly_increasing(seq) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def _is_constant_then_strict(seq) -> bool:
    run = _constant_run(seq)
    return all(a < b for a, b in zip(seq[run - 1 :], seq[run:]))


def _is_increment_at_most_one(seq) -> bool:
    return all(0 <= b - a <= 1 for a, b in zip(seq, seq[1:]))


_CLASS_TESTS = (
    (STRICTLY_INCREASING, _is_strictly_increasing),
    (CONSTANT_THEN_STRICT, _is_constant_then_strict),
    (INCREMENT_AT_MOST_ONE, _is_increment_at_most_one),
)


def sequence_class(s) -> SequenceClass:
    """All applicable class tags for s and reverse(s); most specific first."""
    seq = check_s(s)
    rev = reverse(seq)
    tags: list[tuple[str, bool]] = []
    for name, test in _CLASS_TESTS:
        if test(seq):
            tags.append((name, False))
        if rev != seq and test(rev):
            tags.append((name, True))
    increasing = all(a <= b for a, b in zip(seq, seq[1:]))
    decreasing = all(a >= b for a, b in zip(seq, seq[1:]))
    if increasing or decreasing:
        tags.append((WEAKLY_MONOTONE, False))
    if not tags:
        tags.append((GENERAL, False))
    tags.sort(key=lambda tr: (_SPECIFICITY.index(tr[0]), tr[1]))
    return SequenceClass(tags[0][0], tags[0][1], tuple(tags))


def _fano_condition(name: str, seq) -> bool:
    d = len(seq)
    if name == STRICTLY_INCREASING:
        return seq[0] == 2 and all(seq[i + 1] <= 2 * seq[i] for i in range(d - 1))
    if name == CONSTANT_THEN_STRICT:
        run = _constant_run(seq)
        return seq[0] == run + 1 and all(
            seq[j + 1] <= 2 * seq[j] for j in range(run - 1, d - 1)
        )
    if name == INCREMENT_AT_MOST_ONE:
        return seq[-1] == d + 1
    raise UnsupportedSequenceError(f"no Fano characterization for class {name}")


def _interior_point_formula(name: str, seq) -> tuple[int, ...]:
    d = len(seq)
    if name == STRICTLY_INCREASING:
        return tuple(v - 1 for v in seq)
    if name == CONSTANT_THEN_STRICT:
        run = _constant_run(seq)
        return tuple(i + 1 if i < run else seq[i] - 1 for i in range(d))
    if name == INCREMENT_AT_MOST_ONE:
        return tuple(range(1, d + 1))
    raise UnsupportedSequenceError(f"no interior point formula for class {name}")


def _divisibility_condition(name: str, seq) -> bool:
    d = len(seq)
    if name in (STRICTLY_INCREASING, CONSTANT_THEN_STRICT):
        start = 0 if name == STRICTLY_INCREASING else _constant_run(seq) - 1
        for i in range(start, d - 1):
            k = seq[i + 1] - seq[i]
            if seq[i] % k or seq[i + 1] % k:
                return False
        return True
    if name == INCREMENT_AT_MOST_ONE:
        for i in range(d - 1):
            k = (i + 2) * seq[i] - (i + 1) * seq[i + 1]
            if seq[i] % k or seq[i + 1] % k:
                return False
        return True
    raise UnsupportedSequenceError(f"no reflexivity characterization for class {name}")


def _unreverse_point(s, point) -> tuple[int, ...]:
    # inverse of the reversal equivalence at dilation 1
    d = len(s)
    return tuple(s[i] - point[d - 1 - i] for i in range(d))


@dataclass(frozen=True)
class Classification:
    s: tuple[int, ...]
    sequence_class: SequenceClass
    fano_theorem: bool | None
    fano_delta: bool
    interior_point: tuple[int, ...] | None
    reflexive_theorem: bool | None
    reflexive_reason: str | None
    reflexive_delta: bool
    gorenstein_index: int | None
    delta: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "s": list(self.s),
            "class": self.sequence_class.tag,
            "class_reversed": self.sequence_class.reversed,
            "fano_theorem": self.fano_theorem,
            "fano_delta": self.fano_delta,
            "interior_point": None if self.interior_point is None else list(self.interior_point),
            "reflexive_theorem": self.reflexive_theorem,
            "reflexive_reason": self.reflexive_reason,
            "reflexive_delta": self.reflexive_delta,
            "gorenstein_index": self.gorenstein_index,
        }


def _theorem_orientations(cls: SequenceClass):
    return [
        (name, rev)
        for name, rev in cls.all_tags
        if name in (STRICTLY_INCREASING, CONSTANT_THEN_STRICT, INCREMENT_AT_MOST_ONE)
    ]


def classify(s, budget=None) -> Classification:
    """Full classification with theorem/delta cross-validation."""
    seq = check_s(s)
    d = len(seq)
    cls = sequence_class(seq)
    _guard_ascent_enumeration(seq, 1, budget)
    dv = deltas.delta_vector(seq)
    fano_delta = dv[d] == 1
    reflexive_delta = deltas.is_symmetric(dv) and deltas.degree(dv) == d

    orientations = _theorem_orientations(cls)
    fano_verdicts = []
    for name, rev in orientations:
        oriented = reverse(seq) if rev else seq
        fano_verdicts.append(_fano_condition(name, oriented))
    fano_theorem: bool | None = None
    if fano_verdicts:
        if len(set(fano_verdicts)) != 1:
            raise MathematicalInconsistencyError(
                f"class theorems disagree on Fano for s={seq}: {list(zip(orientations, fano_verdicts))}"
            )
        fano_theorem = fano_verdicts[0]
        if fano_theorem != fano_delta:
            raise MathematicalInconsistencyError(
                f"theorem says Fano={fano_theorem} but delta_d={dv[d]} for s={seq}"
            )

    interior_point = None
    if fano_delta:
        points = set()
        for name, rev in orientations:
            oriented = reverse(seq) if rev else seq
            p = _interior_point_formula(name, oriented)
            points.add(_unreverse_point(seq, p) if rev else p)
        if points:
            if len(points) != 1:
                raise MathematicalInconsistencyError(
                    f"interior point formulas disagree for s={seq}: {sorted(points)}"
                )
            interior_point = points.pop()
        else:
            inside = [p for p in lattice_points(seq, 1, budget=budget) if contains(seq, p, strict=True)]
            if len(inside) != 1:
                raise MathematicalInconsistencyError(
                    f"delta_d = 1 but found {len(inside)} interior points for s={seq}"
                )
            interior_point = inside[0]
        if not contains(seq, interior_point, strict=True):
            raise MathematicalInconsistencyError(
                f"formula interior point {interior_point} is not interior for s={seq}"
            )

    reflexive_theorem: bool | None = None
    reflexive_reason: str | None = None
    if orientations:
        if not fano_theorem:
            reflexive_theorem = False
            reflexive_reason = "not Fano"
        else:
            verdicts = []
            for name, rev in orientations:
                oriented = reverse(seq) if rev else seq
                verdicts.append(_divisibility_condition(name, oriented))
            if len(set(verdicts)) != 1:
                raise MathematicalInconsistencyError(
                    f"class theorems disagree on reflexivity for s={seq}"
                )
            reflexive_theorem = verdicts[0]
        if reflexive_theorem != reflexive_delta:
            raise MathematicalInconsistencyError(
                f"theorem says reflexive={reflexive_theorem} but delta route says "
                f"{reflexive_delta} for s={seq} (delta={dv})"
            )

    index = gorenstein_index(seq, budget=budget, _delta=dv)

    return Classification(
        s=seq,
        sequence_class=cls,
        fano_theorem=fano_theorem,
        fano_delta=fano_delta,
        interior_point=interior_point,
        reflexive_theorem=reflexive_theorem,
        reflexive_reason=reflexive_reason,
        reflexive_delta=reflexive_delta,
        gorenstein_index=index,
        delta=dv,
    )


def fano(s, budget=None) -> Classification:
    """Classification with the Fano fields populated (full run; it is cheap)."""
    return classify(s, budget=budget)


def reflexive(s, budget=None) -> Classification:
    """Classification with the reflexive fields populated."""
    return classify(s, budget=budget)


def _guard_ascent_enumeration(seq, scale, budget) -> None:
    if budget is None:
        return
    est = 1
    for v in seq:
        est *= scale * v
    if est > budget:
        raise BudgetExceededError(
            f"enumerating {est} inversion sequences for {tuple(scale * v for v in seq)} "
            f"exceeds budget {budget}"
        )


def gorenstein_index(s, budget=None, _delta=None) -> int | None:
    """Index c with c*P reflexive, or None.

    If the delta-vector is symmetric of degree m the candidate is
    c = d - m + 1; the verdict is only reported after constructively
    checking that dilate(s, c) has a symmetric delta-vector of full degree.
    """
    seq = check_s(s)
    d = len(seq)
    if _delta is None:
        _guard_ascent_enumeration(seq, 1, budget)
    dv = deltas.delta_vector(seq) if _delta is None else _delta
    if not deltas.is_symmetric(dv):
        return None
    c = d - deltas.degree(dv) + 1
    scaled = dilate(seq, c)
    _guard_ascent_enumeration(seq, c, budget)
    dv_scaled = deltas.delta_vector(scaled)
    if not (deltas.is_symmetric(dv_scaled) and deltas.degree(dv_scaled) == d):
        raise MathematicalInconsistencyError(
            f"delta of s={seq} is symmetric of degree {deltas.degree(dv)} but "
            f"dilate(s, {c}) = {scaled} is not reflexive (delta {dv_scaled})"
        )
    return c


def translated_hrep(s) -> list[HalfSpace]:
    """Facet system of P^(s) translated so its unique interior point is 0.

    Only defined when s (or reverse(s)) lies in a characterized class and
    is Fano there; the rows follow the class-specific primitive forms.  For
    a reversed match the rows describe the increasing representative
    reverse(s), whose translated polytope is unimodularly equivalent.
    """
    seq = check_s(s)
    cls = sequence_class(seq)
    orientations = _theorem_orientations(cls)
    if not orientations:
        raise UnsupportedSequenceError(f"s={seq} is in no characterized class")
    name, rev = orientations[0]
    oriented = reverse(seq) if rev else seq
    if not _fano_condition(name, oriented):
        raise UnsupportedSequenceError(f"s={seq} is not Fano, no translated facet system")
    d = len(oriented)
    rows: list[HalfSpace] = []

    def unit(i, sign=1):
        return tuple(sign if j == i else 0 for j in range(d))

    if name in (STRICTLY_INCREASING, INCREMENT_AT_MOST_ONE):
        rows.append(HalfSpace(unit(d - 1), 1))
        for i in range(d - 1):
            a = [0] * d
            a[i] = oriented[i + 1]
            a[i + 1] = -oriented[i]
            if name == STRICTLY_INCREASING:
                b = oriented[i + 1] - oriented[i]
            else:
                b = (i + 2) * oriented[i] - (i + 1) * oriented[i + 1]
            rows.append(HalfSpace(tuple(a), b))
        rows.append(HalfSpace(unit(0, -1), 1))
    else:  # constant then strictly increasing
        run = _constant_run(oriented)
        rows.append(HalfSpace(unit(0, -1), 1))
        rows.append(HalfSpace(unit(d - 1), 1))
        for j in range(1, run):
            a = [0] * d
            a[j - 1] = 1
            a[j] = -1
            rows.append(HalfSpace(tuple(a), 1))
        for j in range(run - 1, d - 1):
            a = [0] * d
            a[j] = oriented[j + 1]
            a[j + 1] = -oriented[j]
            rows.append(HalfSpace(tuple(a), oriented[j + 1] - oriented[j]))

    _check_translated_rows(oriented, name, rows)
    return rows


def _check_translated_rows(oriented, name, rows) -> None:
    # Every translated vertex satisfies all rows and is tight on >= d of
    # them; the origin is strictly inside.  Violations mean a bad row.
    p = _interior_point_formula(name, oriented)
    for row in rows:
        if row.b <= 0:
            raise MathematicalInconsistencyError(f"row {row} does not contain 0 strictly")
    for v in vertices(oriented):
        shifted = tuple(x - q for x, q in zip(v, p))
        tight = 0
        for row in rows:
            slack = row.slack(shifted)
            if slack < 0:
                raise MathematicalInconsistencyError(
                    f"translated vertex {shifted} violates {row} for s={oriented}"
                )
            if slack == 0:
                tight += 1
        if tight < len(oriented):
            raise MathematicalInconsistencyError(
                f"translated vertex {shifted} tight on only {tight} rows for s={oriented}"
            )


def dual_is_lattice(halfspaces) -> bool:
    """True iff each facet a.x <= b yields an integral dual vertex a/b."""
    for row in halfspaces:
        if row.b <= 0:
            raise OriginNotInteriorError(f"row {row} has b <= 0; origin is not interior")
        if any(c % row.b for c in row.a):
            return False
    return True
