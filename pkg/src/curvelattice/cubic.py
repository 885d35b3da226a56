"""Curves on a smooth cubic surface, viewed as the plane blown up in six points.

A class is a 7-tuple ``(delta; m1, ..., m6)`` meaning ``delta*L - sum m_i E_i``
with ``L`` the pullback of a line and ``E_i`` the exceptional lines.  Tuples
are stored with ``m`` sorted non-increasing and must satisfy
``delta >= m1`` and ``delta >= m1 + m2 + m3``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .quartic import Kind, max_genus


class HypothesisFailed(ValueError):
    pass


class NumpicViolation(ValueError):
    """The tuple fails ``delta >= m1 >= ... >= m6`` or ``delta >= m1 + m2 + m3``."""


def choose2(n: int) -> int:
    """``n(n-1)/2`` as a polynomial in ``n``; zero for ``n`` in ``{0, 1}``."""
    return n * (n - 1) // 2


def choose3(n: int) -> int:
    return n * (n - 1) * (n - 2) // 6


@dataclass(frozen=True)
class Septuple:
    delta: int
    m: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.m) != 6:
            raise NumpicViolation(f"need six multiplicities, got {len(self.m)}")
        m = tuple(sorted((int(x) for x in self.m), reverse=True))
        object.__setattr__(self, "m", m)
        if self.delta < m[0]:
            raise NumpicViolation(f"delta >= m1 fails: {self.delta} < {m[0]}")
        if self.delta < m[0] + m[1] + m[2]:
            raise NumpicViolation(
                f"delta >= m1 + m2 + m3 fails: {self.delta} < {m[0] + m[1] + m[2]}"
            )

    @classmethod
    def of(cls, delta: int, *m: int) -> "Septuple":
        return cls(delta, tuple(m))

    @classmethod
    def parse(cls, text: str) -> "Septuple":
        parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
        if len(parts) != 7:
            raise ValueError(f"expected 7 integers 'delta,m1,...,m6', got {text!r}")
        nums = [int(p, 10) for p in parts]
        return cls(nums[0], tuple(nums[1:]))

    def as_list(self) -> list[int]:
        return [self.delta, *self.m]

    def __str__(self) -> str:
        return f"({self.delta};{','.join(map(str, self.m))})"


def cubic_degree_genus(C: Septuple) -> tuple[int, int]:
    d = 3 * C.delta - sum(C.m)
    g = choose2(C.delta - 1) - sum(choose2(x) for x in C.m)
    return d, g


def _lambda_pattern(C: Septuple, head: int, tail: tuple[int, ...]) -> bool:
    """True for ``(lam + head; lam + tail[0], tail[1], ..., tail[5])``, ``lam >= 2``."""
    lam = C.delta - head
    return lam >= 2 and C.m[0] == lam + tail[0] and C.m[1:] == tail[1:]


def _exceptional_i(C: Septuple) -> bool:
    return _lambda_pattern(C, 9, (3, 3, 3, 3, 3, 3))


class CriterionA(str, enum.Enum):
    ZERO = "Zero"
    INCONCLUSIVE = "Inconclusive"


def criterion_A(C: Septuple) -> CriterionA:
    """``H^1(I_C(3)) = 0`` when ``m6 >= 3`` outside the exceptional tuples."""
    if C.m[5] >= 3 and not _exceptional_i(C):
        return CriterionA.ZERO
    return CriterionA.INCONCLUSIVE


@dataclass(frozen=True)
class CriterionB:
    h1_I1_zero: bool | None  # None means inconclusive
    h1_I3_nonzero_in_range: bool | None  # None means outside d >= 14, g >= 3d - 18

    def to_dict(self) -> dict:
        return {
            "h1_I1_zero": "Inconclusive" if self.h1_I1_zero is None else self.h1_I1_zero,
            "h1_I3_nonzero_in_range": (
                "OutOfRange" if self.h1_I3_nonzero_in_range is None else self.h1_I3_nonzero_in_range
            ),
        }


def criterion_B(C: Septuple) -> CriterionB:
    linearly_normal = C.m[5] >= 1 and not _lambda_pattern(C, 3, (1, 1, 1, 1, 1, 1))
    d, g = cubic_degree_genus(C)
    in_range = None
    if d >= 14 and g >= 3 * d - 18:
        in_range = 1 <= C.m[5] <= 2
    return CriterionB(True if linearly_normal else None, in_range)


def _lem1_check(C: Septuple, v: int) -> None:
    if v < 0:
        raise HypothesisFailed(f"v >= 0 fails: v = {v}")
    if C.m[2] < v:
        raise HypothesisFailed(f"m3 >= v fails: m3 = {C.m[2]}, v = {v}")
    lam = C.delta - 3 * v
    if lam >= 2 and C.m[0] == lam + v and C.m[1] == v and C.m[2] == v:
        raise HypothesisFailed(
            f"tuple is of the excluded form (lam+3v, lam+v, v, v, m4, m5, m6) with lam = {lam}"
        )


def lem1_bound(C: Septuple, v: int) -> int:
    """Lower bound for ``h^0(I_C(v)) - h^1(I_C(v))``."""
    _lem1_check(C, v)
    return choose3(v) - sum(choose2(v + 1 - x) for x in C.m[3:] if x < v)


def h1_ideal_cubic(C: Septuple, v: int) -> int:
    """``h^1(I_C(v))`` read off the fixed part of ``|C - vH|``.

    The fixed part is ``F = sum n_i E_i`` over ``i = 4, 5, 6`` with
    ``n_i = max(0, v - m_i)``; ``h^0(O_F) = sum C(n_i + 1, 2)`` because the
    ``E_i`` are disjoint.  One is subtracted when the mobile part is zero.
    """
    _lem1_check(C, v)
    if C.delta == 3 * v and all(x == v for x in C.m):
        return 0
    s = sum(choose2(max(0, v - x) + 1) for x in C.m[3:])
    mobile_zero = C.delta == 3 * v and all(x <= v for x in C.m)
    return s - 1 if mobile_zero else s


def h1_ideal_cubic_or_none(C: Septuple, v: int) -> int | None:
    try:
        return h1_ideal_cubic(C, v)
    except HypothesisFailed:
        return None


def conjecture_range(d: int, g: int) -> bool:
    return d >= 14 and 3 * d - 18 <= g and 8 * g <= d * d - 4


def quadratic_arm(d: int) -> Fraction:
    return Fraction(d * d, 10) - Fraction(d, 2) + 18


def prop47_range(d: int, g: int) -> bool:
    """``g > max{d^2/10 - d/2 + 18, G(d, 6)}`` and ``d >= 31``."""
    if d < 31:
        return False
    return g > max(quadratic_arm(d), Fraction(max_genus(d, 6)))


def t_range(d: int, g: int, t: int) -> bool:
    """The same bound with ``G(d, t)`` for ``6 <= t <= 8`` and ``d > t(t-1)``."""
    if not 6 <= t <= 8:
        raise ValueError(f"t must be in 6..8, got {t}")
    if d <= t * (t - 1):
        return False
    return g > max(quadratic_arm(d), Fraction(max_genus(d, t)))


def range48(d: int, g: int) -> bool:
    return d >= 58 and g > quadratic_arm(d)


@dataclass(frozen=True)
class CubicVerdict:
    kind: Kind
    tuple_: Septuple
    d: int
    g: int
    dim_w: int | None
    h1_I3: int | None
    h1_I1_zero: bool | None
    conjecture_range: bool
    criteria: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def tangent_dim(self) -> int | None:
        if self.dim_w is None or self.h1_I3 is None:
            return None
        return self.dim_w + self.h1_I3

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "tuple": self.tuple_.as_list(),
            "d": self.d,
            "g": self.g,
            "dim_w": self.dim_w,
            "tangent_dim": self.tangent_dim,
            "h1_I3": "unknown" if self.h1_I3 is None else self.h1_I3,
            "h1_I1_zero": "unknown" if self.h1_I1_zero is None else self.h1_I1_zero,
            "conjecture_range": self.conjecture_range,
            "criteria": list(self.criteria),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CubicVerdict":
        t = doc["tuple"]
        return cls(
            kind=Kind(doc["kind"]),
            tuple_=Septuple(t[0], tuple(t[1:])),
            d=doc["d"],
            g=doc["g"],
            dim_w=doc["dim_w"],
            h1_I3=None if doc["h1_I3"] == "unknown" else doc["h1_I3"],
            h1_I1_zero=None if doc["h1_I1_zero"] == "unknown" else doc["h1_I1_zero"],
            conjecture_range=doc["conjecture_range"],
            criteria=tuple(doc["criteria"]),
            notes=tuple(doc["notes"]),
        )


def _case_ii(C: Septuple, d: int) -> tuple[str | None, str | None]:
    """Return ``(fired_tag, blocked_note)`` for the m6 in {1, 2} criteria."""
    m = C.m
    if m[5] == 2 and m[4] >= 4:
        if d < 21:
            return None, "m6 = 2, m5 >= 4 needs d >= 21"
        if _lambda_pattern(C, 12, (4, 4, 4, 4, 4, 2)):
            return None, "exceptional tuple (lam+12, lam+4, 4, 4, 4, 4, 2) with lam >= 2"
        return "m6-2-m5-ge-4", None
    if m[5] == 1 and m[4] >= 6:
        if d < 35:
            return None, "m6 = 1, m5 >= 6 needs d >= 35"
        if _lambda_pattern(C, 18, (6, 6, 6, 6, 6, 1)):
            return None, "exceptional tuple (lam+18, lam+6, 6, 6, 6, 6, 1) with lam >= 2"
        return "m6-1-m5-ge-6", None
    if m[5] == 1 and m[4] == 5 and m[3] >= 7:
        if d < 35:
            return None, "m6 = 1, m5 = 5, m4 >= 7 needs d >= 35"
        if _lambda_pattern(C, 21, (7, 7, 7, 7, 5, 1)):
            return None, "exceptional tuple (lam+21, lam+7, 7, 7, 7, 5, 1) with lam >= 2"
        return "m6-1-m5-eq-5-m4-ge-7", None
    return None, None


def classify_mainC(C: Septuple) -> CubicVerdict:
    """Classify the 3-maximal family of curves of class ``C``."""
    d, g = cubic_degree_genus(C)
    dim_w = d + g + 18 if d > 9 else None
    h1 = h1_ideal_cubic_or_none(C, 3)
    if h1 is None and criterion_A(C) is CriterionA.ZERO:
        h1 = 0
    ln = criterion_B(C).h1_I1_zero
    base = dict(tuple_=C, d=d, g=g, dim_w=dim_w, h1_I3=h1, h1_I1_zero=ln,
                conjecture_range=conjecture_range(d, g))
    notes: list[str] = []
    m6 = C.m[5]

    if m6 >= 3:
        if not _exceptional_i(C):
            return CubicVerdict(Kind.GENERICALLY_SMOOTH, criteria=("m6-ge-3",), **base)
        return CubicVerdict(
            Kind.UNDETERMINED,
            criteria=("m6-ge-3-exceptional",),
            notes=("exceptional case (lam+9, lam+3, 3, ..., 3): H^1(O_C(3)) = 0, W lies in a "
                   "unique generically smooth component V with dim V - dim W = h^1(I_C(3))",),
            **base,
        )

    fired, blocked = _case_ii(C, d)
    if fired:
        return CubicVerdict(Kind.NON_REDUCED, criteria=(fired,), **base)
    if blocked:
        notes.append(blocked)

    if m6 <= 0:
        notes.append("m6 = 0 regime is not treated here")
        return CubicVerdict(Kind.UNDETERMINED, criteria=("m6-zero",), notes=tuple(notes), **base)

    if h1 == 0 and d > 9:
        return CubicVerdict(Kind.GENERICALLY_SMOOTH, criteria=("h1-ideal-3-vanishes",),
                            notes=tuple(notes), **base)

    # genus-range criteria need a linearly normal general member
    if ln:
        tags = []
        if prop47_range(d, g):
            tags.append("genus-above-G6-bound")
        tags += [f"genus-above-G{t}-bound" for t in (7, 8) if t_range(d, g, t)]
        if range48(d, g):
            tags.append("large-degree-genus-bound")
        if tags:
            if h1 is None:
                notes.append("W is a component but h^1(I_C(3)) is unknown")
            elif h1 > 0:
                return CubicVerdict(Kind.NON_REDUCED, criteria=tuple(tags),
                                    notes=tuple(notes), **base)
        elif d < 31:
            notes.append("genus-range criteria need d >= 31")
        else:
            notes.append("genus below the degree-6/7/8 maximal-genus bounds")
    else:
        notes.append("linear normality not established")
    if h1 is None:
        notes.append("h^1(I_C(3)) unknown: fixed-part formula hypotheses fail")
    return CubicVerdict(Kind.UNDETERMINED, notes=tuple(notes), **base)
