"""Hilbert-scheme criteria for space curves on surfaces of degree s, with the
component classifier for curves on the rank-2 quartics Q1 and Q2.

Every bound is evaluated with exact rationals.  For a curve ``C`` on a smooth
quartic ``S`` with ``d > 16`` that is not a complete intersection in ``S``,
the maximal family ``W`` has ``dim W = g + 33`` and the tangent space of the
Hilbert scheme at ``C`` has dimension ``dim W + h^1(I_C(4))``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import k3
from .k3 import K3Model
from .lattice import DivClass2


class OutOfRange(ValueError):
    pass


class NonIntegral(ArithmeticError):
    pass


class NegativeInput(ValueError):
    pass


class Kind(str, enum.Enum):
    GENERICALLY_SMOOTH = "GenericallySmoothComponent"
    NON_REDUCED = "NonReducedComponent"
    EXPECTED_NON_REDUCED = "ExpectedNonReduced"
    UNDETERMINED = "Undetermined"
    NOT_APPLICABLE = "NotApplicable"


def _frac_str(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _frac_parse(x: str | None) -> Fraction | None:
    return None if x is None else Fraction(x)


# --- maximal genus and numeric criteria ---------------------------------


def max_genus_r(d: int, s: int) -> int:
    """The residue ``0 <= r < s`` with ``d + r = 0 mod s``."""
    return (-d) % s


def max_genus(d: int, s: int) -> int:
    """Maximum genus ``G(d, s)`` of a smooth connected curve of degree ``d``
    lying on no surface of degree ``s - 1``; requires ``d > s(s-1)``."""
    if s < 2 or d <= s * (s - 1):
        raise OutOfRange(f"G(d,s) needs s >= 2 and d > s(s-1); got d={d}, s={s}")
    r = max_genus_r(d, s)
    value = 1 + Fraction(d, 2) * (Fraction(d, s) + s - 4) - Fraction(r * (s - r) * (s - 1), 2 * s)
    if value.denominator != 1:
        raise NonIntegral(f"G({d},{s}) evaluated to {value}")
    return int(value)


def ineq1_threshold(d: int) -> Fraction:
    """``min{G(d,5) - 1, d^2/10 + 21}``; defined for ``d >= 21``."""
    return min(Fraction(max_genus(d, 5) - 1), Fraction(d * d, 10) + 21)


def ineq1(d: int, g: int) -> bool:
    """Genus bound that makes a 4-maximal family an irreducible component."""
    if d < 21:
        return False
    return g > ineq1_threshold(d)


def main4_pred(d: int, g: int, h1_IC1: int) -> bool:
    if h1_IC1 < 0:
        raise NegativeInput(f"h1(I_C(1)) must be >= 0, got {h1_IC1}")
    return d >= 31 and g > 21 + Fraction(d * d, 10) and h1_IC1 <= d - 25


def clifford_h1_bound(d: int, g: int) -> Fraction:
    """Upper bound ``max{d - g, d/2} - 3`` for ``h^1(I_C(1))`` of a non-plane curve."""
    if d < 1:
        raise OutOfRange(f"d must be >= 1, got {d}")
    return max(Fraction(d - g), Fraction(d, 2)) - 3


def gencomp_pred(d: int, g: int, s: int) -> bool:
    """Necessary condition ``dim W >= 4d`` for ``W`` to be a component."""
    if s < 1:
        raise OutOfRange(f"s must be >= 1, got {s}")
    return g >= s * d - comb(s + 3, 3) + 2


def dim_component_formula(d: int, g: int, s: int) -> int:
    if s < 1:
        raise OutOfRange(f"s must be >= 1, got {s}")
    return (4 - s) * d + g + comb(s + 3, 3) - 2


def maxgendim_eval(d: int, g: int, s: int, u: int, h0_IES4: int, t: int, e: int) -> int:
    """Dimension of the component through a curve linked as ``C = eE + fH``.

    ``u`` counts surfaces of degree ``s`` and ``s-4`` through ``C`` inside ``S``;
    ``h0_IES4`` is ``h^0(I_{E/S}(s-4))`` and ``t = h^1(N_E) - h^1(O_E(s))``.
    For ``e = 0`` the correction ``h0_IES4 + t`` is replaced by ``C(s-1, 3)``.
    """
    for name, v in (("u", u), ("h0_IES4", h0_IES4), ("t", t)):
        if v < 0:
            raise NegativeInput(f"{name} must be >= 0, got {v}")
    base = dim_component_formula(d, g, s) - u
    if e != 0:
        return base + h0_IES4 + t
    return base + (comb(s - 1, 3) if s >= 1 else 0)


def cliffo_bound(d: int, g: int, s: int) -> Fraction:
    """Upper bound for ``h^0(N_{C/S})`` of a curve on a degree-s surface."""
    if s < 4:
        raise OutOfRange(f"needs s >= 4, got {s}")
    if d < 1:
        raise OutOfRange(f"needs d >= 1, got {d}")
    return max(Fraction(d * d, s) - g + 1, Fraction(d * d, 2 * s) + 1)


def prop20_bound(d: int, g: int, s: int, h0_OC_s4: int) -> Fraction:
    """Upper bound on the dimension of a component whose general curve lies
    on an integral surface of degree ``s``."""
    if s < 4:
        raise OutOfRange(f"needs s >= 4, got {s}")
    if d <= s * s:
        raise OutOfRange(f"needs d > s^2, got d={d}, s={s}")
    if h0_OC_s4 < 0:
        raise NegativeInput(f"h0(O_C(s-4)) must be >= 0, got {h0_OC_s4}")
    return comb(s + 3, 3) - 1 + max(
        Fraction(d * d, s) - g,
        Fraction(d * d, 2 * s),
        Fraction((4 - s) * d + g - 1 + h0_OC_s4),
    )


def picard_bound(g: int, rho: int) -> int:
    """Dimension bound ``g + 35 - rho`` for families on quartics of Picard number rho."""
    if rho < 1:
        raise OutOfRange(f"rho must be >= 1, got {rho}")
    return g + 35 - rho


# --- classification -----------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    kind: Kind
    d: int
    g: int
    h1_ideal_4: int
    dim_w: int | None = None
    tangent_dim: int | None = None
    criteria: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    divisor: DivClass2 | None = None
    model: str | None = None
    clifford_bound: Fraction | None = None

    def __post_init__(self):
        if self.dim_w is not None and self.tangent_dim is not None:
            assert self.tangent_dim == self.dim_w + self.h1_ideal_4
        if self.kind is Kind.GENERICALLY_SMOOTH:
            assert self.h1_ideal_4 == 0
        if self.kind in (Kind.NON_REDUCED, Kind.EXPECTED_NON_REDUCED):
            assert self.h1_ideal_4 > 0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "model": self.model,
            "class": None if self.divisor is None else list(self.divisor),
            "d": self.d,
            "g": self.g,
            "h1_I4": self.h1_ideal_4,
            "dim_w": self.dim_w,
            "tangent_dim": self.tangent_dim,
            "clifford_h1_bound": _frac_str(self.clifford_bound),
            "criteria": list(self.criteria),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Verdict":
        return cls(
            kind=Kind(doc["kind"]),
            d=doc["d"],
            g=doc["g"],
            h1_ideal_4=doc["h1_I4"],
            dim_w=doc["dim_w"],
            tangent_dim=doc["tangent_dim"],
            criteria=tuple(doc["criteria"]),
            notes=tuple(doc["notes"]),
            divisor=None if doc["class"] is None else DivClass2(*doc["class"]),
            model=doc["model"],
            clifford_bound=_frac_parse(doc["clifford_h1_bound"]),
        )


def _region_tags(M: K3Model, C: DivClass2) -> list[str]:
    # informational only; the verdict is driven by the computed h1
    a, b = C.a, C.b
    tags = []
    if k3._is_model(M, k3.Q1):
        if 4 < a and 2 * a < 3 * b - 2:
            tags.append("q1-region-vanishing")
        elif 3 * b - 2 <= 2 * a <= 3 * b:
            tags.append("q1-region-nonvanishing")
    elif k3._is_model(M, k3.Q2):
        if b + 4 <= 2 * a and a <= 2 * b - 4:
            tags.append("q2-region-vanishing")
    return tags


def classify_quartic(M: K3Model, C: DivClass2, h1_IC1: int | None = None) -> Verdict:
    """Classify the 4-maximal family of a curve of class ``C`` on the model.

    ``h1_IC1`` optionally supplies ``h^1(I_C(1))``, which the lattice data do
    not determine; it enables the linear-normality criterion for ``d >= 31``.
    """
    d = k3.degree(M, C)
    g = k3.genus(M, C)
    h1 = k3.h1_ideal_quartic(M, C, 4)
    common = dict(d=d, g=g, h1_ideal_4=h1, divisor=C, model=M.name)

    if not k3.is_smooth_curve_class(M, C):
        return Verdict(Kind.NOT_APPLICABLE, criteria=("not-smooth-curve-class",),
                       notes=("general member of |C| is not a smooth irreducible curve",), **common)
    if k3.is_ci(M, C):
        return Verdict(Kind.NOT_APPLICABLE, criteria=("complete-intersection",),
                       notes=("C is a complete intersection in S",), **common)
    if d <= 16:
        return Verdict(Kind.NOT_APPLICABLE, criteria=("degree-at-most-16",),
                       notes=("needs d > 16",), **common)

    dim_w = dim_component_formula(d, g, 4)
    dims = dict(dim_w=dim_w, tangent_dim=dim_w + h1)
    tags = _region_tags(M, C)

    if h1 == 0:
        return Verdict(Kind.GENERICALLY_SMOOTH,
                       criteria=("h1-ideal-4-vanishes",) + tuple(tags), **dims, **common)

    tags.insert(0, "h1-ideal-4-nonzero")
    if ineq1(d, g):
        return Verdict(Kind.NON_REDUCED, criteria=tuple(tags + ["genus-above-min-bound"]),
                       **dims, **common)
    tags.append("genus-below-min-bound")
    if h1_IC1 is not None and main4_pred(d, g, h1_IC1):
        return Verdict(Kind.NON_REDUCED, criteria=tuple(tags + ["linearly-normal-genus-bound"]),
                       **dims, **common)
    if not gencomp_pred(d, g, 4):
        return Verdict(
            Kind.UNDETERMINED,
            criteria=tuple(tags + ["component-dimension-bound-fails"]),
            notes=("g < 4d - 33: dim W < 4d, so W is not an irreducible component",),
            **dims, **common,
        )

    notes = ["h1(I_C(4)) > 0 but no criterion proves W is a component"]
    if d >= 31 and g > 21 + Fraction(d * d, 10):
        notes.append(f"component if h1(I_C(1)) <= {d - 25}")
    return Verdict(Kind.EXPECTED_NON_REDUCED, criteria=tuple(tags), notes=tuple(notes),
                   clifford_bound=clifford_h1_bound(d, g), **dims, **common)


# --- family enumeration -------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    base: DivClass2
    step: DivClass2
    label: str
    k_min: int = 0

    def members(self, b_max: int) -> list[DivClass2]:
        out = []
        k = self.k_min
        while self.base.b + k * self.step.b <= b_max:
            out.append(self.base + self.step * k)
            k += 1
        return out


Q1_FAMILIES = (
    FamilySpec(DivClass2(8, 6), DivClass2(3, 2), "a"),
    FamilySpec(DivClass2(10, 7), DivClass2(3, 2), "b"),
    FamilySpec(DivClass2(15, 10), DivClass2(3, 2), "c"),
)

Q2_FAMILIES = tuple(
    FamilySpec(DivClass2(a0, 4), DivClass2(2, 1), label, k_min=1)
    for a0, label in ((5, "5+2k"), (6, "6+2k"), (7, "7+2k"), (8, "8+2k"))
)


def family_members(families, b_max: int) -> list[DivClass2]:
    return sorted({c for f in families for c in f.members(b_max)})


def enumerate_families_q1(b_max: int) -> list[DivClass2]:
    """Scan Q1 for non-c.i. smooth classes with ``3b/2 - 1 <= a <= 3b/2``,
    ``d > 16`` and the genus bound; sorted lexicographically."""
    if b_max < 0:
        raise OutOfRange(f"b_max must be >= 0, got {b_max}")
    M = k3.Q1
    out = []
    for b in range(b_max + 1):
        for a in range(0, (3 * b) // 2 + 1):
            C = DivClass2(a, b)
            if a == b or not (3 * b - 2 <= 2 * a <= 3 * b):
                continue
            if not k3.is_smooth_curve_class(M, C):
                continue
            d = k3.degree(M, C)
            if d > 16 and ineq1(d, k3.genus(M, C)):
                out.append(C)
    return sorted(out)


def enumerate_q2_nonvanishing(b_max: int) -> list[DivClass2]:
    """Scan Q2 for smooth classes with ``a > b``, ``2b - 4 < a <= 2b``,
    ``d > 16`` and ``h^1(I_C(4)) != 0``; sorted lexicographically."""
    if b_max < 0:
        raise OutOfRange(f"b_max must be >= 0, got {b_max}")
    M = k3.Q2
    out = []
    for b in range(b_max + 1):
        for a in range(max(b + 1, 2 * b - 3), 2 * b + 1):
            C = DivClass2(a, b)
            if not k3.is_smooth_curve_class(M, C) or k3.degree(M, C) <= 16:
                continue
            if k3.h1_ideal_quartic(M, C, 4) > 0:
                out.append(C)
    return sorted(out)
