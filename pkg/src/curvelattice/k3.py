"""Rank-2 lattice-polarized quartic K3 surfaces and their divisor cohomology.

Two models are built in:

``Q1``
    Picard lattice spanned by a line ``G1`` and a plane cubic ``G2`` with
    Gram matrix ``[[-2, 3], [3, 0]]``; ``H = G1 + G2``.
``Q2``
    Picard lattice spanned by two conics with Gram matrix ``[[-2, 4], [4, -2]]``;
    ``H = G1 + G2``.

On both, the effective cone is the closed positive quadrant ``a, b >= 0``.
User models read from JSON declare the same property as an axiom.

The cohomology engine peels (-2)-curves off non-nef effective classes: if
``G`` is a smooth rational curve with ``d = -D.G > 0`` then
``h1(D) = h1(D - G) + d - 1``.  Nef classes are handled by vanishing
(``D^2 > 0``) or by the elliptic-pencil formula (``D = kE``, ``h1 = k - 1``),
non-effective classes by Serre duality and Riemann-Roch.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .lattice import DivClass2, Gram2, LatticeError, euler_char_k3, pair, self_int


class ModelValidationError(LatticeError):
    """A model definition violates one of the K3Model invariants."""


class PeelLeftCone(LatticeError):
    """Peeling a (-2)-curve produced a class outside the effective cone."""


class NoPencil(LatticeError):
    """A nef class of square zero is not a multiple of any listed pencil."""


class OutOfStatedRange(ValueError):
    """Arguments lie outside the range where a closed form is stated."""


@dataclass(frozen=True)
class K3Model:
    name: str
    gram: Gram2
    hyperplane: DivClass2
    minus_two_curves: tuple[DivClass2, ...]
    elliptic_pencils: tuple[DivClass2, ...] = ()

    def __post_init__(self):
        G = self.gram
        H = self.hyperplane
        if self_int(H, G) != 4:
            raise ModelValidationError(
                f"hyperplane^2 = 4 (quartic): got {self_int(H, G)} for H = {H}"
            )
        if not is_effective(self, H):
            raise ModelValidationError(f"hyperplane in effective cone a,b >= 0: H = {H}")
        for c in self.minus_two_curves:
            if self_int(c, G) != -2:
                raise ModelValidationError(
                    f"(-2)-curve has square -2: {c}^2 = {self_int(c, G)}"
                )
            if pair(H, c, G) <= 0:
                raise ModelValidationError(f"hyperplane.curve > 0: H.{c} = {pair(H, c, G)}")
            if not is_effective(self, c):
                raise ModelValidationError(f"(-2)-curve in effective cone a,b >= 0: {c}")
        for e in self.elliptic_pencils:
            if self_int(e, G) != 0:
                raise ModelValidationError(f"pencil has square 0: {e}^2 = {self_int(e, G)}")
            if math.gcd(e.a, e.b) != 1:
                raise ModelValidationError(f"pencil class is primitive: {e}")
            if not is_effective(self, e):
                raise ModelValidationError(f"pencil in effective cone a,b >= 0: {e}")
            for c in self.minus_two_curves:
                if pair(e, c, G) < 0:
                    raise ModelValidationError(
                        f"pencil is nef: {e}.{c} = {pair(e, c, G)} < 0"
                    )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "gram": self.gram.as_matrix(),
            "hyperplane": list(self.hyperplane),
            "minus_two_curves": [list(c) for c in self.minus_two_curves],
            "elliptic_pencils": [list(e) for e in self.elliptic_pencils],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "K3Model":
        """Build a model from the JSON model-definition document."""
        if not isinstance(doc, dict):
            raise ModelValidationError("model document must be a JSON object")
        missing = {"name", "gram", "hyperplane", "minus_two_curves"} - doc.keys()
        if missing:
            raise ModelValidationError(f"required keys present: missing {sorted(missing)}")
        try:
            gram = Gram2.from_matrix(doc["gram"])
            hyperplane = _pair_of_ints(doc["hyperplane"], "hyperplane")
            curves = tuple(_pair_of_ints(c, "minus_two_curves") for c in doc["minus_two_curves"])
            pencils = tuple(
                _pair_of_ints(e, "elliptic_pencils") for e in doc.get("elliptic_pencils", [])
            )
        except ModelValidationError:
            raise
        except LatticeError as exc:
            raise ModelValidationError(str(exc)) from exc
        except (TypeError, ValueError) as exc:
            raise ModelValidationError(f"gram is a 2x2 integer matrix: {exc}") from exc
        return cls(str(doc["name"]), gram, hyperplane, curves, pencils)

    @classmethod
    def load(cls, path: str | Path) -> "K3Model":
        with open(path, encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ModelValidationError(f"model file is valid JSON: {exc}") from exc
        return cls.from_dict(doc)


def _pair_of_ints(value, key: str) -> DivClass2:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in value)
    ):
        raise ModelValidationError(f"{key} entries are integer pairs [a, b]: got {value!r}")
    return DivClass2(value[0], value[1])


def degree(M: K3Model, C: DivClass2) -> int:
    return pair(M.hyperplane, C, M.gram)


def genus(M: K3Model, C: DivClass2) -> int:
    return self_int(C, M.gram) // 2 + 1


def is_effective(M: K3Model, D: DivClass2) -> bool:
    return D.a >= 0 and D.b >= 0


def is_nef(M: K3Model, D: DivClass2) -> bool:
    if D.is_zero():
        return True
    if not is_effective(M, D):
        return False
    return all(pair(D, c, M.gram) >= 0 for c in M.minus_two_curves)


def _pencil_multiple(M: K3Model, D: DivClass2) -> tuple[DivClass2, int] | None:
    for e in M.elliptic_pencils:
        if D.a * e.b != D.b * e.a:
            continue
        k = D.a // e.a if e.a else D.b // e.b
        if k >= 1 and e * k == D:
            return e, k
    return None


def is_smooth_curve_class(M: K3Model, C: DivClass2) -> bool:
    """True when the general member of ``|C|`` is a smooth irreducible curve.

    The irreducible classes are the listed (-2)-curves, the primitive pencil
    classes, and nef classes of positive square that are not of the form
    ``kE + G`` with ``E.G = 1`` (those have a fixed component).
    """
    if C in M.minus_two_curves or C in M.elliptic_pencils:
        return True
    if C.is_zero() or not is_nef(M, C):
        return False
    if self_int(C, M.gram) <= 0:
        return False
    for c in M.minus_two_curves:
        for e in M.elliptic_pencils:
            if pair(e, c, M.gram) == 1 and _pencil_multiple(M, C - c) is not None:
                return False
    return True


def is_ci(M: K3Model, C: DivClass2) -> bool:
    """True when ``C = nH`` for an integer ``n``."""
    H = M.hyperplane
    if C.a * H.b != C.b * H.a:
        return False
    n = C.a // H.a if H.a else C.b // H.b
    return H * n == C


Q1 = K3Model(
    name="q1",
    gram=Gram2(-2, 3, 0),
    hyperplane=DivClass2(1, 1),
    minus_two_curves=(DivClass2(1, 0),),
    elliptic_pencils=(DivClass2(0, 1),),
)

Q2 = K3Model(
    name="q2",
    gram=Gram2(-2, 4, -2),
    hyperplane=DivClass2(1, 1),
    minus_two_curves=(DivClass2(1, 0), DivClass2(0, 1)),
    elliptic_pencils=(),
)

BUILTIN_MODELS = {"q1": Q1, "q2": Q2}


@dataclass(frozen=True)
class CohDims:
    """Dimensions ``h^i(S, O_S(D))`` plus the peeling trace that produced them.

    ``trace`` lists ``(curve, d)`` for each (-2)-curve subtracted, in order.
    """

    h0: int
    h1: int
    h2: int
    divisor: DivClass2
    model: str
    trace: tuple[tuple[DivClass2, int], ...] = field(default=(), compare=False)

    def reversed(self, divisor: DivClass2) -> "CohDims":
        return CohDims(self.h2, self.h1, self.h0, divisor, self.model, self.trace)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)

    def to_dict(self) -> dict:
        return {
            "class": list(self.divisor),
            "h0": self.h0,
            "h1": self.h1,
            "h2": self.h2,
            "trace": [{"curve": list(c), "d": d} for c, d in self.trace],
        }


def cohomology(M: K3Model, D: DivClass2) -> CohDims:
    """Return ``(h0, h1, h2)`` of ``O_S(D)`` for any integer class ``D``."""
    G = M.gram
    if D.is_zero():
        return CohDims(1, 0, 1, D, M.name)
    if not is_effective(M, D):
        if is_effective(M, -D):
            return cohomology(M, -D).reversed(D)
        chi = euler_char_k3(D, G)
        return CohDims(0, -chi, 0, D, M.name)

    # effective, nonzero: peel fixed (-2)-curves until nef
    trace = []
    extra_h1 = 0
    cur = D
    while True:
        hit = next(((c, -pair(cur, c, G)) for c in M.minus_two_curves if pair(cur, c, G) < 0), None)
        if hit is None:
            break
        c, d = hit
        if cur == c:
            # a (-2)-curve is rigid: h0 = 1, h1 = h2 = 0
            cur = None
            break
        trace.append((c, d))
        extra_h1 += d - 1
        cur = cur - c
        if not is_effective(M, cur):
            raise PeelLeftCone(
                f"peeling {c} from {cur + c} left the effective cone; the model's cone is wrong"
            )

    if cur is None:
        base_h1 = 0
    else:
        sq = self_int(cur, G)
        if sq > 0:
            base_h1 = 0
        elif sq == 0:
            found = _pencil_multiple(M, cur)
            if found is None:
                raise NoPencil(f"nef class {cur} has square 0 but no listed pencil divides it")
            base_h1 = found[1] - 1
        else:
            raise LatticeError(f"nef class {cur} has negative square {sq}; the model is inconsistent")

    h1 = base_h1 + extra_h1
    chi = euler_char_k3(D, G)
    return CohDims(chi + h1, h1, 0, D, M.name, tuple(trace))


def h1_ideal_quartic(M: K3Model, C: DivClass2, n: int) -> int:
    """``h^1(I_C(n))`` for a curve ``C`` on the quartic, via ``h^1(O_S(C - nH))``."""
    return cohomology(M, C - M.hyperplane * n).h1


def _is_model(M: K3Model, ref: K3Model) -> bool:
    return M.gram == ref.gram and M.hyperplane == ref.hyperplane


def h1_nonvanishing_closed_form(M: K3Model, D: DivClass2) -> bool:
    """Closed-form test for ``h^1(O_S(D)) != 0`` on the built-in models.

    Q1: ``D`` effective with ``a > 0``; nonvanishing iff ``2a > 3b + 1``.
    Q2: ``a, b > 0``; nonvanishing iff ``D`` is not nef, i.e. not ``b/2 <= a <= 2b``.
    """
    a, b = D.a, D.b
    if _is_model(M, Q1):
        if not (a > 0 and b >= 0):
            raise OutOfStatedRange(f"Q1 closed form needs an effective class with a > 0, got {D}")
        return 2 * a > 3 * b + 1
    if _is_model(M, Q2):
        if not (a > 0 and b > 0):
            raise OutOfStatedRange(f"Q2 closed form needs a > 0 and b > 0, got {D}")
        return not (b <= 2 * a and a <= 2 * b)
    raise OutOfStatedRange(f"no closed form is known for model {M.name!r}")
