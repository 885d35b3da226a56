"""Batch invariant scans run by ``curvelattice verify``.

Each suite returns a :class:`SuiteResult` holding pass/fail counts and the
first few counterexamples.  Suites are independent, so they can run in
worker processes; the merged result is ordered by suite name.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import cubic, k3, quartic
from .lattice import DivClass2, euler_char_k3

MAX_COUNTEREXAMPLES = 20


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def check(self, ok: bool, example) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(example)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        doc = asdict(self)
        doc["passed"] = self.checked - self.failed
        doc["ok"] = self.passed
        return doc


def suite_rr() -> SuiteResult:
    res = SuiteResult("rr")
    for M in (k3.Q1, k3.Q2):
        for a in range(-40, 41):
            for b in range(-40, 41):
                D = DivClass2(a, b)
                h = k3.cohomology(M, D)
                res.check(h.h0 - h.h1 + h.h2 == euler_char_k3(D, M.gram),
                          {"model": M.name, "class": [a, b], "h": list(h.as_tuple())})
                res.check(k3.cohomology(M, -D).as_tuple() == h.as_tuple()[::-1],
                          {"model": M.name, "class": [a, b], "serre": False})
    return res


def suite_oracles() -> SuiteResult:
    res = SuiteResult("oracles")
    for a in range(1, 61):
        for b in range(0, 61):
            if (a, b) == (1, 0):
                continue
            D = DivClass2(a, b)
            res.check((k3.cohomology(k3.Q1, D).h1 > 0) == (2 * a > 3 * b + 1),
                       {"model": "q1", "class": [a, b]})
    h = k3.cohomology(k3.Q1, DivClass2(1, 0)).h1
    res.check(h == 0, {"model": "q1", "class": [1, 0], "h1": h})
    res.notes.append("q1 class (1,0) excluded from the 2a > 3b+1 equivalence; engine h1 = 0 there")
    for a in range(1, 61):
        for b in range(1, 61):
            D = DivClass2(a, b)
            res.check((k3.cohomology(k3.Q2, D).h1 == 0) == k3.is_nef(k3.Q2, D),
                       {"model": "q2", "class": [a, b]})
    for b in range(0, 61):
        h = k3.cohomology(k3.Q1, DivClass2(0, b)).h1
        res.check(h == max(b - 1, 0), {"model": "q1", "class": [0, b], "h1": h})
    for M in (k3.Q1, k3.Q2):
        for c in M.minus_two_curves:
            for k in range(1, 21):
                h = k3.cohomology(M, c * k).h1
                res.check(h == k * k - 1, {"model": M.name, "class": list(c * k), "h1": h})
    return res


def suite_families() -> SuiteResult:
    res = SuiteResult("families")
    for b_max in (0, 5, 10, 50, 200):
        got = quartic.enumerate_families_q1(b_max)
        want = quartic.family_members(quartic.Q1_FAMILIES, b_max)
        res.check(got == want, {"model": "q1", "b_max": b_max,
                                "extra": [list(c) for c in sorted(set(got) - set(want))],
                                "missing": [list(c) for c in sorted(set(want) - set(got))]})
    got = quartic.enumerate_q2_nonvanishing(100)
    want = quartic.family_members(quartic.Q2_FAMILIES, 100)
    res.check(got == want, {"model": "q2", "b_max": 100,
                            "extra": [list(c) for c in sorted(set(got) - set(want))],
                            "missing": [list(c) for c in sorted(set(want) - set(got))]})
    for C in got:
        d, g = k3.degree(k3.Q2, C), k3.genus(k3.Q2, C)
        res.check(not quartic.ineq1(d, g), {"model": "q2", "class": list(C), "ineq1": True})
    return res


def suite_crossover() -> SuiteResult:
    res = SuiteResult("crossover")
    for d in range(21, 2001):
        g5 = Fraction(quartic.max_genus(d, 5) - 1)
        quad = Fraction(d * d, 10) + 21
        res.check((g5 < quad) == (d <= 44), {"check": "min-arm", "d": d})
    for d in range(31, 2001):
        ok = (quartic.max_genus(d, 6) >= cubic.quadratic_arm(d)) == (d <= 74)
        res.check(ok, {"check": "G6-vs-quadratic", "d": d,
                       "G": quartic.max_genus(d, 6), "quadratic": str(cubic.quadratic_arm(d))})
    for d in range(58, 2001):
        res.check(quartic.max_genus(d, 8) <= cubic.quadratic_arm(d), {"check": "G8-vs-quadratic", "d": d})
    return res


SUITES = {
    "crossover": suite_crossover,
    "families": suite_families,
    "oracles": suite_oracles,
    "rr": suite_rr,
}


def _run(name: str) -> SuiteResult:
    return SUITES[name]()


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CURVELATTICE_THREADS", "1")))
    except ValueError:
        return 1


def run_suites(names: list[str]) -> list[SuiteResult]:
    names = sorted(set(names))
    workers = min(worker_count(), len(names))
    if workers <= 1:
        return [_run(n) for n in names]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run, names))
