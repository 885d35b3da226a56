from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from curvelattice import k3, quartic
from curvelattice.k3 import Q1, Q2
from curvelattice.lattice import DivClass2 as D
from curvelattice.quartic import Kind, Verdict, classify_quartic


def G_oracle(d, s):
    # integer form: split d = q*s - r, then the genus is a sum over the
    # hyperplane sections of an extremal curve (Castelnuovo count)
    r = (-d) % s
    num = 2 * s + d * (d + s * (s - 4)) - r * (s - r) * (s - 1)
    assert num % (2 * s) == 0
    return num // (2 * s)


class TestMaxGenus:
    @pytest.mark.parametrize("d, s, want", [(26, 5, 80), (31, 5, 111), (45, 5, 226), (27, 5, 85)])
    def test_examples(self, d, s, want):
        assert quartic.max_genus(d, s) == want

    def test_r(self):
        assert quartic.max_genus_r(26, 5) == 4
        assert quartic.max_genus_r(45, 5) == 0

    @pytest.mark.parametrize("d, s", [(20, 5), (2, 2), (10, 1)])
    def test_out_of_range(self, d, s):
        with pytest.raises(quartic.OutOfRange):
            quartic.max_genus(d, s)

    @given(st.integers(2, 12), st.integers(0, 3000))
    def test_matches_oracle(self, s, extra):
        d = s * (s - 1) + 1 + extra
        assert quartic.max_genus(d, s) == G_oracle(d, s)


class TestCriteria:
    def test_ineq1(self):
        assert quartic.ineq1(26, 81)
        assert not quartic.ineq1(27, 82)
        assert not quartic.ineq1(20, 1000)
        assert quartic.ineq1_threshold(26) == 79

    def test_main4(self):
        assert quartic.main4_pred(31, 118, 0)
        assert not quartic.main4_pred(31, 117, 0)
        assert not quartic.main4_pred(40, 300, 16)
        assert quartic.main4_pred(40, 300, 15)

    def test_clifford(self):
        assert quartic.clifford_h1_bound(45, 226) == Fraction(39, 2)
        assert quartic.clifford_h1_bound(10, 0) == 7
        assert quartic.clifford_h1_bound(2, -2) == 1

    def test_gencomp(self):
        assert quartic.gencomp_pred(26, 81, 4)
        assert not quartic.gencomp_pred(26, 70, 4)
        assert quartic.gencomp_pred(1, 0, 1)

    def test_dim_formula(self):
        assert quartic.dim_component_formula(26, 81, 4) == 114
        assert quartic.dim_component_formula(14, 24, 3) == 14 + 24 + 18
        assert quartic.dim_component_formula(0, 0, 1) == 2

    @given(st.integers(17, 500), st.integers(0, 10000))
    def test_dim_formula_quartic_and_cubic(self, d, g):
        assert quartic.dim_component_formula(d, g, 4) == g + 33
        assert quartic.dim_component_formula(d, g, 3) == d + g + 18

    def test_maxgendim(self):
        assert quartic.maxgendim_eval(26, 81, 4, 0, 0, 0, 1) == 114
        assert quartic.maxgendim_eval(36, 145, 4, 0, 0, 0, 1) == 178
        # e = 0 replaces the correction h0 + t by C(s-1,3) = 1
        assert quartic.maxgendim_eval(26, 81, 4, 0, 0, 0, 0) == 115
        assert quartic.maxgendim_eval(26, 81, 4, 2, 3, 4, 1) == 114 - 2 + 3 + 4
        with pytest.raises(quartic.NegativeInput):
            quartic.maxgendim_eval(26, 81, 4, 0, 0, -1, 1)

    def test_cliffo(self):
        assert quartic.cliffo_bound(31, 111, 5) == Fraction(971, 10)
        assert quartic.cliffo_bound(10, 0, 5) == 21
        assert quartic.cliffo_bound(1, 0, 4) == Fraction(5, 4)
        with pytest.raises(quartic.OutOfRange):
            quartic.cliffo_bound(10, 0, 3)

    def test_prop20(self):
        # arms at (31,111,5,4): 406/5, 961/10, 83
        assert quartic.prop20_bound(31, 111, 5, 4) == 55 + Fraction(961, 10)
        assert quartic.prop20_bound(26, 0, 5, 0) == 55 + Fraction(676, 5)
        assert quartic.prop20_bound(17, 0, 4, 0) == 34 + Fraction(289, 4)
        with pytest.raises(quartic.OutOfRange):
            quartic.prop20_bound(25, 0, 5, 0)

    def test_picard(self):
        assert quartic.picard_bound(81, 2) == 114
        assert quartic.picard_bound(0, 1) == 34
        assert quartic.picard_bound(226, 2) == 259


class TestClassify:
    def test_family_member(self):
        v = classify_quartic(Q1, D(8, 6))
        assert v.kind is Kind.NON_REDUCED
        assert (v.d, v.g, v.dim_w, v.tangent_dim, v.h1_ideal_4) == (26, 81, 114, 115, 1)

    def test_vanishing_region(self):
        v = classify_quartic(Q1, D(6, 7))
        assert v.kind is Kind.GENERICALLY_SMOOTH
        assert v.g == 91 and v.dim_w == v.g + 33 == v.tangent_dim

    def test_q2_expected(self):
        v = classify_quartic(Q2, D(7, 5))
        assert v.kind is Kind.EXPECTED_NON_REDUCED
        assert v.h1_ideal_4 == 1 and not quartic.ineq1(v.d, v.g)
        assert v.clifford_bound == quartic.clifford_h1_bound(v.d, v.g)

    def test_q2_smooth(self):
        v = classify_quartic(Q2, D(6, 5))
        assert v.kind is Kind.GENERICALLY_SMOOTH and v.dim_w == 93

    @pytest.mark.parametrize("C, tag", [(D(3, 3), "complete-intersection"),
                                        (D(7, 4), "not-smooth-curve-class"),
                                        (D(3, 2), "degree-at-most-16")])
    def test_not_applicable(self, C, tag):
        v = classify_quartic(Q1, C)
        assert v.kind is Kind.NOT_APPLICABLE and tag in v.criteria
        assert v.dim_w is None and v.tangent_dim is None

    def test_small_component_bound_fails(self):
        # g < 4d - 33 means dim W < 4d: not a component
        v = classify_quartic(Q2, D(9, 5))
        assert v.kind is Kind.UNDETERMINED
        assert (v.d, v.g) == (28, 75) and not quartic.gencomp_pred(28, 75, 4)

    def test_linear_normality_path(self, monkeypatch):
        # (11,8): d = 35, g = 144 > 21 + 122.5; force the first criterion off
        monkeypatch.setattr(quartic, "ineq1", lambda d, g: False)
        v = classify_quartic(Q1, D(11, 8), h1_IC1=10)
        assert v.kind is Kind.NON_REDUCED and "linearly-normal-genus-bound" in v.criteria
        v = classify_quartic(Q1, D(11, 8), h1_IC1=11)
        assert v.kind is Kind.EXPECTED_NON_REDUCED
        assert "component if h1(I_C(1)) <= 10" in v.notes

    def test_verdict_roundtrip(self):
        for C in (D(8, 6), D(3, 3), D(6, 7)):
            v = classify_quartic(Q1, C)
            assert Verdict.from_dict(v.to_dict()) == v

    def test_verdict_rejects_inconsistent(self):
        with pytest.raises((AssertionError, ValueError)):
            Verdict(Kind.NON_REDUCED, d=26, g=81, h1_ideal_4=0, dim_w=114, tangent_dim=114)

    @pytest.mark.parametrize("M", [Q1, Q2], ids=["q1", "q2"])
    def test_invariants(self, M):
        for b in range(0, 81):
            for a in range(0, 2 * b + 2):
                v = classify_quartic(M, D(a, b))
                if v.kind is Kind.NOT_APPLICABLE:
                    continue
                assert v.tangent_dim - v.dim_w == v.h1_ideal_4
                assert v.dim_w == v.g + 33 == quartic.dim_component_formula(v.d, v.g, 4)
                if v.kind is Kind.NON_REDUCED:
                    assert v.h1_ideal_4 > 0
                if v.kind is Kind.GENERICALLY_SMOOTH:
                    assert v.h1_ideal_4 == 0


class TestFamilies:
    def test_family_members_in_region(self):
        for fam in quartic.Q1_FAMILIES:
            for C in fam.members(200):
                d, g = k3.degree(Q1, C), k3.genus(Q1, C)
                assert k3.is_smooth_curve_class(Q1, C)
                assert quartic.ineq1(d, g)
                assert k3.h1_ideal_quartic(Q1, C, 4) > 0

    def test_q1_small(self):
        assert quartic.enumerate_families_q1(0) == []
        assert quartic.enumerate_families_q1(5) == []
        assert quartic.enumerate_families_q1(10) == [
            D(8, 6), D(10, 7), D(11, 8), D(13, 9), D(14, 10), D(15, 10)]

    def test_q1_matches_closed_form(self):
        for b_max in (10, 50, 200):
            assert quartic.enumerate_families_q1(b_max) == quartic.family_members(
                quartic.Q1_FAMILIES, b_max)

    def test_q2_scan_truth(self):
        # The four families (a0 + 2k, 4 + k), k >= 1, plus four small classes
        # below b = 5 whose C - 4H peels to a (-2)-curve multiple or is
        # non-effective on both sides.
        extras = [D(6, 3), D(6, 4), D(7, 4), D(8, 4)]
        assert quartic.enumerate_q2_nonvanishing(0) == []
        assert quartic.enumerate_q2_nonvanishing(4) == extras
        assert quartic.enumerate_q2_nonvanishing(5) == sorted(
            extras + [D(7, 5), D(8, 5), D(9, 5), D(10, 5)])
        got = set(quartic.enumerate_q2_nonvanishing(100))
        fams = set(quartic.family_members(quartic.Q2_FAMILIES, 100))
        assert got - fams == set(extras) and fams <= got
        assert [k3.h1_ideal_quartic(Q2, C, 4) for C in extras] == [11, 3, 8, 15]

    def test_q2_members_fail_ineq1(self):
        for C in quartic.enumerate_q2_nonvanishing(100):
            assert not quartic.ineq1(k3.degree(Q2, C), k3.genus(Q2, C))
