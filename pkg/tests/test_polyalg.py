"""Tests for the exact polynomial substrate."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fmchow.errors import DegreeError, StructureError
from fmchow.polyalg import (
    ChernPoly,
    Poly,
    Presentation,
    Var,
    VarTable,
    chern_eval,
    chern_mul,
    chern_shift,
    divisor_name,
    substitute,
    transport,
)

T2 = VarTable.for_points(2, 2)  # h1, h2 with h^3 = 0
T1 = VarTable.for_points(2, 1)  # h1, h2 with h^2 = 0
TCE = VarTable((Var("h", 1, 4), Var("E", 1, None)))  # blown-up P^3 variables


def h(table, i):
    return Poly.variable(table, f"h{i}")


small_polys = st.builds(
    lambda terms: Poly(T2, {e: c for e, c in terms}),
    st.lists(
        st.tuples(
            st.tuples(st.integers(0, 2), st.integers(0, 2)),
            st.integers(-4, 4),
        ),
        max_size=5,
    ),
)


class TestArithmetic:
    def test_add_cancels(self):
        h1, h2 = h(T2, 1), h(T2, 2)
        assert (h1 + h2) + (-h2) == h1

    def test_nilpotency_cap(self):
        h1 = h(T1, 1)
        assert (h1 * h1).is_zero()
        hh = h(T2, 1)
        assert not (hh * hh).is_zero()
        assert (hh * hh * hh).is_zero()

    def test_difference_of_squares(self):
        h1, h2 = h(T2, 1), h(T2, 2)
        assert (h1 - h2) * (h1 + h2) == h1 * h1 - h2 * h2

    def test_mismatched_tables(self):
        with pytest.raises(StructureError):
            h(T2, 1) + h(T1, 1)

    def test_scalar_and_power(self):
        h1 = h(T2, 1)
        assert 3 * h1 - h1 == 2 * h1
        assert h1**0 == Poly.constant(T2, 1)

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=60)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(small_polys)
    def test_normalization_idempotent(self, a):
        assert Poly(T2, a.terms) == a


class TestDegrees:
    def test_homogeneous_degree(self):
        h1, h2 = h(T2, 1), h(T2, 2)
        assert (h1 * h1 - h1 * h2).homogeneous_degree() == 2
        with pytest.raises(DegreeError):
            (h1 + h1 * h2).homogeneous_degree()

    def test_zero_degree(self):
        assert Poly.zero(T2).homogeneous_degree() is None


class TestText:
    def test_blowup_relation_rendering(self):
        hh = Poly.variable(TCE, "h")
        e = Poly.variable(TCE, "E")
        rel = e * e - 2 * hh * e + hh * hh
        assert str(rel) == "E^2 - 2*h*E + h^2"

    def test_constant_and_zero(self):
        assert str(Poly.constant(T2, -7)) == "-7"
        assert str(Poly.zero(T2)) == "0"

    def test_divisor_name(self):
        assert divisor_name({3, 1}) == "D{1,3}"


class TestTransport:
    def test_reorder_by_name(self):
        big = VarTable((Var("D{1,2}"), Var("h1", 1, 2), Var("h2", 1, 2)))
        p = h(T1, 1) * h(T1, 2)
        q = transport(p, big)
        assert str(q) == str(p)
        assert q.table is big

    def test_missing_variable(self):
        with pytest.raises(StructureError):
            transport(h(T2, 1), VarTable((Var("x"),)))

    def test_rename(self):
        table = VarTable((Var("e", 1, None),))
        p = transport(Poly.variable(TCE, "E"), table, rename={"E": "e"})
        assert p == Poly.variable(table, "e")


class TestSubstitute:
    def test_identify_variables(self):
        h1, h2 = h(T2, 1), h(T2, 2)
        p = h1 * h1 + h1 * h2 + h2 * h2
        assert substitute(p, "h2", h1) == 3 * h1 * h1

    def test_cap_applies_after_substitution(self):
        h1, h2 = h(T1, 1), h(T1, 2)
        assert substitute(h1 * h2, "h2", h1).is_zero()


class TestChern:
    def test_eval_at_zero_gives_constant(self):
        c = h(T2, 1) + h(T2, 2)
        p = ChernPoly(T2, 1, [c, Poly.constant(T2, 1)])
        assert chern_eval(p, Poly.zero(T2)) == c

    def test_eval_perfect_square(self):
        h1 = h(T2, 1)
        p = ChernPoly(T2, 2, [h1 * h1, -2 * h1, Poly.constant(T2, 1)])
        assert chern_eval(p, h1).is_zero()

    def test_blowup_relation_via_eval(self):
        hh = Poly.variable(TCE, "h")
        e = Poly.variable(TCE, "E")
        p = ChernPoly(TCE, 2, [hh * hh, 2 * hh, Poly.constant(TCE, 1)])
        assert chern_eval(p, -e) == e * e - 2 * hh * e + hh * hh

    def test_eval_requires_degree_one(self):
        p = ChernPoly(T2, 1, [h(T2, 1), Poly.constant(T2, 1)])
        with pytest.raises(DegreeError):
            chern_eval(p, h(T2, 1) * h(T2, 2))

    def test_eval_matches_naive_expansion(self):
        h1, h2 = h(T2, 1), h(T2, 2)
        p = ChernPoly(
            T2, 3, [h1 * h1 * h2, h1 * h2 * 0, 2 * h1 - h2, Poly.constant(T2, -1)]
        )
        s = h1 - 2 * h2
        naive = Poly.zero(T2)
        for ell in range(4):
            naive = naive + p.coeffs[ell] * s**ell
        assert chern_eval(p, s) == naive

    def test_coefficient_grading_enforced(self):
        with pytest.raises(DegreeError):
            ChernPoly(T2, 2, [h(T2, 1), Poly.zero(T2), Poly.constant(T2, 1)])

    def test_shift_negates_variable(self):
        c = h(T2, 1)
        p = ChernPoly(T2, 1, [c, Poly.constant(T2, 1)])
        q = chern_shift(p, Poly.zero(T2), sign=-1)
        assert q.coeffs[1] == Poly.constant(T2, -1)
        assert q.coeffs[0] == c

    def test_shift_by_binomial_expansion(self):
        # p(t) = t^2 + a t + b shifted to p(t - e): constant term e^2 - a e + b
        h1, h2 = h(T2, 1), h(T2, 2)
        a, b = 2 * h1, h1 * h2
        p = ChernPoly(T2, 2, [b, a, Poly.constant(T2, 1)])
        q = chern_shift(p, -h2, sign=1)
        assert q.coeffs[0] == h2 * h2 - a * h2 + b
        assert q.coeffs[2] == Poly.constant(T2, 1)

    def test_shift_requires_degree_one(self):
        p = ChernPoly(T2, 1, [h(T2, 1), Poly.constant(T2, 1)])
        with pytest.raises(DegreeError):
            chern_shift(p, h(T2, 1) * h(T2, 2), sign=-1)
        with pytest.raises(ValueError):
            chern_shift(p, h(T2, 1), sign=2)

    def test_shift_composition(self):
        h1, h2 = h(T2, 1), h(T2, 2)
        p = ChernPoly(T2, 2, [h1 * h2, h1 - h2, Poly.constant(T2, 1)])
        for e1 in (1, -1):
            for e2 in (1, -1):
                lhs = chern_shift(chern_shift(p, h1, e1), h2, e2)
                rhs = chern_shift(p, e1 * h2 + h1, e1 * e2)
                assert lhs == rhs

    def test_mul_degrees_add(self):
        p = ChernPoly(T2, 1, [h(T2, 1), Poly.constant(T2, 1)])
        q = ChernPoly(T2, 1, [h(T2, 2), Poly.constant(T2, 1)])
        pq = chern_mul(p, q)
        assert pq.degree == 2
        assert pq.coeffs[0] == h(T2, 1) * h(T2, 2)
        assert pq.coeffs[1] == h(T2, 1) + h(T2, 2)


class TestPresentation:
    def test_deduplicates_up_to_sign(self):
        h1, h2 = h(T2, 1), h(T2, 2)
        p = Presentation(T2, [h1 - h2, h2 - h1, h1 - h2], 4)
        assert len(p.relations) == 1

    def test_rejects_inhomogeneous(self):
        with pytest.raises(DegreeError):
            Presentation(T2, [h(T2, 1) + Poly.constant(T2, 1)], 4)

    def test_drops_zero_relations(self):
        p = Presentation(T2, [Poly.zero(T2)], 4)
        assert p.relations == ()

    def test_dump_is_canonical(self):
        p = Presentation(TCE, [Poly.variable(TCE, "h") * Poly.variable(TCE, "E")], 3)
        dump = p.dump()
        assert dump.splitlines() == [
            "vars:",
            "h deg 1 cap 4",
            "E deg 1",
            "top-degree: 3",
            "rel:",
            "h*E",
        ]

    def test_canonical_var_order_sorts_divisors(self):
        table = VarTable(
            (Var("h1", 1, 2), Var("D{1,2,3}"), Var("D{1,2}"), Var("h2", 1, 2))
        )
        p = Presentation(table, [], 2)
        assert p.canonical_var_order().table.names() == (
            "h1",
            "h2",
            "D{1,2}",
            "D{1,2,3}",
        )
