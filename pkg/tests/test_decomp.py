"""Symmetric decompositions: closed formulas vs an independent linear solver,
the derived splits, and the inequality reports."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hstarlib.decomp import (
    ab_decompose,
    graph_decomposition,
    graph_numerator,
    inequality_report,
    open_decomposition,
    order_decomposition,
    stapledon_pair,
)
from hstarlib.ehrhart import OrderPolytope, h_star, open_numerator
from hstarlib.errors import InvalidInput, SignViolation
from hstarlib.graph import Graph
from hstarlib.harness import enumerate_labeled_graphs, enumerate_labeled_posets
from hstarlib.polynomial import IntPolynomial

K2 = Graph(2, [(1, 2)])
K3 = Graph(3, [(1, 2), (1, 3), (2, 3)])
PATH3 = Graph(3, [(1, 2), (2, 3)])


def solve_ab_linear_system(h: IntPolynomial, d: int):
    """Independent route to the unique split: solve the coefficient equations.

    Unknowns a_0..a_d and b_0..b_{s-1} subject to the symmetry constraints
    and (1 + ... + z^{l-1}) h = a + z^l b, solved by exact Gaussian
    elimination.  Free of the partial-sum formulas under test.
    """
    s = h.degree
    l = d + 1 - s
    target = (IntPolynomial([1] * l) * h).coeffs
    target = list(target) + [0] * (d + 1 - len(target))
    n_a, n_b = d + 1, s
    cols = n_a + n_b
    rows = []
    rhs = []
    for k in range(d + 1):  # coefficient k of a + z^l b
        row = [Fraction(0)] * cols
        row[k] = Fraction(1)
        if 0 <= k - l < n_b:
            row[n_a + k - l] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(target[k]))
    for i in range(d + 1):  # a_i = a_{d-i}
        row = [Fraction(0)] * cols
        row[i] += 1
        row[d - i] -= 1
        rows.append(row)
        rhs.append(Fraction(0))
    for i in range(n_b):  # b_i = b_{s-1-i}
        row = [Fraction(0)] * cols
        row[n_a + i] += 1
        row[n_a + s - 1 - i] -= 1
        rows.append(row)
        rhs.append(Fraction(0))
    # Gaussian elimination
    m = len(rows)
    pivot_row = 0
    where = [-1] * cols
    for col in range(cols):
        sel = next((r for r in range(pivot_row, m) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        rhs[pivot_row], rhs[sel] = rhs[sel], rhs[pivot_row]
        inv = 1 / rows[pivot_row][col]
        rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        rhs[pivot_row] *= inv
        for r in range(m):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
                rhs[r] -= factor * rhs[pivot_row]
        where[col] = pivot_row
        pivot_row += 1
    assert all(w >= 0 for w in where), "system should determine every unknown"
    solution = [rhs[where[c]] for c in range(cols)]
    assert all(x.denominator == 1 for x in solution)
    a = IntPolynomial([x.numerator for x in solution[:n_a]])
    b = IntPolynomial([x.numerator for x in solution[n_a:]])
    return a, b


class TestAbDecompose:
    def test_triangle_numerator(self):
        dec = ab_decompose(IntPolynomial([1, 3]), 2)
        assert dec.a.coeffs == (1, 4, 1)
        assert dec.b.coeffs == (2,)
        assert (dec.d, dec.s, dec.l) == (2, 1, 2)

    def test_open_chain_numerator(self):
        dec = ab_decompose(IntPolynomial([0, 0, 0, 1]), 3)
        assert dec.a.coeffs == (0, -1, -1)
        assert dec.b.coeffs == (1, 1, 1)
        assert dec.l == 1

    def test_palindromic_fixed_point(self):
        for d in (1, 2, 5):
            h = IntPolynomial([1] + [0] * (d - 1) + [1])
            dec = ab_decompose(h, d)
            assert dec.a == h
            assert dec.b == IntPolynomial.zero()

    def test_rejects_zero(self):
        with pytest.raises(InvalidInput):
            ab_decompose(IntPolynomial(), 2)

    def test_rejects_degree_overflow(self):
        with pytest.raises(InvalidInput):
            ab_decompose(IntPolynomial([1, 1, 1]), 1)

    @given(
        st.lists(st.integers(-20, 20), min_size=1, max_size=7).filter(
            lambda c: any(x != 0 for x in c)
        ),
        st.integers(0, 3),
    )
    def test_uniqueness_against_linear_solver(self, coeffs, extra):
        h = IntPolynomial(coeffs)
        d = h.degree + extra
        dec = ab_decompose(h, d)
        a, b = solve_ab_linear_system(h, d)
        assert dec.a == a
        assert dec.b == b

    def test_segment_identity_on_corpus(self):
        # h* = a*(ambient d) - z a*_1(ambient d-1) for every corpus h*
        for poset in enumerate_labeled_posets(4):
            if poset.d == 0:
                continue
            hs = h_star(OrderPolytope(poset))
            a_d = ab_decompose(hs, poset.d).a
            a_d1 = ab_decompose(hs, poset.d - 1).a
            assert hs == a_d - a_d1.shift(1)


class TestStapledonPair:
    def test_triangle(self):
        dec = stapledon_pair(IntPolynomial([1, 3]), 2)
        assert dec.a.coeffs == (1, 4, 1)
        assert dec.b.coeffs == (2,)
        # (1+z)(1+3z) = a + z^2 b
        assert (IntPolynomial([1, 1]) * IntPolynomial([1, 3])).coeffs == (1, 4, 3)

    def test_unimodular(self):
        dec = stapledon_pair(IntPolynomial([1]), 2)
        assert dec.a.coeffs == (1, 1, 1)
        assert dec.b == IntPolynomial.zero()

    def test_cube(self):
        dec = stapledon_pair(IntPolynomial([1, 4, 1]), 3)
        assert dec.a.coeffs == (1, 5, 5, 1)
        assert dec.b == IntPolynomial.zero()

    def test_nonnegative_on_polytopal_corpus(self):
        for poset in enumerate_labeled_posets(4):
            dec = stapledon_pair(h_star(OrderPolytope(poset)), poset.d)
            assert dec.a_nonneg and dec.b_nonneg

    def test_sign_violation_raises_with_witnesses(self):
        # 1 + z + 5z^2 is not polytopal: a_1 = 1 + 1 - 5 < 0
        with pytest.raises(SignViolation) as info:
            stapledon_pair(IntPolynomial([1, 1, 5]), 2, check_signs=True)
        assert "a" in info.value.witnesses

    def test_rejects_bad_preconditions(self):
        with pytest.raises(InvalidInput):
            stapledon_pair(IntPolynomial([2]), 1)
        with pytest.raises(InvalidInput):
            stapledon_pair(IntPolynomial([1, -1]), 1)


class TestOpenDecomposition:
    def test_leg2_triangle(self):
        a_p, b_p = open_decomposition(IntPolynomial([1, 3]), 2)
        assert a_p.coeffs == (1, 4, 4, 1)
        assert b_p.coeffs == (1, 4, 1)
        assert (a_p - b_p).coeffs == (0, 0, 3, 1)

    def test_unit_segment(self):
        a_p, b_p = open_decomposition(IntPolynomial([1]), 1)
        assert a_p.coeffs == (1, 1, 1)
        assert b_p.coeffs == (1, 1)

    def test_point(self):
        a_p, b_p = open_decomposition(IntPolynomial([1]), 0)
        assert a_p.coeffs == (1, 1)
        assert b_p.coeffs == (1,)

    def test_difference_is_open_numerator_on_corpus(self):
        for poset in enumerate_labeled_posets(4):
            hs = h_star(OrderPolytope(poset))
            a_p, b_p = open_decomposition(hs, poset.d)
            assert a_p - b_p == open_numerator(hs, poset.d)
            assert a_p.is_nonnegative() and b_p.is_nonnegative()
            assert a_p.is_palindromic(poset.d + 1)
            assert b_p.is_palindromic(poset.d)


class TestOrderDecomposition:
    def test_two_chain(self):
        a_pi, b_pi = order_decomposition(IntPolynomial([1]), 2)
        assert a_pi.coeffs == (0, -1, -1)
        assert b_pi.coeffs == (1, 1, 1)

    def test_antichain_two(self):
        a_pi, b_pi = order_decomposition(IntPolynomial([1, 1]), 2)
        assert a_pi.coeffs == (0, -1, -1)
        assert b_pi.coeffs == (1, 2, 1)

    def test_antichain_three(self):
        a_pi, b_pi = order_decomposition(IntPolynomial([1, 4, 1]), 3)
        assert a_pi.coeffs == (0, -1, -4, -1)
        assert b_pi.coeffs == (1, 5, 5, 1)

    def test_d_zero(self):
        a_pi, b_pi = order_decomposition(IntPolynomial([1]), 0)
        assert a_pi == IntPolynomial.zero()
        assert b_pi.coeffs == (1,)

    def test_rejects_degree_too_high_for_order_polytope(self):
        with pytest.raises(InvalidInput):
            order_decomposition(IntPolynomial([1, 1]), 1)

    def test_reconstruction_and_signs_on_corpus(self):
        for poset in enumerate_labeled_posets(4):
            hs = h_star(OrderPolytope(poset))
            a_pi, b_pi = order_decomposition(hs, poset.d)
            assert a_pi + b_pi.shift(1) == open_numerator(hs, poset.d)
            assert (-a_pi).is_nonnegative() and b_pi.is_nonnegative()


class TestGraphNumerator:
    def test_k2(self):
        assert graph_numerator(K2).coeffs == (0, 0, 2)

    def test_k3(self):
        assert graph_numerator(K3).coeffs == (0, 0, 0, 6)

    def test_path3(self):
        assert graph_numerator(PATH3).coeffs == (0, 0, 2, 4)

    def test_single_vertex(self):
        # chi = n, so the series is z/(1-z)^2
        assert graph_numerator(Graph(1)).coeffs == (0, 1)

    def test_empty_graph(self):
        assert graph_numerator(Graph(0)).coeffs == (1,)


class TestGraphDecomposition:
    def test_k2(self):
        a, b = graph_decomposition(K2)
        assert a.coeffs == (0, -2, -2)
        assert b.coeffs == (2, 2, 2)

    def test_k3(self):
        a, b = graph_decomposition(K3)
        assert a.coeffs == (0, -6, -6, -6)
        assert b.coeffs == (6, 6, 6, 6)

    def test_edgeless_two(self):
        a, b = graph_decomposition(Graph(2))
        assert a.coeffs == (0, -1, -1)
        assert b.coeffs == (1, 2, 1)

    def test_reconstruction_on_corpus(self):
        for graph in enumerate_labeled_graphs(4):
            a, b = graph_decomposition(graph)
            zh = graph_numerator(graph).shift(1)
            assert a + b.shift(1) == zh
            assert (-a).is_nonnegative() and b.is_nonnegative()
            assert a.is_palindromic(graph.d + 1)
            assert b.is_palindromic(graph.d)

    def test_sign_violation_mode(self):
        # no graph violates the theorem, so check_signs=True must never raise
        for graph in enumerate_labeled_graphs(3):
            graph_decomposition(graph, check_signs=True)


class TestInequalityReport:
    def test_k3_theorem4(self):
        lines = inequality_report(IntPolynomial([0, 0, 0, 6]), 3, "theorem4")
        assert [(l.i, l.value, l.holds) for l in lines] == [(1, 6, True), (2, 6, True)]

    def test_path3_conjecture(self):
        lines = inequality_report(IntPolynomial([0, 0, 2, 4]), 3, "conjecture64")
        assert [(l.i, l.value, l.holds) for l in lines] == [(1, 4, True)]

    def test_violation_flagged(self):
        lines = inequality_report(IntPolynomial([1]), 2, "theorem4")
        assert [(l.i, l.value, l.holds) for l in lines] == [(1, -1, False)]

    def test_empty_for_small_d(self):
        assert inequality_report(IntPolynomial([1]), 0, "theorem4") == []
        assert inequality_report(IntPolynomial([1, 1]), 1, "conjecture64") == []

    def test_rejects_unknown_mode(self):
        with pytest.raises(InvalidInput):
            inequality_report(IntPolynomial([1]), 2, "theorem5")
