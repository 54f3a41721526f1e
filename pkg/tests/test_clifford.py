"""Core Clifford arithmetic: anchored examples plus the algebraic laws as
hypothesis properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cliffdegen.clifford import (
    BladeIndexError,
    Multivector,
    QuadraticSpace,
    even_part,
    filtration_degree,
    geometric_product,
    grade_involution,
    is_even,
    is_odd,
    indices_of,
    reverse,
    specialize,
)
from cliffdegen.rings import CoefficientRingMismatch, Dual, PoleError, Poly, RatFun

HALF = Fraction(1, 2)


def gp(x, y, V):
    return geometric_product(x, y, V)


# --- anchored examples -------------------------------------------------


def test_generator_square():
    V = QuadraticSpace([[3]])
    e1 = Multivector.basis_vector(1)
    assert gp(e1, e1, V) == Multivector.scalar(3)


def test_exterior_case_anticommutes():
    V = QuadraticSpace.zero(2)
    e1, e2 = Multivector.basis_vector(1), Multivector.basis_vector(2)
    assert gp(e1, e2, V) == Multivector.blade((1, 2))
    assert gp(e2, e1, V) == Multivector.blade((1, 2), -1)


def test_hyperbolic_idempotent():
    # oracle: two-step rewriting e2 e1 = e0 - e1 e2, so
    # (e1 e2)(e1 e2) = e1 (e0 - e1 e2) e2 = e1 e2 - q(e1) q(e2) e0 = e1 e2
    V = QuadraticSpace([[0, HALF], [HALF, 0]])
    a = gp(Multivector.basis_vector(1), Multivector.basis_vector(2), V)
    assert a == Multivector.blade((1, 2))
    assert gp(a, a, V) == Multivector.blade((1, 2))


def test_reverse_examples():
    V = QuadraticSpace([[0, HALF], [HALF, 0]])
    assert reverse(Multivector.basis_vector(1), V) == Multivector.basis_vector(1)
    assert reverse(Multivector.scalar(1), V) == Multivector.scalar(1)
    # oracle: tau(e12) = e2 e1 = b(1,2) e0 - e1 e2 = e0 - e12
    want = Multivector.scalar(1) - Multivector.blade((1, 2))
    assert reverse(Multivector.blade((1, 2)), V) == want


def test_grade_involution_examples():
    assert grade_involution(Multivector.basis_vector(1)) == Multivector.basis_vector(1).scale(-1)
    assert grade_involution(Multivector.blade((1, 2))) == Multivector.blade((1, 2))
    x = Multivector.scalar(5) + Multivector.blade((1, 2, 3))
    assert grade_involution(x) == Multivector.scalar(5) - Multivector.blade((1, 2, 3))


def test_even_part_and_filtration():
    x = Multivector.basis_vector(1) + Multivector.blade((1, 2))
    assert even_part(x) == Multivector.blade((1, 2))
    assert filtration_degree(Multivector.scalar(1)) == 0
    assert filtration_degree(Multivector.zero()) == 0
    # m = 5: even blades number 2^4
    evens = [m for m in range(1 << 5) if bin(m).count("1") % 2 == 0]
    assert len(evens) == 16


def test_specialize_examples():
    t = Poly.t()
    x = Multivector({1: t})
    assert specialize(x, 0) == Multivector.zero()
    y = Multivector({0: t + 1})
    assert specialize(y, 1) == Multivector.scalar(2)
    z = Multivector({0b11: RatFun(Poly.const(1), Poly((1, -1)))})  # 1/(1-t)
    with pytest.raises(PoleError) as err:
        specialize(z, 1)
    assert "[1, 2]" in str(err.value)


def test_degeneracy_rank_report():
    assert QuadraticSpace.diagonal([1, 2, 3]).degeneracy_rank() == 3
    assert QuadraticSpace.diagonal([1, 2, 0]).degeneracy_rank() == 2
    assert QuadraticSpace.zero(4).degeneracy_rank() == 0
    V = QuadraticSpace([[0, HALF], [HALF, 0]])
    assert V.degeneracy_rank() == 2
    with pytest.raises(CoefficientRingMismatch):
        QuadraticSpace.diagonal([Poly.t()]).degeneracy_rank()


def test_index_out_of_range_and_ring_mismatch():
    V = QuadraticSpace.zero(2)
    with pytest.raises(BladeIndexError):
        gp(Multivector.blade((3,)), Multivector.scalar(1), V)
    with pytest.raises(CoefficientRingMismatch):
        gp(Multivector({0: Poly.t()}), Multivector({0: Dual.eps()}), V)


# --- hypothesis properties ---------------------------------------------

small_fraction = st.fractions(
    min_value=-3, max_value=3, max_denominator=3
)


@st.composite
def space_and_elements(draw, nelems=2, max_m=4, max_terms=3):
    m = draw(st.integers(min_value=1, max_value=max_m))
    gram = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            v = draw(small_fraction)
            gram[i][j] = v
            gram[j][i] = v
    V = QuadraticSpace(gram)
    elems = []
    for _ in range(nelems):
        nterms = draw(st.integers(min_value=0, max_value=max_terms))
        terms = {}
        for _ in range(nterms):
            mask = draw(st.integers(min_value=0, max_value=(1 << m) - 1))
            terms[mask] = draw(small_fraction)
        elems.append(Multivector(terms))
    return V, elems


@settings(max_examples=60, deadline=None)
@given(space_and_elements(nelems=3))
def test_associativity(data):
    V, (x, y, z) = data
    assert gp(gp(x, y, V), z, V) == gp(x, gp(y, z, V), V)


@settings(max_examples=40, deadline=None)
@given(space_and_elements(nelems=0, max_m=5))
def test_defining_relations(data):
    V, _ = data
    for i in range(1, V.m + 1):
        ei = Multivector.basis_vector(i)
        assert gp(ei, ei, V) == Multivector({0: V.q(i)})
        for j in range(1, V.m + 1):
            if i == j:
                continue
            ej = Multivector.basis_vector(j)
            anti = gp(ei, ej, V) + gp(ej, ei, V)
            assert anti == Multivector({0: V.b(i, j)})


@settings(max_examples=60, deadline=None)
@given(space_and_elements(nelems=2))
def test_filtration_and_parity(data):
    V, (x, y) = data
    p = gp(x, y, V)
    if not p.is_zero():
        assert filtration_degree(p) <= filtration_degree(x) + filtration_degree(y)
    if is_even(x) and is_even(y):
        assert is_even(p)
    if is_odd(x) and is_odd(y):
        assert is_even(p)
    if (is_even(x) and is_odd(y)) or (is_odd(x) and is_even(y)):
        assert is_odd(p)


@settings(max_examples=60, deadline=None)
@given(space_and_elements(nelems=2))
def test_reverse_antiautomorphism(data):
    V, (x, y) = data
    assert reverse(gp(x, y, V), V) == gp(reverse(y, V), reverse(x, V), V)
    assert reverse(reverse(x, V), V) == x
    lo = Multivector({m: c for m, c in x.terms.items() if bin(m).count("1") <= 1})
    assert reverse(lo, V) == lo


@settings(max_examples=40, deadline=None)
@given(space_and_elements(nelems=2))
def test_grade_involution_automorphism(data):
    V, (x, y) = data
    assert grade_involution(gp(x, y, V)) == gp(
        grade_involution(x), grade_involution(y), V
    )


def _wedge(mask_a: int, mask_b: int):
    """Independent exterior-product oracle on blades."""
    if mask_a & mask_b:
        return None, 0
    sign = 1
    for i in indices_of(mask_b):
        crossings = bin(mask_a >> i).count("1")
        if crossings % 2:
            sign = -sign
    return mask_a | mask_b, sign


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.data())
def test_exterior_limit(m, data):
    V = QuadraticSpace.zero(m)
    a = data.draw(st.integers(min_value=0, max_value=(1 << m) - 1))
    b = data.draw(st.integers(min_value=0, max_value=(1 << m) - 1))
    got = gp(Multivector({a: Fraction(1)}), Multivector({b: Fraction(1)}), V)
    mask, sign = _wedge(a, b)
    want = Multivector.zero() if sign == 0 else Multivector({mask: Fraction(sign)})
    assert got == want


@settings(max_examples=30, deadline=None)
@given(space_and_elements(nelems=0, max_m=4), st.data())
def test_generator_products_bound_filtration(data, rnd):
    V, _ = data
    k = rnd.draw(st.integers(min_value=1, max_value=4))
    x = Multivector.scalar(1)
    for _ in range(k):
        coords = [rnd.draw(small_fraction) for _ in range(V.m)]
        v = Multivector({1 << i: c for i, c in enumerate(coords) if c != 0})
        x = gp(x, v, V)
    assert filtration_degree(x) <= k


def test_parametric_product_stays_polynomial():
    t = Poly.t()
    V = QuadraticSpace.diagonal([Poly.const(1), t])
    e1, e2 = Multivector.basis_vector(1), Multivector.basis_vector(2)
    prod = gp(gp(e1, e2, V), gp(e1, e2, V), V)
    assert prod == Multivector({0: -t})


def test_specialize_commutes_with_product():
    from cliffdegen.clifford import specialize_space

    t = Poly.t()
    V = QuadraticSpace([[Poly.const(1), t], [t, Poly.const(2)]])
    x = Multivector({0b01: t, 0b11: Poly.const(3)})
    y = Multivector({0b10: t + 1, 0: Poly.const(-1)})
    for c in (0, 1, Fraction(5, 2)):
        Vc = specialize_space(V, c)
        lhs = specialize(gp(x, y, V), c)
        rhs = gp(specialize(x, c), specialize(y, c), Vc)
        assert lhs == rhs
