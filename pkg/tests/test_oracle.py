import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import ssyt_monomials
from plethabacus.oracle import (
    MultivariatePolynomial,
    NotSymmetric,
    TooFewVariables,
    newton_check,
    oracle_plethystic_mn,
    pleth_pr,
    poly_h,
    poly_p,
    poly_schur,
    schur_decompose,
)
from plethabacus.partitions import make_partition, partitions_up_to
from plethabacus.symfunc import SchurExpansion, mn_multiply


def expansion_dict(expansion):
    return {p.parts: c for p, c in expansion.items()}


small_polys = st.builds(
    lambda terms: MultivariatePolynomial.from_terms(
        3, {e: c for e, c in terms if c != 0}
    ),
    st.lists(
        st.tuples(
            st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
            st.integers(-9, 9),
        ),
        max_size=6,
    ),
)


def test_poly_h_examples():
    one = poly_h(0, 3)
    assert one.terms == {(0, 0, 0): 1}
    assert poly_h(2, 2).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    h33 = poly_h(3, 3)
    assert len(h33.terms) == math.comb(3 + 3 - 1, 3) == 10
    assert set(h33.terms.values()) == {1}


def test_poly_p_examples():
    assert poly_p(1, 2).terms == {(1, 0): 1, (0, 1): 1}
    assert poly_p(2, 1).terms == {(2,): 1}
    assert poly_p(3, 3).terms == {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1}
    with pytest.raises(ValueError):
        poly_p(0, 2)


def test_poly_schur_examples():
    assert poly_schur(make_partition([1]), 2) == poly_p(1, 2)
    for m in (1, 2, 3):
        assert poly_schur(make_partition([m]), 3) == poly_h(m, 3)
    s21 = poly_schur(make_partition([2, 1]), 3)
    # 8 tableaux but 7 distinct monomials; (1,1,1) is hit twice
    assert len(s21.terms) == 7
    assert s21.coefficient((1, 1, 1)) == 2
    assert sum(s21.terms.values()) == 8


def test_poly_schur_vanishes_with_too_few_variables():
    with pytest.warns(UserWarning):
        z = poly_schur(make_partition([1, 1, 1]), 2)
    assert z.is_zero()


def test_poly_schur_matches_tableau_enumeration():
    for lam in partitions_up_to(8):
        for n in range(1, 7):
            want = ssyt_monomials(lam, n)
            if len(lam) > n:
                assert want == {}, (lam, n)
                with pytest.warns(UserWarning):
                    assert poly_schur(lam, n).is_zero()
            else:
                assert poly_schur(lam, n).terms == want, (lam, n)


def test_constructors_are_symmetric():
    for f in (poly_h(4, 3), poly_p(3, 4), poly_schur(make_partition([3, 1]), 3)):
        terms = f.terms
        for i in range(f.n - 1):
            swapped = {}
            for e, c in terms.items():
                key = list(e)
                key[i], key[i + 1] = key[i + 1], key[i]
                swapped[tuple(key)] = c
            assert swapped == terms, (f, i)


def test_pleth_pr_examples():
    assert pleth_pr(poly_h(1, 3), 2) == poly_p(2, 3)
    for ell, r in ((1, 3), (2, 2), (3, 2)):
        assert pleth_pr(poly_p(ell, 3), r) == poly_p(ell * r, 3)
    assert pleth_pr(poly_h(2, 2), 2).terms == {(4, 0): 1, (2, 2): 1, (0, 4): 1}


def test_pleth_pr_is_a_ring_endomorphism():
    f = poly_schur(make_partition([2, 1]), 4)
    g = poly_h(2, 4)
    for r in (2, 3):
        assert pleth_pr(f * g, r) == pleth_pr(f, r) * pleth_pr(g, r)
        assert pleth_pr(f + g, r) == pleth_pr(f, r) + pleth_pr(g, r)


def test_polynomial_algebra_basics():
    f, g = poly_h(2, 3), poly_p(2, 3)
    assert (f - f).is_zero()
    assert (f + g) - g == f
    assert 3 * f - f - f - f == MultivariatePolynomial.from_terms(3, {})
    assert (f * g).coefficient((4, 0, 0)) == 1
    assert f.coefficient((9, 9, 9)) == 0
    assert f.degrees() == {2} and (f * g).degrees() == {4}
    assert f.max_digit() == 2


def test_zero_polynomial_arithmetic():
    zero = MultivariatePolynomial.from_terms(3, {})
    f = poly_h(2, 3)
    assert zero.is_zero()
    assert (zero * f).is_zero() and (f * zero).is_zero()
    assert zero + f == f
    assert (2 * zero).is_zero()
    assert pleth_pr(zero, 3).is_zero()
    assert zero.degrees() == set()


def test_from_terms_validation():
    with pytest.raises(ValueError):
        MultivariatePolynomial.from_terms(2, {(1, 2, 3): 1})
    with pytest.raises(OverflowError):
        MultivariatePolynomial.from_terms(2, {(-1, 0): 1})


@given(small_polys, small_polys, small_polys)
def test_ring_axioms_on_random_polynomials(f, g, q):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * q == f * q + g * q
    assert (f * g) * q == f * (g * q)


def test_schur_decompose_examples():
    assert expansion_dict(schur_decompose(poly_h(3, 4))) == {(3,): 1}
    assert expansion_dict(schur_decompose(poly_p(2, 4))) == {(2,): 1, (1, 1): -1}
    assert expansion_dict(schur_decompose(pleth_pr(poly_h(2, 4), 2))) == {
        (4,): 1,
        (3, 1): -1,
        (2, 2): 1,
    }
    zero = MultivariatePolynomial.from_terms(3, {})
    assert schur_decompose(zero) == SchurExpansion(0, {})


def test_schur_decompose_inverts_schur_basis():
    for lam in partitions_up_to(6):
        e = schur_decompose(poly_schur(lam, 6))
        assert expansion_dict(e) == {lam.parts: 1}, lam


def test_schur_decompose_stable_in_variable_count():
    f6 = poly_schur(make_partition([2, 1]), 6) * poly_p(3, 6)
    f8 = poly_schur(make_partition([2, 1]), 8) * poly_p(3, 8)
    assert schur_decompose(f6) == schur_decompose(f8)
    nu = make_partition([2])
    assert oracle_plethystic_mn(nu, 2, 2, 6) == oracle_plethystic_mn(nu, 2, 2, 8)


def test_schur_decompose_errors():
    with pytest.raises(ValueError):
        schur_decompose(poly_h(1, 3) + poly_h(2, 3))  # not homogeneous
    with pytest.raises(TooFewVariables):
        schur_decompose(poly_h(3, 2))
    with pytest.raises(NotSymmetric):
        schur_decompose(MultivariatePolynomial.from_terms(3, {(2, 1, 0): 1}))
    with pytest.raises(NotSymmetric):
        schur_decompose(
            MultivariatePolynomial.from_terms(
                3, {(1, 1, 0): 1, (1, 0, 1): 2, (0, 1, 1): 1}
            )
        )


def test_mn_multiply_agrees_with_polynomial_oracle():
    n = 10
    for nu in partitions_up_to(9):
        for r in range(1, 11 - nu.size()):
            want = schur_decompose(poly_schur(nu, n) * poly_p(r, n))
            assert mn_multiply(nu, r) == want, (nu, r)


def test_newton_identity_small():
    for m in range(1, 5):
        assert newton_check(m, 6)


def test_oracle_plethystic_mn_examples():
    assert expansion_dict(oracle_plethystic_mn(make_partition([]), 1, 1, 2)) == {
        (1,): 1
    }
    assert expansion_dict(oracle_plethystic_mn(make_partition([]), 2, 2, 4)) == {
        (4,): 1,
        (3, 1): -1,
        (2, 2): 1,
    }
    assert expansion_dict(oracle_plethystic_mn(make_partition([1]), 2, 1, 4)) == {
        (3,): 1,
        (1, 1, 1): -1,
    }
    with pytest.raises(TooFewVariables):
        oracle_plethystic_mn(make_partition([]), 2, 2, 3)


def test_multiplication_overflow_is_detected():
    f = poly_h(1, 2)
    big = f
    for _ in range(39):
        big = big * f  # (x1 + x2)**40, coefficient sum 2**40
    with pytest.raises(OverflowError):
        big * big
    with pytest.raises(OverflowError):
        (1 << 62) * f


def test_pleth_pr_overflow_is_detected():
    with pytest.raises(OverflowError):
        pleth_pr(poly_p(40, 2), 1 << 26)
