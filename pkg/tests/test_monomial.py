from itertools import product

import pytest
from hypothesis import given, strategies as st

from paraweyl.monomial import (
    EQ,
    GT,
    LT,
    DimensionMismatch,
    Monomial,
    cmp_a,
    cmp_dn,
    cmp_r,
    divides,
    lcm_exp,
)


def M(x=(), d=(), s=()):
    return Monomial(x, d, s)


def brute_cmp(m1, m2, with_d=True, with_x=True):
    """Scan variables in priority order d_1..d_n, x_n..x_1, s_p..s_1."""
    seq = []
    n, p = m1.n, m1.p
    if with_d:
        seq += [("d", i) for i in range(n)]
    if with_x:
        seq += [("x", i) for i in reversed(range(n))]
    seq += [("s", i) for i in reversed(range(p))]
    for block, i in seq:
        a, b = getattr(m1, block)[i], getattr(m2, block)[i]
        if a != b:
            return GT if a > b else LT
    return EQ


def all_monomials(n, p, top):
    for x in product(range(top), repeat=n):
        for d in product(range(top), repeat=n):
            for s in product(range(top), repeat=p):
                yield Monomial(x, d, s)


def test_cmp_r_examples():
    assert cmp_r(M((1,), (1,), (0,)), M((0,), (0,), (1,))) == GT
    assert cmp_r(M((0, 1), (0, 0)), M((2, 0), (0, 0))) == GT
    m = M((1, 2), (0, 1), (3,))
    assert cmp_r(m, m) == EQ


def test_cmp_dn_examples():
    assert cmp_dn(M((0,), (1,)), M((1,), (0,))) == GT
    # x*d against d: d-exponents tie, then x decides
    assert cmp_dn(M((1,), (1,)), M((0,), (1,))) == GT
    assert cmp_dn(M((0,), (0,)), M((1,), (0,))) == LT


def test_cmp_a_examples():
    assert cmp_a(M(s=(0, 1)), M(s=(2, 0))) == GT
    assert cmp_a(M(s=(1,)), M(s=(0,))) == GT
    assert cmp_a(M(s=(1, 1)), M(s=(0, 1))) == GT


def test_orders_match_brute_force_exhaustively():
    mons = list(all_monomials(2, 1, 2))
    for m1 in mons:
        for m2 in mons:
            assert cmp_r(m1, m2) == brute_cmp(m1, m2)
    dn = [Monomial(x, d, ()) for x in product(range(3), repeat=2) for d in product(range(3), repeat=2)]
    for m1 in dn:
        for m2 in dn:
            assert cmp_dn(m1, m2) == brute_cmp(m1, m2)
    a = [M(s=s) for s in product(range(3), repeat=3)]
    for m1 in a:
        for m2 in a:
            assert cmp_a(m1, m2) == brute_cmp(m1, m2, with_d=False, with_x=False)


def test_one_is_minimum():
    one = Monomial.one(2, 1)
    for m in all_monomials(2, 1, 2):
        if m != one:
            assert cmp_r(one, m) == LT


def test_ring_restrictions():
    with pytest.raises(ValueError):
        cmp_dn(M((0,), (0,), (1,)), M((0,), (0,), (0,)))
    with pytest.raises(ValueError):
        cmp_a(M((1,), (0,), (0,)), M((0,), (0,), (1,)))
    with pytest.raises(DimensionMismatch):
        cmp_r(M((1,), (0,)), M((1, 0), (0, 0)))
    with pytest.raises(ValueError):
        Monomial((-1,), (0,))


def test_divides_and_lcm():
    x, d, xd, x2 = M((1,), (0,)), M((0,), (1,)), M((1,), (1,)), M((2,), (0,))
    assert divides(x, xd)
    assert not divides(d, x)
    assert lcm_exp(xd, x2) == M((2,), (1,))
    with pytest.raises(DimensionMismatch):
        divides(x, M((1, 0), (0, 0)))


exps = st.tuples(*[st.integers(0, 4)] * 5)


def mono(e):
    return Monomial(e[0:2], e[2:4], e[4:5])


@given(exps, exps, exps)
def test_cmp_r_is_a_total_order(a, b, c):
    m1, m2, m3 = mono(a), mono(b), mono(c)
    assert cmp_r(m1, m2) == -cmp_r(m2, m1)
    assert (cmp_r(m1, m2) == EQ) == (m1 == m2)
    if cmp_r(m1, m2) == GT and cmp_r(m2, m3) == GT:
        assert cmp_r(m1, m3) == GT


@given(exps, exps, exps)
def test_cmp_r_is_multiplicative(a, b, c):
    m1, m2, m = mono(a), mono(b), mono(c)
    assert cmp_r(m1, m2) == cmp_r(m1 * m, m2 * m)


@given(exps, exps)
def test_divides_iff_lcm_is_second(a, b):
    m1, m2 = mono(a), mono(b)
    assert divides(m1, m2) == (lcm_exp(m1, m2) == m2)
    if divides(m1, m2):
        assert (m2 / m1) * m1 == m2
