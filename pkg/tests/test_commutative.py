import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from helpers import cp
from paraweyl.commutative import (
    CommIdeal,
    CommPoly,
    buchberger_a,
    divide_a,
    intersect_ideals,
    is_groebner_a,
    lc_a,
    lm_a,
    membership_a,
    radical_membership,
)
from paraweyl.monomial import Monomial
from paraweyl.oracle import bounded_membership


def I(*gens, p=1):
    return CommIdeal([cp(g, p) for g in gens], p)


def test_ring_operations():
    assert cp("s1+1") * cp("s1-1") == cp("s1^2-1")
    assert (cp("s1+1") * 0).is_zero()
    assert cp("s1+s2", 2) ** 2 == cp("s1^2 + 2*s1*s2 + s2^2", 2)
    assert cp("s1", 1) + cp("-s1", 1) == CommPoly({}, 1)


def test_leading_monomials():
    f = cp("s1^2 + s2", 2)
    assert lm_a(f) == Monomial((), (), (0, 1))
    assert lm_a(cp("7")) == Monomial((), (), (0,)) and lc_a(cp("7")) == 7
    assert lm_a(cp("2*s1*s2 + s1^3", 2)) == Monomial((), (), (1, 1))
    with pytest.raises(ValueError):
        lm_a(CommPoly({}, 1))


@pytest.mark.parametrize(
    "f, G, q, r, p",
    [
        ("s1^2+s1", ["s1+1"], ["s1"], "0", 1),
        ("s1", ["s1+1"], ["1"], "-1", 1),
        ("s1*s2", ["s2-1"], ["s1"], "s1", 2),
    ],
)
def test_divide_examples(f, G, q, r, p):
    f, G = cp(f, p), [cp(g, p) for g in G]
    quots, rem = divide_a(f, G)
    assert quots == [cp(x, p) for x in q]
    assert rem == cp(r, p)
    assert sum((a * b for a, b in zip(quots, G)), CommPoly({}, p)) + rem == f


def test_buchberger_examples():
    assert buchberger_a([cp("s1+1")]) == [cp("s1+1")]
    assert buchberger_a([cp("s1^2"), cp("s1^2+s1")]) == [cp("s1")]
    assert buchberger_a([cp("s1-s2", 2), cp("s2^2", 2)]) == [cp("s2-s1", 2), cp("s1^2", 2)]


def sympy_gb(polys, p):
    """Reduced lex basis from sympy with s_p > ... > s_1, converted back."""
    syms = sympy.symbols(f"s1:{p + 1}")
    exprs = [sympy.sympify(str(f).replace("^", "**")) for f in polys]
    G = sympy.groebner(exprs, *reversed(syms), order="lex")
    out = []
    for g in G.exprs:
        poly = sympy.Poly(g, *syms)
        out.append(CommPoly({e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()}, p).monic())
    return sorted(out, key=lambda f: f.lead_exp()[::-1], reverse=True)


def random_poly(rng, p, deg=2, nterms=3):
    terms = {}
    for _ in range(nterms):
        e = [0] * p
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(p)] += 1
        terms[tuple(e)] = rng.randint(-3, 3)
    return CommPoly(terms, p)


def test_buchberger_matches_sympy_on_random_ideals():
    rng = random.Random(7)
    for _ in range(40):
        p = rng.randint(1, 3)
        gens = [f for f in (random_poly(rng, p) for _ in range(rng.randint(1, 3))) if f]
        if not gens:
            continue
        ours = buchberger_a(gens)
        assert ours == sympy_gb(gens, p)
        assert is_groebner_a(ours)
        assert buchberger_a(ours) == ours


def test_membership_examples():
    assert not membership_a(cp("s1"), I("s1^2"))
    assert membership_a(cp("s1^2"), I("s1"))
    J = I("s1^2-1", "s1*s2+s2", p=2)
    assert not membership_a(cp("s1+1", 2), J)
    assert not bounded_membership(cp("s1+1", 2), J.generators, 6)
    assert membership_a(cp("s1^2*s2 - s2", 2), J)


def test_membership_agrees_with_oracle():
    rng = random.Random(11)
    for _ in range(60):
        p = rng.randint(1, 2)
        gens = [f for f in (random_poly(rng, p) for _ in range(2)) if f]
        if not gens:
            continue
        ideal = CommIdeal(gens, p)
        # a member built from small cofactors, and a random candidate
        member = sum((random_poly(rng, p, 1) * g for g in gens), CommPoly({}, p))
        for target in (member, random_poly(rng, p)):
            res = bounded_membership(target, gens, 4)
            if res:
                assert ideal.contains(target)
        assert bounded_membership(member, gens, 4)
        assert ideal.contains(member)


def test_radical_membership_examples():
    assert radical_membership(cp("s1"), I("s1^2"))
    assert not radical_membership(cp("s1-1"), I("s1^2"))
    assert radical_membership(cp("s1+s2", 2), I("(s1+s2)^2", p=2))


def test_radical_membership_cross_check():
    rng = random.Random(3)
    for _ in range(40):
        p = rng.randint(1, 2)
        gens = [f for f in (random_poly(rng, p) for _ in range(2)) if f]
        f = random_poly(rng, p, 1)
        if not gens or not f:
            continue
        ideal = CommIdeal(gens, p)
        if any(ideal.contains(f**k) for k in range(1, 7)):
            assert radical_membership(f, ideal)


def test_intersection_examples():
    assert intersect_ideals(I("s1^2"), I("s1-1")) == I("s1^3-s1^2")
    assert intersect_ideals(I("s1"), I("s1")) == I("s1")
    assert intersect_ideals(I("s1", p=2), I("s2", p=2)) == I("s1*s2", p=2)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(-3, 3)), min_size=1, max_size=3),
       st.lists(st.tuples(st.integers(0, 3), st.integers(-3, 3)), min_size=1, max_size=3))
def test_intersection_contains_products(a, b):
    f = CommPoly({(e,): c for e, c in a}, 1)
    g = CommPoly({(e,): c for e, c in b}, 1)
    if not f or not g:
        return
    inter = CommIdeal([f], 1) & CommIdeal([g], 1)
    assert inter.contains(f * g)
    for h in inter.generators:
        assert membership_a(h, [f]) and membership_a(h, [g])
