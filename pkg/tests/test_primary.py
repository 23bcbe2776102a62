import pytest

from helpers import cp, ideal
from paraweyl.commutative import CommIdeal
from paraweyl.errors import PreconditionError
from paraweyl.primary import (
    PrimaryComponentInput,
    lemma21_f,
    lemma24_check,
    thm22_h,
    verify_lemma24,
)


def I(*gens, p=1):
    return CommIdeal([cp(g, p) for g in gens], p)


def comp(q, p, nv=1):
    return PrimaryComponentInput(I(*q, p=nv), I(*p, p=nv))


def assert_multiplier(f, c):
    assert c.p.contains(f)
    assert not c.q.contains(f)
    for g in c.p.generators:
        assert c.q.contains(f * g)


def test_lemma21_examples():
    c = comp(["s1^2"], ["s1"])
    f = lemma21_f(c)
    assert f == cp("s1")
    assert_multiplier(f, c)

    c = comp(["s1^2", "s2"], ["s1", "s2"], 2)
    f = lemma21_f(c)
    assert f == cp("s1", 2)
    assert_multiplier(f, c)

    with pytest.raises(PreconditionError):
        lemma21_f(comp(["s1"], ["s1"]))


def test_lemma21_higher_nilpotency():
    c = comp(["s1^3", "s1*s2", "s2^2"], ["s1", "s2"], 2)
    c.check_radical()
    f = lemma21_f(c)
    assert_multiplier(f, c)


def test_lemma21_k_cap():
    # s1 is not nilpotent modulo (s1^2 - s1); the search must stop at the cap
    bad = PrimaryComponentInput(I("s1^2 - s1"), I("s1", "s1 - 1"), [cp("s1")])
    with pytest.raises(PreconditionError):
        lemma21_f(bad, k_cap=5)


def test_component_sanity_checks():
    with pytest.raises(PreconditionError):
        PrimaryComponentInput(I("s1 - 1"), I("s1"))
    with pytest.raises(PreconditionError):
        comp(["s1^2"], ["s1"]).__class__(I("s1^2"), I("s1"), [cp("s1 + 1")])


def test_thm22_examples():
    comps = [comp(["s1^2"], ["s1"]), comp(["s1 - 1"], ["s1 - 1"])]
    h = thm22_h(comps, 0)
    assert h == cp("s1^2 - s1")
    whole = I("s1^3 - s1^2")
    assert not comps[0].q.contains(h)
    assert whole.contains(h * cp("s1"))

    comps = [comp(["s1"], ["s1"]), comp(["s1 - 1"], ["s1 - 1"])]
    assert thm22_h(comps, 0) == cp("s1 - 1")

    assert thm22_h([comp(["s1^2"], ["s1"])], 0) == cp("s1")
    assert thm22_h([comp(["s1"], ["s1"])], 0) == cp("1")


def test_thm22_two_variables():
    comps = [
        comp(["s1^2", "s2"], ["s1", "s2"], 2),
        comp(["s1 - 1"], ["s1 - 1"], 2),
        comp(["s2 - 2"], ["s2 - 2"], 2),
    ]
    for j in range(3):
        h = thm22_h(comps, j)
        assert not comps[j].q.contains(h)


def test_thm22_rejects_non_minimal_prime():
    comps = [comp(["s1", "s2"], ["s1", "s2"], 2), comp(["s1^2"], ["s1"], 2)]
    with pytest.raises(PreconditionError):
        thm22_h(comps, 0)


def test_verify_lemma24_examples():
    J = ideal(["x1*d1 - s1", "x1"])
    assert verify_lemma24(J, I("s1 + 1"))
    res = lemma24_check(J, I("s1"))
    assert not res and res.witness == cp("1")
    assert verify_lemma24(ideal(["s1^2"]), I("s1"))
