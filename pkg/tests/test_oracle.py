import pytest

from helpers import cp, op
from paraweyl.errors import PreconditionError
from paraweyl.oracle import Verdict, bounded_membership, expand_witness


def test_examples():
    gens = [op("x1*d1 - s1"), op("x1")]
    res = bounded_membership(op("s1 + 1"), gens, 2)
    assert res.verdict is Verdict.IN
    assert expand_witness(res.cofactors, gens) == op("s1 + 1")

    assert bounded_membership(op("0"), gens, 0)
    assert bounded_membership(op("s1"), [op("x1*d1 - s1")], 3).verdict is Verdict.NOT_WITHIN_BOUND


def test_commutative_targets():
    gens = [cp("s1^2 - 1"), cp("s1 + 1")]
    res = bounded_membership(cp("s1^3 + s1^2"), gens, 3)
    assert res and expand_witness(res.cofactors, gens) == cp("s1^3 + s1^2")
    assert not bounded_membership(cp("s1"), gens, 4)


def test_column_cap():
    with pytest.raises(PreconditionError):
        bounded_membership(op("s1", 2, 2), [op("x1", 2, 2)], 6, max_columns=50)


def test_b_function_witness_of_x_squared():
    gens = [op("x1*d1 - 2*s1"), op("x1^2")]
    target = op("(s1+1)*(2*s1+1)")
    res = bounded_membership(target, gens, 6)
    assert res.verdict is Verdict.IN and res.bound <= 6
    assert expand_witness(res.cofactors, gens) == target
