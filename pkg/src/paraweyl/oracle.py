"""Brute-force ideal membership by exact linear algebra.

``bounded_membership`` looks for cofactors of bounded total degree: it
spans all products m * g (m a standard monomial of degree <= bound, g a
generator) and solves ``target = sum c_{m,g} m * g`` over Q.  A positive
answer comes with a witness; a negative one only says that no witness of
that degree exists.  Nothing here calls the Groebner code.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence, Union

from .commutative import CommPoly
from .errors import PreconditionError
from .monomial import Monomial
from .weyl import WeylOperator, weyl_mul

DEFAULT_BOUND = 6
DEFAULT_MAX_COLUMNS = 50_000

Element = Union[WeylOperator, CommPoly]


class Verdict(enum.Enum):
    IN = "IN"
    NOT_WITHIN_BOUND = "NOT-WITHIN-BOUND"


@dataclass
class OracleResult:
    verdict: Verdict
    # one cofactor per generator: target == sum(cofactors[i] * gens[i])
    cofactors: list[Element] | None = None
    bound: int = 0

    def __bool__(self):
        return self.verdict is Verdict.IN


def _exponent_vectors(nvars: int, degree: int):
    """All exponent vectors in ``nvars`` variables of total degree exactly ``degree``."""
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def _lead(vec: dict):
    return max(vec, key=lambda k: k[1])


def bounded_membership(
    target: Element,
    gens: Sequence[Element],
    bound: int = DEFAULT_BOUND,
    *,
    max_columns: int = DEFAULT_MAX_COLUMNS,
) -> OracleResult:
    """Decide whether ``target`` has a cofactor representation of degree <= ``bound``.

    Works for left ideals of D_n[s] (``WeylOperator``) and ideals of Q[s]
    (``CommPoly``).  Columns are added one multiplier degree at a time and
    the search stops at the first degree that already suffices.
    """
    if bound < 0:
        raise ValueError("degree bound must be nonnegative")
    weyl = isinstance(target, WeylOperator)
    gens = [g for g in gens]
    if weyl:
        n, p = target.n, target.p
        nvars = 2 * n + p

        def as_dict(P):
            return {(m, _sort_key(m)): c for m, c in P.terms.items()}

        def multiplier(e):
            return Monomial._raw(e[:n], e[n : 2 * n], e[2 * n :])

        def column(mono, g):
            return WeylOperator.monomial(mono) * g

        zero = WeylOperator.zero(n, p)
    else:
        nvars = target.nvars

        def as_dict(f):
            return {(e, e[::-1]): c for e, c in f.terms.items()}

        def multiplier(e):
            return e

        def column(e, g):
            return g.mul_term(e, Fraction(1))

        zero = CommPoly({}, nvars)

    if not target:
        return OracleResult(Verdict.IN, [zero for _ in gens], 0)
    gens_nz = [(i, g) for i, g in enumerate(gens) if g]
    if not gens_nz:
        return OracleResult(Verdict.NOT_WITHIN_BOUND, None, bound)

    pivots: dict = {}  # lead key -> (vector, combination)
    columns: list = []
    ncols = 0
    for deg in range(bound + 1):
        for e in _exponent_vectors(nvars, deg):
            mono = multiplier(e)
            for gi, g in gens_nz:
                ncols += 1
                if ncols > max_columns:
                    raise PreconditionError(f"oracle system exceeds {max_columns} columns")
                idx = len(columns)
                columns.append((gi, e))
                vec = as_dict(column(mono, g))
                combo = {idx: Fraction(1)}
                _reduce_into(vec, combo, pivots, insert=True)
        vec = as_dict(target)
        combo: dict = {}
        if _reduce_into(vec, combo, pivots, insert=False):
            # invariant: vec == target + sum(combo[k] * column_k), and vec is now 0
            cof: dict[int, dict] = {}
            for idx, c in combo.items():
                gi, e = columns[idx]
                slot = cof.setdefault(gi, {})
                slot[e] = slot.get(e, 0) - c
            cofactors = []
            for gi in range(len(gens)):
                terms = cof.get(gi, {})
                if weyl:
                    cofactors.append(WeylOperator({multiplier(e): c for e, c in terms.items()}, n, p))
                else:
                    cofactors.append(CommPoly(terms, nvars))
            return OracleResult(Verdict.IN, cofactors, deg)
    return OracleResult(Verdict.NOT_WITHIN_BOUND, None, bound)


def _sort_key(m: Monomial):
    # any fixed total order works for elimination; reuse the order on R
    return m.d + m.x[::-1] + m.s[::-1]


def _reduce_into(vec: dict, combo: dict, pivots: dict, *, insert: bool) -> bool:
    """Row-reduce ``vec`` against ``pivots``; returns True if it becomes zero.

    ``combo`` tracks ``vec`` as a combination of original columns.  With
    ``insert`` a nonzero result is stored as a new pivot row.
    """
    while vec:
        lead = _lead(vec)
        if lead not in pivots:
            if insert:
                c = vec[lead]
                pivots[lead] = (
                    {k: v / c for k, v in vec.items()},
                    {k: v / c for k, v in combo.items()},
                )
            return False
        pv, pc = pivots[lead]
        c = vec[lead]
        for k, v in pv.items():
            w = vec.get(k, 0) - c * v
            if w:
                vec[k] = w
            else:
                vec.pop(k, None)
        for k, v in pc.items():
            w = combo.get(k, 0) - c * v
            if w:
                combo[k] = w
            else:
                combo.pop(k, None)
    return True


def expand_witness(cofactors: Sequence[Element], gens: Sequence[Element]) -> Element:
    """sum(cofactors[i] * gens[i]), for checking an oracle witness."""
    total = None
    for c, g in zip(cofactors, gens):
        term = weyl_mul(c, g) if isinstance(g, WeylOperator) else c * g
        total = term if total is None else total + term
    return total
