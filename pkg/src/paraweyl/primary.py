"""Constructions around primary ideals of A = Q[s_1, ..., s_p].

Primaryness of the inputs and the radicals supplied with them are taken on
trust; only cheap consistency checks (q inside p, p inside the radical of
q) are run.  Every returned witness is re-checked by ideal membership
before it is handed back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .commutative import CommIdeal, CommPoly
from .errors import PreconditionError, VerificationError
from .groebner import buchberger_r, eliminate_to_a
from .weyl import LeftIdealPresentation

DEFAULT_K_CAP = 64


@dataclass
class PrimaryComponentInput:
    """A p-primary ideal q together with its radical p.

    ``nilradical_gens`` are lifts of generators of the nilradical of A/q;
    they default to the generators of p.
    """

    q: CommIdeal
    p: CommIdeal
    nilradical_gens: list[CommPoly] = field(default_factory=list)

    def __post_init__(self):
        if not self.nilradical_gens:
            self.nilradical_gens = list(self.p.generators)
        for g in self.nilradical_gens:
            if not self.p.contains(g):
                raise PreconditionError(f"nilradical generator {g} is not in p", witness=g)
        for g in self.q.generators:
            if not self.p.contains(g):
                raise PreconditionError(f"generator {g} of q is not in p", witness=g)

    def is_prime_component(self) -> bool:
        """True when q = p (membership of the generators of p in q)."""
        return self.q.contains_ideal(self.p)

    def check_radical(self) -> None:
        for g in self.p.generators:
            if not self.q.radical_contains(g):
                raise PreconditionError(f"{g} lies in p but not in the radical of q", witness=g)


def lemma21_f(component: PrimaryComponentInput, *, k_cap: int = DEFAULT_K_CAP) -> CommPoly:
    """An f in p, not in q, with f*p inside q.

    Walks the nilradical generators g_1..g_m of A/q, keeping a running
    product f (starting at 1) and replacing it by f*g_i^(k_i - 1), where k_i
    is the least exponent with f*g_i^k_i in q.  The result is reduced
    modulo q.
    """
    q, p = component.q, component.p
    if component.is_prime_component():
        raise PreconditionError("q equals its radical; no such f exists")
    f = CommPoly.constant(1, q.nvars)
    for g in component.nilradical_gens:
        power = f
        for k in range(1, k_cap + 1):
            nxt = power * g
            if q.contains(nxt):
                break
            power = nxt
        else:
            raise PreconditionError(
                f"no power of {g} up to {k_cap} kills the running product; "
                "q may not be primary or the nilradical generators are wrong",
                witness=g,
            )
        f = power
    f = q.reduce(f)
    if not p.contains(f):
        raise VerificationError(f"f = {f} is not in p", witness=f)
    if q.contains(f):
        raise VerificationError(f"f = {f} lies in q", witness=f)
    for g in p.generators:
        if not q.contains(f * g):
            raise VerificationError(f"f*({g}) is not in q", witness=g)
    return f


def _intersection(ideals: Sequence[CommIdeal], nvars: int) -> CommIdeal:
    if not ideals:
        return CommIdeal([CommPoly.constant(1, nvars)], nvars)
    out = ideals[0]
    for I in ideals[1:]:
        out = out & I
    return out


def thm22_h(
    components: Sequence[PrimaryComponentInput], j: int, *, k_cap: int = DEFAULT_K_CAP
) -> CommPoly:
    """An h outside q_j with h * rad(q_j) inside the intersection of all q_i.

    ``j`` is a zero-based index; the radical of component ``j`` must be
    minimal among the radicals.  A generator g of the intersection of the
    other components lying outside rad(q_j) is found by scanning in input
    order; then h = g when q_j is prime, and h = f*g with f from
    :func:`lemma21_f` otherwise.  With a single component, g = 1.
    """
    if not components:
        raise PreconditionError("no components given")
    if not 0 <= j < len(components):
        raise PreconditionError(f"component index {j + 1} out of range")
    nv = components[0].q.nvars
    target = components[j]
    for i, c in enumerate(components):
        if i != j and target.p.contains_ideal(c.p) and not c.p.contains_ideal(target.p):
            raise PreconditionError(
                f"radical of component {i + 1} is strictly inside that of component {j + 1}",
                witness=i,
            )
    others = _intersection([c.q for i, c in enumerate(components) if i != j], nv)
    g = next((u for u in others.generators if not target.q.radical_contains(u)), None)
    if g is None:
        raise PreconditionError(
            "every generator of the other components lies in the radical; the prime is not minimal"
        )
    h = g if target.is_prime_component() else lemma21_f(target, k_cap=k_cap) * g
    whole = _intersection([c.q for c in components], nv)
    if target.q.contains(h):
        raise VerificationError(f"h = {h} lies in q_j", witness=h)
    for u in target.p.generators:
        if not whole.contains(h * u):
            raise VerificationError(f"h*({u}) is not in the intersection", witness=u)
    return h


@dataclass
class Lemma24Result:
    holds: bool
    elimination: CommIdeal
    witness: CommPoly | None = None

    def __bool__(self):
        return self.holds


def lemma24_check(J: LeftIdealPresentation, p: CommIdeal) -> Lemma24Result:
    """Compare (J + R p) cap A with p and report a separating element if they differ."""
    G = buchberger_r(J.plus_extension(p))
    elim = eliminate_to_a(G)
    for g in elim.groebner:
        if not p.contains(g):
            return Lemma24Result(False, elim, g)
    # p is always inside (J + Rp) cap A; checked anyway
    for g in p.generators:
        if not elim.contains(g):
            return Lemma24Result(False, elim, g)
    return Lemma24Result(True, elim)


def verify_lemma24(J: LeftIdealPresentation, p: CommIdeal) -> bool:
    """True iff (J + R p) cap A = p."""
    return lemma24_check(J, p).holds
