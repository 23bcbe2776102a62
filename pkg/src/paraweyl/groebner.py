"""Left Groebner bases in D_n[s] and D_n, and the parametric machinery on top.

The pipeline for a left ideal J and a prime p of the parameter ring A:

1. ``buchberger_r`` on Q = J + R p under the lex order d > x > s,
2. ``reduce_gb`` so that no parametric leading coefficient lies in Q cap A,
3. ``eliminate_to_a`` reads off Q cap A (which should equal p),
4. ``h_poly`` multiplies the parametric leading coefficients,
5. ``specialize_gb`` / ``fiber_nonzero`` at points of Z(p) outside Z(h).
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .commutative import CommIdeal, CommPoly, normal_form as normal_form_a
from .errors import NotAGroebnerBasis, PreconditionError, VerificationError
from .monomial import Monomial, divides, key_r, lcm_exp
from .weyl import (
    LeftIdealPresentation,
    RationalPoint,
    WeylOperator,
    plc,
    plm,
    specialize,
)

log = logging.getLogger(__name__)


# -- division -----------------------------------------------------------------


def left_divide(
    P: WeylOperator, G: Sequence[WeylOperator], *, track: bool = True
) -> tuple[list[WeylOperator], WeylOperator]:
    """Left division ``P = sum(Q_i * G_i) + r``.

    No term of ``r`` has a monomial divisible (exponent-wise) by any leading
    monomial of ``G``.  With ``track=False`` the quotients are not
    accumulated and an empty list is returned in their place.
    """
    if any(g.is_zero() for g in G):
        raise ValueError("cannot divide by the zero operator")
    n, p_ = P.n, P.p
    leads = [(g.lm(), g.lc()) for g in G]
    quots: list[dict] = [{} for _ in G] if track else []
    rem: dict = {}
    work = dict(P.terms)
    while work:
        m = max(work, key=key_r)
        c = work[m]
        for i, (lm, lc) in enumerate(leads):
            if divides(lm, m):
                q = m / lm
                qc = c / lc
                if track:
                    quots[i][q] = quots[i].get(q, 0) + qc
                for mm, v in G[i].left_mul_monomial(q, qc).terms.items():
                    w = work.get(mm, 0) - v
                    if w:
                        work[mm] = w
                    else:
                        work.pop(mm, None)
                # the leading term cancels exactly
                work.pop(m, None)
                break
        else:
            rem[m] = c
            del work[m]
    r = WeylOperator._raw(rem, n, p_)
    if not track:
        return [], r
    return [WeylOperator(q, n, p_) for q in quots], r


def reduce_r(P: WeylOperator, G: Sequence[WeylOperator]) -> WeylOperator:
    """Remainder of :func:`left_divide` without quotient bookkeeping."""
    if not G:
        return P
    return left_divide(P, G, track=False)[1]


def s_pair(P: WeylOperator, Q: WeylOperator) -> WeylOperator:
    """Leading-term cancelling combination over lcm(lm P, lm Q)."""
    mp, mq = P.lm(), Q.lm()
    L = lcm_exp(mp, mq)
    return P.left_mul_monomial(L / mp, 1 / P.lc()) - Q.left_mul_monomial(L / mq, 1 / Q.lc())


# -- Groebner bases -----------------------------------------------------------


def is_groebner(G: Sequence[WeylOperator]) -> bool:
    """True if every S-pair left-reduces to zero modulo ``G``."""
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if reduce_r(s_pair(G[i], G[j]), G):
                return False
    return True


def interreduce_r(G: Iterable[WeylOperator]) -> list[WeylOperator]:
    """Minimal, tail-reduced, monic basis sorted by descending leading monomial."""
    G = [g.monic() for g in G if g]
    G.sort(key=lambda g: key_r(g.lm()))
    minimal: list[WeylOperator] = []
    for g in G:
        if not any(divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(reduce_r(g, others).monic())
    out.sort(key=lambda g: key_r(g.lm()), reverse=True)
    return out


@dataclass
class GroebnerBasisR:
    """A Groebner basis of a left ideal of D_n[s_1..s_p] (or of D_n when p = 0).

    ``certified`` records that every S-pair was checked to reduce to zero.
    """

    elements: list[WeylOperator]
    n: int
    p: int = 0
    certified: bool = False

    @property
    def ring(self) -> str:
        return "D_n" if self.p == 0 else "R"

    @property
    def order(self) -> str:
        return "cmp_dn" if self.p == 0 else "cmp_r"

    @classmethod
    def from_elements(cls, elements: Iterable[WeylOperator], n: int, p: int = 0) -> "GroebnerBasisR":
        """Wrap a user-supplied list, raising unless it passes certification."""
        els = [e for e in elements if e]
        if any(e.shape != (n, p) for e in els):
            raise PreconditionError("basis element of the wrong shape")
        gb = cls(els, n, p)
        gb.certify()
        return gb

    def certify(self) -> "GroebnerBasisR":
        if not self.certified:
            G = self.elements
            for i in range(len(G)):
                for j in range(i + 1, len(G)):
                    r = reduce_r(s_pair(G[i], G[j]), G)
                    if r:
                        raise NotAGroebnerBasis(
                            f"S-pair of elements {i + 1} and {j + 1} reduces to {r}", witness=r
                        )
            self.certified = True
        return self

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def contains(self, P: WeylOperator) -> bool:
        return not reduce_r(P, self.elements)

    def normal_form(self, P: WeylOperator) -> WeylOperator:
        return reduce_r(P, self.elements)

    def in_a(self) -> list[WeylOperator]:
        return [g for g in self.elements if g.in_a()]

    def outside_a(self) -> list[WeylOperator]:
        return [g for g in self.elements if not g.in_a()]

    def __str__(self):
        return "\n".join(str(g) for g in self.elements)


def buchberger_r(gens: LeftIdealPresentation | Sequence[WeylOperator], n: int | None = None, p: int | None = None) -> GroebnerBasisR:
    """Canonical reduced left Groebner basis (normal selection strategy).

    Buchberger's coprime-leading-monomial criterion is not used: it fails
    in the Weyl algebra.
    """
    if isinstance(gens, LeftIdealPresentation):
        n, p, G = gens.n, gens.p, list(gens.generators)
    else:
        G = list(gens)
        if n is None or p is None:
            if not G:
                raise ValueError("n and p are required for an empty generator list")
            n, p = G[0].shape
    G = [g.monic() for g in G if g]
    if any(g.is_constant() for g in G):
        return GroebnerBasisR([WeylOperator.constant(1, n, p)], n, p, certified=True)
    G = [g for i, g in enumerate(G) if g not in G[:i]]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    lcms = {}

    def pair_key(ij):
        if ij not in lcms:
            lcms[ij] = key_r(lcm_exp(G[ij[0]].lm(), G[ij[1]].lm()))
        return lcms[ij], ij

    while pairs:
        ij = min(pairs, key=pair_key)
        pairs.discard(ij)
        r = reduce_r(s_pair(G[ij[0]], G[ij[1]]), G)
        if r:
            r = r.monic()
            if r.is_constant():
                return GroebnerBasisR([WeylOperator.constant(1, n, p)], n, p, certified=True)
            G.append(r)
            k = len(G) - 1
            pairs.update((a, k) for a in range(k))
    return GroebnerBasisR(interreduce_r(G), n, p, certified=True)


def is_unit_ideal(G: GroebnerBasisR | Sequence[WeylOperator]) -> bool:
    """A Groebner basis spans the whole ring iff it contains a nonzero constant."""
    return any(g and g.is_constant() for g in G)


def _require_certified(G: GroebnerBasisR) -> None:
    if not isinstance(G, GroebnerBasisR):
        raise NotAGroebnerBasis("expected a GroebnerBasisR")
    G.certify()


def eliminate_to_a(G: GroebnerBasisR) -> CommIdeal:
    """Q cap A, read off as the basis elements free of x and d."""
    _require_certified(G)
    return CommIdeal([g.to_comm() for g in G.in_a()], G.p)


# -- parametric reduction -----------------------------------------------------


def _split_leading(P: WeylOperator) -> tuple[Monomial, CommPoly, WeylOperator]:
    top = plm(P)
    tail = {m: c for m, c in P.terms.items() if m.x != top.x or m.d != top.d}
    return top, plc(P), WeylOperator._raw(tail, P.n, P.p)


def _attach(h: CommPoly, top: Monomial) -> WeylOperator:
    return WeylOperator._raw(
        {Monomial._raw(top.x, top.d, e): c for e, c in h.terms.items()}, top.n, h.nvars
    )


def reduce_gb(G: GroebnerBasisR, *, interreduce: bool = True) -> GroebnerBasisR:
    """Replace each P outside A by r*plm(P) + tail, where r is plc(P) reduced by G cap A.

    Elements are processed in descending leading-monomial order and the
    sweep repeats until nothing changes.  Each replacement strictly lowers
    one leading monomial or drops an element, so the loop terminates.
    Afterwards no parametric leading coefficient lies in Q cap A.
    """
    _require_certified(G)
    elems = [g for g in G.elements]
    in_a = [g.to_comm() for g in elems if g.in_a()]
    while True:
        changed = False
        elems.sort(key=lambda g: key_r(g.lm()), reverse=True)
        nxt: list[WeylOperator] = []
        for P in elems:
            if P.in_a() or not in_a:
                nxt.append(P)
                continue
            top, c, tail = _split_leading(P)
            r = normal_form_a(c, in_a)
            if r == c:
                nxt.append(P)
                continue
            changed = True
            P2 = _attach(r, top) + tail if r else tail
            if P2 and P2 not in nxt:
                nxt.append(P2)
        elems = [e for i, e in enumerate(nxt) if e not in nxt[:i]]
        if not changed:
            break
    if interreduce:
        elems = interreduce_r(elems)
    out = GroebnerBasisR(elems, G.n, G.p, certified=False)
    out.certify()
    QA = CommIdeal(in_a, G.p)
    for P in out.outside_a():
        if QA.generators and QA.contains(plc(P)):
            raise VerificationError("parametric leading coefficient lies in Q cap A", witness=P)
    return out


def _in_prime(P: WeylOperator, prime: CommIdeal) -> bool:
    return P.in_a() and prime.contains(P.to_comm())


def h_poly(G: GroebnerBasisR | Sequence[WeylOperator], prime: CommIdeal) -> CommPoly:
    """Monic product of plc(P) over the basis elements P not in ``prime``."""
    p = prime.nvars
    h = CommPoly.constant(1, p)
    for P in G:
        if not _in_prime(P, prime):
            h = h * plc(P)
    return h.monic()


def on_zero_set(prime: CommIdeal, alpha: Sequence) -> CommPoly | None:
    """None if alpha lies in Z(prime), otherwise a generator not vanishing there."""
    for f in prime.generators:
        if f.evaluate(alpha) != 0:
            return f
    return None


def specialize_gb(G: GroebnerBasisR, prime: CommIdeal, alpha: Sequence) -> GroebnerBasisR:
    """The specialized basis q_alpha(G minus prime), re-certified in D_n.

    Requires alpha in Z(prime) and h_poly(G, prime)(alpha) != 0.  The
    result's leading monomials agree with the parametric leading monomials
    of the corresponding elements of ``G``.
    """
    _require_certified(G)
    alpha = tuple(Fraction(a) for a in alpha)
    if len(alpha) != G.p:
        raise PreconditionError(f"point has {len(alpha)} coordinates, expected {G.p}")
    bad = on_zero_set(prime, alpha)
    if bad is not None:
        raise PreconditionError(f"point is not on Z(p): {bad} does not vanish there", witness=bad)
    h = h_poly(G, prime)
    if h.evaluate(alpha) == 0:
        raise PreconditionError(f"point lies on Z(h) with h = {h}", witness=h)
    kept = [P for P in G if not _in_prime(P, prime)]
    special = []
    for P in kept:
        S = specialize(P, alpha)
        top = plm(P)
        if not S or S.lm() != Monomial._raw(top.x, top.d, ()):
            raise VerificationError(f"leading monomial of {P} changed under specialization", witness=P)
        special.append(S.monic())
    out = GroebnerBasisR(special, G.n, 0)
    try:
        out.certify()
    except NotAGroebnerBasis as exc:
        raise VerificationError("specialized basis is not a Groebner basis", witness=exc.witness) from exc
    return out


def fiber_nonzero(J: LeftIdealPresentation, alpha: Sequence) -> bool:
    """Whether (R/J) tensor A/m_alpha = D_n / q_alpha(J) is nonzero."""
    return not is_unit_ideal(buchberger_r(J.specialize(alpha)))


# -- rational points ----------------------------------------------------------


def _small_integers():
    yield 0
    for k in itertools.count(1):
        yield k
        yield -k


def rational_points(prime: CommIdeal, avoid: CommPoly | None = None, limit: int = 20) -> list[RationalPoint]:
    """Rational points of Z(prime) outside Z(avoid), for ideals cut out by linear forms.

    The free coordinates run over small integers in order of increasing
    max-norm.
    """
    p = prime.nvars
    gb = prime.groebner
    if any(g.degree() > 1 for g in gb):
        raise PreconditionError("point generation needs an ideal generated by linear forms")
    if gb and gb[0].is_constant():
        raise PreconditionError("the ideal is the whole ring; its zero set is empty")
    pivots = {}
    for g in gb:
        e = g.lead_exp()
        pivots[e.index(1)] = g
    free = [i for i in range(p) if i not in pivots]
    out: list[RationalPoint] = []
    if not free:
        pt = _solve(pivots, {}, p)
        if avoid is None or avoid.evaluate(pt) != 0:
            out.append(RationalPoint(pt))
        return out
    for radius in itertools.count(0):
        if radius > 10 * limit + 10:
            break
        vals = [v for v in _take(_small_integers(), 2 * radius + 1)]
        for combo in itertools.product(vals, repeat=len(free)):
            if max(abs(v) for v in combo) != radius:
                continue
            pt = _solve(pivots, dict(zip(free, combo)), p)
            if avoid is not None and avoid.evaluate(pt) == 0:
                continue
            out.append(RationalPoint(pt))
            if len(out) >= limit:
                return out
    return out


def _take(it, k):
    return [next(it) for _ in range(k)]


def _solve(pivots: dict, free_vals: dict, p: int) -> list[Fraction]:
    # reduced lex basis: each pivot generator is s_k + (form in free variables) + const
    pt = [Fraction(0)] * p
    for i, v in free_vals.items():
        pt[i] = Fraction(v)
    for k, g in pivots.items():
        val = Fraction(0)
        for e, c in g.terms.items():
            if not any(e):
                val -= c
            elif e.index(1) != k:
                val -= c * pt[e.index(1)]
        pt[k] = val
    return pt


# -- the certificate ----------------------------------------------------------


@dataclass
class FiberSample:
    point: RationalPoint
    nonzero: bool
    specialized: GroebnerBasisR


@dataclass
class FiberCertificate:
    """Evidence that the fibre of R/J is nonzero on Z(p) outside Z(h)."""

    prime: CommIdeal
    basis: GroebnerBasisR
    h: CommPoly
    samples: list[FiberSample] = field(default_factory=list)

    @property
    def all_nonzero(self) -> bool:
        return all(s.nonzero for s in self.samples)


def dense_open_certificate(
    J: LeftIdealPresentation,
    prime: CommIdeal,
    samples: Sequence[Sequence] | None = None,
    *,
    count: int = 20,
) -> FiberCertificate:
    """Build Q = J + R p, its reduced basis, h, and check fibres at sample points.

    ``prime`` is assumed prime and minimal over J cap A; only the consequence
    (J + R p) cap A = p is verified, and a failure raises
    :class:`PreconditionError`.  Without explicit ``samples``, ``count``
    points are generated (linear primes only).
    """
    Q = J.plus_extension(prime)
    G = reduce_gb(buchberger_r(Q))
    elim = eliminate_to_a(G)
    if elim != prime:
        witness = next((g for g in elim.generators if not prime.contains(g)), None)
        if witness is None:
            witness = next(g for g in prime.generators if not elim.contains(g))
        raise PreconditionError(
            f"(J + Rp) cap A = ({', '.join(map(str, elim.groebner))}) differs from p", witness=witness
        )
    h = h_poly(G, prime)
    if prime.contains(h):
        raise VerificationError(f"h = {h} lies in p", witness=h)
    if samples is None:
        points = rational_points(prime, h, count)
    else:
        points = [RationalPoint(a) for a in samples]
    cert = FiberCertificate(prime, G, h)
    for pt in points:
        spec = specialize_gb(G, prime, pt)
        verdict = fiber_nonzero(J, pt)
        if verdict == is_unit_ideal(spec):
            raise VerificationError(f"fibre verdicts disagree at {pt}", witness=pt)
        cert.samples.append(FiberSample(pt, verdict, spec))
        if not verdict:
            raise VerificationError(f"fibre vanishes at {pt} although h({pt}) != 0", witness=pt)
    return cert
