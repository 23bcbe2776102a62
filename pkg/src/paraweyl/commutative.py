"""Exact polynomials over Q in the parameters s_1..s_p and their ideals.

Polynomials are sparse maps from exponent tuples to :class:`fractions.Fraction`.
Everything uses the lex order s_p > ... > s_1.  Auxiliary variables needed
for intersections and radical membership are appended as extra trailing
coordinates, which makes them lex-greatest without a separate order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .monomial import Monomial


def _key(e: tuple[int, ...]) -> tuple[int, ...]:
    return e[::-1]


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class CommPoly:
    """An element of Q[s_1, ..., s_p]."""

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None, nvars: int = 0):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, terms, nvars):
        f = object.__new__(cls)
        f.nvars = nvars
        f.terms = terms
        return f

    @classmethod
    def constant(cls, c, nvars: int) -> "CommPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "CommPoly":
        """The variable s_{i+1} (zero-based index)."""
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars)

    def _coerce(self, other) -> "CommPoly":
        if isinstance(other, CommPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"polynomials in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return CommPoly.constant(other, self.nvars)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def items(self):
        """Terms in descending lex order."""
        return sorted(self.terms.items(), key=lambda t: _key(t[0]), reverse=True)

    def lead_exp(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=_key)

    def lead_coeff(self) -> Fraction:
        return self.terms[self.lead_exp()]

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def monic(self) -> "CommPoly":
        if not self.terms:
            return self
        c = self.lead_coeff()
        return CommPoly._raw({e: v / c for e, v in self.terms.items()}, self.nvars)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly.constant(other, self.nvars)
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self):
        return CommPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return CommPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CommPoly._raw({}, self.nvars)
            return CommPoly._raw({e: c * other for e, c in self.terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return CommPoly._raw(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = CommPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_term(self, e: tuple[int, ...], c: Fraction) -> "CommPoly":
        return CommPoly._raw({_add(e, e2): c * c2 for e2, c2 in self.terms.items()}, self.nvars)

    def __call__(self, point: Sequence) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point of length {len(point)} for {self.nvars} variables")
        pt = [Fraction(a) for a in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for a, k in zip(pt, e):
                if k:
                    v *= a**k
            total += v
        return total

    def extend(self, extra: int) -> "CommPoly":
        """Append ``extra`` new (lex-greatest) variables."""
        pad = (0,) * extra
        return CommPoly._raw({e + pad: c for e, c in self.terms.items()}, self.nvars + extra)

    def drop_trailing(self, k: int) -> "CommPoly":
        """Inverse of :meth:`extend`; the dropped variables must not occur."""
        out = {}
        for e, c in self.terms.items():
            if any(e[self.nvars - k:]):
                raise ValueError("polynomial involves an eliminated variable")
            out[e[: self.nvars - k]] = c
        return CommPoly._raw(out, self.nvars - k)

    def __repr__(self):
        return f"CommPoly({self})"

    def __str__(self):
        from .parsing import format_comm

        return format_comm(self)


# -- ring operations ---------------------------------------------------------


def poly_add(f: CommPoly, g: CommPoly) -> CommPoly:
    return f + g


def poly_mul(f: CommPoly, g: CommPoly) -> CommPoly:
    return f * g


def lm_a(f: CommPoly) -> Monomial:
    return Monomial((), (), f.lead_exp())


def lc_a(f: CommPoly) -> Fraction:
    return f.lead_coeff()


# -- division and Groebner bases --------------------------------------------


def divide_a(f: CommPoly, G: Sequence[CommPoly]) -> tuple[list[CommPoly], CommPoly]:
    """Multivariate division of ``f`` by ``G``.

    Returns ``(quotients, remainder)`` with ``f = sum(q_i g_i) + r`` and no
    monomial of ``r`` divisible by any leading monomial of ``G``.
    """
    if any(g.is_zero() for g in G):
        raise ValueError("cannot divide by the zero polynomial")
    nv = f.nvars
    leads = [(g.lead_exp(), g.lead_coeff()) for g in G]
    quots: list[dict] = [{} for _ in G]
    rem: dict = {}
    p = dict(f.terms)
    while p:
        e = max(p, key=_key)
        c = p[e]
        for i, (le, lc) in enumerate(leads):
            if _divides(le, e):
                qe = _sub(e, le)
                qc = c / lc
                quots[i][qe] = quots[i].get(qe, 0) + qc
                for ge, gc in G[i].terms.items():
                    te = _add(qe, ge)
                    v = p.get(te, 0) - qc * gc
                    if v:
                        p[te] = v
                    else:
                        p.pop(te, None)
                break
        else:
            rem[e] = c
            del p[e]
    return [CommPoly(q, nv) for q in quots], CommPoly._raw(rem, nv)


def normal_form(f: CommPoly, G: Sequence[CommPoly]) -> CommPoly:
    return divide_a(f, G)[1]


def s_poly(f: CommPoly, g: CommPoly) -> CommPoly:
    ef, eg = f.lead_exp(), g.lead_exp()
    L = tuple(map(max, ef, eg))
    return f.mul_term(_sub(L, ef), 1 / f.lead_coeff()) - g.mul_term(_sub(L, eg), 1 / g.lead_coeff())


def interreduce(G: Iterable[CommPoly]) -> list[CommPoly]:
    """Minimal, tail-reduced, monic basis sorted by descending leading monomial."""
    G = [g.monic() for g in G if not g.is_zero()]
    G.sort(key=lambda g: _key(g.lead_exp()))
    minimal: list[CommPoly] = []
    for g in G:
        if not any(_divides(h.lead_exp(), g.lead_exp()) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(normal_form(g, others).monic())
    out.sort(key=lambda g: _key(g.lead_exp()), reverse=True)
    return out


def buchberger_a(gens: Iterable[CommPoly]) -> list[CommPoly]:
    """Canonical (reduced, monic, sorted) Groebner basis of the ideal ``gens``."""
    G = [g.monic() for g in gens if not g.is_zero()]
    if not G:
        return []
    pairs = set(combinations(range(len(G)), 2))
    while pairs:
        # normal strategy: smallest lcm first, ties broken by index
        i, j = min(
            pairs,
            key=lambda ij: (_key(tuple(map(max, G[ij[0]].lead_exp(), G[ij[1]].lead_exp()))), ij),
        )
        pairs.discard((i, j))
        ei, ej = G[i].lead_exp(), G[j].lead_exp()
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        r = normal_form(s_poly(G[i], G[j]), G)
        if r:
            if r.is_constant():
                return [CommPoly.constant(1, r.nvars)]
            G.append(r.monic())
            k = len(G) - 1
            pairs.update((a, k) for a in range(k))
    return interreduce(G)


def is_groebner_a(G: Sequence[CommPoly]) -> bool:
    return all(normal_form(s_poly(f, g), G).is_zero() for f, g in combinations(G, 2))


def membership_a(f: CommPoly, I: "CommIdeal | Sequence[CommPoly]") -> bool:
    gb = I.groebner if isinstance(I, CommIdeal) else buchberger_a(I)
    if f.is_zero():
        return True
    if not gb:
        return False
    return normal_form(f, gb).is_zero()


def radical_membership(f: CommPoly, I: "CommIdeal | Sequence[CommPoly]") -> bool:
    """Decide whether some power of ``f`` lies in ``I``.

    Uses 1 in I + (1 - y f) in A[y], with y an extra lex-greatest variable.
    """
    gens = I.generators if isinstance(I, CommIdeal) else list(I)
    if f.is_zero():
        return True
    nv = f.nvars
    y = CommPoly.variable(nv, nv + 1)
    ext = [g.extend(1) for g in gens] + [1 - y * f.extend(1)]
    gb = buchberger_a(ext)
    return len(gb) == 1 and gb[0].is_constant()


def intersect_ideals(I: "CommIdeal", J: "CommIdeal") -> "CommIdeal":
    """Generators of I cap J from t*I + (1-t)*J by eliminating t."""
    nv = I.nvars
    if J.nvars != nv:
        raise ValueError("ideals in different polynomial rings")
    if I.is_zero() or J.is_zero():
        return CommIdeal([], nv)
    t = CommPoly.variable(nv, nv + 1)
    gens = [t * f.extend(1) for f in I.generators] + [(1 - t) * g.extend(1) for g in J.generators]
    gb = buchberger_a(gens)
    return CommIdeal([g.drop_trailing(1) for g in gb if g.lead_exp()[-1] == 0], nv)


class CommIdeal:
    """A finitely generated ideal of Q[s_1, ..., s_p].

    Generators are normalised to be monic and deduplicated; the canonical
    Groebner basis is computed on first use and kept on the instance.
    """

    def __init__(self, generators: Iterable[CommPoly], nvars: int | None = None):
        gens: list[CommPoly] = []
        for g in generators:
            if g.is_zero():
                continue
            g = g.monic()
            if g not in gens:
                gens.append(g)
        if nvars is None:
            if not gens:
                raise ValueError("nvars is required for an ideal without generators")
            nvars = gens[0].nvars
        if any(g.nvars != nvars for g in gens):
            raise ValueError("generators in different polynomial rings")
        self.nvars = nvars
        self.generators = gens

    @cached_property
    def groebner(self) -> list[CommPoly]:
        return buchberger_a(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        gb = self.groebner
        return len(gb) == 1 and gb[0].is_constant()

    def contains(self, f: CommPoly) -> bool:
        return membership_a(f, self)

    __contains__ = contains

    def contains_ideal(self, other: "CommIdeal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def radical_contains(self, f: CommPoly) -> bool:
        return radical_membership(f, self)

    def reduce(self, f: CommPoly) -> CommPoly:
        return normal_form(f, self.groebner) if self.groebner else f

    def __eq__(self, other):
        if not isinstance(other, CommIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.groebner == other.groebner

    def __hash__(self):
        return hash(tuple(self.groebner))

    def __add__(self, other: "CommIdeal") -> "CommIdeal":
        return CommIdeal(self.generators + other.generators, self.nvars)

    def __and__(self, other: "CommIdeal") -> "CommIdeal":
        return intersect_ideals(self, other)

    def __repr__(self):
        return "CommIdeal([" + ", ".join(str(g) for g in self.generators) + "])"
