"""Normal-ordered operators in R = D_n[s_1, ..., s_p].

Every operator is stored as a map from standard monomials x^a d^b s^c to
nonzero rationals.  The Weyl algebra D_n is the case p = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .commutative import CommIdeal, CommPoly
from .monomial import DimensionMismatch, Monomial, key_dn, key_r


def _monomial_product(m1: Monomial, m2: Monomial) -> list[tuple[Monomial, int]]:
    """Normal-ordered expansion of the product m1 * m2.

    Per index i, d_i^b x_i^c = sum_k k! C(b,k) C(c,k) x_i^(c-k) d_i^(b-k).
    """
    s = tuple(a + b for a, b in zip(m1.s, m2.s))
    per_var = []
    for a, b, c, e in zip(m1.x, m1.d, m2.x, m2.d):
        opts = []
        for k in range(min(b, c) + 1):
            opts.append((a + c - k, b + e - k, factorial(k) * comb(b, k) * comb(c, k)))
        per_var.append(opts)
    out = []
    for choice in product(*per_var):
        coeff = 1
        for _, _, w in choice:
            coeff *= w
        out.append(
            (Monomial._raw(tuple(t[0] for t in choice), tuple(t[1] for t in choice), s), coeff)
        )
    return out


class WeylOperator:
    """An element of D_n[s_1, ..., s_p] in normal order x^a d^b s^c."""

    def __init__(self, terms: Mapping[Monomial, object] | None = None, n: int = 0, p: int = 0):
        self.n, self.p = n, p
        out: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if m.shape != (n, p):
                raise DimensionMismatch(f"monomial of shape {m.shape} in operator of shape {(n, p)}")
            c = Fraction(c)
            if c:
                v = out.get(m, 0) + c
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        self.terms = out

    @classmethod
    def _raw(cls, terms, n, p):
        P = object.__new__(cls)
        P.n, P.p, P.terms = n, p, terms
        return P

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int, p: int = 0) -> "WeylOperator":
        return cls._raw({}, n, p)

    @classmethod
    def constant(cls, c, n: int, p: int = 0) -> "WeylOperator":
        return cls({Monomial.one(n, p): c}, n, p)

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "WeylOperator":
        return cls({m: c}, m.n, m.p)

    @classmethod
    def x(cls, i: int, n: int, p: int = 0) -> "WeylOperator":
        """x_{i+1} (zero-based index)."""
        return cls.monomial(Monomial(_unit(i, n), (0,) * n, (0,) * p))

    @classmethod
    def d(cls, i: int, n: int, p: int = 0) -> "WeylOperator":
        return cls.monomial(Monomial((0,) * n, _unit(i, n), (0,) * p))

    @classmethod
    def s(cls, i: int, n: int, p: int) -> "WeylOperator":
        return cls.monomial(Monomial((0,) * n, (0,) * n, _unit(i, p)))

    @classmethod
    def from_comm(cls, f: CommPoly, n: int) -> "WeylOperator":
        z = (0,) * n
        return cls._raw({Monomial._raw(z, z, e): c for e, c in f.terms.items()}, n, f.nvars)

    # -- basic queries ------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.p

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(m.is_one() for m in self.terms)

    def in_a(self) -> bool:
        """True if the operator involves no x or d (it lies in A)."""
        return all(m.in_a() for m in self.terms)

    def to_comm(self) -> CommPoly:
        if not self.in_a():
            raise ValueError("operator involves x or d variables")
        return CommPoly._raw({m.s: c for m, c in self.terms.items()}, self.p)

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending order on R."""
        return sorted(self.terms.items(), key=lambda t: key_r(t[0]), reverse=True)

    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero operator has no leading monomial")
        return max(self.terms, key=key_r)

    def lc(self) -> Fraction:
        return self.terms[self.lm()]

    def degree(self) -> int:
        return max((m.degree() for m in self.terms), default=-1)

    def monic(self) -> "WeylOperator":
        if not self.terms:
            return self
        c = self.lc()
        if c == 1:
            return self
        return WeylOperator._raw({m: v / c for m, v in self.terms.items()}, self.n, self.p)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, WeylOperator):
            if other.shape != self.shape:
                raise DimensionMismatch(f"operators of shape {self.shape} and {other.shape}")
            return other
        if isinstance(other, CommPoly):
            if other.nvars != self.p:
                raise DimensionMismatch("parameter count mismatch")
            return WeylOperator.from_comm(other, self.n)
        if isinstance(other, (int, Fraction)):
            return WeylOperator.constant(other, self.n, self.p)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CommPoly)):
            other = self._coerce(other)
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def __hash__(self):
        return hash((self.shape, frozenset(self.terms.items())))

    def __neg__(self):
        return WeylOperator._raw({m: -c for m, c in self.terms.items()}, self.n, self.p)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _accumulate(out, other.terms.items(), 1)
        return WeylOperator._raw(out, self.n, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _accumulate(out, other.terms.items(), -1)
        return WeylOperator._raw(out, self.n, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "WeylOperator":
        c = Fraction(c)
        if not c:
            return WeylOperator.zero(self.n, self.p)
        return WeylOperator._raw({m: v * c for m, v in self.terms.items()}, self.n, self.p)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return weyl_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return weyl_mul(other, self)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = WeylOperator.constant(1, self.n, self.p)
        for _ in range(k):
            out = weyl_mul(out, self)
        return out

    def left_mul_monomial(self, m: Monomial, c=1) -> "WeylOperator":
        """c * m * self, the workhorse of left division."""
        out: dict = {}
        for m2, c2 in self.terms.items():
            cc = c * c2
            for mm, w in _monomial_product(m, m2):
                v = out.get(mm, 0) + cc * w
                if v:
                    out[mm] = v
                else:
                    out.pop(mm, None)
        return WeylOperator._raw(out, self.n, self.p)

    def __repr__(self):
        return f"WeylOperator({self})"

    def __str__(self):
        from .parsing import format_operator

        return format_operator(self)


def _unit(i: int, k: int) -> tuple[int, ...]:
    if not 0 <= i < k:
        raise IndexError(f"variable index {i + 1} out of range 1..{k}")
    return tuple(1 if j == i else 0 for j in range(k))


def _accumulate(out: dict, items, sign) -> None:
    for m, c in items:
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)


def weyl_mul(P: WeylOperator, Q: WeylOperator) -> WeylOperator:
    """Product P * Q in normal order."""
    if P.shape != Q.shape:
        raise DimensionMismatch(f"operators of shape {P.shape} and {Q.shape}")
    out: dict = {}
    for m1, c1 in P.terms.items():
        for m2, c2 in Q.terms.items():
            cc = c1 * c2
            for m, w in _monomial_product(m1, m2):
                v = out.get(m, 0) + cc * w
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
    return WeylOperator._raw(out, P.n, P.p)


def lm_r(P: WeylOperator) -> Monomial:
    return P.lm()


def lm_dn(P: WeylOperator) -> Monomial:
    if P.p:
        raise ValueError("lm_dn expects an operator without parameters")
    return P.lm()


def plm(P: WeylOperator) -> Monomial:
    """Parametric leading monomial: the largest x^a d^b with nonzero A-coefficient."""
    if not P.terms:
        raise ValueError("the zero operator has no parametric leading monomial")
    return max((m.weyl_part() for m in P.terms), key=key_dn)


def plc(P: WeylOperator) -> CommPoly:
    """Parametric leading coefficient: the A-coefficient of :func:`plm`."""
    top = plm(P)
    return CommPoly._raw(
        {m.s: c for m, c in P.terms.items() if m.x == top.x and m.d == top.d}, P.p
    )


def specialize(P: WeylOperator, alpha: Sequence) -> WeylOperator:
    """The map R -> D_n substituting s_i = alpha_i."""
    if len(alpha) != P.p:
        raise ValueError(f"point of length {len(alpha)} for {P.p} parameters")
    pt = [Fraction(a) for a in alpha]
    out: dict = {}
    for m, c in P.terms.items():
        v = c
        for a, k in zip(pt, m.s):
            if k:
                v *= a**k
        if v:
            key = Monomial._raw(m.x, m.d, ())
            w = out.get(key, 0) + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return WeylOperator._raw(out, P.n, 0)


@dataclass
class RationalPoint:
    """A point alpha of Q^p; its maximal ideal is (s_1 - alpha_1, ..., s_p - alpha_p)."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        self.coords = tuple(Fraction(c) for c in coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def maximal_ideal(self) -> CommIdeal:
        p = len(self.coords)
        return CommIdeal([CommPoly.variable(i, p) - a for i, a in enumerate(self.coords)], p)

    def __str__(self):
        return ",".join(str(c) for c in self.coords)


@dataclass
class LeftIdealPresentation:
    """Generators of a left ideal of D_n[s_1..s_p] (a D_n ideal when p = 0)."""

    generators: list[WeylOperator]
    n: int
    p: int = 0

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.shape != (self.n, self.p):
                raise DimensionMismatch(f"generator of shape {g.shape} in ideal of shape {(self.n, self.p)}")
            if g and g not in gens:
                gens.append(g)
        self.generators = gens

    @property
    def ring(self) -> str:
        return "D_n" if self.p == 0 else "R"

    def plus_extension(self, ideal: CommIdeal) -> "LeftIdealPresentation":
        """J + R*ideal for an ideal of A."""
        if ideal.nvars != self.p:
            raise DimensionMismatch("parameter count mismatch")
        extra = [WeylOperator.from_comm(f, self.n) for f in ideal.generators]
        return LeftIdealPresentation(self.generators + extra, self.n, self.p)

    def specialize(self, alpha: Sequence) -> "LeftIdealPresentation":
        return LeftIdealPresentation([specialize(g, alpha) for g in self.generators], self.n, 0)
