"""Standard monomials x^a d^b s^c and the three lexicographic term orders.

The orders are

* on R = D_n[s]:  d_1 > ... > d_n > x_n > ... > x_1 > s_p > ... > s_1
* on D_n:         d_1 > ... > d_n > x_n > ... > x_1
* on A = Q[s]:    s_p > ... > s_1

A single :class:`Monomial` type is shared by all three rings; the ring
specific comparisons only check that the unused exponent blocks vanish.
"""

from __future__ import annotations

from typing import Iterable

LT, EQ, GT = -1, 0, 1


class DimensionMismatch(ValueError):
    """Two monomials (or operators) live in rings with different (n, p)."""


def _exps(values: Iterable[int]) -> tuple[int, ...]:
    t = tuple(int(v) for v in values)
    for v in t:
        if v < 0:
            raise ValueError(f"negative exponent {v}")
    return t


class Monomial:
    """The standard monomial x^x d^d s^s, stored as three exponent tuples."""

    __slots__ = ("x", "d", "s", "_hash")

    def __init__(self, x: Iterable[int] = (), d: Iterable[int] = (), s: Iterable[int] = ()):
        self.x = _exps(x)
        self.d = _exps(d)
        if len(self.x) != len(self.d):
            raise DimensionMismatch("x and d blocks must have the same length")
        self.s = _exps(s)
        self._hash = hash((self.x, self.d, self.s))

    @classmethod
    def _raw(cls, x, d, s):
        # trusted constructor for internal arithmetic
        m = object.__new__(cls)
        m.x, m.d, m.s = x, d, s
        m._hash = hash((x, d, s))
        return m

    @classmethod
    def one(cls, n: int, p: int) -> "Monomial":
        return cls._raw((0,) * n, (0,) * n, (0,) * p)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def p(self) -> int:
        return len(self.s)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.x), len(self.s)

    def is_one(self) -> bool:
        return not (any(self.x) or any(self.d) or any(self.s))

    def degree(self) -> int:
        return sum(self.x) + sum(self.d) + sum(self.s)

    def in_a(self) -> bool:
        """True if no x or d appears (the monomial lies in A)."""
        return not (any(self.x) or any(self.d))

    def weyl_part(self) -> "Monomial":
        """x^a d^b with the s-exponents zeroed."""
        return Monomial._raw(self.x, self.d, (0,) * len(self.s))

    def s_part(self) -> "Monomial":
        n = len(self.x)
        return Monomial._raw((0,) * n, (0,) * n, self.s)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.x == other.x and self.d == other.d and self.s == other.s

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial(x={self.x}, d={self.d}, s={self.s})"

    def __str__(self):
        parts = []
        for name, block in (("x", self.x), ("d", self.d), ("s", self.s)):
            for i in range(len(block) - 1, -1, -1):
                e = block[i]
                if e == 1:
                    parts.append(f"{name}{i + 1}")
                elif e > 1:
                    parts.append(f"{name}{i + 1}^{e}")
        return "*".join(parts) if parts else "1"

    def __mul__(self, other: "Monomial") -> "Monomial":
        """Exponent-wise sum (the commutative product of symbols)."""
        _check(self, other)
        return Monomial._raw(
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.d, other.d)),
            tuple(a + b for a, b in zip(self.s, other.s)),
        )

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exponent-wise difference; requires ``other`` to divide ``self``."""
        _check(self, other)
        if not divides(other, self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial._raw(
            tuple(a - b for a, b in zip(self.x, other.x)),
            tuple(a - b for a, b in zip(self.d, other.d)),
            tuple(a - b for a, b in zip(self.s, other.s)),
        )


def _check(m1: Monomial, m2: Monomial) -> None:
    if len(m1.x) != len(m2.x) or len(m1.s) != len(m2.s):
        raise DimensionMismatch(f"monomials of shape {m1.shape} and {m2.shape}")


def key_r(m: Monomial) -> tuple[int, ...]:
    """Sort key realising the order on R (larger key = larger monomial)."""
    return m.d + m.x[::-1] + m.s[::-1]


def key_dn(m: Monomial) -> tuple[int, ...]:
    return m.d + m.x[::-1]


def key_a(m: Monomial) -> tuple[int, ...]:
    return m.s[::-1]


def _cmp_keys(k1, k2) -> int:
    return (k1 > k2) - (k1 < k2)


def cmp_r(m1: Monomial, m2: Monomial) -> int:
    _check(m1, m2)
    return _cmp_keys(key_r(m1), key_r(m2))


def cmp_dn(m1: Monomial, m2: Monomial) -> int:
    _check(m1, m2)
    if any(m1.s) or any(m2.s):
        raise ValueError("cmp_dn is only defined on monomials without s")
    return _cmp_keys(key_dn(m1), key_dn(m2))


def cmp_a(m1: Monomial, m2: Monomial) -> int:
    _check(m1, m2)
    if not (m1.in_a() and m2.in_a()):
        raise ValueError("cmp_a is only defined on monomials in s alone")
    return _cmp_keys(key_a(m1), key_a(m2))


def divides(m1: Monomial, m2: Monomial) -> bool:
    """Entry-wise <= on all exponents.

    This is divisibility of principal symbols; it does not mean that
    m2 = P * m1 for some operator P.
    """
    _check(m1, m2)
    return (
        all(a <= b for a, b in zip(m1.x, m2.x))
        and all(a <= b for a, b in zip(m1.d, m2.d))
        and all(a <= b for a, b in zip(m1.s, m2.s))
    )


def lcm_exp(m1: Monomial, m2: Monomial) -> Monomial:
    _check(m1, m2)
    return Monomial._raw(
        tuple(map(max, m1.x, m2.x)),
        tuple(map(max, m1.d, m2.d)),
        tuple(map(max, m1.s, m2.s)),
    )
