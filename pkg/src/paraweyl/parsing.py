"""Text formats: operator expressions, canonical printing and ideal files.

Expression grammar (``*`` is noncommutative and respects written order)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | VAR | '(' expr ')'
    NUMBER := digits ['/' digits]
    VAR    := x<i> | d<i> | s<i>

Ideal files are line oriented::

    vars n=2 p=2
    ideal J: x1*d1 - s1; x2*d2 - s2; x1*x2
    prime P: s1 + 1
    point a: -1, 3

Lines starting with whitespace continue the previous statement and ``#``
starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .commutative import CommIdeal, CommPoly
from .monomial import Monomial
from .weyl import LeftIdealPresentation, RationalPoint, WeylOperator


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        self.message, self.pos, self.line = message, pos, line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"column {pos + 1}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


# -- printing ---------------------------------------------------------------


def _format_terms(pairs) -> str:
    out = []
    for mono, c in pairs:
        neg = c < 0
        a = -c if neg else c
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def format_operator(P: WeylOperator) -> str:
    """Canonical text: descending order on R, x before d before s."""
    return _format_terms((str(m), c) for m, c in P.items())


def format_comm(f: CommPoly) -> str:
    return _format_terms((str(Monomial((), (), e)), c) for e, c in f.items())


def format_rational(c: Fraction) -> str:
    return str(Fraction(c))


# -- expression parser ------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([xds])(\d+)|(\*\*|[-+*^()]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start(0) + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(1):
            num = m.group(1)
            if num.endswith("/0") or re.search(r"/0+$", num):
                raise ParseError("division by zero in rational literal", start)
            toks.append(("num", Fraction(num), start))
        elif m.group(2):
            toks.append(("var", (m.group(2), int(m.group(3))), start))
        else:
            op = "^" if m.group(4) == "**" else m.group(4)
            toks.append(("op", op, start))
        pos = m.end(0)
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, n: int, p: int):
        self.text, self.n, self.p = text, n, p
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> WeylOperator:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        P = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {self.text[pos:].split()[0]!r}", pos)
        return P

    def expr(self):
        P = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                Q = self.term()
                P = P + Q if val == "+" else P - Q
            else:
                return P

    def term(self):
        P = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                P = P * self.unary()
            else:
                return P

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            P = self.unary()
            return -P if val == "-" else P
        return self.power()

    def power(self):
        start = self.peek()[2]
        base, atomic = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, k, kpos = self.take()
            if kind != "num" or k.denominator != 1:
                raise ParseError("exponent must be a nonnegative integer", kpos)
            if not atomic and _mixes_conjugates(base):
                raise ParseError("exponent on a non-atomic noncommutative factor", start)
            return base ** int(k)
        return base

    def atom(self):
        kind, val, pos = self.take()
        n, p = self.n, self.p
        if kind == "num":
            return WeylOperator.constant(val, n, p), True
        if kind == "var":
            name, idx = val
            limit = p if name == "s" else n
            if not 1 <= idx <= limit:
                raise ParseError(f"unknown variable {name}{idx}", pos)
            ctor = {"x": WeylOperator.x, "d": WeylOperator.d, "s": WeylOperator.s}[name]
            return ctor(idx - 1, n, p), True
        if kind == "op" and val == "(":
            P = self.expr()
            self.expect_op(")")
            return P, False
        if kind == "end":
            raise ParseError("unexpected end of expression", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def _mixes_conjugates(P: WeylOperator) -> bool:
    xs, ds = set(), set()
    for m in P.terms:
        xs.update(i for i, e in enumerate(m.x) if e)
        ds.update(i for i, e in enumerate(m.d) if e)
    return bool(xs & ds)


def parse_operator(text: str, n: int, p: int = 0) -> WeylOperator:
    """Parse an expression into a normal-ordered operator of D_n[s_1..s_p]."""
    return _Parser(text, n, p).parse()


def parse_comm(text: str, p: int) -> CommPoly:
    """Parse an expression in s_1..s_p only."""
    return _Parser(text, 0, p).parse().to_comm()


def parse_point(text: str) -> RationalPoint:
    try:
        return RationalPoint(Fraction(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational point {text!r}") from exc


# -- ideal files --------------------------------------------------------------

_VARS = re.compile(r"^vars\s+n\s*=\s*(\d+)\s+p\s*=\s*(\d+)\s*$")
_BLOCK = re.compile(r"^(ideal|prime|point)\s+([A-Za-z_][\w.-]*)\s*:(.*)$", re.S)


@dataclass
class IdealFile:
    n: int
    p: int
    ideals: dict[str, list[WeylOperator]] = field(default_factory=dict)
    primes: dict[str, CommIdeal] = field(default_factory=dict)
    points: dict[str, RationalPoint] = field(default_factory=dict)

    def ideal(self, name: str | None = None) -> LeftIdealPresentation:
        if name is None:
            if not self.ideals:
                raise ParseError("file declares no ideal")
            name = next(iter(self.ideals))
        if name not in self.ideals:
            raise ParseError(f"no ideal named {name!r}")
        return LeftIdealPresentation(list(self.ideals[name]), self.n, self.p)

    def comm_ideal(self, name: str) -> CommIdeal:
        """An ideal block read as an ideal of A (no x or d allowed)."""
        if name not in self.ideals:
            if name in self.primes:
                return self.primes[name]
            raise ParseError(f"no ideal named {name!r}")
        try:
            return CommIdeal([g.to_comm() for g in self.ideals[name]], self.p)
        except ValueError as exc:
            raise ParseError(f"ideal {name!r} is not an ideal of the parameter ring") from exc

    def prime(self, name: str | None = None) -> CommIdeal:
        if name is None:
            if not self.primes:
                raise ParseError("file declares no prime")
            name = next(iter(self.primes))
        if name not in self.primes:
            raise ParseError(f"no prime named {name!r}")
        return self.primes[name]

    def point(self, name: str) -> RationalPoint:
        if name not in self.points:
            raise ParseError(f"no point named {name!r}")
        return self.points[name]


def _statements(text: str):
    current, start = None, 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if line[0].isspace() and current is not None:
            current += " " + line.strip()
            continue
        if current is not None:
            yield start, current
        current, start = line.strip(), lineno
    if current is not None:
        yield start, current


def parse_ideal_file(text: str) -> IdealFile:
    f: IdealFile | None = None
    for lineno, stmt in _statements(text):
        if f is None:
            m = _VARS.match(stmt)
            if not m:
                raise ParseError("first statement must be 'vars n=<int> p=<int>'", line=lineno)
            f = IdealFile(int(m.group(1)), int(m.group(2)))
            continue
        m = _BLOCK.match(stmt)
        if not m:
            raise ParseError(f"unrecognised statement {stmt.split()[0]!r}", line=lineno)
        kind, name, body = m.group(1), m.group(2), m.group(3)
        if kind == "point":
            try:
                pt = parse_point(body)
            except ParseError as exc:
                raise ParseError(exc.message, line=lineno) from exc
            if len(pt) != f.p:
                raise ParseError(f"point {name!r} has {len(pt)} coordinates, expected {f.p}", line=lineno)
            f.points[name] = pt
            continue
        gens = []
        offset = stmt.index(":") + 1
        for piece in body.split(";"):
            if piece.strip():
                try:
                    g = parse_operator(piece, f.n, f.p)
                except ParseError as exc:
                    pos = None if exc.pos is None else offset + exc.pos
                    raise ParseError(exc.message, pos, lineno) from exc
                if g.is_zero():
                    raise ParseError(f"generator {piece.strip()!r} is zero", line=lineno)
                gens.append(g)
            offset += len(piece) + 1
        if kind == "ideal":
            f.ideals[name] = gens
        else:
            if not all(g.in_a() for g in gens):
                raise ParseError(f"prime {name!r} must involve only s-variables", line=lineno)
            f.primes[name] = CommIdeal([g.to_comm() for g in gens], f.p)
    if f is None:
        raise ParseError("empty ideal file")
    return f


def load_ideal_file(path: str | Path) -> IdealFile:
    return parse_ideal_file(Path(path).read_text(encoding="utf-8"))
