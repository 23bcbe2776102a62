"""Command line interface: ``paraweyl <command> FILE [options]``.

Exit status is 0 on success, 1 when a precondition or verification check
fails (a witness is printed), and 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .commutative import CommIdeal
from .errors import PreconditionError, VerificationError
from .groebner import (
    GroebnerBasisR,
    buchberger_r,
    dense_open_certificate,
    eliminate_to_a,
    fiber_nonzero,
    h_poly,
    reduce_gb,
    specialize_gb,
)
from .oracle import DEFAULT_BOUND, bounded_membership
from .parsing import IdealFile, ParseError, load_ideal_file, parse_operator, parse_point
from .primary import DEFAULT_K_CAP, PrimaryComponentInput, lemma24_check, lemma21_f, thm22_h
from .weyl import RationalPoint

FORMAT_VERSION = 1


class _Failure(Exception):
    """A check failed; carries the structured payload to print before exiting 1."""

    def __init__(self, text: str, payload: dict):
        super().__init__(text)
        self.text, self.payload = text, payload


# -- argument resolution ---------------------------------------------------------


def _prime(f: IdealFile, spec: str | None) -> CommIdeal:
    if spec is not None and Path(spec).is_file():
        other = load_ideal_file(spec)
        if other.p != f.p:
            raise ParseError(f"{spec} declares p={other.p}, expected {f.p}")
        return other.prime() if other.primes else other.comm_ideal(next(iter(other.ideals)))
    if spec is None:
        return f.prime()
    if spec in f.primes:
        return f.prime(spec)
    return f.comm_ideal(spec)


def _point(f: IdealFile, spec: str) -> RationalPoint:
    if spec in f.points:
        return f.points[spec]
    pt = parse_point(spec)
    if len(pt) != f.p:
        raise ParseError(f"point {spec!r} has {len(pt)} coordinates, expected {f.p}")
    return pt


def _basis(G: GroebnerBasisR, certify: bool) -> GroebnerBasisR:
    if certify:
        G.certified = False
        G.certify()
    return G


def _polys(fs) -> list[str]:
    return [str(f) for f in fs]


def _rat(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def _point_json(pt) -> list[str]:
    return [_rat(c) for c in pt]


# -- commands ----------------------------------------------------------------------


def cmd_gb(f, args):
    G = _basis(buchberger_r(f.ideal(args.ideal)), args.certify)
    return str(G) if len(G) else "0", {"basis": _polys(G)}


def cmd_eliminate(f, args):
    G = _basis(buchberger_r(f.ideal(args.ideal)), args.certify)
    elim = eliminate_to_a(G)
    gens = elim.generators
    return "\n".join(_polys(gens)) or "0", {"generators": _polys(gens)}


def cmd_reduce_gb(f, args):
    J = f.ideal(args.ideal)
    if args.prime is not None:
        J = J.plus_extension(_prime(f, args.prime))
    G = _basis(reduce_gb(buchberger_r(J)), args.certify)
    return str(G) if len(G) else "0", {"basis": _polys(G)}


def _reduced_q(f, args):
    prime = _prime(f, args.prime)
    G = reduce_gb(buchberger_r(f.ideal(args.ideal).plus_extension(prime)))
    return prime, _basis(G, args.certify)


def cmd_h_poly(f, args):
    prime, G = _reduced_q(f, args)
    h = h_poly(G, prime)
    return str(h), {"h": str(h), "basis": _polys(G)}


def cmd_specialize(f, args):
    prime, G = _reduced_q(f, args)
    pt = _point(f, args.point)
    S = specialize_gb(G, prime, pt)
    return str(S) if len(S) else "0", {"point": _point_json(pt), "basis": _polys(S)}


def cmd_fiber_check(f, args):
    pt = _point(f, args.point)
    verdict = fiber_nonzero(f.ideal(args.ideal), pt)
    word = "NONZERO" if verdict else "ZERO"
    return word, {"point": _point_json(pt), "fiber": word}


def cmd_dense_open(f, args):
    prime = _prime(f, args.prime)
    samples, count = None, 20
    if args.samples is not None:
        if args.samples.strip().isdigit():
            count = int(args.samples)
        else:
            samples = [_point(f, s.strip()) for s in args.samples.split(";") if s.strip()]
    cert = dense_open_certificate(f.ideal(args.ideal), prime, samples, count=count)
    lines = [f"h: {cert.h}"]
    lines += [f"{s.point}: {'NONZERO' if s.nonzero else 'ZERO'}" for s in cert.samples]
    payload = {
        "h": str(cert.h),
        "basis": _polys(cert.basis),
        "samples": [
            {"point": _point_json(s.point), "fiber": "NONZERO" if s.nonzero else "ZERO"}
            for s in cert.samples
        ],
    }
    return "\n".join(lines), payload


def _component(f: IdealFile, name: str) -> PrimaryComponentInput:
    # the radical of ideal block <name> is the prime block of the same name, if any
    if name in f.ideals:
        q = CommIdeal([g.to_comm() for g in f.ideals[name] if g.in_a()], f.p)
        if len(q.generators) != len(f.ideals[name]):
            raise ParseError(f"component {name!r} involves x or d variables")
    else:
        q = f.prime(name)
    return PrimaryComponentInput(q, f.primes.get(name, q))


def cmd_lemma21(f, args):
    q_name = args.ideal or next(iter(f.ideals))
    q = f.comm_ideal(q_name)
    comp = PrimaryComponentInput(q, _prime(f, args.prime))
    val = lemma21_f(comp, k_cap=args.k_cap)
    return str(val), {"f": str(val)}


def cmd_thm22_h(f, args):
    names = args.components.split(",") if args.components else list(f.ideals)
    comps = [_component(f, n.strip()) for n in names]
    j = args.index - 1
    val = thm22_h(comps, j, k_cap=args.k_cap)
    meta = {"h": str(val)}
    if len(comps) == 1:
        meta["note"] = "single component: h is 1 or the primary multiplier f"
    return str(val), meta


def cmd_verify_lemma24(f, args):
    prime = _prime(f, args.prime)
    res = lemma24_check(f.ideal(args.ideal), prime)
    elim = _polys(res.elimination.groebner)
    if res.holds:
        return "TRUE", {"holds": True, "elimination": elim}
    w = res.witness
    if res.elimination.contains(w) and not prime.contains(w):
        text = f"{w} ∈ (J+Rp)∩A"
    else:
        text = f"{w} ∈ p but {w} ∉ (J+Rp)∩A"
    raise _Failure(f"FALSE\nwitness: {text}", {"holds": False, "elimination": elim, "witness": text})


def cmd_oracle_member(f, args):
    J = f.ideal(args.ideal)
    target = parse_operator(args.target, f.n, f.p)
    res = bounded_membership(target, J.generators, args.max_degree)
    payload = {"verdict": res.verdict.value, "bound": res.bound}
    lines = [res.verdict.value]
    if res:
        payload["cofactors"] = _polys(res.cofactors)
        lines += [f"cofactor {i + 1}: {c}" for i, c in enumerate(res.cofactors)]
    return "\n".join(lines), payload


COMMANDS = {
    "gb": (cmd_gb, "left Groebner basis of the ideal"),
    "eliminate": (cmd_eliminate, "intersection of the ideal with the parameter ring"),
    "reduce-gb": (cmd_reduce_gb, "basis with no parametric leading coefficient in Q cap A"),
    "h-poly": (cmd_h_poly, "product of parametric leading coefficients for J + Rp"),
    "specialize": (cmd_specialize, "specialize the reduced basis of J + Rp at a point"),
    "fiber-check": (cmd_fiber_check, "decide whether the fibre at a point is nonzero"),
    "dense-open": (cmd_dense_open, "h and fibre verdicts at sample points of Z(p)"),
    "lemma21": (cmd_lemma21, "f in p outside q with f*p inside q"),
    "thm22-h": (cmd_thm22_h, "h outside q_j with h*rad(q_j) inside the intersection"),
    "verify-lemma24": (cmd_verify_lemma24, "check (J + Rp) cap A = p"),
    "oracle-member": (cmd_oracle_member, "bounded-degree membership by linear algebra"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paraweyl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="ideal file")
        sp.add_argument("--ideal", help="name of the ideal block (default: first)")
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.add_argument(
            "--certify",
            action=argparse.BooleanOptionalAction,
            default=True,
            help="re-run S-pair certification on output bases",
        )
        if name in ("reduce-gb", "h-poly", "specialize", "dense-open", "lemma21", "verify-lemma24"):
            sp.add_argument("--prime", help="prime block name or a file holding one")
        if name in ("specialize", "fiber-check"):
            sp.add_argument("--point", required=True, help="point name or comma-separated rationals")
        if name == "dense-open":
            sp.add_argument("--samples", help="number of points, or ';'-separated point list")
        if name in ("lemma21", "thm22-h"):
            sp.add_argument("--k-cap", type=int, default=DEFAULT_K_CAP)
        if name == "thm22-h":
            sp.add_argument("--components", help="comma-separated ideal names (default: all)")
            sp.add_argument("--index", type=int, default=1, help="1-based component index")
        if name == "oracle-member":
            sp.add_argument("--target", required=True, help="operator expression")
            sp.add_argument("--max-degree", type=int, default=DEFAULT_BOUND)
    return parser


_VALUE_FLAGS = ("--point", "--samples", "--target")


def _glue_values(argv: list[str]) -> list[str]:
    # "--point -1,3" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def _emit(args, text: str, payload: dict, ok: bool, out) -> None:
    if args.json:
        doc = {"format": FORMAT_VERSION, "command": args.command, "ok": ok, "result": payload}
        out.write(json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _glue_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    func = COMMANDS[args.command][0]
    try:
        f = load_ideal_file(args.file)
        text, payload = func(f, args)
    except (ParseError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except _Failure as exc:
        _emit(args, exc.text, exc.payload, False, out)
        return 1
    except (PreconditionError, VerificationError) as exc:
        witness = None if exc.witness is None else str(exc.witness)
        _emit(args, f"FAILED: {exc}" + (f"\nwitness: {witness}" if witness else ""),
              {"error": str(exc), "witness": witness}, False, out)
        return 1
    _emit(args, text, payload, True, out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
