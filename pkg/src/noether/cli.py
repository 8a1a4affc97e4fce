"""Command-line interface.

Ideals are given either inline (``"x^2, x*y"``) or by name from an ``.ideal``
file passed as the first operand::

    noether equal data/identities.ideal M M_split
    noether decompose --kind primary "x^2, x*y"
    noether zring --g 2 decompose 24 --kind primary
    noether class decompose "2|4|4|0" --stage irreducible

Exit status: 0 for success or true, 1 for false or a failed verification,
2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence

from . import ideal_ops as ops
from . import matrix_classes as mc
from . import monomial_decomp as md
from . import z_subring as zr
from .corpus import verify_paper_corpus
from .groebner import StepBoundExceeded
from .idealfile import IdealFile, load_ideal_file
from .poly_ring import RingContext, infer_ring, order_from_name, parse_polynomial

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


class _Env:
    """Resolves operands to ideals, either by name in a file or as inline text."""

    def __init__(self, operands: List[str], ring_spec: Optional[str]):
        self.file: Optional[IdealFile] = None
        if operands and os.path.isfile(operands[0]):
            self.file = load_ideal_file(operands[0])
            self.source = operands[0]
            operands = operands[1:]
        self.operands = operands
        if self.file is not None:
            self.ring = self.file.ring
        elif ring_spec:
            self.ring = RingContext(ring_spec.replace(",", " ").split())
        else:
            self.ring = infer_ring(operands)

    def ideal(self, text: str) -> ops.Ideal:
        if self.file is not None and text in self.file.ideals:
            return self.file.ideals[text]
        return ops.Ideal.parse(text, self.ring)

    def poly(self, text: str):
        return parse_polynomial(text, self.ring)

    def take(self, count: Optional[int] = None, at_least: int = 1) -> List[str]:
        got = self.operands
        if count is not None and len(got) != count:
            raise _UsageError(f"expected {count} operand(s), got {len(got)}")
        if len(got) < at_least:
            raise _UsageError(f"expected at least {at_least} operand(s), got {len(got)}")
        return got


def _gens(I: ops.Ideal, order) -> List[str]:
    return [str(p) for p in I.groebner(order).polys]


def _render_ideal(gens: List[str]) -> str:
    return "(" + ", ".join(gens) + ")" if gens else "(0)"


class _Output:
    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.result = None
        self.components: List[dict] = []
        self.lines: List[str] = []

    def as_json(self) -> str:
        return json.dumps(
            {"command": self.command, "inputs": self.inputs, "result": self.result, "components": self.components},
            indent=2,
        )


def _bool_result(out: _Output, value: bool) -> int:
    out.result = value
    out.lines.append("true" if value else "false")
    return EXIT_TRUE if value else EXIT_FALSE


# -- command handlers ----------------------------------------------------------


def cmd_gb(args, out: _Output) -> int:
    env = _Env(args.operands, args.ring)
    (text,) = env.take(1)
    basis = env.ideal(text).groebner(args.order_obj)
    out.result = [str(p) for p in basis.polys]
    out.lines.extend(out.result or ["0"])
    return EXIT_TRUE


def _binary_predicate(fn: Callable[[ops.Ideal, ops.Ideal], bool]):
    def handler(args, out: _Output) -> int:
        env = _Env(args.operands, args.ring)
        a, b = env.take(2)
        return _bool_result(out, fn(env.ideal(a), env.ideal(b)))

    return handler


def _poly_predicate(fn):
    def handler(args, out: _Output) -> int:
        env = _Env(args.operands, args.ring)
        f, name = env.take(2)
        return _bool_result(out, fn(env.poly(f), env.ideal(name)))

    return handler


def _construction(fn, arity: Optional[int] = None):
    def handler(args, out: _Output) -> int:
        env = _Env(args.operands, args.ring)
        names = env.take(arity, at_least=1)
        gens = _gens(fn(*(env.ideal(n) for n in names)), args.order_obj)
        out.result = gens
        out.lines.append(_render_ideal(gens))
        return EXIT_TRUE

    return handler


def cmd_decompose(args, out: _Output) -> int:
    env = _Env(args.operands, args.ring)
    (text,) = env.take(1)
    ideal = env.ideal(text)
    if not ideal.is_monomial():
        raise _UsageError("decompose needs a monomial ideal")
    report = md.decompose(md.MonomialIdeal.from_ideal(ideal), args.kind)
    out.result = {"kind": report.kind, "count": len(report.components)}
    for c in report.components:
        d = c.as_dict()
        out.components.append(d)
        prime = d["associated_prime"]
        if prime and isinstance(prime[0], list):
            prime_txt = " ".join(_render_ideal(p) for p in prime)
        else:
            prime_txt = _render_ideal(prime)
        line = f"{_render_ideal(d['generators'])}  prime={prime_txt}"
        if d["exponent"] is not None:
            line += f"  exponent={d['exponent']}"
        if d["isolated"] is not None:
            line += f"  isolated={str(d['isolated']).lower()}"
        out.lines.append(line)
    return EXIT_TRUE


def cmd_verify(args, out: _Output) -> int:
    f = load_ideal_file(args.file)
    names = args.claims or list(f.claims)
    unknown = [n for n in names if n not in f.claims]
    if unknown:
        raise _UsageError(f"unknown claim {unknown[0]!r}")
    out.result = {}
    ok = True
    for name in names:
        report = ops.verify_decomposition(f.claims[name])
        out.result[name] = report.as_dict()
        ok = ok and report.passed
        failed = [k for k, v in report.as_dict().items() if v is False and k != "passed"]
        status = "passed" if report.passed else "failed"
        out.lines.append(f"{name}: {status}" + (f" ({', '.join(failed)})" if failed else ""))
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_zring(args, out: _Output) -> int:
    ring = zr.GRing(args.g)
    comps = zr.decompose(ring.ideal(args.generator), args.kind)
    out.result = {"kind": args.kind, "lcm": zr.reconstruct(comps, ring)}
    for c in comps:
        out.components.append(c.as_dict())
        out.lines.append(f"({c.generator})  prime=({c.associated_prime})  isolated={str(c.isolated).lower()}")
    if not comps:
        out.lines.append("trivial ideal: no components")
    return EXIT_TRUE


def _read_matrix(source: str) -> List[List[int]]:
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            rows = [line.split() for line in fh if line.strip()]
    else:
        rows = [r.replace(",", " ").split() for r in source.split(";") if r.strip()]
    return [[int(x) for x in r] for r in rows]


def cmd_snf(args, out: _Output) -> int:
    A = _read_matrix(args.matrix)
    system, cert = mc.smith_normal_form(A)
    if not cert.verify(A, system):  # would be a bug in the elimination
        raise RuntimeError("certificate check failed")
    out.result = {"divisors": list(system.divisors), "U": [list(r) for r in cert.U], "V": [list(r) for r in cert.V]}
    out.lines.append(str(system))
    return EXIT_TRUE


def cmd_class(args, out: _Output) -> int:
    A = mc.ElementaryDivisorSystem.parse(args.divisors)
    if args.stage == "prime":
        parts = [(Q, None) for Q in mc.prime_split(A)]
    else:
        parts = [(c.system, c) for c in mc.decompose_class(A)]
    out.result = {"stage": args.stage, "lcm": str(mc.class_lcm(*(p for p, _ in parts)))}
    for system, irr in parts:
        if irr is None:
            prime = [str(p) for p in mc.primes_of(system)]
            exp = None
        else:
            prime = [] if irr.is_rank_marker else [str(irr.prime)]
            exp = irr.exponent if not irr.is_rank_marker else None
        out.components.append({"generators": [str(system)], "associated_prime": prime, "exponent": exp, "isolated": None})
        out.lines.append(str(system))
    return EXIT_TRUE


def cmd_verify_paper(args, out: _Output) -> int:
    report = verify_paper_corpus(args.corpus_dir)
    out.result = report.as_dict()
    for r in report.results:
        out.lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.tag}  {r.elapsed * 1000:.1f} ms")
    out.lines.append(f"{len(report.results) - len(report.failures)}/{len(report.results)} cases passed")
    if report.failures:
        out.lines.append("failing: " + ", ".join(report.failures))
    return EXIT_TRUE if report.passed else EXIT_FALSE


# -- parser ---------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--order", choices=["lex", "grevlex"], default=argparse.SUPPRESS, help="monomial order (default grevlex)")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON object")
    p.add_argument("--ring", default=argparse.SUPPRESS, help="variables for inline ideals, e.g. 'x,y,z'")
    p.add_argument("--corpus-dir", default=argparse.SUPPRESS, help="corpus location (else $NOETHER_CORPUS_DIR)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="noether", description="Exact ideal decompositions and their verification.")
    parser.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--ring", default=None)
    parser.add_argument("--corpus-dir", default=None)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, handler, help, operands=None):
        p = sub.add_parser(name, parents=[common], help=help)
        if operands:
            p.add_argument("operands", nargs="+", metavar="OPERAND", help=operands)
        p.set_defaults(handler=handler)
        return p

    ideal_ops_help = "[FILE] then ideal names or inline generator lists"
    add("gb", cmd_gb, "reduced Groebner basis", ideal_ops_help)
    add("member", _poly_predicate(ops.member), "is POLY in IDEAL", "[FILE] POLY IDEAL")
    add("radical-member", _poly_predicate(ops.radical_member), "is a power of POLY in IDEAL", "[FILE] POLY IDEAL")
    add("equal", _binary_predicate(ops.equal), "ideal equality", ideal_ops_help)
    add("coprime", _binary_predicate(ops.is_coprime), "A + B is the unit ideal", ideal_ops_help)
    add("relprime", _binary_predicate(ops.is_relatively_prime), "R is relatively prime to S", "[FILE] R S")
    add("intersect", _construction(ops.intersect), "intersection of ideals", ideal_ops_help)
    add("product", _construction(ops.product), "product of ideals", ideal_ops_help)
    add("quotient", _construction(ops.quotient, 2), "ideal quotient (S : R)", "[FILE] S R")
    d = add("decompose", cmd_decompose, "decompose a monomial ideal", ideal_ops_help)
    d.add_argument("--kind", choices=["irreducible", "primary", "relprime", "coprime"], default="irreducible")

    v = add("verify", cmd_verify, "check the decomposition claims of a file")
    v.add_argument("file")
    v.add_argument("claims", nargs="*")

    z = add("zring", cmd_zring, "ideals in the ring of multiples of g")
    z.add_argument("--g", type=int, required=True)
    z.add_argument("action", choices=["decompose"])
    z.add_argument("generator", type=int, help="a positive multiple of g")
    z.add_argument("--kind", choices=list(zr.KINDS), default="primary")

    s = add("snf", cmd_snf, "elementary divisors with a unimodular certificate")
    s.add_argument("matrix", help="matrix file (one row per line) or inline rows '2 4; 6 8'")

    c = add("class", cmd_class, "split a matrix class into irreducible classes")
    c.add_argument("action", choices=["decompose"])
    c.add_argument("divisors", help="elementary divisors, e.g. '2|4|4|0'")
    c.add_argument("--stage", choices=["prime", "irreducible"], default="irreducible")

    add("verify-paper", cmd_verify_paper, "replay the shipped corpus of worked examples")
    return parser


def _inputs(args) -> Dict[str, object]:
    skip = {"handler", "order_obj", "json", "command", "corpus_dir"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def run_command(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Run one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    args.order_obj = order_from_name(args.order)
    out = _Output(args.command, _inputs(args))
    try:
        code = args.handler(args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, IndexError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=stderr)
        return EXIT_USAGE
    except StepBoundExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.json:
        print(out.as_json(), file=stdout)
    else:
        for line in out.lines:
            print(line, file=stdout)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
