"""Golden corpus of worked examples and the runner that replays it.

The corpus directory holds ``.ideal`` files and a ``cases.json`` manifest.
Each case names a tag, a case type and its expected outcome; the runner
dispatches on the type and compares.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional

from . import ideal_ops as ops
from . import matrix_classes as mc
from . import monomial_decomp as md
from . import z_subring as zr
from .idealfile import IdealFile, load_ideal_file
from .poly_ring import RingContext, format_monomial, parse_polynomial

ENV_VAR = "NOETHER_CORPUS_DIR"
DEFAULT_DIR = Path(__file__).with_name("data")


def corpus_dir(explicit: Optional[str] = None) -> Path:
    if explicit:
        return Path(explicit)
    if os.environ.get(ENV_VAR):
        return Path(os.environ[ENV_VAR])
    return DEFAULT_DIR


@dataclass
class CorpusCase:
    tag: str
    type: str
    data: dict

    @classmethod
    def from_dict(cls, d: dict) -> "CorpusCase":
        d = dict(d)
        return cls(d.pop("tag"), d.pop("type"), d)


@dataclass
class CaseResult:
    tag: str
    passed: bool
    elapsed: float
    detail: str = ""


@dataclass
class CorpusReport:
    results: List[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[str]:
        return [r.tag for r in self.results if not r.passed]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "cases": [
                {"tag": r.tag, "passed": r.passed, "elapsed": round(r.elapsed, 4), "detail": r.detail}
                for r in self.results
            ],
        }


def load_cases(directory: Path) -> List[CorpusCase]:
    with open(directory / "cases.json", encoding="utf-8") as fh:
        return [CorpusCase.from_dict(c) for c in json.load(fh)["cases"]]


class _Runner:
    def __init__(self, directory: Path):
        self.directory = directory
        self._files: Dict[str, IdealFile] = {}

    def file(self, name: str) -> IdealFile:
        if name not in self._files:
            self._files[name] = load_ideal_file(self.directory / name)
        return self._files[name]

    def run(self, case: CorpusCase) -> CaseResult:
        handler: Callable = getattr(self, "case_" + case.type.replace("-", "_"), None)
        start = time.perf_counter()
        if handler is None:
            return CaseResult(case.tag, False, 0.0, f"unknown case type {case.type!r}")
        try:
            ok, detail = handler(case.data)
        except Exception as exc:  # a crash is a failed case, not a crashed run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        return CaseResult(case.tag, ok, time.perf_counter() - start, detail)

    # -- polynomial ideals -------------------------------------------------

    def _pair(self, d):
        f = self.file(d["file"])
        return f[d["a"]], f[d["b"]]

    def case_equal(self, d):
        got = ops.equal(*self._pair(d))
        return got == d["expect"], f"equal={got}"

    def case_contains(self, d):
        big, small = self._pair(d)
        got = big.contains_ideal(small)
        return got == d["expect"], f"contains={got}"

    def case_coprime(self, d):
        got = ops.is_coprime(*self._pair(d))
        return got == d["expect"], f"coprime={got}"

    def case_relprime(self, d):
        got = ops.is_relatively_prime(*self._pair(d))
        return got == d["expect"], f"relatively_prime={got}"

    def case_member(self, d):
        f = self.file(d["file"])
        I = f[d["ideal"]]
        got = I.contains(parse_polynomial(d["poly"], f.ring))
        return got == d["expect"], f"member={got}"

    def case_radical_member(self, d):
        f = self.file(d["file"])
        I = f[d["ideal"]]
        got = ops.radical_member(parse_polynomial(d["poly"], f.ring), I)
        return got == d["expect"], f"radical_member={got}"

    def case_identity(self, d):
        ring = RingContext(d["ring"])
        lhs, rhs = parse_polynomial(d["lhs"], ring), parse_polynomial(d["rhs"], ring)
        return lhs == rhs, f"{lhs} vs {rhs}"

    def case_claim(self, d):
        f = self.file(d["file"])
        report = ops.verify_decomposition(f.claims[d["claim"]]).as_dict()
        wrong = {k: report[k] for k, v in d["expect"].items() if report[k] != v}
        return not wrong, f"mismatched {wrong}" if wrong else "as expected"

    # -- monomial ideals ---------------------------------------------------

    def case_monomial(self, d):
        ring = RingContext(d["ring"])
        M = md.MonomialIdeal.parse(d["ideal"], ring)
        op = d["op"]
        if op == "decompose":
            report = md.decompose(M, d["kind"])
            got = [c.as_dict() for c in report.components]
            want = d["expect"]
            keys = set().union(*(w.keys() for w in want)) if want else set()
            trimmed = [{k: g[k] for k in keys} for g in got]
            return trimmed == want, json.dumps(trimmed)
        if op == "witness":
            w = md.primary_witness(M)
            got = None if w is None else [format_monomial(m, ring.variables) for m in w]
        elif op == "associated_prime":
            got = sorted(md.associated_prime(M), key=ring.index)
        elif op == "isolated_flags":
            got = md.isolated_flags(d["primes"])
        else:
            got = {"is_primary": md.is_primary, "is_irreducible": md.is_irreducible, "exponent": md.exponent}[op](M)
        return got == d["expect"], f"{op}={got}"

    # -- integers and matrices ---------------------------------------------

    def case_zring(self, d):
        ring = zr.GRing(d["g"])
        I = ring.ideal(d["ideal"])
        comps = zr.decompose(I, d["kind"])
        got = [{"generator": c.generator, "prime": c.associated_prime, "isolated": c.isolated} for c in comps]
        ok = got == d["expect"] and (not comps or zr.reconstruct(comps, ring) == I.generator)
        return ok, json.dumps(got)

    def case_snf(self, d):
        system, cert = mc.smith_normal_form(d["matrix"])
        ok = list(system.divisors) == d["expect"] and cert.verify(d["matrix"], system)
        return ok, str(system)

    def case_class(self, d):
        A = mc.ElementaryDivisorSystem.parse(d["divisors"])
        if d["stage"] == "prime":
            parts = mc.prime_split(A)
        else:
            parts = [c.system for c in mc.decompose_class(A)]
        got = [str(p) for p in parts]
        ok = got == d["expect"] and mc.class_lcm(*parts) == A
        return ok, json.dumps(got)


def verify_paper_corpus(directory: Optional[str] = None) -> CorpusReport:
    """Replay every case of the corpus; results are ordered by tag."""
    path = corpus_dir(directory)
    runner = _Runner(path)
    cases = sorted(load_cases(path), key=lambda c: c.tag)
    return CorpusReport([runner.run(c) for c in cases])
