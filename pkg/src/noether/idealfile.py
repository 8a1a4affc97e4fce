"""Reader for ``.ideal`` files.

Grammar (``#`` starts a comment, statements end with ``;``)::

    ring x, y, z;
    ideal B4 = x^3, y, z;
    ideal Z = 0;                          # the zero ideal
    ideal Q4 = intersect(B4, B5);         # derived: intersect, sum, product, quotient
    claim C : Q4 = [B4, B5] kind=irreducible;
    claim D : M = [Q1, Q2] kind=maximal-primary primes=[P1, P2];
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .ideal_ops import KINDS, DecompositionClaim, Ideal, ideal_sum, intersect, product, quotient
from .poly_ring import PolynomialSyntaxError, RingContext, parse_polynomial

_OPS = {"intersect": intersect, "sum": ideal_sum, "product": product, "quotient": quotient}
_NAME = r"[A-Za-z_][A-Za-z0-9_]*"


class IdealFileError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class IdealFile:
    ring: RingContext
    ideals: Dict[str, Ideal] = field(default_factory=dict)
    claims: Dict[str, DecompositionClaim] = field(default_factory=dict)

    def __getitem__(self, name: str) -> Ideal:
        try:
            return self.ideals[name]
        except KeyError:
            raise KeyError(f"no ideal named {name!r}") from None


def _statements(text: str):
    """Yield (statement text, offset of its first character)."""
    cleaned = re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)
    start = 0
    for i, ch in enumerate(cleaned):
        if ch == ";":
            yield cleaned[start:i], start
            start = i + 1
    if cleaned[start:].strip():
        yield cleaned[start:], start


def _line_col(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse_ideal_file(text: str) -> IdealFile:
    """Parse the text of an ``.ideal`` file; errors carry line and column."""
    ring: Optional[RingContext] = None
    ideals: Dict[str, Ideal] = {}
    claims: Dict[str, DecompositionClaim] = {}

    for stmt, offset in _statements(text):
        lead = len(stmt) - len(stmt.lstrip())
        body = stmt.strip()
        if not body:
            continue
        pos = offset + lead

        def fail(msg, rel=0):
            raise IdealFileError(msg, *_line_col(text, pos + rel))

        keyword = body.split(None, 1)[0]
        if keyword == "ring":
            if ring is not None:
                fail("ring declared twice")
            names = [v.strip() for v in body[4:].split(",")]
            try:
                ring = RingContext(names)
            except ValueError as exc:
                fail(str(exc))
            continue
        if ring is None:
            fail("the file must start with a ring declaration")
        if keyword == "ideal":
            m = re.match(rf"ideal\s+({_NAME})\s*=(.*)\Z", body, re.S)
            if not m:
                fail("expected: ideal NAME = generators")
            name, rhs = m.group(1), m.group(2)
            if name in ideals:
                fail(f"duplicate name {name!r}")
            rhs_off = m.start(2)
            ideals[name] = _parse_rhs(rhs, ring, ideals, fail, rhs_off)
        elif keyword == "claim":
            m = re.match(
                rf"claim\s+({_NAME})\s*:\s*({_NAME})\s*=\s*\[([^\]]*)\]\s*kind\s*=\s*([A-Za-z-]+)"
                rf"(?:\s+primes\s*=\s*\[([^\]]*)\])?\s*\Z",
                body,
                re.S,
            )
            if not m:
                fail("expected: claim NAME : TARGET = [A, B, ...] kind=KIND")
            name, target, comps, kind, primes = m.groups()
            if name in claims or name in ideals:
                fail(f"duplicate name {name!r}")
            if kind not in KINDS:
                fail(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", m.start(4))

            def lookup(n, rel):
                if n not in ideals:
                    fail(f"unknown ideal {n!r}", rel)
                return ideals[n]

            comp_names = [c.strip() for c in comps.split(",") if c.strip()]
            if not comp_names:
                fail("a claim needs at least one component", m.start(3))
            prime_list = None
            if primes is not None:
                prime_list = [lookup(p.strip(), m.start(5)) for p in primes.split(",") if p.strip()]
            claims[name] = DecompositionClaim(
                lookup(target, m.start(2)),
                [lookup(c, m.start(3)) for c in comp_names],
                kind,
                prime_list,
                name,
            )
        else:
            fail(f"unknown statement {keyword!r}")

    if ring is None:
        raise IdealFileError("missing ring declaration", 1, 1)
    return IdealFile(ring, ideals, claims)


def _parse_rhs(rhs: str, ring: RingContext, ideals: Dict[str, Ideal], fail, base: int) -> Ideal:
    lead = len(rhs) - len(rhs.lstrip())
    stripped = rhs.strip()
    if not stripped:
        fail("empty generator list (write 0 for the zero ideal)", base + lead)
    m = re.fullmatch(rf"({'|'.join(_OPS)})\s*\((.*)\)", stripped, re.S)
    if m:
        args = [a.strip() for a in m.group(2).split(",")]
        missing = [a for a in args if a not in ideals]
        if missing:
            fail(f"unknown ideal {missing[0]!r}", base + lead)
        return _OPS[m.group(1)](*(ideals[a] for a in args))
    gens = []
    cursor = base
    for part in _split_generators(rhs):
        if not part.strip():
            fail("empty generator (write 0 for the zero ideal)", cursor)
        try:
            gens.append(parse_polynomial(part, ring))
        except PolynomialSyntaxError as exc:
            fail(exc.message, cursor + exc.pos)
        cursor += len(part) + 1
    return Ideal(ring, gens)


def _split_generators(text: str) -> List[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        depth += ch == "("
        depth -= ch == ")"
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def load_ideal_file(path) -> IdealFile:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal_file(fh.read())
