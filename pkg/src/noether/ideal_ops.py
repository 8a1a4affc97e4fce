"""Ideal calculus for polynomial ideals: sum, product, intersection, quotient,
radical membership, coprimality and relative primality, and the checker for
claimed decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Union

from . import groebner as gb
from .poly_ring import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    RingContext,
    RingMismatchError,
    block_order,
    format_polynomial,
    parse_polynomial,
)

KINDS = ("irreducible", "maximal-primary", "relatively-prime", "coprime")


class Ideal:
    """An ideal given by a finite list of generators (zero polynomials dropped).

    Groebner bases are cached per monomial order.  ``==`` compares
    presentations; use :func:`equal` for ideal equality.
    """

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: RingContext, generators: Sequence[Union[Polynomial, str, int]] = ()):
        self.ring = ring
        gens: List[Polynomial] = []
        for g in generators:
            if isinstance(g, str):
                g = parse_polynomial(g, ring)
            elif isinstance(g, (int, Fraction)):
                g = ring.constant(g)
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} is not in {ring}")
            if not g.is_zero() and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb: Dict[MonomialOrder, gb.GroebnerBasis] = {}

    @classmethod
    def parse(cls, text: str, ring: RingContext) -> "Ideal":
        """Parse a comma-separated generator list; ``"0"`` is the zero ideal."""
        parts = _split_top_level(text)
        if not parts or any(not p.strip() for p in parts):
            raise ValueError("empty generator in list (write 0 for the zero ideal)")
        return cls(ring, [parse_polynomial(p, ring) for p in parts])

    @classmethod
    def unit(cls, ring: RingContext) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def zero(cls, ring: RingContext) -> "Ideal":
        return cls(ring, [])

    def groebner(self, order: MonomialOrder = GREVLEX) -> gb.GroebnerBasis:
        if order not in self._gb:
            self._gb[order] = gb.buchberger(self, order)
        return self._gb[order]

    def contains(self, f: Union[Polynomial, str]) -> bool:
        if isinstance(f, str):
            f = parse_polynomial(f, self.ring)
        return self.groebner().contains(f)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return all(self.contains(g) for g in other.generators)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.generators

    def is_monomial(self) -> bool:
        """True if the ideal is generated by monomials (checked on its reduced basis)."""
        return all(p.is_monomial() for p in self.groebner().polys)

    def embed(self, ring: RingContext) -> "Ideal":
        return Ideal(ring, [g.embed(ring) for g in self.generators])

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.generators == other.generators

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __str__(self):
        return "(" + ", ".join(format_polynomial(g) for g in self.generators) + ")" if self.generators else "(0)"

    def __repr__(self):
        return f"Ideal{self}"


def _split_top_level(text: str) -> List[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    if len(parts) == 1 and not parts[0].strip():
        return []
    return parts


def _same_ring(*ideals: Ideal) -> RingContext:
    ring = ideals[0].ring
    for I in ideals[1:]:
        if I.ring != ring:
            raise RingMismatchError(f"{I.ring} vs {ring}")
    return ring


# ---------------------------------------------------------------------------
# basic operations


def member(f: Polynomial, I: Ideal) -> bool:
    return gb.member(f, I)


def equal(I: Ideal, J: Ideal, order: MonomialOrder = LEX) -> bool:
    _same_ring(I, J)
    return gb.equal(I, J, order)


def ideal_sum(*ideals: Ideal) -> Ideal:
    """Greatest common divisor of ideals: the ideal generated by all their generators."""
    ring = _same_ring(*ideals)
    gens = [g for I in ideals for g in I.generators]
    return Ideal(ring, gens)


def product(*ideals: Ideal) -> Ideal:
    """Ideal generated by all products of one generator from each factor."""
    ring = _same_ring(*ideals)
    gens = [ring.one()]
    for I in ideals:
        gens = [a * b for a in gens for b in I.generators]
    return Ideal(ring, gens)


def power(I: Ideal, k: int) -> Ideal:
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return Ideal.unit(I.ring)
    return product(*([I] * k))


def _intersect2(I: Ideal, J: Ideal) -> Ideal:
    ring = _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    ext = ring.with_leading(1, "t")
    t = ext.var(ext.variables[0])
    gens = [t * g.embed(ext) for g in I.generators]
    gens += [(1 - t) * g.embed(ext) for g in J.generators]
    result = gb.eliminate(gens, 1)
    return Ideal(ring, [g.embed(ring) for g in result.generators])


def intersect(*ideals: Ideal) -> Ideal:
    """Least common multiple (intersection) of one or more ideals."""
    if not ideals:
        raise ValueError("intersect needs at least one ideal")
    _same_ring(*ideals)
    result = ideals[0]
    for J in ideals[1:]:
        result = _intersect2(result, J)
    return result


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return ``f / g``; raises ``ValueError`` if ``g`` does not divide ``f``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    order = LEX
    glm = g.leading_monomial(order)
    glc = g.coefficient(glm)
    rem = f
    q = f.ring.zero()
    while not rem.is_zero():
        lm = rem.leading_monomial(order)
        if not all(a >= b for a, b in zip(lm, glm)):
            raise ValueError(f"{g} does not divide {f}")
        shift = tuple(a - b for a, b in zip(lm, glm))
        c = rem.coefficient(lm) / glc
        q = q + f.ring.monomial(shift, c)
        rem = rem - g.mul_term(shift, c)
    return q


def quotient(S: Ideal, R: Ideal) -> Ideal:
    """The ideal of all t with t*R contained in S."""
    ring = _same_ring(S, R)
    if R.is_zero():
        raise ValueError("undefined quotient by zero ideal")
    parts = []
    for g in R.generators:
        cap = intersect(S, Ideal(ring, [g]))
        parts.append(Ideal(ring, [divide_exact(h, g) for h in cap.generators]))
    return intersect(*parts)


def is_relatively_prime(R: Ideal, S: Ideal) -> bool:
    """True iff R is relatively prime to S, i.e. t*R in S forces t in S.

    The relation is not symmetric.
    """
    _same_ring(R, S)
    if R.is_zero():
        return S.is_unit()
    return S.contains_ideal(quotient(S, R))


def is_mutually_relatively_prime(R: Ideal, S: Ideal) -> bool:
    return is_relatively_prime(R, S) and is_relatively_prime(S, R)


def is_coprime(R: Ideal, S: Ideal) -> bool:
    """True iff R + S is the unit ideal."""
    return ideal_sum(R, S).is_unit()


def radical_member(f: Polynomial, I: Ideal) -> bool:
    """True iff some power of ``f`` lies in ``I``."""
    if f.ring != I.ring:
        raise RingMismatchError(f"{f.ring} vs {I.ring}")
    if f.is_zero():
        return True
    ext = I.ring.with_leading(1, "w")
    w = ext.var(ext.variables[0])
    gens = [g.embed(ext) for g in I.generators] + [1 - w * f.embed(ext)]
    return gb.buchberger(gens, GREVLEX).is_unit()


def complement(components: Sequence[Ideal], i: int) -> Ideal:
    """Intersection of every component except the ``i``-th."""
    if len(components) < 2:
        raise ValueError("the complement needs at least two components")
    if not 0 <= i < len(components):
        raise IndexError(f"component index {i} out of range")
    rest = [c for k, c in enumerate(components) if k != i]
    return intersect(*rest)


@dataclass(frozen=True)
class WitnessResult:
    """Outcome of checking one pair (a, b) against the primary condition.

    ``status`` is ``"not-applicable"`` (a*b not in I, or a in I),
    ``"satisfied"`` (b**exponent in I), ``"violated"`` (no power of b lies in
    I: the ideal is certainly not primary) or ``"inconclusive"`` (a power of
    b lies in I but beyond ``bound``).
    """

    status: str
    exponent: Optional[int] = None


def check_primary_witness(I: Ideal, a: Polynomial, b: Polynomial, bound: int = 16) -> WitnessResult:
    if not I.contains(a * b) or I.contains(a):
        return WitnessResult("not-applicable")
    p = I.ring.one()
    for x in range(1, bound + 1):
        p = p * b
        if I.contains(p):
            return WitnessResult("satisfied", x)
    if not radical_member(b, I):
        return WitnessResult("violated")
    return WitnessResult("inconclusive")


# ---------------------------------------------------------------------------
# decomposition claims


@dataclass
class DecompositionClaim:
    target: Ideal
    components: List[Ideal]
    kind: str = "irreducible"
    claimed_primes: Optional[List[Ideal]] = None
    name: str = ""

    def __post_init__(self):
        if not self.components:
            raise ValueError("a decomposition needs at least one component")
        if self.kind not in KINDS:
            raise ValueError(f"unknown decomposition kind {self.kind!r}")
        _same_ring(self.target, *self.components, *(self.claimed_primes or []))


@dataclass
class VerificationReport:
    """Per-check outcome of :func:`verify_decomposition`.

    ``None`` means the check does not apply or cannot be decided here.
    """

    kind: str
    intersection_equal: bool
    shortest: bool
    redundant: List[int] = field(default_factory=list)
    reduced: Optional[bool] = None
    kind_check: Optional[bool] = None
    product_equals_intersection: Optional[bool] = None
    primes_check: Optional[bool] = None
    component_notes: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        optional = (self.reduced, self.kind_check, self.product_equals_intersection, self.primes_check)
        return self.intersection_equal and self.shortest and all(v is not False for v in optional)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "intersection_equal": self.intersection_equal,
            "shortest": self.shortest,
            "redundant": self.redundant,
            "reduced": self.reduced,
            "kind_check": self.kind_check,
            "product_equals_intersection": self.product_equals_intersection,
            "primes_check": self.primes_check,
            "components": self.component_notes,
        }


def verify_decomposition(claim: DecompositionClaim) -> VerificationReport:
    """Check that ``claim.components`` decompose ``claim.target`` as claimed.

    Always checks the intersection and the shortest-representation condition.
    Kind-specific checks: mutual relative primality, pairwise coprimality plus
    product = intersection, or (for monomial components) irreducibility and
    primarity via the monomial routines.
    """
    from . import monomial_decomp as md

    comps = claim.components
    k = len(comps)
    inter = intersect(*comps)
    eq = equal(inter, claim.target, GREVLEX)

    redundant = []
    if k > 1:
        for i in range(k):
            if comps[i].contains_ideal(complement(comps, i)):
                redundant.append(i)
    shortest = not redundant

    notes = []
    monos = []
    for c in comps:
        m = md.MonomialIdeal.from_ideal(c) if c.is_monomial() and not c.is_unit() else None
        monos.append(m)
        note = {"generators": [format_polynomial(g) for g in c.generators], "monomial": m is not None}
        if m is not None:
            note["irreducible"] = md.is_irreducible(m)
            note["primary"] = md.is_primary(m)
            if note["primary"]:
                note["associated_prime"] = sorted(md.associated_prime(m))
        notes.append(note)
    all_mono = all(m is not None for m in monos)

    report = VerificationReport(claim.kind, eq, shortest, redundant, component_notes=notes)

    if all_mono and all(n["irreducible"] for n in notes):
        # irredundant intersections of monomial irreducible ideals cannot
        # have a component swapped for a proper divisor
        report.reduced = shortest

    if claim.kind == "irreducible":
        report.kind_check = all(n["irreducible"] for n in notes) if all_mono else None
    elif claim.kind == "maximal-primary":
        if all_mono:
            primes = [frozenset(md.associated_prime(m)) if n["primary"] else None for m, n in zip(monos, notes)]
            report.kind_check = None not in primes and len(set(primes)) == len(primes)
    elif claim.kind == "relatively-prime":
        report.kind_check = all(
            is_mutually_relatively_prime(comps[i], comps[j]) for i in range(k) for j in range(i + 1, k)
        )
    elif claim.kind == "coprime":
        report.kind_check = all(is_coprime(comps[i], comps[j]) for i in range(k) for j in range(i + 1, k))
        report.product_equals_intersection = equal(product(*comps), inter, GREVLEX)

    if claim.claimed_primes is not None:
        report.primes_check = len(claim.claimed_primes) == k and all(
            P.contains_ideal(Q) and all(radical_member(p, Q) for p in P.generators)
            for P, Q in zip(claim.claimed_primes, comps)
        )
    return report
