"""Buchberger's algorithm, normal forms, membership, equality and elimination.

The heavy lifting works on plain ``{exponent tuple: Fraction}`` dicts; the
public functions take and return :class:`~noether.poly_ring.Polynomial`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly_ring import (
    GREVLEX,
    LEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    RingContext,
    RingMismatchError,
    block_order,
    mono_divides,
    mono_lcm,
)

Terms = Dict[Monomial, Fraction]

DEFAULT_MAX_PAIRS = 200_000


class StepBoundExceeded(RuntimeError):
    """Buchberger processed more S-pairs than the caller allowed."""


@dataclass
class BuchbergerStats:
    """Bookkeeping from one Buchberger run, used as a termination witness."""

    pairs_considered: int = 0
    pairs_skipped: int = 0
    zero_reductions: int = 0
    # leading monomials in the order they joined the basis; each is
    # divisible by none of its predecessors, so the monomial ideal they
    # generate strictly grows at every step
    lead_history: List[Monomial] = field(default_factory=list)


def _leading(terms: Terms, key) -> Monomial:
    return max(terms, key=key)


def _reduce(f: Terms, basis: Sequence[Tuple[Monomial, Terms]], key) -> Terms:
    """Full reduction of ``f`` by monic ``basis`` entries ``(lm, terms)``."""
    p = dict(f)
    rem: Terms = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for glm, g in basis:
            if mono_divides(glm, lm):
                shift = tuple(a - b for a, b in zip(lm, glm))
                for e, gc in g.items():
                    e2 = tuple(a + b for a, b in zip(e, shift))
                    v = p.get(e2, 0) - c * gc
                    if v:
                        p[e2] = v
                    else:
                        p.pop(e2, None)
                break
        else:
            rem[lm] = c
            del p[lm]
    return rem


def _monic(f: Terms, key) -> Terms:
    lc = f[_leading(f, key)]
    if lc == 1:
        return f
    return {e: c / lc for e, c in f.items()}


def _spoly(f: Terms, flm: Monomial, g: Terms, glm: Monomial) -> Terms:
    lcm = mono_lcm(flm, glm)
    sf = tuple(a - b for a, b in zip(lcm, flm))
    sg = tuple(a - b for a, b in zip(lcm, glm))
    out: Terms = {}
    for e, c in f.items():
        out[tuple(a + b for a, b in zip(e, sf))] = c
    for e, c in g.items():
        e2 = tuple(a + b for a, b in zip(e, sg))
        v = out.get(e2, 0) - c
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return out


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _buchberger_terms(gens: Sequence[Terms], order: MonomialOrder, max_pairs: int, stats: BuchbergerStats):
    key = order.key
    G: List[Tuple[Monomial, Terms]] = []
    queue: list = []

    def add(f: Terms):
        f = _monic(f, key)
        lm = _leading(f, key)
        j = len(G)
        G.append((lm, f))
        stats.lead_history.append(lm)
        for i in range(j):
            heapq.heappush(queue, (key(mono_lcm(G[i][0], lm)), i, j))

    for f in gens:
        if f:
            r = _reduce(f, G, key)
            if r:
                add(r)
    seen = set()
    while queue:
        _, i, j = heapq.heappop(queue)
        if (i, j) in seen:
            raise AssertionError(f"S-pair {(i, j)} processed twice")
        seen.add((i, j))
        stats.pairs_considered += 1
        if stats.pairs_considered > max_pairs:
            raise StepBoundExceeded(f"more than {max_pairs} S-pairs")
        (ilm, fi), (jlm, fj) = G[i], G[j]
        if _coprime(ilm, jlm):
            stats.pairs_skipped += 1
            continue
        r = _reduce(_spoly(fi, ilm, fj, jlm), G, key)
        if r:
            add(r)
        else:
            stats.zero_reductions += 1
    return _reduced_basis(G, key)


def _reduced_basis(G: List[Tuple[Monomial, Terms]], key) -> List[Terms]:
    minimal: List[Tuple[Monomial, Terms]] = []
    for idx, (lm, f) in enumerate(G):
        if any(
            mono_divides(olm, lm) and (olm != lm or jdx < idx)
            for jdx, (olm, _) in enumerate(G)
            if jdx != idx
        ):
            continue
        minimal.append((lm, f))
    out = []
    for idx, (lm, f) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        tail = {e: c for e, c in f.items() if e != lm}
        r = _reduce(tail, others, key)
        r[lm] = Fraction(1)
        out.append(r)
    out.sort(key=lambda t: key(_leading(t, key)), reverse=True)
    return out


# ---------------------------------------------------------------------------
# public API


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """Reduced Groebner basis: monic, interreduced, sorted by leading monomial descending."""

    ring: RingContext
    order: MonomialOrder
    polys: Tuple[Polynomial, ...]
    stats: Optional[BuchbergerStats] = None

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.polys == other.polys

    def __hash__(self):
        return hash((self.ring, self.order, self.polys))

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def is_zero(self) -> bool:
        return not self.polys

    def leading_monomials(self) -> List[Monomial]:
        return [p.leading_monomial(self.order) for p in self.polys]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.polys, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.polys) + "}"


def _check_ring(polys: Sequence[Polynomial], ring: Optional[RingContext] = None) -> RingContext:
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise RingMismatchError(f"{p.ring} vs {ring}")
    return ring


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of ``f`` under multivariate division by ``basis``."""
    _check_ring(list(basis), f.ring)
    key = order.key
    prepared = []
    for g in basis:
        t = g.as_dict()
        if t:
            t = _monic(t, key)
            prepared.append((_leading(t, key), t))
    return Polynomial._raw(f.ring, _reduce(f.as_dict(), prepared, key))


def _generators(ideal) -> Tuple[RingContext, List[Polynomial]]:
    gens = getattr(ideal, "generators", ideal)
    ring = getattr(ideal, "ring", None)
    gens = list(gens)
    ring = _check_ring(gens, ring)
    if ring is None:
        raise ValueError("cannot determine the ring of an empty generator list")
    return ring, gens


def buchberger(
    ideal,
    order: MonomialOrder = GREVLEX,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> GroebnerBasis:
    """Reduced Groebner basis of an ideal (an ``Ideal`` or a list of polynomials).

    S-pairs are taken in normal-strategy order (smallest lcm of leading
    monomials first, ties by generator index) and pairs with coprime leading
    monomials are skipped.  The zero ideal gives the empty basis.
    """
    ring, gens = _generators(ideal)
    stats = BuchbergerStats()
    terms = _buchberger_terms([g.as_dict() for g in gens], order, max_pairs, stats)
    polys = tuple(Polynomial._raw(ring, t) for t in terms)
    return GroebnerBasis(ring, order, polys, stats)


def member(f: Polynomial, ideal, order: MonomialOrder = GREVLEX) -> bool:
    """True iff ``f`` lies in the ideal."""
    gb = ideal.groebner(order) if hasattr(ideal, "groebner") else buchberger(ideal, order)
    return gb.contains(f)


def equal(I, J, order: MonomialOrder = LEX) -> bool:
    """Ideal equality by comparing reduced Groebner bases under one order."""
    gi = I.groebner(order) if hasattr(I, "groebner") else buchberger(I, order)
    gj = J.groebner(order) if hasattr(J, "groebner") else buchberger(J, order)
    if gi.ring != gj.ring:
        raise RingMismatchError(f"{gi.ring} vs {gj.ring}")
    return gi.polys == gj.polys


def contained(I, J, order: MonomialOrder = GREVLEX) -> bool:
    """True iff every generator of ``I`` lies in ``J``."""
    _, gens = _generators(I)
    gb = J.groebner(order) if hasattr(J, "groebner") else buchberger(J, order)
    return all(gb.contains(g) for g in gens)


def eliminate(ideal, k: int):
    """Generators of the ideal intersected with the subring of the trailing variables.

    Computed with a block order that eliminates the first ``k`` variables; the
    result lives in the ring of the remaining variables.
    """
    from .ideal_ops import Ideal

    ring, gens = _generators(ideal)
    if not 0 < k < ring.nvars:
        raise ValueError(f"k must satisfy 0 < k < {ring.nvars}")
    gb = buchberger(gens, block_order(k))
    sub = RingContext(ring.variables[k:])
    kept = []
    for p in gb.polys:
        t = p.as_dict()
        if all(not any(e[:k]) for e in t):
            kept.append(Polynomial._raw(sub, {e[k:]: c for e, c in t.items()}))
    return Ideal(sub, kept)
