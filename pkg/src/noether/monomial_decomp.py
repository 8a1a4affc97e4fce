"""Exact decompositions of monomial ideals.

Covers all four decompositions (irreducible, maximal primary, relatively
prime, coprime) together with primarity, associated primes, exponents and the
isolated/embedded classification.  Everything here is combinatorial on
exponent vectors; :mod:`noether.ideal_ops` is only used to convert to and
from general ideals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .poly_ring import (
    Monomial,
    Polynomial,
    RingContext,
    format_monomial,
    mono_divides,
    mono_lcm,
)

VarSet = FrozenSet[str]


class UnitIdealError(ValueError):
    """Raised when an operation needs a proper ideal but got the unit ideal."""


class NotPrimaryError(ValueError):
    pass


def minimal_generators(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Divisibility-minimal subset, sorted descending (lex)."""
    unique = sorted(set(tuple(g) for g in gens), key=lambda m: (sum(m), m))
    kept: List[Monomial] = []
    for m in unique:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators."""

    ring: RingContext
    min_gens: Tuple[Monomial, ...]

    def __init__(self, ring: RingContext, gens: Iterable[Sequence[int]]):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != ring.nvars or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "min_gens", minimal_generators(gens))

    @classmethod
    def parse(cls, text: str, ring: RingContext) -> "MonomialIdeal":
        from .ideal_ops import Ideal

        return cls.from_ideal(Ideal.parse(text, ring))

    @classmethod
    def from_ideal(cls, ideal) -> "MonomialIdeal":
        """Convert an ideal whose reduced Groebner basis consists of monomials."""
        polys = ideal.groebner().polys
        if not all(p.is_monomial() for p in polys):
            raise ValueError(f"{ideal} is not a monomial ideal")
        return cls(ideal.ring, [p.terms[0][1] for p in polys])

    @classmethod
    def from_powers(cls, ring: RingContext, powers: Dict[str, int]) -> "MonomialIdeal":
        gens = []
        for name, e in powers.items():
            exp = [0] * ring.nvars
            exp[ring.index(name)] = e
            gens.append(tuple(exp))
        return cls(ring, gens)

    def to_ideal(self):
        from .ideal_ops import Ideal

        return Ideal(self.ring, [self.ring.monomial(m) for m in self.min_gens])

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.min_gens)

    def is_zero(self) -> bool:
        return not self.min_gens

    def contains(self, m: Sequence[int]) -> bool:
        m = tuple(m)
        return any(mono_divides(g, m) for g in self.min_gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.min_gens)

    def add(self, *monos: Monomial) -> "MonomialIdeal":
        return MonomialIdeal(self.ring, self.min_gens + tuple(monos))

    def support(self) -> VarSet:
        """Variables occurring in some minimal generator."""
        return frozenset(
            self.ring.variables[i] for g in self.min_gens for i, e in enumerate(g) if e
        )

    def pure_powers(self) -> Dict[int, int]:
        """Variable index -> exponent for the pure-power minimal generators."""
        out = {}
        for g in self.min_gens:
            nz = [i for i, e in enumerate(g) if e]
            if len(nz) == 1:
                out[nz[0]] = g[nz[0]]
        return out

    def degree_sum(self) -> int:
        return sum(sum(g) for g in self.min_gens)

    def __str__(self):
        if not self.min_gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, self.ring.variables) for g in self.min_gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


def minimalize(ring: RingContext, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal(ring, gens)


def mono_intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection of monomial ideals: lcms of generator pairs."""
    result = ideals[0]
    for J in ideals[1:]:
        result = MonomialIdeal(result.ring, [mono_lcm(a, b) for a in result.min_gens for b in J.min_gens])
    return result


def mono_product(*ideals: MonomialIdeal) -> MonomialIdeal:
    result = ideals[0]
    for J in ideals[1:]:
        result = MonomialIdeal(
            result.ring, [tuple(x + y for x, y in zip(a, b)) for a in result.min_gens for b in J.min_gens]
        )
    return result


def mono_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k == 0:
        return MonomialIdeal(I.ring, [(0,) * I.ring.nvars])
    return mono_product(*([I] * k))


def _require_proper(M: MonomialIdeal):
    if M.is_unit():
        raise UnitIdealError("operation requires a proper ideal, got the unit ideal")


# ---------------------------------------------------------------------------
# predicates


def is_irreducible(M: MonomialIdeal) -> bool:
    """A monomial ideal is irreducible iff its minimal generators are pure powers."""
    _require_proper(M)
    return all(sum(1 for e in g if e) == 1 for g in M.min_gens)


def is_primary(M: MonomialIdeal) -> bool:
    """Every variable that occurs in a minimal generator also occurs as a pure power."""
    _require_proper(M)
    powers = M.pure_powers()
    return all(i in powers for g in M.min_gens for i, e in enumerate(g) if e)


def primary_witness(M: MonomialIdeal) -> Optional[Tuple[Monomial, Monomial]]:
    """A pair (a, b) with a*b in M, a not in M and no power of b in M; None if M is primary.

    The variable of b occurs in a minimal generator m but has no pure power
    in M; b is its full power in m and a = m / b.
    """
    _require_proper(M)
    powers = M.pure_powers()
    for g in sorted(M.min_gens):
        for i, e in enumerate(g):
            if e and i not in powers:
                b = tuple(e if j == i else 0 for j in range(len(g)))
                a = tuple(x - y for x, y in zip(g, b))
                return a, b
    return None


def associated_prime(M: MonomialIdeal) -> VarSet:
    """Variable set of the associated prime of a primary monomial ideal."""
    if not is_primary(M):
        raise NotPrimaryError(f"{M} is not primary")
    return M.support()


def _monomials_of_degree(indices: Sequence[int], d: int, n: int):
    for combo in itertools.combinations_with_replacement(indices, d):
        exp = [0] * n
        for i in combo:
            exp[i] += 1
        yield tuple(exp)


def exponent_bound(M: MonomialIdeal) -> int:
    """1 + sum(e_i - 1) over the pure-power exponents; the exponent never exceeds it."""
    return 1 + sum(e - 1 for e in M.pure_powers().values())


def exponent(M: MonomialIdeal) -> int:
    """Least r such that the r-th power of the associated prime lies in M."""
    prime = associated_prime(M)
    idx = [M.ring.index(v) for v in sorted(prime, key=M.ring.index)]
    n = M.ring.nvars
    bound = exponent_bound(M)
    for d in range(1, bound + 1):
        if all(M.contains(m) for m in _monomials_of_degree(idx, d, n)):
            return d
    raise AssertionError(f"exponent search for {M} exceeded its bound {bound}")


def isolated_flags(primes: Sequence[Iterable[str]]) -> List[bool]:
    """Flag i is True iff prime i contains none of the other primes."""
    sets = [frozenset(p) for p in primes]
    if len(set(sets)) != len(sets):
        raise ValueError("associated primes must be pairwise distinct")
    return [not any(o < p for o in sets if o != p) for p in sets]


# ---------------------------------------------------------------------------
# decompositions


@dataclass
class Component:
    """One component of a decomposition with its metadata."""

    ideal: MonomialIdeal
    primes: Tuple[VarSet, ...]
    exponent: Optional[int] = None
    isolated: Optional[bool] = None

    @property
    def associated_prime(self) -> Optional[VarSet]:
        return self.primes[0] if len(self.primes) == 1 else None

    def as_dict(self) -> dict:
        ring = self.ideal.ring
        return {
            "generators": [format_monomial(g, ring.variables) for g in self.ideal.min_gens],
            "associated_prime": sorted(self.associated_prime, key=ring.index)
            if self.associated_prime is not None
            else [sorted(p, key=ring.index) for p in self.primes],
            "exponent": self.exponent,
            "isolated": self.isolated,
        }


@dataclass
class DecompositionReport:
    kind: str
    ideal: MonomialIdeal
    components: List[Component]
    certified_unique: bool = True
    # recursion depth of the splitting procedure (irreducible stage)
    split_depth: int = 0
    stats: Dict[str, int] = field(default_factory=dict)

    def ideals(self) -> List[MonomialIdeal]:
        return [c.ideal for c in self.components]


def _split_choice(M: MonomialIdeal, strategy: str):
    """Pick a non-pure-power generator m and split it as m = u * v with u a pure power."""
    candidates = [g for g in M.min_gens if sum(1 for e in g if e) > 1]
    if not candidates:
        return None
    candidates.sort()
    if strategy == "first":
        m = candidates[-1]  # lex-largest = lexicographically first
        i = next(i for i, e in enumerate(m) if e)
    elif strategy == "last":
        m = candidates[0]
        i = max(i for i, e in enumerate(m) if e)
    else:
        raise ValueError(f"unknown splitting strategy {strategy!r}")
    u = tuple(m[i] if j == i else 0 for j in range(len(m)))
    v = tuple(a - b for a, b in zip(m, u))
    return u, v


def _irredundant(components: List[MonomialIdeal]) -> List[MonomialIdeal]:
    comps = []
    for c in components:
        if c not in comps:
            comps.append(c)
    i = 0
    while i < len(comps):
        others = comps[:i] + comps[i + 1 :]
        if others and comps[i].contains_ideal(mono_intersect(*others)):
            del comps[i]
        else:
            i += 1
    return comps


def _canonical(comps: Iterable[MonomialIdeal]) -> List[MonomialIdeal]:
    return sorted(comps, key=lambda c: sorted(c.min_gens))


def irreducible_components(M: MonomialIdeal, strategy: str = "first") -> Tuple[List[MonomialIdeal], int]:
    """Irredundant irreducible components of M and the maximal recursion depth reached."""
    _require_proper(M)
    leaves: List[MonomialIdeal] = []
    max_depth = 0
    stack = [(M, 0)]
    while stack:
        N, depth = stack.pop()
        max_depth = max(max_depth, depth)
        choice = _split_choice(N, strategy)
        if choice is None:
            if N not in leaves:
                leaves.append(N)
            continue
        u, v = choice
        stack.append((N.add(v), depth + 1))
        stack.append((N.add(u), depth + 1))
    return _canonical(_irredundant(leaves)), max_depth


def irreducible_decompose(M: MonomialIdeal, strategy: str = "first") -> DecompositionReport:
    """M as an irredundant intersection of ideals generated by pure powers.

    The ideal is split along a generator m = u*v (u the pure power of the
    first variable of m) into M + (u) and M + (v) until every piece is
    generated by pure powers; redundant pieces are then pruned.  For monomial
    ideals the result is unique.
    """
    comps, depth = irreducible_components(M, strategy)
    out = []
    for c in comps:
        out.append(Component(c, (c.support(),), exponent(c), None))
    primes = sorted({c.primes[0] for c in out}, key=lambda p: (len(p), sorted(p)))
    flags = dict(zip(primes, isolated_flags(primes)))
    for c in out:
        c.isolated = flags[c.primes[0]]
    return DecompositionReport("irreducible", M, out, True, depth, {"depth_bound": M.degree_sum()})


def _primary_groups(M: MonomialIdeal, strategy: str = "first"):
    comps, depth = irreducible_components(M, strategy)
    groups: Dict[VarSet, List[MonomialIdeal]] = {}
    for c in comps:
        groups.setdefault(c.support(), []).append(c)
    return groups, depth


def primary_decompose(M: MonomialIdeal, strategy: str = "first") -> DecompositionReport:
    """Group irreducible components by associated prime and intersect each group."""
    groups, depth = _primary_groups(M, strategy)
    primes = sorted(groups, key=lambda p: (len(p), sorted(p, key=M.ring.index)))
    flags = isolated_flags(primes)
    out = []
    for prime, flag in zip(primes, flags):
        Q = mono_intersect(*groups[prime])
        out.append(Component(Q, (prime,), exponent(Q), flag))
    return DecompositionReport("maximal-primary", M, out, True, depth, {"depth_bound": M.degree_sum()})


def _connected_groups(primes: Sequence[VarSet], linked) -> List[List[int]]:
    n = len(primes)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if linked(primes[i], primes[j]):
                parent[find(i)] = find(j)
    groups: Dict[int, List[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def relprime_decompose(M: MonomialIdeal, strategy: str = "first") -> DecompositionReport:
    """Merge primary components whose primes are linked by containment."""
    prim = primary_decompose(M, strategy)
    primes = [c.primes[0] for c in prim.components]
    groups = _connected_groups(primes, lambda p, q: p <= q or q <= p)
    out = []
    for idx in groups:
        comps = [prim.components[i] for i in idx]
        ideal = mono_intersect(*(c.ideal for c in comps))
        out.append(Component(ideal, tuple(c.primes[0] for c in comps), None, None))
    out.sort(key=lambda c: sorted(c.ideal.min_gens))
    return DecompositionReport("relatively-prime", M, out, True, prim.split_depth, prim.stats)


def coprime_decompose(M: MonomialIdeal, strategy: str = "first") -> DecompositionReport:
    """Group relatively prime components so that different groups are coprime.

    Two proper monomial ideals never sum to the unit ideal, so this always
    returns M itself as the single group.
    """
    rel = relprime_decompose(M, strategy)
    comps = rel.components

    def linked(i, j):
        return not comps[i].ideal.add(*comps[j].ideal.min_gens).is_unit()

    groups = _connected_groups(list(range(len(comps))), linked)
    out = []
    for idx in groups:
        ideal = mono_intersect(*(comps[i].ideal for i in idx))
        out.append(Component(ideal, tuple(p for i in idx for p in comps[i].primes), None, None))
    return DecompositionReport("coprime", M, out, True, rel.split_depth, rel.stats)


DECOMPOSERS = {
    "irreducible": irreducible_decompose,
    "primary": primary_decompose,
    "maximal-primary": primary_decompose,
    "relprime": relprime_decompose,
    "relatively-prime": relprime_decompose,
    "coprime": coprime_decompose,
}


def decompose(M: MonomialIdeal, kind: str, strategy: str = "first") -> DecompositionReport:
    try:
        fn = DECOMPOSERS[kind]
    except KeyError:
        raise ValueError(f"unknown decomposition kind {kind!r}") from None
    return fn(M, strategy)


def associated_primes(M: MonomialIdeal) -> List[VarSet]:
    return [c.primes[0] for c in primary_decompose(M).components]


def relatively_prime_by_primes(R: MonomialIdeal, S: MonomialIdeal) -> bool:
    """Associated-prime criterion: R is relatively prime to S iff no associated
    prime of R is contained in an associated prime of S."""
    if R.is_unit():
        return True
    pr = associated_primes(R)
    ps = [] if S.is_unit() else associated_primes(S)
    return not any(p <= q for p in pr for q in ps)
