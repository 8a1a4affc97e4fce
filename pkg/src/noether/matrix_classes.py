"""Two-sided classes of integer matrices and their elementary divisors.

A class (all U*A*V with U, V unimodular) is identified with its elementary
divisor system (a_1 | a_2 | ... | a_n).  Divisibility, lcm and gcd of classes
act componentwise on these systems, and every class splits uniquely into
prime-power classes and then into irreducible classes.

Zero is the elementary divisor of a rank deficiency: x | 0 for every x,
0 | x only for x = 0, lcm(x, 0) = 0 and gcd(x, 0) = x.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from .z_subring import factorize

Matrix = List[List[int]]


def _divides(a: int, b: int) -> bool:
    if a == 0:
        return b == 0
    return b % a == 0


def _lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return a // gcd(a, b) * b


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class ElementaryDivisorSystem:
    divisors: Tuple[int, ...]

    def __init__(self, divisors: Iterable[int]):
        divisors = tuple(int(d) for d in divisors)
        if not divisors:
            raise ValueError("empty divisor system")
        if any(d < 0 for d in divisors):
            raise ValueError(f"elementary divisors must be non-negative: {divisors}")
        for a, b in zip(divisors, divisors[1:]):
            if not _divides(a, b):
                raise ValueError(f"not a divisor chain: {a} does not divide {b} in {divisors}")
        object.__setattr__(self, "divisors", divisors)

    @classmethod
    def parse(cls, text: str) -> "ElementaryDivisorSystem":
        """Accepts ``"2|4|4|0"``, ``"(2 | 4)"`` or ``"2 4 4 0"``."""
        cleaned = text.replace("(", " ").replace(")", " ").replace("|", " ").replace(",", " ")
        return cls(int(t) for t in cleaned.split())

    @property
    def n(self) -> int:
        return len(self.divisors)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d)

    def is_trivial(self) -> bool:
        return all(d == 1 for d in self.divisors)

    def diagonal(self) -> Matrix:
        n = self.n
        return [[self.divisors[i] if i == j else 0 for j in range(n)] for i in range(n)]

    def __iter__(self):
        return iter(self.divisors)

    def __getitem__(self, i):
        return self.divisors[i]

    def __str__(self):
        return "(" + " | ".join(str(d) for d in self.divisors) + ")"


@dataclass(frozen=True)
class UnimodularCertificate:
    """U, V with U * A * V equal to the diagonal of the divisor system."""

    U: Tuple[Tuple[int, ...], ...]
    V: Tuple[Tuple[int, ...], ...]

    def verify(self, A: Sequence[Sequence[int]], system: ElementaryDivisorSystem) -> bool:
        if abs(determinant(self.U)) != 1 or abs(determinant(self.V)) != 1:
            return False
        return matmul(matmul(self.U, A), self.V) == system.diagonal()


@dataclass(frozen=True)
class IrreducibleClass:
    """An irreducible class with the data that determines it.

    For a prime-power class, ``prime`` and ``exponent`` are p and r and
    ``position`` is where p**r first appears (1-based).  The rank marker
    (1 | ... | 1 | 0 | ... | 0) has ``prime`` 0 and ``position`` = rank + 1.
    """

    system: ElementaryDivisorSystem
    prime: int
    exponent: int
    position: int

    @property
    def is_rank_marker(self) -> bool:
        return self.prime == 0

    @property
    def rank(self) -> Optional[int]:
        return self.position - 1 if self.is_rank_marker else None

    def __str__(self):
        return str(self.system)


# ---------------------------------------------------------------------------
# matrix helpers


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    M = [list(r) for r in A]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def _check_square(A: Sequence[Sequence[int]]) -> int:
    n = len(A)
    if n == 0 or any(len(r) != n for r in A):
        raise ValueError("matrix must be square and non-empty")
    return n


def smith_normal_form(A: Sequence[Sequence[int]]) -> Tuple[ElementaryDivisorSystem, UnimodularCertificate]:
    """Elementary divisors of A with unimodular U, V such that U*A*V is diagonal.

    Pivots are the smallest nonzero entries in absolute value (first in
    row-major scan order); rows are cleared before columns.
    """
    n = _check_square(A)
    D = [[int(x) for x in r] for r in A]
    U = identity(n)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row dst += k * row src
        for M in (D, U):
            M[dst] = [a + k * b for a, b in zip(M[dst], M[src])]

    def add_col(dst, src, k):  # col dst += k * col src
        for M in (D, V):
            for r in M:
                r[dst] += k * r[src]

    for s in range(n):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(s, n) for j in range(s, n) if D[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(s, pi)
            swap_cols(s, pj)
            p = D[s][s]
            dirty = False
            for i in range(s + 1, n):
                if D[i][s]:
                    add_row(i, s, -(D[i][s] // p))
                    dirty = dirty or D[i][s] != 0
            for j in range(s + 1, n):
                if D[s][j]:
                    add_col(j, s, -(D[s][j] // p))
                    dirty = dirty or D[s][j] != 0
            if dirty:
                continue
            # pivot must divide the rest of the block
            bad = next(
                ((i, j) for i in range(s + 1, n) for j in range(s + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(s, bad[0], 1)
        if D[s][s] < 0:
            U[s] = [-x for x in U[s]]
            D[s] = [-x for x in D[s]]
    system = ElementaryDivisorSystem(D[i][i] for i in range(n))
    cert = UnimodularCertificate(tuple(map(tuple, U)), tuple(map(tuple, V)))
    return system, cert


# ---------------------------------------------------------------------------
# class arithmetic


def _same_n(A: ElementaryDivisorSystem, B: ElementaryDivisorSystem):
    if A.n != B.n:
        raise ValueError(f"dimension mismatch: {A.n} vs {B.n}")


def class_divides(B: ElementaryDivisorSystem, A: ElementaryDivisorSystem) -> bool:
    """True iff the class of A is divisible by the class of B (b_i | a_i for all i)."""
    _same_n(A, B)
    return all(_divides(b, a) for a, b in zip(A, B))


def class_lcm(*systems: ElementaryDivisorSystem) -> ElementaryDivisorSystem:
    out = systems[0]
    for B in systems[1:]:
        _same_n(out, B)
        out = ElementaryDivisorSystem(_lcm(a, b) for a, b in zip(out, B))
    return out


def class_gcd(*systems: ElementaryDivisorSystem) -> ElementaryDivisorSystem:
    out = systems[0]
    for B in systems[1:]:
        _same_n(out, B)
        out = ElementaryDivisorSystem(gcd(a, b) for a, b in zip(out, B))
    return out


def primes_of(A: ElementaryDivisorSystem) -> List[int]:
    """Primes dividing the last nonzero divisor, ascending."""
    nonzero = [d for d in A if d]
    if not nonzero:
        return []
    return [p for p, _ in factorize(nonzero[-1])]


def prime_split(A: ElementaryDivisorSystem) -> List[ElementaryDivisorSystem]:
    """One prime-power class per prime dividing the last nonzero divisor.

    Zeros are carried into every piece.  A class whose nonzero divisors are
    all 1 has no prime and is returned unchanged.
    """
    if A.is_trivial():
        raise ValueError("the trivial class has no prime decomposition")
    primes = primes_of(A)
    if not primes:
        return [A]
    return [ElementaryDivisorSystem(p ** _valuation(d, p) if d else 0 for d in A) for p in primes]


def _single_prime(Q: ElementaryDivisorSystem) -> int:
    primes = set()
    for d in Q:
        if d > 1:
            primes.update(p for p, _ in factorize(d))
    if len(primes) > 1:
        raise ValueError(f"{Q} mixes the primes {sorted(primes)}")
    return primes.pop() if primes else 1


def irreducible_split(Q: ElementaryDivisorSystem) -> List[IrreducibleClass]:
    """Unique irredundant decomposition of a prime-power class into irreducible classes.

    Position v with exponent r_v gives (1 | ... | 1 | p^r_v | ... | p^r_v)
    with v - 1 ones; it is omitted when r_v = 0 or r_v equals r_{v-1}.  A
    rank deficiency adds the marker (1 | ... | 1 | 0 | ... | 0).
    """
    p = _single_prime(Q)
    n, rank = Q.n, Q.rank
    out = []
    prev = 0
    for v in range(1, rank + 1):
        r = _valuation(Q[v - 1], p) if p > 1 else 0
        if r > prev:
            system = ElementaryDivisorSystem([1] * (v - 1) + [p**r] * (n - v + 1))
            out.append(IrreducibleClass(system, p, r, v))
        prev = r
    if rank < n:
        out.append(IrreducibleClass(ElementaryDivisorSystem([1] * rank + [0] * (n - rank)), 0, 1, rank + 1))
    return out


def decompose_class(A: ElementaryDivisorSystem) -> List[IrreducibleClass]:
    """Irreducible decomposition of an arbitrary class: prime split, then irreducible split.

    Rank markers produced by different primes coincide and are listed once.
    """
    out: List[IrreducibleClass] = []
    for Q in prime_split(A):
        for c in irreducible_split(Q):
            if c not in out:
                out.append(c)
    return out
