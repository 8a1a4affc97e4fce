import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from noether import matrix_classes as mc
from noether.matrix_classes import ElementaryDivisorSystem as EDS


def S(text):
    return EDS.parse(text)


def random_matrix(rng, n, bound=50):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def random_unimodular(rng, n, steps=8):
    """Product of elementary operations: swaps, sign flips and row additions."""
    M = mc.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        kind = rng.randrange(3)
        if kind == 0 and n > 1:
            M[i], M[j] = M[j], M[i]
        elif kind == 1:
            M[i] = [-x for x in M[i]]
        elif n > 1:
            k = rng.randint(-3, 3)
            M[i] = [a + k * b for a, b in zip(M[i], M[j])]
    return M


def random_chain(rng, n):
    """A random divisor chain, possibly with trailing zeros."""
    out, d = [], 1
    for _ in range(n):
        d *= rng.choice([1, 1, 2, 3, 4, 5, 6, 9])
        out.append(d)
    rank = rng.choice([n, n, n - 1, max(0, n - 2)])
    return EDS(out[:rank] + [0] * (n - rank))


def inverse(M):
    """Exact inverse by Gauss-Jordan over the rationals."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c])
        A[c], A[p] = A[p], A[c]
        A[c] = [x / A[c][c] for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                A[r] = [a - A[r][c] * b for a, b in zip(A[r], A[c])]
    return [[int(x) for x in row[n:]] for row in A]


def test_system_validation_and_parsing():
    assert S("2|4|4|0").divisors == (2, 4, 4, 0)
    assert S("(2 | 4)") == S("2 4")
    assert S("2|4|4|0").rank == 3
    with pytest.raises(ValueError):
        EDS([2, 3])
    with pytest.raises(ValueError):
        EDS([0, 2])
    with pytest.raises(ValueError):
        EDS([-1])
    assert str(S("2|4")) == "(2 | 4)"


def test_snf_examples():
    system, cert = mc.smith_normal_form([[1, 0], [0, 1]])
    assert str(system) == "(1 | 1)"
    system, cert = mc.smith_normal_form([[2, 4], [6, 8]])
    assert system.divisors == (2, 4) and cert.verify([[2, 4], [6, 8]], system)
    system, _ = mc.smith_normal_form([[6, 0], [0, 4]])
    assert system.divisors == (2, 12)
    system, _ = mc.smith_normal_form([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert system.divisors == (1, 3, 0)
    system, _ = mc.smith_normal_form([[0, 0], [0, 0]])
    assert system.divisors == (0, 0)


def test_snf_oracles_for_two_by_two():
    """d1 is the gcd of the entries and d1*d2 = |det|."""
    rng = random.Random(2)
    for _ in range(200):
        A = random_matrix(rng, 2, 30)
        d1, d2 = mc.smith_normal_form(A)[0].divisors
        g = gcd(*(x for row in A for x in row))
        assert d1 == g and d1 * d2 == abs(mc.determinant(A))


def test_determinant():
    assert mc.determinant([[2, 4], [6, 8]]) == -8
    assert mc.determinant([[0, 1], [1, 0]]) == -1
    assert mc.determinant([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0
    assert mc.determinant([[0, 0, 1], [0, 2, 0], [3, 0, 0]]) == -6


def test_snf_rejects_non_square():
    with pytest.raises(ValueError):
        mc.smith_normal_form([[1, 2]])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 6))
def test_snf_certificate_and_determinant(seed, n):
    rng = random.Random(seed)
    A = random_matrix(rng, n)
    system, cert = mc.smith_normal_form(A)
    assert cert.verify(A, system)
    assert abs(mc.determinant(cert.U)) == 1 and abs(mc.determinant(cert.V)) == 1
    det = mc.determinant(A)
    if det:
        p = 1
        for d in system:
            p *= d
        assert p == abs(det)
    else:
        assert system.rank < n


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(2, 5))
def test_snf_invariant_under_unimodular_equivalence(seed, n):
    rng = random.Random(seed)
    A = random_matrix(rng, n, 20)
    P, Q = random_unimodular(rng, n), random_unimodular(rng, n)
    assert mc.smith_normal_form(mc.matmul(mc.matmul(P, A), Q))[0] == mc.smith_normal_form(A)[0]


def test_class_divides_examples():
    assert mc.class_divides(S("1|1"), S("2|4"))
    assert mc.class_divides(S("2|4"), S("2|12"))
    assert not mc.class_divides(S("3|3"), S("2|12"))
    assert not mc.class_divides(S("2|0"), S("2|4"))
    assert mc.class_divides(S("2|4"), S("2|0"))
    with pytest.raises(ValueError):
        mc.class_divides(S("1|1"), S("1|1|1"))


def test_lcm_gcd_examples():
    assert mc.class_lcm(S("2|4"), S("1|3")) == S("2|12")
    assert mc.class_gcd(S("2|4"), S("1|3")) == S("1|1")
    assert mc.class_lcm(S("2|4"), S("1|0")) == S("2|0")
    assert mc.class_gcd(S("2|4"), S("1|0")) == S("1|4")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 5))
def test_lattice_laws(seed, n):
    rng = random.Random(seed)
    A, B, C = (random_chain(rng, n) for _ in range(3))
    lcm, gcd_ = mc.class_lcm, mc.class_gcd
    assert mc.class_divides(gcd_(A, B), A) and mc.class_divides(A, lcm(A, B))
    assert lcm(A, B) == lcm(B, A) and gcd_(A, B) == gcd_(B, A)
    assert lcm(lcm(A, B), C) == lcm(A, lcm(B, C))
    assert gcd_(gcd_(A, B), C) == gcd_(A, gcd_(B, C))
    assert lcm(A, A) == A and gcd_(A, A) == A
    assert lcm(A, gcd_(A, B)) == A and gcd_(A, lcm(A, B)) == A


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(2, 4))
def test_divisibility_is_solvable_by_explicit_factors(seed, n):
    """When b_i | a_i, write A = P*B*Q with integer P and unimodular Q built from certificates."""
    rng = random.Random(seed)
    B = random_matrix(rng, n, 10)
    sb, cb = mc.smith_normal_form(B)
    # a class divisible by sb, realised by a random matrix with those divisors
    factors = [rng.choice([1, 2, 3]) for _ in range(n)]
    target = []
    prev = 1
    for d, f in zip(sb, factors):
        prev = 0 if d == 0 else d * f
        target.append(prev)
    try:
        sa = EDS(target)
    except ValueError:
        return
    Ua, Va = random_unimodular(rng, n), random_unimodular(rng, n)
    A = mc.matmul(mc.matmul(Ua, sa.diagonal()), Va)
    sa2, ca = mc.smith_normal_form(A)
    assert sa2 == sa and mc.class_divides(sb, sa)
    q = [a // b if b else 0 for a, b in zip(sa, sb)]
    diag_q = [[q[i] if i == j else 0 for j in range(n)] for i in range(n)]
    P = mc.matmul(mc.matmul(inverse(ca.U), diag_q), cb.U)
    Q = mc.matmul(cb.V, inverse(ca.V))
    assert mc.matmul(mc.matmul(P, B), Q) == A
    assert abs(mc.determinant(Q)) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(2, 4))
def test_multiples_are_divisible(seed, n):
    rng = random.Random(seed)
    B = random_matrix(rng, n, 10)
    P, Q = random_matrix(rng, n, 4), random_matrix(rng, n, 4)
    A = mc.matmul(mc.matmul(P, B), Q)
    assert mc.class_divides(mc.smith_normal_form(B)[0], mc.smith_normal_form(A)[0])


def test_prime_split_examples():
    assert [str(s) for s in mc.prime_split(S("2|12"))] == ["(2 | 4)", "(1 | 3)"]
    assert mc.prime_split(S("3|9")) == [S("3|9")]
    assert mc.prime_split(S("2|0")) == [S("2|0")]
    assert mc.prime_split(S("1|0")) == [S("1|0")]
    with pytest.raises(ValueError):
        mc.prime_split(S("1|1"))


def test_irreducible_split_examples():
    parts = mc.irreducible_split(S("2|4|4|0"))
    assert [str(c) for c in parts] == ["(2 | 2 | 2 | 2)", "(1 | 4 | 4 | 4)", "(1 | 1 | 1 | 0)"]
    assert [(c.prime, c.exponent, c.position) for c in parts] == [(2, 1, 1), (2, 2, 2), (0, 1, 4)]
    assert parts[-1].is_rank_marker and parts[-1].rank == 3
    assert mc.class_lcm(*(c.system for c in parts)) == S("2|4|4|0")
    assert [str(c) for c in mc.irreducible_split(S("3|3"))] == ["(3 | 3)"]
    assert [str(c) for c in mc.irreducible_split(S("1|5"))] == ["(1 | 5)"]
    with pytest.raises(ValueError):
        mc.irreducible_split(S("1|6"))


def test_decompose_class_shares_the_rank_marker():
    parts = mc.decompose_class(S("2|12|0"))
    assert [str(c) for c in parts] == ["(2 | 2 | 2)", "(1 | 4 | 4)", "(1 | 1 | 0)", "(1 | 3 | 3)"]
    assert sum(c.is_rank_marker for c in parts) == 1
    assert mc.class_lcm(*(c.system for c in parts)) == S("2|12|0")


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 6))
def test_unique_reconstruction(seed, n):
    rng = random.Random(seed)
    A = random_chain(rng, n)
    if A.is_trivial():
        return
    pieces = mc.prime_split(A)
    assert mc.class_lcm(*pieces) == A
    irreducible = mc.decompose_class(A)
    assert mc.class_lcm(*(c.system for c in irreducible)) == A
    # irredundant: no piece divides the lcm of the others
    for i, c in enumerate(irreducible):
        others = [o.system for k, o in enumerate(irreducible) if k != i]
        if others:
            assert not mc.class_divides(mc.class_lcm(*others), c.system) or c.system == mc.class_lcm(*others)
    assert (any(c.is_rank_marker for c in irreducible)) == (A.rank < n)
    # canonical: recomputing from a shuffled split gives the same list
    assert mc.decompose_class(mc.class_lcm(*reversed(pieces))) == irreducible
