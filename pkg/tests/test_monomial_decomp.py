import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from noether import ideal_ops as ops
from noether import monomial_decomp as md
from noether.monomial_decomp import MonomialIdeal, NotPrimaryError, UnitIdealError
from noether.poly_ring import RingContext, format_monomial

from _support import (
    groebner_intersection_equal,
    oracle_exponent,
    oracle_exponent_enumerate,
    random_monomial_ideal,
    ring_of,
)

XY = RingContext("x, y")
XYZ = RingContext("x, y, z")


def M(text, ring=XYZ):
    return MonomialIdeal.parse(text, ring)


def gens(ideal):
    return sorted(format_monomial(g, ideal.ring.variables) for g in ideal.min_gens)


def comp_gens(report):
    return sorted(gens(c.ideal) for c in report.components)


def test_minimalize():
    assert gens(md.minimalize(XY, [(2, 0), (1, 1), (2, 1)])) == ["x*y", "x^2"]
    assert gens(md.minimalize(XY, [(1, 0)])) == ["x"]
    assert gens(md.minimalize(XY, [(2, 0), (1, 1), (0, 2)])) == ["x*y", "x^2", "y^2"]


def test_from_ideal_rejects_non_monomial():
    with pytest.raises(ValueError):
        MonomialIdeal.parse("x + y", XY)
    # (x + y, y) is monomial once reduced
    assert gens(MonomialIdeal.parse("x + y, y", XY)) == ["x", "y"]


def test_is_irreducible():
    assert md.is_irreducible(M("x^2, y", XY))
    assert not md.is_irreducible(M("x^2, x*y", XY))
    assert md.is_irreducible(M("x^3, y, z"))
    with pytest.raises(UnitIdealError):
        md.is_irreducible(M("1"))


def test_irreducible_decompose_examples():
    assert comp_gens(md.irreducible_decompose(M("x^2, x*y", XY))) == [["x"], ["x^2", "y"]]
    assert comp_gens(md.irreducible_decompose(M("x^2, x*y, y^2", XY))) == [["x", "y^2"], ["x^2", "y"]]
    assert comp_gens(md.irreducible_decompose(M("x^3, x*y, y^3", XY))) == [["x", "y^3"], ["x^3", "y"]]
    report = md.irreducible_decompose(M("x^2, x*y", XY))
    assert report.certified_unique


def test_is_primary():
    assert not md.is_primary(M("x^2, x*y", XY))
    assert md.is_primary(M("x^2, x*y, y^3", XY))
    assert md.is_primary(M("x, z"))


def test_primary_witness():
    a, b = md.primary_witness(M("x^2, x*y", XY))
    assert (format_monomial(a, "xy"), format_monomial(b, "xy")) == ("x", "y")
    assert md.primary_witness(M("x^2, y", XY)) is None
    # the witness is sound: a*b in M, a not in M, no power of b in M
    rng = random.Random(3)
    for _ in range(100):
        I = random_monomial_ideal(rng)
        w = md.primary_witness(I)
        assert (w is None) == md.is_primary(I)
        if w:
            a, b = w
            assert I.contains(tuple(p + q for p, q in zip(a, b))) and not I.contains(a)
            assert not I.contains(tuple(40 * e for e in b))


def test_associated_prime():
    assert md.associated_prime(M("x^2, y", XY)) == {"x", "y"}
    assert md.associated_prime(M("x^3, y, z")) == {"x", "y", "z"}
    assert md.associated_prime(M("x")) == {"x"}
    with pytest.raises(NotPrimaryError):
        md.associated_prime(M("x^2, x*y", XY))


def test_exponent_examples():
    assert md.exponent(M("x^2, y", XY)) == 2
    assert md.exponent(M("x, y", XY)) == 1
    with pytest.raises(NotPrimaryError):
        md.exponent(M("x^2, x*y", XY))


def test_exponent_of_the_origin_component():
    Q4 = M("x^3, y^2, x^2*y, z")
    # every cubic in x, y, z lies in Q4 while x^2 does not; 4 is only the search bound
    assert oracle_exponent(Q4) == 3
    assert oracle_exponent_enumerate(Q4) == 3
    assert md.exponent(Q4) == 3
    assert md.exponent_bound(Q4) == 4


def test_exponent_matches_oracles_on_random_primary_ideals():
    rng = random.Random(5)
    checked = 0
    for _ in range(300):
        I = random_monomial_ideal(rng, n_max=3, e_max=4)
        if not md.is_primary(I):
            continue
        checked += 1
        e = md.exponent(I)
        assert e == oracle_exponent_enumerate(I)
        assert e <= md.exponent_bound(I)
        if checked <= 25:
            assert e == oracle_exponent(I)
    assert checked >= 40


def test_primary_decompose_examples():
    report = md.primary_decompose(M("x^2, x*y", XY))
    assert [c.as_dict() for c in report.components] == [
        {"generators": ["x"], "associated_prime": ["x"], "exponent": 1, "isolated": True},
        {"generators": ["x^2", "y"], "associated_prime": ["x", "y"], "exponent": 2, "isolated": False},
    ]
    report = md.primary_decompose(M("x^3, x^2*y, x*y^2, z"))
    assert comp_gens(report) == [["x", "z"], ["x^2*y", "x^3", "y^2", "z"]]
    assert [c.isolated for c in report.components] == [True, False]
    assert report.components[1].ideal == M("x^3, y^2, x^2*y, z")
    single = md.primary_decompose(M("x^2, y", XY))
    assert len(single.components) == 1 and single.components[0].ideal == M("x^2, y", XY)


def test_isolated_flags():
    assert md.isolated_flags([{"x"}, {"x", "y"}]) == [True, False]
    assert md.isolated_flags([{"x", "z"}, {"x", "y", "z"}]) == [True, False]
    assert md.isolated_flags([{"x"}, {"y"}]) == [True, True]
    with pytest.raises(ValueError):
        md.isolated_flags([{"x"}, {"x"}])


def test_relprime_decompose_examples():
    assert comp_gens(md.relprime_decompose(M("x^3, x^2*y, x*y^2, z"))) == [["x*y^2", "x^2*y", "x^3", "z"]]
    assert comp_gens(md.relprime_decompose(M("x*z, y*z"))) == [["x", "y"], ["z"]]
    assert comp_gens(md.relprime_decompose(M("x^2, x*y", XY))) == [["x*y", "x^2"]]


def test_coprime_decompose_examples():
    for text, ring in (("x^2, x*y", XY), ("x", XY), ("x*z, y*z", XYZ)):
        report = md.coprime_decompose(M(text, ring))
        assert len(report.components) == 1 and report.components[0].ideal == M(text, ring)


def test_unit_ideal_rejected_by_decomposers():
    for kind in ("irreducible", "primary", "relprime", "coprime"):
        with pytest.raises(UnitIdealError):
            md.decompose(M("1", XY), kind)
    with pytest.raises(ValueError):
        md.decompose(M("x", XY), "prime")


def test_split_depth_bounded_by_degree_sum():
    rng = random.Random(8)
    for _ in range(200):
        I = random_monomial_ideal(rng)
        report = md.irreducible_decompose(I)
        assert report.split_depth <= I.degree_sum() == report.stats["depth_bound"]


# -- properties on random monomial ideals ------------------------------------------

seeds = st.integers(0, 10**9)


@settings(max_examples=40, deadline=None)
@given(seeds, st.sampled_from(["irreducible", "primary", "relprime", "coprime"]))
def test_round_trip_against_groebner(seed, kind):
    I = random_monomial_ideal(random.Random(seed), n_max=3, e_max=4, k_max=4)
    report = md.decompose(I, kind)
    assert groebner_intersection_equal(I, report.ideals())
    assert md.mono_intersect(*report.ideals()) == I


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_strategy_independence(seed):
    I = random_monomial_ideal(random.Random(seed))
    first = md.irreducible_decompose(I, "first")
    last = md.irreducible_decompose(I, "last")
    assert first.ideals() == last.ideals()
    assert md.primary_decompose(I, "first").ideals() == md.primary_decompose(I, "last").ideals()


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_irreducible_components_are_primary_and_primes_agree(seed):
    I = random_monomial_ideal(random.Random(seed))
    irr = md.irreducible_decompose(I)
    assert all(md.is_irreducible(Q) and md.is_primary(Q) for Q in irr.ideals())
    prim = md.primary_decompose(I)
    assert {c.primes[0] for c in irr.components} == {c.primes[0] for c in prim.components}
    primes = [c.primes[0] for c in prim.components]
    assert len(set(primes)) == len(primes)
    # irredundant: no component contains the intersection of the others
    for report in (irr, prim):
        qs = report.ideals()
        for i, q in enumerate(qs):
            others = qs[:i] + qs[i + 1 :]
            assert not others or not q.contains_ideal(md.mono_intersect(*others))


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_same_prime_intersection_stays_primary(seed):
    rng = random.Random(seed)
    ring = ring_of(3)
    support = rng.sample(range(3), rng.randint(1, 3))

    def primary():
        out = []
        for i in support:
            out.append(tuple(rng.randint(1, 4) if j == i else 0 for j in range(3)))
        for _ in range(2):
            out.append(tuple(rng.randint(0, 3) if j in support else 0 for j in range(3)))
        return MonomialIdeal(ring, [g for g in out if any(g)])

    A, B = primary(), primary()
    inter = md.mono_intersect(A, B)
    assert md.is_primary(inter) and md.associated_prime(inter) == md.associated_prime(A)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_distinct_prime_intersection_is_not_primary(seed):
    rng = random.Random(seed)
    ring = ring_of(3)
    A = _random_in(rng, ring)
    B = MonomialIdeal(ring, [tuple(rng.randint(0, 3) if j == i else 0 for j in range(3)) for i in range(3)])
    B = B if not B.is_unit() else MonomialIdeal(ring, [(1, 0, 0)])
    if not (md.is_primary(A) and md.is_primary(B)):
        return
    if md.associated_prime(A) == md.associated_prime(B) or A.contains_ideal(B) or B.contains_ideal(A):
        return
    assert not md.is_primary(md.mono_intersect(A, B))


def test_isolated_components_match_localization():
    rng = random.Random(21)
    for _ in range(200):
        I = random_monomial_ideal(rng)
        ring = I.ring
        for c in md.primary_decompose(I).components:
            if not c.isolated:
                continue
            # at a minimal prime, the variables outside it become units
            keep = {ring.index(v) for v in c.primes[0]}
            local = MonomialIdeal(ring, [tuple(e if i in keep else 0 for i, e in enumerate(g)) for g in I.min_gens])
            assert c.ideal == local


def test_complement_power_characterizes_embedded_components():
    rng = random.Random(34)
    checked = 0
    for _ in range(120):
        I = random_monomial_ideal(rng, n_max=3, e_max=4)
        comps = md.primary_decompose(I).components
        if len(comps) < 2:
            continue
        for i, c in enumerate(comps):
            rest = md.mono_intersect(*(o.ideal for k, o in enumerate(comps) if k != i))
            powers = [md.mono_power(rest, k) for k in range(1, md.exponent_bound(c.ideal) + 1)]
            contained = [c.ideal.contains_ideal(p) for p in powers]
            if c.isolated:
                assert not any(contained)
            else:
                assert contained[c.exponent - 1]
            checked += 1
    assert checked >= 50


def test_relprime_outputs_are_shortest_and_mutually_relatively_prime():
    rng = random.Random(55)
    multi = 0
    for _ in range(60):
        I = random_monomial_ideal(rng, n_max=3, e_max=3, k_max=4)
        report = md.relprime_decompose(I)
        comps = [c.ideal.to_ideal() for c in report.components]
        claim = ops.DecompositionClaim(I.to_ideal(), comps, "relatively-prime")
        result = ops.verify_decomposition(claim)
        assert result.shortest and result.intersection_equal and result.kind_check
        multi += len(comps) > 1
    assert multi >= 5


def test_relative_primality_criterion_table():
    # rows: (R, S, expected) with the quotient test as ground truth
    table = [
        ("x^2, y", "x", True),
        ("x", "x^2, y", False),
        ("x", "y", True),
        ("x, y", "x", True),
        ("x", "x, y", False),
        ("x^2, x*y", "y", True),
        ("y", "x^2, x*y", False),
    ]
    for r, s, expected in table:
        R, S = M(r, XY), M(s, XY)
        assert ops.is_relatively_prime(R.to_ideal(), S.to_ideal()) is expected
        assert md.relatively_prime_by_primes(R, S) is expected


def test_criterion_agrees_with_quotient_on_random_pairs():
    rng = random.Random(89)
    agree = {True: 0, False: 0}
    for _ in range(80):
        ring = ring_of(rng.randint(1, 3))
        R = _random_in(rng, ring)
        S = _random_in(rng, ring)
        expected = ops.is_relatively_prime(R.to_ideal(), S.to_ideal())
        assert md.relatively_prime_by_primes(R, S) == expected
        agree[expected] += 1
    assert agree[True] >= 10 and agree[False] >= 10


def _random_in(rng, ring, e_max=3):
    n = ring.nvars
    support = rng.sample(range(n), rng.randint(1, n))
    out = []
    for _ in range(rng.randint(1, 3)):
        exp = [0] * n
        for i in rng.sample(support, rng.randint(1, len(support))):
            exp[i] = rng.randint(1, e_max)
        out.append(tuple(exp))
    return MonomialIdeal(ring, out)
