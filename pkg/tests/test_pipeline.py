import itertools
import random
from math import gcd

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from denumerant import (
    ProblemInstance, ZeroCount, choose_s, denumerant, denumerant2, normalize,
    oracle_count, oracle_table, reduce_gcd_ab, reduce_pairwise, solve, split_contributions,
)
from denumerant.arith import ExpVec
from denumerant.errors import InvalidInputError, ResourceGuardError


def enumerate_count(n, parts):
    """Plain nested-loop count, independent of the coin-change table."""
    a, b, c = parts
    return sum(1 for x in range(n // a + 1) for y in range((n - a * x) // b + 1)
               if (n - a * x - b * y) % c == 0)


# --- oracles themselves ---------------------------------------------------

@pytest.mark.parametrize("n,parts,expected", [
    (25, (3, 7, 11), 3), (14, (3, 7, 11), 2), (0, (3, 7, 11), 1),
    (100, (6, 10, 15), 10), (3, (1, 1, 1), 10), (1, (4, 6, 9), 0),
])
def test_oracle_count_examples(n, parts, expected):
    assert oracle_count(n, *parts) == expected
    assert enumerate_count(n, parts) == expected


def test_oracle_table_matches_enumeration():
    rng = random.Random(5)
    for _ in range(40):
        parts = tuple(rng.randint(1, 15) for _ in range(3))
        table = oracle_table(120, parts)
        assert [int(x) for x in table] == [enumerate_count(n, parts) for n in range(121)]


def test_oracle_guard():
    with pytest.raises(ResourceGuardError):
        oracle_count(10**7 + 1, 3, 7, 11)
    with pytest.raises(ResourceGuardError):
        oracle_count(500, 3, 7, 11, limit=100)


# --- normalization and gcd reductions -------------------------------------

def test_normalize_examples():
    assert normalize(25, 3, 7, 11) == ProblemInstance(25, 3, 7, 11)
    assert normalize(25, 11, 3, 7) == ProblemInstance(25, 3, 7, 11)
    assert normalize(50, 6, 14, 22) == ProblemInstance(25, 3, 7, 11, scale=2)
    assert isinstance(normalize(51, 6, 14, 22), ZeroCount)


@pytest.mark.parametrize("args", [(-1, 3, 7, 11), (5, 0, 7, 11), (5, 3, -7, 11), (5, 3, 3, 11),
                                  (5, 3, 11, 11), (5, 2, 4, 4), (2.5, 3, 7, 11), (True, 3, 7, 11)])
def test_normalize_rejects(args):
    with pytest.raises(InvalidInputError):
        normalize(*args)


def test_reduce_gcd_ab_examples():
    inst, step = reduce_gcd_ab(ProblemInstance(25, 3, 7, 11))
    assert inst == ProblemInstance(25, 3, 7, 11) and step.g == 1
    inst, step = reduce_gcd_ab(ProblemInstance(100, 6, 10, 15))
    assert inst == ProblemInstance(50, 3, 5, 15)
    assert (step.g, step.shift) == (2, 0)
    assert oracle_count(100, 6, 10, 15) == oracle_count(50, 3, 5, 15) == 10
    assert isinstance(reduce_gcd_ab(ProblemInstance(1, 4, 6, 9)), ZeroCount)
    assert oracle_count(1, 4, 6, 9) == 0


def test_reduce_gcd_ab_step_fields():
    _, step = reduce_gcd_ab(ProblemInstance(37, 4, 6, 9))
    assert step.g == 2 and 0 <= step.shift < 2
    assert (step.inverse * 9) % 2 == 1
    assert step.new_n * 2 == 37 - step.shift * 9


def test_reduce_pairwise_examples():
    assert reduce_pairwise(ProblemInstance(100, 6, 10, 15)) == ProblemInstance(3, 1, 1, 1)
    assert oracle_count(3, 1, 1, 1) == 10
    assert reduce_pairwise(ProblemInstance(25, 3, 7, 11)) == ProblemInstance(25, 3, 7, 11)
    r = reduce_pairwise(ProblemInstance(7, 2, 4, 7))
    assert oracle_count(r.n, r.a, r.b, r.c) == oracle_count(7, 2, 4, 7)


def test_reductions_preserve_counts_exhaustively():
    for a, b, c in itertools.combinations(range(1, 19), 3):
        if gcd(a, b, c) != 1:
            continue
        table = oracle_table(80, (a, b, c))
        for n in range(81):
            inst = ProblemInstance(n, a, b, c)
            for red in (reduce_gcd_ab(inst), reduce_pairwise(inst)):
                if isinstance(red, ZeroCount):
                    assert table[n] == 0
                    continue
                r = red[0] if isinstance(red, tuple) else red
                assert gcd(r.a, r.b) == 1
                assert oracle_count(r.n, r.a, r.b, r.c) == table[n]
            pw = reduce_pairwise(inst)
            if not isinstance(pw, ZeroCount):
                assert gcd(pw.a, pw.b) == gcd(pw.a, pw.c) == gcd(pw.b, pw.c) == 1


@pytest.mark.parametrize("n,c,s", [(25, 11, 3), (0, 5, 1), (22, 11, 3), (10, 1, 11)])
def test_choose_s(n, c, s):
    assert choose_s(n, c) == s
    assert 0 < s * c - n <= c


def test_split_contributions():
    sp = split_contributions(ProblemInstance(25, 3, 7, 11))
    assert sp.s == 3
    for contrib in (sp.ta, sp.tb):
        assert (contrib.num1.lam, contrib.num1.z) == (-25, ExpVec())
        assert (contrib.num2.lam, contrib.num2.z) == (8, ExpVec(0, 0, 3))
        assert contrib.third.lam == 11
    assert (sp.ta.underline.lam, sp.ta.to_unit.lam) == (3, 7)
    assert (sp.tb.underline.lam, sp.tb.to_unit.lam) == (7, 3)
    sp0 = split_contributions(ProblemInstance(0, 3, 7, 11))
    assert (sp0.ta.num1.lam, sp0.ta.num2.lam, sp0.ta.num2.z) == (0, 11, ExpVec(0, 0, 1))
    with pytest.raises(InvalidInputError):
        split_contributions(ProblemInstance(5, 4, 6, 9))


def test_a_equal_one_hits_base_case_immediately():
    sol = solve(30, 1, 4, 9)
    assert sol.steps_a == 1 and len(sol.terms_a) == 1
    assert sol.count == oracle_count(30, 1, 4, 9)


# --- end to end -------------------------------------------------------------

@pytest.mark.parametrize("n,a,b,c,expected", [
    (25, 3, 7, 11, 3), (0, 3, 7, 11, 1), (0, 5, 8, 13, 1), (100, 6, 10, 15, 10),
    (14, 3, 7, 11, 2), (51, 6, 14, 22, 0), (1, 4, 6, 9, 0),
])
def test_denumerant_examples(n, a, b, c, expected):
    assert denumerant(n, a, b, c) == expected


@pytest.mark.parametrize("n,p,q,expected", [(10, 3, 7, 1), (11, 3, 7, 0), (0, 3, 7, 1), (21, 3, 7, 2)])
def test_denumerant2_examples(n, p, q, expected):
    assert denumerant2(n, p, q) == expected


def test_denumerant2_against_enumeration():
    for p in range(1, 16):
        for q in range(1, 16):
            if gcd(p, q) != 1:
                continue
            for n in range(120):
                expected = sum(1 for x in range(n // p + 1) if (n - p * x) % q == 0)
                assert denumerant2(n, p, q) == expected
    with pytest.raises(InvalidInputError):
        denumerant2(10, 4, 6)


coprime_pair = st.tuples(st.integers(1, 10**6), st.integers(1, 10**6)).filter(lambda t: gcd(*t) == 1)


@settings(max_examples=200, deadline=None)
@given(coprime_pair, st.integers(1, 10**6), st.integers(0, 10**13))
def test_recurrence_in_c(ab, c, n):
    a, b = ab
    if len({a, b, c}) < 3 or n < c:
        return
    assert denumerant(n, a, b, c) - denumerant(n - c, a, b, c) == denumerant2(n, a, b)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10**5), st.integers(1, 10**5), st.integers(1, 10**5), st.integers(0, 10**9))
def test_permutation_invariance(a, b, c, n):
    if len({a, b, c}) < 3:
        return
    values = {denumerant(n, *p) for p in itertools.permutations((a, b, c))}
    assert len(values) == 1


def test_positive_beyond_product():
    for a, b, c in itertools.combinations(range(1, 9), 3):
        if gcd(a, b, c) != 1:
            continue
        for n in range(a * b * c + 1, a * b * c + 40):
            assert denumerant(n, a, b, c) > 0


def test_emitted_denominators_use_z2_or_z3():
    for a, b, c in itertools.combinations(range(1, 16), 3):
        if gcd(a, b, c) != 1:
            continue
        for t in solve(37, a, b, c).terms:
            for v in (t.omega, t.theta):
                assert v.e2 != 0 or v.e3 != 0


# Before mu is applied, the slack-weighted sum T(a) + T(b) equals the
# generating polynomial sum over solutions of z1^x1 z2^x2 z3^x3.  Check that
# against a truncated power series in lambda (degree 200) at generic z.
mpmath.mp.dps = 60
ZVALS = (mpmath.mpf("1.21"), mpmath.mpf("0.83"), mpmath.mpf("1.47"))


def _zpow(e):
    out = mpmath.mpf(1)
    for zi, ei in zip(ZVALS, e):
        out *= zi ** (mpmath.mpf(ei.numerator) / ei.denominator)
    return out


def weighted_series_coefficient(n, parts, degree=200):
    coeffs = [mpmath.mpf(0)] * (degree + 1)
    coeffs[0] = mpmath.mpf(1)
    for w, z in zip(parts, ZVALS):
        for k in range(w, degree + 1):
            coeffs[k] += z * coeffs[k - w]
    return coeffs[n]


@pytest.mark.parametrize("seed", range(25))
def test_symbolic_terms_match_weighted_series(seed):
    rng = random.Random(seed)
    while True:
        a, b, c = sorted(rng.sample(range(1, 40), 3))
        if gcd(a, b) == 1:
            break
    n = rng.randint(0, 200)
    sol = solve(n, a, b, c)
    got = sum(((_zpow(t.m1) - _zpow(t.m2)) / ((1 - _zpow(t.omega)) * (1 - _zpow(t.theta)))
               for t in sol.terms), mpmath.mpf(0))
    expected = weighted_series_coefficient(n, (a, b, c))
    assert abs(got - expected) <= mpmath.mpf(10) ** -30 * (1 + abs(expected))
