"""End-to-end computation of d(n; a, b, c) plus two independent oracles.

The fast path is::

    normalize -> reduce_gcd_ab -> split_contributions
              -> to_unit_state (x2) -> reduce_contribution (x2)
              -> choose_mu -> eval_sum

:func:`oracle_count` (a coin-change table) and :func:`denumerant2` (the exact
two-part closed form) share no code with it and serve as cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

import numpy as np

from .arith import ExpVec, _as_int, exact_div, mod_inverse_signed
from .ctcore import (
    Factor, LaurentMonomial, RationalTerm, RawContribution,
    reduce_counted, to_unit_state,
)
from .errors import InternalError, InvalidInputError, ResourceGuardError
from .evaluation import MuVector, check_total, check_mu, choose_mu, eval_values
from .trace import Tracer, emit

ORACLE_LIMIT = 10**7


@dataclass(frozen=True)
class ProblemInstance:
    n: int
    a: int
    b: int
    c: int
    scale: int = 1  # common factor divided out by normalize()


@dataclass(frozen=True)
class ZeroCount:
    """Marker for an instance whose count is 0 without running the reduction."""

    reason: str


@dataclass(frozen=True)
class GcdReductionStep:
    g: int
    inverse: int
    shift: int
    new_n: int


@dataclass(frozen=True)
class ContributionSplit:
    s: int
    ta: RawContribution
    tb: RawContribution


@dataclass
class Solution:
    """Everything the fast path produced on the way to a count."""

    count: int
    instance: Optional[ProblemInstance] = None
    reduced: Optional[ProblemInstance] = None
    terms_a: list[RationalTerm] = field(default_factory=list)
    terms_b: list[RationalTerm] = field(default_factory=list)
    mu: Optional[MuVector] = None
    values: list[Fraction] = field(default_factory=list)
    steps_a: int = 0
    steps_b: int = 0

    @property
    def terms(self) -> list[RationalTerm]:
        return self.terms_a + self.terms_b

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))


Normalized = Union[ProblemInstance, ZeroCount]


def _check_inputs(n, a, b, c) -> tuple[int, int, int, int]:
    n, a, b, c = (_as_int(x, name) for x, name in zip((n, a, b, c), "nabc"))
    if n < 0:
        raise InvalidInputError(f"n must be non-negative, got {n}")
    for name, x in zip("abc", (a, b, c)):
        if x < 1:
            raise InvalidInputError(f"{name} must be positive, got {x}")
    return n, a, b, c


def normalize(n: int, a: int, b: int, c: int) -> Normalized:
    """Sort the parts and divide out ``gcd(a, b, c)``.

    Repeated parts are rejected: the reduction needs three distinct values.
    """
    n, a, b, c = _check_inputs(n, a, b, c)
    a, b, c = sorted((a, b, c))
    if a == b or b == c:
        raise InvalidInputError(
            f"parts must be distinct, got ({a}, {b}, {c}); "
            "for two distinct parts use denumerant2")
    g = gcd(a, b, c)
    if g > 1:
        if n % g:
            return ZeroCount(f"gcd(a,b,c)={g} does not divide n={n}")
        return ProblemInstance(n // g, a // g, b // g, c // g, scale=g)
    return ProblemInstance(n, a, b, c)


def _reduce_pair(n: int, x: int, y: int, w: int) -> tuple[int, int, int, GcdReductionStep]:
    """Divide ``g = gcd(x, y)`` out of ``x`` and ``y``, where ``gcd(g, w) == 1``."""
    g = gcd(x, y)
    if g == 1:
        return n, x, y, GcdReductionStep(1, 0, 0, n)
    if gcd(g, w) != 1:
        raise InternalError(f"gcd({g}, {w}) != 1; the three parts share a factor")
    inv = mod_inverse_signed(w, g) % g
    shift = n * inv % g
    new_n = exact_div(n - shift * w, g)
    return new_n, x // g, y // g, GcdReductionStep(g, inv, shift, new_n)


def reduce_gcd_ab(inst: ProblemInstance, trace: Tracer = None
                  ) -> Union[tuple[ProblemInstance, GcdReductionStep], ZeroCount]:
    n, a, b, step = _reduce_pair(inst.n, inst.a, inst.b, inst.c)
    emit(trace, "gcd-reduce", g=step.g, inverse=step.inverse, shift=step.shift, n=n, a=a, b=b, c=inst.c)
    if n < 0:
        return ZeroCount(f"reduced n={n} is negative")
    return ProblemInstance(n, a, b, inst.c, inst.scale), step


def reduce_pairwise(inst: ProblemInstance) -> Normalized:
    """Make all three parts pairwise coprime (diagnostic; not on the fast path)."""
    n, a, b, c = inst.n, inst.a, inst.b, inst.c
    n, a, b, _ = _reduce_pair(n, a, b, c)
    if n < 0:
        return ZeroCount("negative n after gcd(a,b) reduction")
    n, a, c, _ = _reduce_pair(n, a, c, b)
    if n < 0:
        return ZeroCount("negative n after gcd(a,c) reduction")
    n, b, c, _ = _reduce_pair(n, b, c, a)
    if n < 0:
        return ZeroCount("negative n after gcd(b,c) reduction")
    return ProblemInstance(n, a, b, c, inst.scale)


def choose_s(n: int, c: int) -> int:
    """Smallest positive ``s`` with ``0 < s*c - n <= c``."""
    return n // c + 1


def split_contributions(inst: ProblemInstance) -> ContributionSplit:
    n, a, b, c = inst.n, inst.a, inst.b, inst.c
    if gcd(a, b) != 1:
        raise InvalidInputError(f"split_contributions needs gcd(a, b) = 1, got {gcd(a, b)}")
    s = choose_s(n, c)
    z1, z2, z3 = ExpVec.unit(0), ExpVec.unit(1), ExpVec.unit(2)
    num1 = LaurentMonomial(-n, ExpVec())
    num2 = LaurentMonomial(s * c - n, z3 * s)
    fa, fb, fc = Factor(a, z1), Factor(b, z2), Factor(c, z3)
    return ContributionSplit(
        s=s,
        ta=RawContribution(fa, fb, fc, num1, num2, label="a"),
        tb=RawContribution(fb, fa, fc, num1, num2, label="b"),
    )


def solve(n: int, a: int, b: int, c: int, *, mu: Optional[Sequence[int]] = None,
          seed: Optional[int] = None, trace: Tracer = None) -> Solution:
    """Run the fast path and keep every intermediate product."""
    norm = normalize(n, a, b, c)
    if isinstance(norm, ZeroCount):
        emit(trace, "normalize", zero=1, reason=norm.reason.replace(" ", "_"))
        emit(trace, "sum", total=0)
        return Solution(count=0)
    emit(trace, "normalize", n=norm.n, a=norm.a, b=norm.b, c=norm.c, scale=norm.scale)
    red = reduce_gcd_ab(norm, trace)
    if isinstance(red, ZeroCount):
        emit(trace, "sum", total=0)
        return Solution(count=0, instance=norm)
    reduced, _ = red
    split = split_contributions(reduced)
    emit(trace, "split", s=split.s, n=reduced.n, a=reduced.a, b=reduced.b, c=reduced.c)
    terms_a, steps_a = reduce_counted(to_unit_state(split.ta, trace), trace, "a")
    terms_b, steps_b = reduce_counted(to_unit_state(split.tb, trace), trace, "b")
    terms = terms_a + terms_b
    if mu is None:
        vec = choose_mu(terms, seed)
    else:
        vec = check_mu(terms, mu)
    emit(trace, "mu-select", mu=tuple(vec), source="user" if mu is not None else "auto")
    values = eval_values(terms, vec, trace)
    count = check_total(sum(values, Fraction(0)), trace)
    return Solution(
        count=count, instance=norm, reduced=reduced,
        terms_a=terms_a, terms_b=terms_b, mu=vec, values=values,
        steps_a=steps_a, steps_b=steps_b,
    )


def denumerant(n: int, a: int, b: int, c: int, *, mu: Optional[Sequence[int]] = None,
               seed: Optional[int] = None, trace: Tracer = None) -> int:
    """Number of non-negative solutions of ``a*x + b*y + c*z == n``.

    Runs in ``O(log b)`` exact ring operations.  ``mu`` overrides the
    slack-variable direction (it must be valid for the emitted terms);
    ``seed`` only matters if none of the fixed candidates is valid.

    >>> denumerant(25, 3, 7, 11)
    3
    """
    return solve(n, a, b, c, mu=mu, seed=seed, trace=trace).count


def oracle_table(n_max: int, parts: Sequence[int], limit: int = ORACLE_LIMIT) -> np.ndarray:
    """Counts ``d(k; parts)`` for ``k = 0..n_max`` by the coin-change recurrence.

    ``table[k] += table[k - w]`` for every part ``w`` in increasing ``k``,
    done one residue class mod ``w`` at a time as a cumulative sum.
    """
    n_max = _as_int(n_max, "n")
    if n_max < 0:
        raise InvalidInputError(f"n must be non-negative, got {n_max}")
    if n_max > limit:
        raise ResourceGuardError(f"oracle table size {n_max} exceeds guard {limit}")
    parts = [_as_int(w, "part") for w in parts]
    if any(w < 1 for w in parts):
        raise InvalidInputError(f"parts must be positive, got {parts}")
    # (n+1)**2 bounds any three-part count from above
    dtype = np.int64 if (n_max + 1) ** 2 < 2**63 else object
    table = np.zeros(n_max + 1, dtype=dtype)
    table[0] = 1
    for w in parts:
        rows = -(-(n_max + 1) // w)
        padded = np.zeros(rows * w, dtype=dtype)
        padded[: n_max + 1] = table
        table = np.cumsum(padded.reshape(rows, w), axis=0).reshape(-1)[: n_max + 1]
    return table


def oracle_count(n: int, a: int, b: int, c: int, limit: int = ORACLE_LIMIT) -> int:
    """Brute-force ``d(n; a, b, c)``; guarded by ``n <= limit``."""
    n, a, b, c = _check_inputs(n, a, b, c)
    return int(oracle_table(n, (a, b, c), limit)[n])


def denumerant2(n: int, p: int, q: int) -> int:
    """Exact two-part count ``d(n; p, q)`` for coprime ``p, q`` (Popoviciu).

    ``n/(pq) - {q' n / p} - {p' n / q} + 1`` with ``q q' = 1 mod p`` and
    ``p p' = 1 mod q``.
    """
    n = _as_int(n, "n")
    p = _as_int(p, "p")
    q = _as_int(q, "q")
    if p < 1 or q < 1:
        raise InvalidInputError(f"parts must be positive, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise InvalidInputError(f"denumerant2 needs coprime parts, got gcd({p}, {q}) = {gcd(p, q)}")
    if n < 0:
        return 0
    q_inv = pow(q, -1, p) if p > 1 else 0
    p_inv = pow(p, -1, q) if q > 1 else 0
    value = (Fraction(n, p * q) - Fraction(q_inv * n % p, p) - Fraction(p_inv * n % q, q) + 1)
    if value.denominator != 1:
        raise InternalError(f"two-part closed form gave non-integer {value}")
    return int(value)
