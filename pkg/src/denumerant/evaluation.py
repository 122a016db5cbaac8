"""Removing the slack variables and summing to an exact count.

Each rational term is specialized along ``z_i = exp(mu_i * s)`` and its
constant term in ``s`` is taken in closed form.  Individual values depend on
``mu``; the total does not.
"""

from __future__ import annotations

import operator
import random
from math import gcd
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Sequence

from .ctcore import RationalTerm
from .errors import InternalError, InvalidInputError
from .trace import Tracer, emit

MU_CANDIDATES = ((0, 1, 1), (1, 1, 0), (1, 0, 1), (1, 2, 3), (1, 3, 9), (2, 3, 5))
MU_RETRY_CAP = 1000
_RANDOM_START_BOUND = 8
_DOUBLE_EVERY = 10


class MuVector(NamedTuple):
    mu1: int
    mu2: int
    mu3: int


class HQuad(NamedTuple):
    h1: Fraction
    h2: Fraction
    h3: Fraction
    h4: Fraction


def h_values(term: RationalTerm, mu: Sequence[int]) -> HQuad:
    return HQuad(term.omega.dot(mu), term.theta.dot(mu), term.m1.dot(mu), term.m2.dot(mu))


def is_valid_mu(terms: Sequence[RationalTerm], mu: Sequence[int]) -> bool:
    """True when no term's denominator vanishes under ``mu``."""
    for t in terms:
        if t.omega.scaled_dot(mu, t.omega.denominator) == 0:
            return False
        if t.theta.scaled_dot(mu, t.theta.denominator) == 0:
            return False
    return True


def iter_valid_mu(terms: Sequence[RationalTerm], seed: Optional[int] = None) -> Iterator[MuVector]:
    """Yield distinct valid ``mu`` vectors, fixed candidates first.

    After the fixed list, candidates are drawn uniformly from ``[-B, B]**3``
    with a ``random.Random(seed)`` stream; ``B`` starts at 8 and doubles every
    ten draws.  Gives up with :class:`InternalError` after ``MU_RETRY_CAP``
    consecutive rejected random draws.
    """
    seen = set()
    for cand in MU_CANDIDATES:
        seen.add(cand)
        if is_valid_mu(terms, cand):
            yield MuVector(*cand)
    rng = random.Random(seed if seed is not None else 0)
    misses = 0
    draws = 0
    while True:
        bound = _RANDOM_START_BOUND << min(draws // _DOUBLE_EVERY, 256)
        cand = tuple(rng.randint(-bound, bound) for _ in range(3))
        draws += 1
        if cand not in seen and is_valid_mu(terms, cand):
            seen.add(cand)
            misses = 0
            yield MuVector(*cand)
            continue
        misses += 1
        if misses >= MU_RETRY_CAP:
            raise InternalError(f"no valid mu found after {MU_RETRY_CAP} random draws")


def choose_mu(terms: Sequence[RationalTerm], seed: Optional[int] = None) -> MuVector:
    return next(iter_valid_mu(terms, seed))


def closed_form(h1: Fraction, h2: Fraction, h3: Fraction, h4: Fraction) -> Fraction:
    """Constant term in ``s`` of ``(e^{h3 s} - e^{h4 s}) / ((1 - e^{h1 s})(1 - e^{h2 s}))``."""
    if h1 == 0 or h2 == 0:
        raise InternalError(f"zero denominator exponent in closed form (h1={h1}, h2={h2})")
    return Fraction((h4 - h3) * (h1 + h2 - h3 - h4)) / (2 * h1 * h2)


def eval_term(term: RationalTerm, mu: Sequence[int]) -> Fraction:
    """Closed-form value of one term; equals ``closed_form(*h_values(term, mu))``."""
    # The closed form is homogeneous of degree 0, so the four h values may be
    # scaled to integers by a common denominator first.
    vecs = (term.omega, term.theta, term.m1, term.m2)
    den = 1
    for v in vecs:
        d = v.denominator
        if den % d:
            den = den * d // gcd(den, d)
    h1, h2, h3, h4 = (v.scaled_dot(mu, den) for v in vecs)
    if h1 == 0 or h2 == 0:
        raise InternalError(f"mu={tuple(mu)} makes a denominator of {term} vanish")
    return Fraction((h4 - h3) * (h1 + h2 - h3 - h4), 2 * h1 * h2)


def eval_values(terms: Sequence[RationalTerm], mu: Sequence[int], trace: Tracer = None) -> list[Fraction]:
    values = []
    for i, term in enumerate(terms):
        value = eval_term(term, mu)
        emit(trace, "eval-term", index=i, value=value)
        values.append(value)
    return values


def check_total(total: Fraction, trace: Tracer = None) -> int:
    emit(trace, "sum", total=total)
    if total.denominator != 1 or total < 0:
        raise InternalError(f"final sum {total} is not a non-negative integer")
    return int(total)


def eval_total(terms: Sequence[RationalTerm], mu: Sequence[int], trace: Tracer = None) -> Fraction:
    """Exact rational sum of the term values, with no integrality check."""
    return sum(eval_values(terms, mu, trace), Fraction(0))


def eval_sum(terms: Sequence[RationalTerm], mu: Sequence[int], trace: Tracer = None) -> int:
    return check_total(eval_total(terms, mu, trace), trace)


def check_mu(terms: Sequence[RationalTerm], mu: Sequence[int]) -> MuVector:
    """Validate a caller-supplied ``mu``; raises :class:`InvalidInputError`."""
    try:
        vec = MuVector(*(operator.index(x) for x in mu))
    except (TypeError, ValueError):
        raise InvalidInputError(f"mu must be three integers, got {mu!r}") from None
    if not is_valid_mu(terms, vec):
        raise InvalidInputError(f"mu={tuple(vec)} makes a term denominator vanish")
    return vec
