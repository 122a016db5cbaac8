"""Constant-term states and the Euclid-style reduction that consumes them.

Notation.  A :class:`Factor` ``(k, e)`` stands for ``1 - lambda**k * z**e``
where ``z**e = z1**e1 * z2**e2 * z3**e3``.  A :class:`CTState` is the constant
term in ``lambda`` of

    (lambda**r1 z**m1 - lambda**r2 z**m2)
    -----------------------------------------------------------
    [1 - lambda**a z**alpha] (1 - lambda z**gamma) (1 - lambda**c z**beta)

where only the bracketed ("underlined") factor contributes its
partial-fraction component.  Each :func:`euclid_step` peels off one closed
rational function in ``z`` and hands back a state whose underlined index is at
most half the previous one; :func:`base_case` finishes at index 0 or 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .arith import ExpVec, bezout_unit, rem_star, srem_star
from .errors import InternalError, InvalidInputError
from .trace import Tracer, emit


@dataclass(frozen=True)
class LaurentMonomial:
    """``lambda**lam * z**z``."""

    lam: int
    z: ExpVec


@dataclass(frozen=True)
class Factor:
    """``1 - lambda**lam * z**z``."""

    lam: int
    z: ExpVec


@dataclass(frozen=True)
class RationalTerm:
    """``(z**m1 - z**m2) / ((1 - z**omega) (1 - z**theta))``."""

    m1: ExpVec
    m2: ExpVec
    omega: ExpVec
    theta: ExpVec

    def __post_init__(self):
        if self.omega.is_zero() or self.theta.is_zero():
            raise InternalError(f"identically zero denominator in {self}")


@dataclass(frozen=True)
class CTState:
    underline: Factor
    unit: Factor
    third: Factor
    num1: LaurentMonomial
    num2: LaurentMonomial

    def __post_init__(self):
        if self.unit.lam != 1:
            raise InternalError(f"middle factor must have lambda-exponent 1, got {self.unit.lam}")
        if self.underline.lam < 0:
            raise InternalError(f"negative underline index {self.underline.lam}")
        if self.unit.z.is_zero():
            raise InternalError("unit factor has a zero slack exponent")

    @property
    def index(self) -> int:
        return self.underline.lam


@dataclass(frozen=True)
class RawContribution:
    """A constant term before the multiplier substitution.

    ``underline`` is the contributing factor, ``to_unit`` the factor whose
    lambda-exponent will be turned into 1, ``third`` the remaining one.  Each
    factor's ``z`` records its slack-variable assignment.
    """

    underline: Factor
    to_unit: Factor
    third: Factor
    num1: LaurentMonomial
    num2: LaurentMonomial
    label: str = ""


def to_unit_state(contrib: RawContribution, trace: Tracer = None) -> CTState:
    A = contrib.underline.lam
    B = contrib.to_unit.lam
    if A < 1 or B < 1:
        raise InvalidInputError(f"indices must be positive, got ({A}, {B})")
    if gcd(A, B) != 1:
        raise InvalidInputError(f"underline index {A} and to-unit index {B} are not coprime")
    if B == 1:
        u, v = 0, 1
        state = CTState(contrib.underline, contrib.to_unit, contrib.third,
                        contrib.num1, contrib.num2)
    else:
        bp = bezout_unit(A, B)
        u, v = bp.u, bp.v
        # lambda -> lambda**v everywhere except the underline, whose z-part
        # becomes z**(alpha/v); then lambda**(B*v) = lambda**(1 - A*u) is
        # reduced modulo the underline factor.
        alpha = contrib.underline.z / v
        gamma = contrib.to_unit.z + alpha * u
        state = CTState(
            underline=Factor(A, alpha),
            unit=Factor(1, gamma),
            third=Factor(contrib.third.lam * v, contrib.third.z),
            num1=LaurentMonomial(contrib.num1.lam * v, contrib.num1.z),
            num2=LaurentMonomial(contrib.num2.lam * v, contrib.num2.z),
        )
    emit(trace, "unit-transform", contribution=contrib.label, index=A, to_unit=B,
         u=u, v=v, alpha=state.underline.z, gamma=state.unit.z,
         third_lam=state.third.lam, third_z=state.third.z,
         r1=state.num1.lam, z1=state.num1.z, r2=state.num2.lam, z2=state.num2.z)
    return state


def euclid_step(state: CTState) -> tuple[RationalTerm, CTState]:
    """One application of the halving recursion.

    Returns the rational function contributed by the unit factor together
    with the remaining constant term, whose underlined index is the reduced
    third exponent ``c2 <= a/2``.
    """
    a = state.underline.lam
    if a < 2:
        raise InvalidInputError(f"euclid_step needs index >= 2, got {a} (use base_case)")
    alpha = state.underline.z
    gamma = state.unit.z
    ell, c1 = srem_star(state.third.lam, a)
    beta1 = state.third.z - alpha * ell
    n1, n2 = state.num1, state.num2
    if c1 >= 0:
        c2, beta2 = c1, beta1
        src1, src2 = (n1.lam, n1.z), (n2.lam, n2.z)
    else:
        # 1/(1 - X) = -X^-1/(1 - X^-1): flip the factor, absorb the sign by
        # swapping the numerator monomials.
        c2, beta2 = -c1, -beta1
        src1 = (n2.lam - c1, n2.z - beta1)
        src2 = (n1.lam - c1, n1.z - beta1)
    l1, t1 = rem_star(src1[0], a)
    m1p = src1[1] - alpha * l1
    l2, t2 = rem_star(src2[0], a)
    m2p = src2[1] - alpha * l2

    term = RationalTerm(
        m1=m2p - gamma * t2,
        m2=m1p - gamma * t1,
        omega=alpha - gamma * a,
        theta=beta2 - gamma * c2,
    )
    nxt = CTState(
        underline=Factor(c2, beta2),
        unit=state.unit,
        third=Factor(a, alpha),
        num1=LaurentMonomial(t2, m2p),
        num2=LaurentMonomial(t1, m1p),
    )
    if 2 * c2 > a:
        raise InternalError(f"index did not halve: {a} -> {c2}")
    return term, nxt


def base_case(state: CTState) -> Optional[RationalTerm]:
    """Close a state of index 0 (contributes nothing) or 1 (one rational term)."""
    a = state.underline.lam
    if a == 0:
        return None
    if a != 1:
        raise InvalidInputError(f"base_case needs index 0 or 1, got {a}")
    alpha = state.underline.z
    return RationalTerm(
        m1=state.num1.z - alpha * state.num1.lam,
        m2=state.num2.z - alpha * state.num2.lam,
        omega=state.unit.z - alpha,
        theta=state.third.z - alpha * state.third.lam,
    )


def step_bound(index: int) -> int:
    """Maximum number of steps (Euclid steps plus the closing base case)."""
    return max(index, 1).bit_length()


def reduce_contribution(state: CTState, trace: Tracer = None, label: str = "") -> list[RationalTerm]:
    """Run the recursion to completion and collect every emitted term."""
    return reduce_counted(state, trace, label)[0]


def reduce_counted(state: CTState, trace: Tracer = None, label: str = "") -> tuple[list[RationalTerm], int]:
    """Like :func:`reduce_contribution`, also returning the number of steps taken."""
    initial = state.index
    terms: list[RationalTerm] = []
    steps = 0
    while state.index >= 2:
        index = state.index
        term, state = euclid_step(state)
        steps += 1
        terms.append(term)
        emit(trace, "euclid-step", contribution=label, step=steps, index=index,
             next_index=state.index, m1=term.m1, m2=term.m2,
             omega=term.omega, theta=term.theta)
    term = base_case(state)
    steps += 1
    if term is None:
        emit(trace, "base-case", contribution=label, step=steps, index=state.index, zero=1)
    else:
        terms.append(term)
        emit(trace, "base-case", contribution=label, step=steps, index=state.index,
             m1=term.m1, m2=term.m2, omega=term.omega, theta=term.theta)
    if steps > step_bound(initial):
        raise InternalError(f"{steps} steps exceed bound {step_bound(initial)} for index {initial}")
    return terms, steps
