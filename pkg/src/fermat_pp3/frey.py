"""The Frey curve Y^2 + 3c*XY + b^p*Y = X^3 of a putative solution
(a, b, c) to x^p + y^p = z^3, and its local behaviour.

Invariants are computed from the Weierstrass coefficients via the
standard b-invariant formulas; when the defining relation
a^p + b^p = c^3 actually holds they are cross-checked against the
closed forms c4 = 9c(9a^p + b^p), c6 = -27(27c^6 - 36c^3 b^p + 8b^{2p})
and delta = 27(a b^3)^p.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .ring import (
    INFINITE_VALUATION,
    PrimeIdeal,
    RingElement,
    ideal_valuation,
    is_prime,
    lambda_ideal,
    residue_ring,
    val_lambda,
)


class FreyError(ValueError):
    pass


class NotSemistableError(FreyError):
    """q | delta and q | c4 away from lambda: the input cannot come from
    a primitive solution."""


class InternalConsistencyError(AssertionError):
    """Closed-form and Weierstrass-side invariants disagree although the
    defining relation holds."""


class ReductionType(enum.Enum):
    GOOD = "good"
    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class FreyInvariants:
    a1: RingElement          # 3c
    a3: RingElement          # b^p
    c4: RingElement
    c6: RingElement
    delta: RingElement
    j_num: RingElement       # c4^3
    j_den: RingElement       # delta
    exponent_p: int
    relation_holds: bool     # a^p + b^p == c^3
    degenerate: bool         # delta == 0
    trivial: bool            # a*b*c == 0


@dataclass(frozen=True)
class LocalClassification:
    prime: PrimeIdeal | None
    reduction: ReductionType
    conductor_exponent: int | frozenset
    delta_valuation: int | None = None
    p_divides_delta_valuation: bool | None = None
    pot_mult: bool | None = None
    p_divides_inertia_image_order: bool | None = None


def frey_invariants(a: RingElement, b: RingElement, c: RingElement,
                    p: int) -> FreyInvariants:
    field = a.field
    if b.field != field or c.field != field:
        raise FreyError("a, b, c must live in the same field")
    if not (is_prime(p) and p % 2 == 1):
        raise FreyError(f"exponent must be an odd prime, got {p}")

    bp = b ** p
    a1 = c * 3
    a3 = bp
    b2 = a1 * a1
    b4 = a1 * a3                    # 2*a4 + a1*a3 with a4 = 0
    b6 = a3 * a3                    # a3^2 + 4*a6 with a6 = 0
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2 * b2 * b2) + 36 * (b2 * b4) - 216 * b6
    delta = -8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6)

    ap = a ** p
    relation = (ap + bp == c ** 3)

    c6_closed = -27 * (27 * c ** 6 - 36 * (c ** 3 * bp) + 8 * (bp * bp))
    if c6_closed != c6:
        raise InternalConsistencyError("c6 closed form disagrees")
    if relation:
        c4_closed = 9 * (c * (9 * ap + bp))
        delta_closed = 27 * ((a * b ** 3) ** p)
        if c4_closed != c4 or delta_closed != delta:
            raise InternalConsistencyError(
                "closed-form invariants disagree with the Weierstrass side")

    zero = field.zero()
    return FreyInvariants(
        a1=a1, a3=a3, c4=c4, c6=c6, delta=delta,
        j_num=c4 ** 3, j_den=delta,
        exponent_p=p,
        relation_holds=relation,
        degenerate=(delta == zero),
        trivial=((a * b * c) == zero))


def classify_away_from_lambda(inv: FreyInvariants,
                              q: PrimeIdeal) -> LocalClassification:
    """Reduction type at a prime q with residue characteristic != 3.

    The model is minimal and semistable at every such q: either good
    reduction, or multiplicative with v_q(delta) divisible by p.
    """
    if q.residue_char == 3:
        raise FreyError("q must not lie above 3; use lambda_exponent")
    if inv.degenerate:
        raise FreyError("degenerate invariants (delta = 0)")
    v_delta = ideal_valuation(inv.delta, q)
    if v_delta == 0:
        return LocalClassification(prime=q, reduction=ReductionType.GOOD,
                                   conductor_exponent=0, delta_valuation=0)
    if ideal_valuation(inv.c4, q) > 0:
        raise NotSemistableError(
            f"q = {q} divides both delta and c4 (non-primitive input)")
    return LocalClassification(
        prime=q, reduction=ReductionType.MULTIPLICATIVE,
        conductor_exponent=1, delta_valuation=v_delta,
        p_divides_delta_valuation=(v_delta % inv.exponent_p == 0))


def lambda_exponent(a: RingElement, b: RingElement, c: RingElement,
                    p: int) -> LocalClassification:
    """Conductor exponent at lambda = (3).

    When lambda | ab the model is non-minimal; after X = 9x, Y = 27y the
    minimal discriminant has v = 3 + p*v_lambda(a*b^3) - 12, giving good
    reduction (v = 0) or multiplicative (v > 0).  When lambda does not
    divide ab the curve is additive with exponent in {2, 3}.
    """
    if not (is_prime(p) and p > 2):
        raise FreyError(f"exponent must be an odd prime, got {p}")
    if a.is_zero() or b.is_zero():
        raise FreyError("degenerate input: a*b = 0")
    lam = lambda_ideal(a.field)
    va, vb = val_lambda(a), val_lambda(b)
    if va + vb == 0:
        return LocalClassification(prime=lam, reduction=ReductionType.ADDITIVE,
                                   conductor_exponent=frozenset({2, 3}))
    v_min = 3 + p * (va + 3 * vb) - 12
    if v_min < 0:
        raise FreyError(
            f"non-minimal bookkeeping: v_lambda(delta_min) = {v_min} < 0, "
            "impossible for a primitive solution")
    if v_min == 0:
        return LocalClassification(prime=lam, reduction=ReductionType.GOOD,
                                   conductor_exponent=0, delta_valuation=0)
    return LocalClassification(prime=lam,
                               reduction=ReductionType.MULTIPLICATIVE,
                               conductor_exponent=1, delta_valuation=v_min)


def j_valuation_at_lambda(b: RingElement, p: int) -> tuple[int, bool, bool]:
    """(v_lambda(j), potentially multiplicative, p in inertia image order)
    for the lambda | b case: v = 3 - 3pk with k = v_lambda(b) >= 1."""
    k = val_lambda(b)
    if k is INFINITE_VALUATION or k == 0:
        raise FreyError("requires v_lambda(b) >= 1 (otherwise use cubic_test)")
    v = 3 - 3 * p * k
    pot_mult = v < 0
    return v, pot_mult, pot_mult and (v % p != 0)


def cubic_test(b: RingElement, c: RingElement, p: int) -> bool:
    """Does y^3 + 24*b^p*c*y + 16*b^{2p} = 0 have a root mod lambda^2?

    Exhaustive over the 81 residues mod 9.  Requires b and c to be
    units at lambda (the additive case of a primitive solution).
    """
    if b.is_zero() or c.is_zero() or val_lambda(b * c) != 0:
        raise FreyError("cubic_test requires v_lambda(b) = v_lambda(c) = 0")
    R = residue_ring(b.field, 2)
    bred = R.reduce(b)
    cred = R.reduce(c)
    bp = R.pow(bred, p)
    lin = R.mul(R.mul(bp, cred), (24 % 9, 0))
    const = R.mul(R.mul(bp, bp), (16 % 9, 0))
    zero = (0, 0)
    for y in R.elements():
        val = R.add(R.add(R.mul(R.mul(y, y), y), R.mul(lin, y)), const)
        if val == zero:
            return True
    return False
