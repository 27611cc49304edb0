"""Explicit constants guarding the modular method for x^p + y^p = z^3:

- the 13 Frobenius characteristic-polynomial candidates at lambda and
  their resultants against x^4 - 9 / x^12 - 9, whose largest prime
  divisors (47 and 44483) bound the reducible case;
- ray class groups of modulus lambda^m computed by direct enumeration;
- the Hasse-interval trace sets A(q);
- assembly of the final bound B_K = max(ell_K, C_K, M_K), where ell_K
  comes from the ingested torsion table and M_K is ingested
  configuration, never derived.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import polys
from .ring import PrimeIdeal, QuadraticField, ResidueRing, unit_image_mod


@dataclass(frozen=True)
class CharPolyCandidate:
    """x^2 - a*x + N, |a| <= floor(2*sqrt(N)): both roots have absolute
    value <= sqrt(N), with equality when the discriminant is <= 0."""

    trace_a: int
    poly: tuple[int, int, int]   # (N, -a, 1), low-to-high


def hasse_charpolys(N: int) -> list[CharPolyCandidate]:
    """All Frobenius characteristic-polynomial candidates for norm N,
    ordered by |trace| then trace."""
    if N < 1:
        raise ValueError("N must be >= 1")
    amax = math.isqrt(4 * N)
    traces = sorted(range(-amax, amax + 1), key=lambda a: (abs(a), a))
    return [CharPolyCandidate(a, (N, -a, 1)) for a in traces]


def resultant(P, Q) -> int:
    """Exact resultant of integer polynomials (Sylvester, rows of P first)."""
    return polys.resultant(P, Q)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk scale only)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # wheel mod 30
    increments = (4, 2, 4, 2, 4, 6, 2, 6)
    d, idx = 7, 0
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += increments[idx]
        idx = (idx + 1) % 8
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class ResultantRow:
    trace_a: int
    resultant: int
    factorization: tuple[tuple[int, int], ...]


_CK_FIXED = {
    "quartic": [-9, 0, 0, 0, 1],                     # x^4 - 9
    "duodecic": [-9] + [0] * 11 + [1],               # x^12 - 9
}


def compute_CK(case: str) -> tuple[int, list[ResultantRow]]:
    """Largest prime divisor over the 13 candidate resultants, plus the
    full audit table.  case: 'quartic' (inertia of order 4, C_K = 47) or
    'duodecic' (order 12, C_K = 44483)."""
    if case not in _CK_FIXED:
        raise ValueError(f"case must be 'quartic' or 'duodecic', got {case!r}")
    fixed = _CK_FIXED[case]
    table = []
    best = 0
    for cand in hasse_charpolys(9):
        r = resultant(fixed, list(cand.poly))
        fact = factorize(r)
        best = max(best, max(fact))
        table.append(ResultantRow(cand.trace_a, r, tuple(fact.items())))
    return best, table


# ---------------------------------------------------------------------------
# ray class groups

@dataclass(frozen=True)
class RayClassGroup:
    field: QuadraticField
    modulus_exponent: int
    abelian_invariants: tuple[int, ...]   # invariant factors, ascending

    @property
    def order(self) -> int:
        return math.prod(self.abelian_invariants)


def _partition_from_counts(p: int, e: int, count_dividing) -> list[int]:
    """Exponent partition of an abelian p-group of order p^e from the
    counts N(j) = #{x : x^(p^j) = 1}: the multiplicity of parts >= j is
    log_p N(j) - log_p N(j-1)."""
    logs = []
    for j in range(e + 1):
        n = count_dividing(p ** j)
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        assert n == 1, "element-order counts inconsistent with a p-group"
        logs.append(k)
    conj = [logs[j] - logs[j - 1] for j in range(1, e + 1)]  # conj[j-1] = #parts >= j
    parts = []
    for j, cnt in enumerate(conj, start=1):
        nxt = conj[j] if j < len(conj) else 0
        parts.extend([j] * (cnt - nxt))
    return sorted(parts, reverse=True)


def ray_class_group(field: QuadraticField, m: int) -> RayClassGroup:
    """Ray class group of modulus lambda^m, lambda = (3).

    Class number one makes this the quotient of (O_K/3^m)^x by the image
    of the global units; invariants come from element-order statistics.
    """
    if not 0 <= m <= 3:
        raise ValueError("modulus exponent must satisfy 0 <= m <= 3")
    if m == 0:
        return RayClassGroup(field, 0, ())
    ring = ResidueRing(field, m)
    units = list(ring.units())
    image = unit_image_mod(field, m)
    order = len(units) // len(image)
    if order == 1:
        return RayClassGroup(field, m, ())

    def count_dividing(t: int) -> int:
        hit = sum(1 for u in units if ring.pow(u, t) in image)
        assert hit % len(image) == 0
        return hit // len(image)

    partitions: dict[int, list[int]] = {}
    for p, e in factorize(order).items():
        partitions[p] = _partition_from_counts(p, e, count_dividing)
    # combine p-partitions, largest exponents together, into invariant factors
    width = max(len(parts) for parts in partitions.values())
    factors = []
    for i in range(width):
        d = 1
        for p, parts in partitions.items():
            if i < len(parts):
                d *= p ** parts[i]
        factors.append(d)
    return RayClassGroup(field, m, tuple(sorted(factors)))


# ---------------------------------------------------------------------------
# Hasse trace sets and bound assembly

def set_Aq(q: PrimeIdeal) -> list[int]:
    """Integers a with |a| <= floor(2*sqrt(Norm q)) and
    a = Norm(q) + 1 mod 3: the possible Frobenius traces of a curve with
    a rational 3-torsion point."""
    if q.residue_char == 3:
        raise ValueError("A(q) is undefined at lambda")
    n = q.norm
    amax = math.isqrt(4 * n)
    target = (n + 1) % 3
    return [a for a in range(-amax, amax + 1) if a % 3 == target]


# Ingested: primes of nontrivial torsion in the abelianized level groups
# at lambda-power levels 1..3, per field (precomputed externally; not
# derived here).
_TORSION_TABLE = {
    1:  {"levels": (1, 2, 3), "torsion_primes": (2, 3)},
    7:  {"levels": (1, 2, 3), "torsion_primes": (2, 3)},
    19: {"levels": (1, 2, 3), "torsion_primes": (2, 3, 5)},
    43: {"levels": (1, 2, 3), "torsion_primes": (2, 3, 5, 59, 67, 199)},
    67: {"levels": (1, 2, 3), "torsion_primes": (2, 3, 5, 17, 19, 37, 47, 67)},
}


@dataclass(frozen=True)
class TorsionRow:
    d: int
    levels: tuple[int, ...]
    torsion_primes: tuple[int, ...]

    @property
    def ell(self) -> int:
        return max(self.torsion_primes)


def torsion_table() -> dict[int, TorsionRow]:
    return {d: TorsionRow(d, row["levels"], row["torsion_primes"])
            for d, row in _TORSION_TABLE.items()}


C_K_SOLVABLE = 47
C_K_UNSOLVABLE = 44483


@dataclass(frozen=True)
class BoundsReport:
    field: QuadraticField
    ell_K: int
    C_K: int
    M_K: int | None
    B_K_case1: int
    B_K_case2: int | None


def assemble_BK(field: QuadraticField, M_K: int | None,
                cubic_solvable: bool) -> BoundsReport:
    """Case I bound max(ell_K, C_K); Case II additionally maxes with the
    ingested M_K when present."""
    ell = torsion_table()[field.d].ell
    ck = C_K_SOLVABLE if cubic_solvable else C_K_UNSOLVABLE
    case1 = max(ell, ck)
    case2 = max(case1, M_K) if M_K is not None else None
    return BoundsReport(field=field, ell_K=ell, C_K=ck, M_K=M_K,
                        B_K_case1=case1, B_K_case2=case2)
