"""Exact arithmetic in the rings of integers of Q(sqrt(-d)), d in {1, 7, 19, 43, 67}.

Elements are stored as integer coordinate pairs (x, y) over the integral
basis {1, omega}, where omega = i for d = 1 and omega = (1 + sqrt(-d))/2
for d = 3 mod 4.  All five supported fields have class number one and 3
inert, so lam = 3*O_K is the unique prime above 3 and ideals can always
be named by a principal generator.

Everything here is immutable and pure; instances are safe to share
between threads.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator

SUPPORTED_D = (1, 7, 19, 43, 67)

#: val_lambda(0); a distinguished token, never a large integer.
INFINITE_VALUATION = math.inf


class FieldMismatchError(ValueError):
    """Operands live in different quadratic fields."""


class OmegaConvention(enum.Enum):
    GAUSSIAN = "gaussian"      # omega = sqrt(-d), omega^2 = -d  (d = 1: omega = i)
    HALF_TRACE = "half_trace"  # omega = (1 + sqrt(-d))/2, omega^2 = omega - (1+d)/4


class SplitType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class QuadraticField:
    """One of the five supported imaginary quadratic fields Q(sqrt(-d)).

    `adhoc=True` descriptors (any squarefree d) exist only so that
    splitting questions can be asked about excluded fields such as
    d = 2 and d = 11; they must not be used for element arithmetic
    beyond what splitting_type needs.
    """

    d: int
    adhoc: bool = False

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")
        if not self.adhoc and self.d not in SUPPORTED_D:
            raise ValueError(
                f"unsupported field d={self.d}; supported: {SUPPORTED_D} "
                "(use QuadraticField(d, adhoc=True) for splitting queries only)")

    @property
    def disc(self) -> int:
        if self.d % 4 == 3:
            return -self.d
        return -4 * self.d

    @property
    def omega_convention(self) -> OmegaConvention:
        if self.d % 4 == 3:
            return OmegaConvention.HALF_TRACE
        return OmegaConvention.GAUSSIAN

    @property
    def omega_trace(self) -> int:
        return 1 if self.omega_convention is OmegaConvention.HALF_TRACE else 0

    @property
    def omega_norm(self) -> int:
        if self.omega_convention is OmegaConvention.HALF_TRACE:
            return (1 + self.d) // 4
        return self.d

    @property
    def unit_count(self) -> int:
        return 4 if self.d == 1 else 2

    def units(self) -> tuple["RingElement", ...]:
        one = self.element(1, 0)
        if self.d == 1:
            i = self.element(0, 1)
            return (one, -one, i, -i)
        return (one, -one)

    def element(self, x: int, y: int) -> "RingElement":
        return RingElement(x, y, self)

    def zero(self) -> "RingElement":
        return self.element(0, 0)

    def one(self) -> "RingElement":
        return self.element(1, 0)

    def __repr__(self):
        return f"QuadraticField(d={self.d})"


@dataclass(frozen=True)
class RingElement:
    """x + y*omega with exact integer coordinates."""

    x: int
    y: int
    field: QuadraticField

    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(
                f"mixed fields: d={self.field.d} vs d={other.field.d}")

    def __add__(self, other):
        self._check(other)
        return RingElement(self.x + other.x, self.y + other.y, self.field)

    def __sub__(self, other):
        self._check(other)
        return RingElement(self.x - other.x, self.y - other.y, self.field)

    def __neg__(self):
        return RingElement(-self.x, -self.y, self.field)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.x * other, self.y * other, self.field)
        self._check(other)
        # (x1 + y1 w)(x2 + y2 w) with w^2 = t*w - n, t = Tr(w), n = N(w)
        t = self.field.omega_trace
        n = self.field.omega_norm
        ww = self.y * other.y
        return RingElement(
            self.x * other.x - n * ww,
            self.x * other.y + self.y * other.x + t * ww,
            self.field)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "RingElement":
        if self.field.omega_convention is OmegaConvention.HALF_TRACE:
            return RingElement(self.x + self.y, -self.y, self.field)
        return RingElement(self.x, -self.y, self.field)

    def norm(self) -> int:
        t = self.field.omega_trace
        n = self.field.omega_norm
        return self.x * self.x + t * self.x * self.y + n * self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def associates(self) -> tuple["RingElement", ...]:
        return tuple(self * u for u in self.field.units())

    def __str__(self):
        return f"{self.x},{self.y}"

    def __repr__(self):
        return f"RingElement({self.x}, {self.y}, d={self.field.d})"


def element_arith(z: RingElement, w: RingElement, op: str) -> RingElement:
    """add | sub | mul on two elements of the same field."""
    if op == "add":
        return z + w
    if op == "sub":
        return z - w
    if op == "mul":
        return z * w
    raise ValueError(f"unknown op {op!r}")


def norm(z: RingElement) -> int:
    return z.norm()


def parse_element(text: str, field: QuadraticField) -> RingElement:
    """Parse the `x,y` element syntax (signed decimal, no whitespace)."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"element must be 'x,y', got {text!r}")
    try:
        x, y = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"non-integer element coordinates in {text!r}") from None
    return field.element(x, y)


def val_lambda(z: RingElement):
    """lam-adic valuation, lam = (3).  Returns INFINITE_VALUATION for 0.

    Valid coordinatewise because 3 is inert and {1, omega} is an
    integral basis: 3^k | z  iff  3^k divides both coordinates.
    """
    if z.is_zero():
        return INFINITE_VALUATION
    k = 0
    x, y = z.x, z.y
    while x % 3 == 0 and y % 3 == 0:
        x //= 3
        y //= 3
        k += 1
    return k


def exact_divide(z: RingElement, w: RingElement) -> RingElement | None:
    """z / w when w divides z in O_K, else None."""
    if w.is_zero():
        raise ZeroDivisionError("division by zero element")
    n = w.norm()
    num = z * w.conjugate()
    if num.x % n or num.y % n:
        return None
    return RingElement(num.x // n, num.y // n, z.field)


# ---------------------------------------------------------------------------
# rational-prime utilities

def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (valid far beyond any size used here)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = bytearray(len(sieve[p * p:: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def splitting_type(field: QuadraticField, p: int) -> SplitType:
    """How the rational prime p decomposes in the field."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    disc = field.disc
    if disc % p == 0:
        return SplitType.RAMIFIED
    if p == 2:
        # kronecker(disc, 2) for odd disc
        return SplitType.SPLIT if disc % 8 in (1, 7) else SplitType.INERT
    legendre = pow(disc % p, (p - 1) // 2, p)
    return SplitType.SPLIT if legendre == 1 else SplitType.INERT


# ---------------------------------------------------------------------------
# prime ideals

def canonical_associate(z: RingElement) -> RingElement:
    """Deterministic representative among the associates of z.

    Rule: restrict to associates with x >= 0 and take the (x, y)
    lexicographic minimum.  Purely a tie-breaking convention for
    reproducible output; any associate generates the same ideal.
    """
    if z.is_zero():
        return z
    candidates = [a for a in z.associates() if a.x >= 0]
    return min(candidates, key=lambda a: (a.x, a.y))


def same_ideal(z: RingElement, w: RingElement) -> bool:
    return canonical_associate(z) == canonical_associate(w)


@dataclass(frozen=True)
class PrimeIdeal:
    """A nonzero prime ideal, named by its canonical principal generator."""

    residue_char: int
    generator: RingElement
    norm: int
    split_type: SplitType

    @property
    def field(self) -> QuadraticField:
        return self.generator.field

    @staticmethod
    def from_generator(g: RingElement) -> "PrimeIdeal":
        n = g.norm()
        can = canonical_associate(g)
        if is_prime(n):
            p = n
            st = splitting_type(g.field, p)
            if st is SplitType.INERT:
                raise ValueError(f"norm {n} inconsistent with {p} inert")
            return PrimeIdeal(p, can, n, st)
        r = math.isqrt(n)
        if r * r == n and is_prime(r) and splitting_type(g.field, r) is SplitType.INERT:
            return PrimeIdeal(r, can, n, SplitType.INERT)
        raise ValueError(f"element {g} (norm {n}) does not generate a prime ideal")

    def is_lambda(self) -> bool:
        return self.residue_char == 3

    def __str__(self):
        return f"({self.generator})"


def lambda_ideal(field: QuadraticField) -> PrimeIdeal:
    return PrimeIdeal.from_generator(field.element(3, 0))


def _norm_equation_solutions(field: QuadraticField, p: int) -> list[RingElement]:
    """All elements of norm exactly p, by exhausting the finitely many
    admissible y and checking each column for a square.

    Class number one guarantees a solution whenever the ideal has one.
    Gaussian basis: x^2 + d*y^2 = p.  Half-trace basis: multiply by 4,
    (2x + y)^2 + d*y^2 = 4p with x integral iff the square root has the
    parity of y.
    """
    d = field.d
    out = []
    if field.omega_convention is OmegaConvention.GAUSSIAN:
        ymax = math.isqrt(p // d)
        for y in range(-ymax, ymax + 1):
            r = p - d * y * y
            s = math.isqrt(r)
            if s * s != r:
                continue
            for x in {s, -s}:
                out.append(field.element(x, y))
    else:
        ymax = math.isqrt(4 * p // d)
        for y in range(-ymax, ymax + 1):
            r = 4 * p - d * y * y
            s = math.isqrt(r)
            if s * s != r or (s - y) % 2 != 0:
                continue
            for t in {s, -s}:
                out.append(field.element((t - y) // 2, y))
    return out


def primes_up_to_norm(field: QuadraticField, bound: int) -> list[PrimeIdeal]:
    """All prime ideals of norm <= bound, canonical generators,
    ordered by (norm, x, y)."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    found: dict[RingElement, PrimeIdeal] = {}
    for p in primes_up_to(bound):
        st = splitting_type(field, p)
        if st is SplitType.INERT:
            if p * p <= bound:
                g = canonical_associate(field.element(p, 0))
                found[g] = PrimeIdeal(p, g, p * p, st)
            continue
        # split or ramified: one or two ideals of norm p
        for sol in _norm_equation_solutions(field, p):
            g = canonical_associate(sol)
            if g not in found:
                found[g] = PrimeIdeal(p, g, p, st)
    return sorted(found.values(), key=lambda q: (q.norm, q.generator.x, q.generator.y))


def ideal_valuation(z: RingElement, q: PrimeIdeal) -> int:
    """q-adic valuation of a nonzero element (exact division loop)."""
    if z.is_zero():
        raise ValueError("valuation of 0 requested")
    if z.field != q.field:
        raise FieldMismatchError("element and ideal from different fields")
    k = 0
    cur = z
    while True:
        nxt = exact_divide(cur, q.generator)
        if nxt is None:
            return k
        cur = nxt
        k += 1


# ---------------------------------------------------------------------------
# finite residue rings O_K / 3^m

@dataclass(frozen=True)
class ResidueRing:
    """O_K / 3^m with coordinatewise representatives 0 <= x, y < 3^m."""

    field: QuadraticField
    modulus_exponent: int

    def __post_init__(self):
        if not 1 <= self.modulus_exponent <= 4:
            raise ValueError("modulus exponent must satisfy 1 <= m <= 4")

    @property
    def modulus(self) -> int:
        return 3 ** self.modulus_exponent

    @property
    def cardinality(self) -> int:
        return 9 ** self.modulus_exponent

    def reduce(self, z: RingElement) -> tuple[int, int]:
        if z.field != self.field:
            raise FieldMismatchError("element from a different field")
        return (z.x % self.modulus, z.y % self.modulus)

    def elements(self) -> Iterator[tuple[int, int]]:
        M = self.modulus
        for x in range(M):
            for y in range(M):
                yield (x, y)

    def add(self, u, v):
        M = self.modulus
        return ((u[0] + v[0]) % M, (u[1] + v[1]) % M)

    def sub(self, u, v):
        M = self.modulus
        return ((u[0] - v[0]) % M, (u[1] - v[1]) % M)

    def neg(self, u):
        M = self.modulus
        return (-u[0] % M, -u[1] % M)

    def mul(self, u, v):
        M = self.modulus
        t = self.field.omega_trace
        n = self.field.omega_norm
        ww = u[1] * v[1]
        return ((u[0] * v[0] - n * ww) % M,
                (u[0] * v[1] + u[1] * v[0] + t * ww) % M)

    def pow(self, u, k: int):
        result = (1 % self.modulus, 0)
        base = u
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def norm_residue(self, u) -> int:
        t = self.field.omega_trace
        n = self.field.omega_norm
        return (u[0] * u[0] + t * u[0] * u[1] + n * u[1] * u[1]) % self.modulus

    def is_unit(self, u) -> bool:
        # unit iff norm is a unit mod 3^m iff 3 does not divide the norm
        return self.norm_residue(u) % 3 != 0

    def units(self) -> Iterator[tuple[int, int]]:
        return (u for u in self.elements() if self.is_unit(u))

    def unit_count(self) -> int:
        return 8 * 9 ** (self.modulus_exponent - 1)


def residue_ring(field: QuadraticField, m: int) -> ResidueRing:
    return ResidueRing(field, m)


def unit_image_mod(field: QuadraticField, m: int) -> frozenset[tuple[int, int]]:
    """Image of the global unit group in (O_K / 3^m)^x."""
    ring = ResidueRing(field, m)
    return frozenset(ring.reduce(u) for u in field.units())


# ---------------------------------------------------------------------------
# residue fields O_K / q for point counting

class ResidueField:
    """The finite field O_K / q.

    Inert q = (p): elements are coordinate pairs mod p (the field with
    p^2 elements).  Split/ramified q of norm p: elements are integers
    mod p, with omega mapped to the root t of its minimal polynomial
    mod p singled out by q | (omega - t).
    """

    def __init__(self, q: PrimeIdeal):
        self.q = q
        self.p = q.residue_char
        self.size = q.norm
        self.field = q.field
        if q.split_type is SplitType.INERT:
            self.omega_image = None
        else:
            self.omega_image = self._find_omega_image()

    def _find_omega_image(self) -> int:
        fld, p = self.field, self.p
        t_tr, t_nm = fld.omega_trace, fld.omega_norm
        omega = fld.element(0, 1)
        for t in range(p):
            if (t * t - t_tr * t + t_nm) % p == 0:
                if exact_divide(omega - fld.element(t, 0), self.q.generator) is not None:
                    return t
        raise AssertionError(f"no residue image of omega mod {self.q}")

    def reduce(self, z: RingElement):
        if z.field != self.field:
            raise FieldMismatchError("element from a different field")
        if self.omega_image is None:
            return (z.x % self.p, z.y % self.p)
        return (z.x + z.y * self.omega_image) % self.p

    def elements(self):
        if self.omega_image is None:
            for x in range(self.p):
                for y in range(self.p):
                    yield (x, y)
        else:
            yield from range(self.p)

    def add(self, u, v):
        if self.omega_image is None:
            return ((u[0] + v[0]) % self.p, (u[1] + v[1]) % self.p)
        return (u + v) % self.p

    def mul(self, u, v):
        if self.omega_image is None:
            t = self.field.omega_trace
            n = self.field.omega_norm
            ww = u[1] * v[1]
            return ((u[0] * v[0] - n * ww) % self.p,
                    (u[0] * v[1] + u[1] * v[0] + t * ww) % self.p)
        return (u * v) % self.p

    def zero(self):
        return (0, 0) if self.omega_image is None else 0
