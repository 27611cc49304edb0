"""Newform elimination from ingested Bianchi-eigenform eigenvalue data.

For each form f with eigenvalue field Q_f and each prime q != lambda of
norm < 50, the quantity

    B_{f,q} = Norm(q) * ((Norm(q)+1)^2 - f(T_q)^2) * prod_{a in A(q)} (a - f(T_q))

must be divisible by any prime of Q_f over a surviving exponent p, so p
divides C_f = gcd_q |Norm_{Q_f/Q}(B_{f,q})|.  C_f = 0 across all q marks
a CM form (ruled out separately by j-invariant integrality); otherwise
every surviving p > B_K must divide C_f, and no prime divisor > B_K
means the form is eliminated outright.

Eigenvalue tables are produced externally and ingested through the
line-oriented format documented in parse_forms; fixture_from_curve
synthesizes rational-eigenvalue records from an elliptic curve by
brute-force point counting, giving an independent oracle (a curve with
a 3-torsion point must survive its own elimination with C_f = 0).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import IO, Iterable

from . import polys
from .bounds import factorize, set_Aq
from .ring import (
    PrimeIdeal,
    QuadraticField,
    ResidueField,
    RingElement,
    ideal_valuation,
    primes_up_to_norm,
)


class EliminationDataError(ValueError):
    """Malformed or inconsistent ingested data."""


class ParseError(EliminationDataError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# ---------------------------------------------------------------------------
# arithmetic in the eigenvalue field Q_f = Q[x]/(qf_poly)

class CoeffField:
    """Exact arithmetic on coordinate vectors over the power basis of a
    defining polynomial (which is x itself when Q_f = Q)."""

    def __init__(self, qf_poly: Iterable[int]):
        poly = polys.normalize(list(qf_poly))
        if polys.degree(poly) < 1:
            raise EliminationDataError("qf polynomial must have degree >= 1")
        self.poly = tuple(poly)
        self.degree = polys.degree(poly)

    def element(self, coords: Iterable[Fraction]) -> tuple[Fraction, ...]:
        vec = [Fraction(c) for c in coords]
        if len(vec) > self.degree:
            raise EliminationDataError(
                f"{len(vec)} coordinates for a degree-{self.degree} field")
        vec += [Fraction(0)] * (self.degree - len(vec))
        return tuple(vec)

    def rational(self, r) -> tuple[Fraction, ...]:
        return self.element([Fraction(r)])

    @property
    def zero(self):
        return self.rational(0)

    def add(self, u, v):
        return tuple(a + b for a, b in zip(u, v))

    def sub(self, u, v):
        return tuple(a - b for a, b in zip(u, v))

    def mul(self, u, v):
        prod = polys.mul(list(u), list(v))
        _, rem = polys.divmod_exact(prod, list(self.poly))
        return self.element(rem)

    def norm(self, u) -> Fraction:
        """Norm to Q: Res(qf, Z) / lc(qf)^deg(Z) for the representative Z."""
        z = polys.normalize(list(u))
        if not z:
            return Fraction(0)
        r = polys.resultant([Fraction(c) for c in self.poly],
                            [Fraction(c) for c in z])
        return r / Fraction(self.poly[-1]) ** polys.degree(z)


def norm_Qf(coords, qf_poly) -> Fraction:
    return CoeffField(qf_poly).norm(CoeffField(qf_poly).element(coords))


# ---------------------------------------------------------------------------
# records and ingestion

@dataclass(frozen=True)
class EigenformRecord:
    field: QuadraticField
    level_exponent: int
    form_id: str
    qf_poly: tuple[int, ...]
    eigenvalues: "tuple[tuple[PrimeIdeal, tuple[Fraction, ...]], ...]"

    def eigenvalue_map(self) -> dict[PrimeIdeal, tuple[Fraction, ...]]:
        return dict(self.eigenvalues)

    @property
    def coeff_field(self) -> CoeffField:
        return CoeffField(self.qf_poly)


def _embedding_abs_values(qf_poly, coords) -> list[float]:
    """|sigma(z)| over all complex embeddings of Q_f (numeric)."""
    import numpy as np

    roots = np.roots([float(c) for c in reversed(qf_poly)])
    vals = []
    for root in roots:
        acc = 0j
        for c in reversed(coords):
            acc = acc * root + complex(Fraction(c))
        vals.append(abs(acc))
    return vals


HASSE_TOLERANCE = 1e-6


def _parse_rational(tok: str) -> Fraction:
    if "/" in tok:
        num, den = tok.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(tok))


def parse_forms(stream: IO[str] | str) -> list[EigenformRecord]:
    """Ingest eigenform records.

    Line format (UTF-8, `#` starts a comment):

        field d=<d> level lambda^<e>
        form <id> qf <c0,c1,...,cn>
        ap <x>,<y> = <r0,r1,...>

    Primes are named by any generator; coordinates are canonicalized on
    ingest.  Eigenvalue coordinates are rationals (`num/den`) over the
    power basis of the form's qf polynomial.  Every eigenvalue must pass
    the Hasse bound under all complex embeddings (within 1e-6), the
    standard sanity check for malformed tables.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    records: list[EigenformRecord] = []
    seen_keys: set[tuple[int, int, str]] = set()
    field: QuadraticField | None = None
    level: int | None = None
    current: dict | None = None

    def flush(line_no):
        nonlocal current
        if current is None:
            return
        if not current["eigenvalues"]:
            raise ParseError(line_no, f"form {current['id']!r} has no ap rows")
        records.append(EigenformRecord(
            field=field, level_exponent=level, form_id=current["id"],
            qf_poly=current["qf"],
            eigenvalues=tuple(sorted(
                current["eigenvalues"].items(),
                key=lambda kv: (kv[0].norm, kv[0].generator.x, kv[0].generator.y)))))
        current = None

    line_no = 0
    for raw in stream:
        line_no += 1
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "field":
            flush(line_no)
            try:
                kv = dict(t.split("=", 1) for t in tokens[1:] if "=" in t)
                d = int(kv["d"])
                lv = tokens[tokens.index("level") + 1]
                if not lv.startswith("lambda^"):
                    raise ValueError
                e = int(lv.split("^", 1)[1])
            except (KeyError, ValueError, IndexError):
                raise ParseError(line_no, f"bad field header {line!r}") from None
            try:
                field = QuadraticField(d)
            except ValueError as ex:
                raise ParseError(line_no, str(ex)) from None
            if e not in (1, 2, 3):
                raise ParseError(line_no, f"level exponent must be 1..3, got {e}")
            level = e
        elif tokens[0] == "form":
            if field is None:
                raise ParseError(line_no, "form before any field header")
            flush(line_no)
            if len(tokens) != 4 or tokens[2] != "qf":
                raise ParseError(line_no, f"bad form line {line!r}")
            form_id = tokens[1]
            try:
                qf = tuple(int(t) for t in tokens[3].split(","))
            except ValueError:
                raise ParseError(line_no, f"bad qf coefficients {tokens[3]!r}") from None
            if polys.degree(list(qf)) < 1:
                raise ParseError(line_no, "qf polynomial must have degree >= 1")
            if polys.degree(list(qf)) <= 4:
                if not polys.is_irreducible(list(qf)):
                    raise ParseError(line_no, f"qf polynomial {tokens[3]} is reducible")
            else:
                import warnings
                warnings.warn(
                    f"line {line_no}: qf degree > 4 accepted without an "
                    "irreducibility check", stacklevel=2)
            key = (field.d, level, form_id)
            if key in seen_keys:
                raise ParseError(line_no, f"duplicate form {key}")
            seen_keys.add(key)
            current = {"id": form_id, "qf": qf, "eigenvalues": {}}
        elif tokens[0] == "ap":
            if current is None:
                raise ParseError(line_no, "ap row before any form line")
            if len(tokens) != 4 or tokens[2] != "=":
                raise ParseError(line_no, f"bad ap line {line!r}")
            try:
                x, y = (int(t) for t in tokens[1].split(","))
            except ValueError:
                raise ParseError(line_no, f"bad prime coordinates {tokens[1]!r}") from None
            try:
                q = PrimeIdeal.from_generator(field.element(x, y))
            except ValueError as ex:
                raise ParseError(line_no, str(ex)) from None
            if q.is_lambda():
                raise ParseError(line_no, "eigenvalues at lambda are not used")
            try:
                coords = tuple(_parse_rational(t) for t in tokens[3].split(","))
            except ValueError:
                raise ParseError(line_no, f"bad eigenvalue {tokens[3]!r}") from None
            F = CoeffField(current["qf"])
            vec = F.element(coords)
            bound = 2 * math.sqrt(q.norm) + HASSE_TOLERANCE
            if any(v > bound for v in _embedding_abs_values(current["qf"], vec)):
                raise ParseError(
                    line_no,
                    f"eigenvalue at {q} violates the Hasse bound |a| <= 2*sqrt({q.norm})")
            if q in current["eigenvalues"]:
                raise ParseError(line_no, f"duplicate eigenvalue for {q}")
            current["eigenvalues"][q] = vec
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
    flush(line_no + 1)
    return records


def format_records(records: Iterable[EigenformRecord]) -> str:
    """Serialize records in the parse_forms line format (round-trip safe)."""
    lines = []
    last_header = None
    for rec in records:
        header = (rec.field.d, rec.level_exponent)
        if header != last_header:
            lines.append(f"field d={rec.field.d} level lambda^{rec.level_exponent}")
            last_header = header
        lines.append(f"form {rec.form_id} qf {','.join(str(c) for c in rec.qf_poly)}")
        for q, vec in rec.eigenvalues:
            coords = ",".join(
                str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
                for c in vec)
            lines.append(f"ap {q.generator.x},{q.generator.y} = {coords}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# elimination quantities

def B_fq(form: EigenformRecord, q: PrimeIdeal) -> tuple[Fraction, ...]:
    """Norm(q) * ((Norm(q)+1)^2 - e^2) * prod_{a in A(q)} (a - e), exactly
    in Q_f, where e is the form's eigenvalue at q."""
    if q.residue_char == 3:
        raise ValueError("B_fq is undefined at lambda")
    ev = form.eigenvalue_map()
    if q not in ev:
        raise EliminationDataError(f"form {form.form_id!r} has no eigenvalue at {q}")
    F = form.coeff_field
    e = ev[q]
    n = q.norm
    acc = F.sub(F.rational((n + 1) ** 2), F.mul(e, e))
    for a in set_Aq(q):
        acc = F.mul(acc, F.sub(F.rational(a), e))
    return tuple(c * n for c in acc)


def C_f(form: EigenformRecord, primes: Iterable[PrimeIdeal]) -> int:
    """gcd over q of |numerator of Norm(B_{f,q})|; zeros are ignored
    (gcd(0, n) = n), so 0 means every B_{f,q} vanished (the CM signal)."""
    primes = list(primes)
    if not primes:
        raise ValueError("prime set must be nonempty")
    F = form.coeff_field
    values = []
    for q in primes:
        if q.residue_char == 3:
            raise ValueError("lambda must not be in the elimination prime set")
        values.append(abs(F.norm(B_fq(form, q)).numerator))
    return reduce(math.gcd, values, 0)


@dataclass(frozen=True)
class EliminationVerdict:
    kind: str                       # cm_candidate | eliminated | survivors
    bound: int | None = None
    survivors: tuple[int, ...] = ()

    def __str__(self):
        if self.kind == "cm_candidate":
            return "CM candidate (C_f = 0; ruled out by j-invariant integrality)"
        if self.kind == "eliminated":
            return f"eliminated below {self.bound}"
        return f"SURVIVORS {list(self.survivors)}"


@dataclass(frozen=True)
class EliminationReport:
    form_id: str
    per_prime: tuple[tuple[PrimeIdeal, int], ...]
    c_f: int
    prime_divisors: tuple[int, ...]
    verdict: EliminationVerdict


def verdict(form: EigenformRecord, B_K: int,
            primes: Iterable[PrimeIdeal]) -> EliminationReport:
    primes = list(primes)
    F = form.coeff_field
    per_prime = tuple(
        (q, abs(F.norm(B_fq(form, q)).numerator)) for q in primes)
    cf = reduce(math.gcd, (v for _, v in per_prime), 0)
    if cf == 0:
        return EliminationReport(form.form_id, per_prime, 0, (),
                                 EliminationVerdict("cm_candidate"))
    divisors = tuple(factorize(cf)) if cf > 1 else ()
    survivors = tuple(p for p in divisors if p > B_K)
    if survivors:
        return EliminationReport(form.form_id, per_prime, cf, divisors,
                                 EliminationVerdict("survivors", B_K, survivors))
    return EliminationReport(form.form_id, per_prime, cf, divisors,
                             EliminationVerdict("eliminated", B_K))


def default_prime_set(field: QuadraticField, norm_bound: int = 50) -> list[PrimeIdeal]:
    """All q != lambda with Norm(q) < norm_bound (strict)."""
    return [q for q in primes_up_to_norm(field, norm_bound - 1)
            if q.residue_char != 3]


# ---------------------------------------------------------------------------
# curve-derived fixtures (test oracle)

class BadReductionError(ValueError):
    def __init__(self, q: PrimeIdeal):
        super().__init__(f"curve has bad reduction at {q}")
        self.q = q


def count_points(coeffs: tuple[RingElement, ...], q: PrimeIdeal) -> int:
    """#E(F_q) by brute force over the residue field (norm < 50 scale)."""
    a1, a2, a3, a4, a6 = coeffs
    F = ResidueField(q)
    r1, r2, r3, r4, r6 = (F.reduce(a) for a in (a1, a2, a3, a4, a6))
    count = 1   # the point at infinity
    elems = list(F.elements())
    for x in elems:
        x2 = F.mul(x, x)
        rhs = F.add(F.add(F.mul(x2, x), F.mul(r2, x2)),
                    F.add(F.mul(r4, x), r6))
        for y in elems:
            lhs = F.add(F.mul(y, y), F.mul(y, F.add(F.mul(r1, x), r3)))
            if lhs == rhs:
                count += 1
    return count


def _weierstrass_delta(coeffs: tuple[RingElement, ...]) -> RingElement:
    a1, a2, a3, a4, a6 = coeffs
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * (a2 * a6) - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4
    return (-(b2 * b2 * b8) - 8 * (b4 * b4 * b4) - 27 * (b6 * b6)
            + 9 * (b2 * b4 * b6))


def fixture_from_curve(coeffs: tuple[RingElement, ...],
                       primes: Iterable[PrimeIdeal],
                       form_id: str = "fixture",
                       level_exponent: int = 3) -> EigenformRecord:
    """Rational-eigenvalue record with f(T_q) = Norm(q) + 1 - #E(F_q).

    The curve must have good reduction at every requested prime
    (checked via the discriminant valuation).
    """
    primes = list(primes)
    delta = _weierstrass_delta(coeffs)
    if delta.is_zero():
        raise ValueError("singular curve (delta = 0)")
    field = coeffs[0].field
    eigenvalues = []
    for q in primes:
        if ideal_valuation(delta, q) > 0:
            raise BadReductionError(q)
        a_q = q.norm + 1 - count_points(coeffs, q)
        eigenvalues.append((q, (Fraction(a_q),)))
    return EigenformRecord(
        field=field, level_exponent=level_exponent, form_id=form_id,
        qf_poly=(0, 1),
        eigenvalues=tuple(sorted(
            eigenvalues,
            key=lambda kv: (kv[0].norm, kv[0].generator.x, kv[0].generator.y))))


# ---------------------------------------------------------------------------
# qualitative expectations (checked only when real eigenvalue data is supplied)

@dataclass(frozen=True)
class LevelExpectation:
    d: int
    level_exponent: int
    form_count: int
    profiles: tuple[str, ...]   # per form: 'cm' | 'unit' | 'pow:p' | 'div:p1,p2,...'


def load_expectations(stream: IO[str] | str) -> list[LevelExpectation]:
    """Expectation rows: `d=<d> level=<e> forms=<n> [profiles=p1|p2|...]`."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    out = []
    for line_no, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kv = dict(tok.split("=", 1) for tok in line.split())
        try:
            profiles = tuple(p for p in kv.get("profiles", "").split("|") if p)
            out.append(LevelExpectation(
                d=int(kv["d"]), level_exponent=int(kv["level"]),
                form_count=int(kv["forms"]), profiles=profiles))
        except (KeyError, ValueError):
            raise ParseError(line_no, f"bad expectation row {line!r}") from None
    return out


def _profile_matches(profile: str, report: EliminationReport) -> bool:
    if profile == "cm":
        return report.c_f == 0
    if profile == "unit":
        return report.c_f == 1
    if profile.startswith("pow:"):
        p = int(profile.split(":", 1)[1])
        return report.c_f > 1 and set(report.prime_divisors) == {p}
    if profile.startswith("div:"):
        need = {int(t) for t in profile.split(":", 1)[1].split(",")}
        return report.c_f != 0 and need <= set(report.prime_divisors)
    raise ValueError(f"unknown expectation profile {profile!r}")


def check_expectation(exp: LevelExpectation,
                      reports: list[EliminationReport]) -> tuple[bool, str]:
    """Does some assignment of the reports satisfy all profiles?"""
    if len(reports) != exp.form_count:
        return False, (f"expected {exp.form_count} forms at d={exp.d} "
                       f"level lambda^{exp.level_exponent}, got {len(reports)}")
    if not exp.profiles:
        return True, "form count matches"
    import itertools
    for perm in itertools.permutations(reports):
        if all(_profile_matches(pr, rep) for pr, rep in zip(exp.profiles, perm)):
            return True, "profiles match"
    return False, f"no assignment of forms matches profiles {list(exp.profiles)}"
