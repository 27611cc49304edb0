"""Screening of ingested number-field records against the hypotheses
under which the asymptotic results apply.

(p,p,3) signature: the field contains a primitive cube root of unity,
has exactly one prime above 3, and has narrow class number one.
(p,p,2) signature: 2 is totally ramified and the narrow class number
is one.

Splitting data comes from factoring the defining polynomial modulo p,
certified by Dedekind's index criterion; cube-root-of-unity membership
gets an exact NO certificate (an odd-degree factor mod an unramified
p = 2 mod 3) and a budgeted probabilistic YES.  Class numbers are
ingested, never computed.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import IO, Iterable

from . import polys


class RecordError(ValueError):
    pass


@dataclass(frozen=True)
class FieldRecord:
    label: str
    degree: int
    disc: int
    poly: tuple[int, ...]      # monic, low-to-high
    h: int | None              # class number (ingested)
    h_plus: int | None         # narrow class number (ingested)


@dataclass(frozen=True)
class Zeta3Verdict:
    kind: str                  # yes_probable | no_certified | unknown
    witness_prime: int | None = None
    primes_tested: int = 0
    reason: str = ""


@dataclass(frozen=True)
class ScreeningVerdict:
    label: str
    degree: int
    zeta3: Zeta3Verdict | None = None
    primes_above_3: int | None = None          # None = unknown (index obstruction)
    h_plus_one: bool | None = None
    passes_pp3: bool | None = None
    ramified2: bool | None = None
    passes_pp2: bool | None = None


# ---------------------------------------------------------------------------
# record ingestion (plain CSV)

CSV_HEADER = ["label", "degree", "disc", "poly", "h", "h_plus"]


def parse_records(stream: IO[str] | str) -> tuple[list[FieldRecord], int]:
    """Read the record CSV; returns (records, skipped_malformed_count).

    Columns: label, degree, disc, poly (coefficients low-to-high joined
    by `;`), h, h_plus; empty h/h_plus allowed.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    reader = csv.reader(stream)
    records: list[FieldRecord] = []
    skipped = 0
    header_seen = False
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        if row[0].strip().startswith("#"):
            continue
        if not header_seen and row[0].strip().lower() == "label":
            header_seen = True
            continue
        try:
            records.append(_record_from_row(row))
        except (RecordError, ValueError, IndexError):
            skipped += 1
    return records, skipped


def _record_from_row(row: list[str]) -> FieldRecord:
    label = row[0].strip()
    degree = int(row[1])
    disc = int(row[2])
    poly = tuple(int(t) for t in row[3].strip().split(";"))
    h = int(row[4]) if len(row) > 4 and row[4].strip() else None
    h_plus = int(row[5]) if len(row) > 5 and row[5].strip() else None
    validate_record_poly(poly, degree)
    return FieldRecord(label, degree, disc, poly, h, h_plus)


def validate_record_poly(poly: tuple[int, ...], degree: int) -> None:
    f = list(poly)
    if polys.degree(f) != degree or degree < 2:
        raise RecordError("degree mismatch or degree < 2")
    if f[-1] != 1:
        raise RecordError("polynomial must be monic")
    if polys.resultant(f, polys.derivative(f)) == 0:
        raise RecordError("polynomial has repeated factors")


# ---------------------------------------------------------------------------
# splitting via Dedekind's criterion

def dedekind_split(poly: Iterable[int], p: int) -> tuple[tuple[tuple[int, int], ...], bool]:
    """Splitting shape of p read from the factorization of poly mod p.

    Returns (shapes, certified): shapes is the multiset of
    (residue degree, ramification exponent) pairs, and certified is the
    Dedekind test that p does not divide the index [O_K : Z[theta]]
    (only then do the shapes describe the maximal order).
    """
    f = polys.normalize(list(poly))
    if f[-1] != 1:
        raise RecordError("Dedekind criterion requires a monic polynomial")
    fbar = polys.pmod(f, p)
    if polys.degree(fbar) != polys.degree(f):
        raise RecordError("polynomial degree drops mod p (non-monic reduction)")
    shape = tuple(polys.factor_shape(fbar, p))
    rad, cof = polys.radical_and_cofactor(fbar, p)
    lift = lambda g: [c % p for c in g]
    prod = polys.mul(lift(rad), lift(cof))
    diff = polys.sub(prod, f)
    assert all(c % p == 0 for c in diff), "rad * cofactor != f mod p"
    T = [c // p for c in diff]
    g1 = polys.pgcd(polys.pmod(T, p), rad, p)
    certified = polys.degree(polys.pgcd(g1, cof, p)) <= 0
    return shape, certified


# ---------------------------------------------------------------------------
# cube root of unity membership

def contains_zeta3(poly: Iterable[int], prime_budget: int = 50) -> Zeta3Verdict:
    """Budgeted test for Q(zeta_3) inside the field cut out by poly.

    An unramified p = 2 mod 3 stays inert in Q(zeta_3), so every residue
    degree would have to be even; an odd-degree irreducible factor mod
    such a p is an exact NO certificate.  All-even factors across the
    whole budget is only probable evidence for YES.
    """
    if prime_budget < 1:
        raise ValueError("prime budget must be >= 1")
    f = polys.normalize(list(poly))
    n = polys.degree(f)
    if n % 2 == 1:
        return Zeta3Verdict("no_certified", reason="odd degree field")
    disc = polys.resultant(f, polys.derivative(f))
    tested = 0
    p = 2
    while tested < prime_budget:
        p = _next_prime(p)
        if p % 3 != 2 or disc % p == 0:
            continue
        degrees = [d for d, cnt in _degree_counts(f, p) for _ in range(cnt)]
        if any(d % 2 == 1 for d in degrees):
            return Zeta3Verdict("no_certified", witness_prime=p,
                                primes_tested=tested + 1,
                                reason=f"odd-degree factor mod {p}")
        tested += 1
    return Zeta3Verdict("yes_probable", primes_tested=tested,
                        reason=f"all residue degrees even for {tested} test primes")


def _degree_counts(f, p):
    return polys.distinct_degree_counts(polys.pmod(f, p), p)


def _next_prime(p: int) -> int:
    from .ring import is_prime
    p += 1
    while not is_prime(p):
        p += 1
    return p


# ---------------------------------------------------------------------------
# per-record screening

def _verdict_pp3(rec: FieldRecord, prime_budget: int) -> ScreeningVerdict:
    z3 = contains_zeta3(rec.poly, prime_budget)
    shapes, certified = dedekind_split(rec.poly, 3)
    above3 = len(shapes) if certified else None
    hp1 = None if rec.h_plus is None else (rec.h_plus == 1)
    if z3.kind == "no_certified" or (above3 is not None and above3 != 1) or hp1 is False:
        passes = False
    elif z3.kind == "yes_probable" and above3 == 1 and hp1 is True:
        passes = True
    else:
        passes = None
    return ScreeningVerdict(label=rec.label, degree=rec.degree, zeta3=z3,
                            primes_above_3=above3, h_plus_one=hp1,
                            passes_pp3=passes)


def _verdict_pp2(rec: FieldRecord) -> ScreeningVerdict:
    shapes, certified = dedekind_split(rec.poly, 2)
    ram2 = (shapes == ((1, rec.degree),)) if certified else None
    hp1 = None if rec.h_plus is None else (rec.h_plus == 1)
    if ram2 is False or hp1 is False:
        passes = False
    elif ram2 is True and hp1 is True:
        passes = True
    else:
        passes = None
    return ScreeningVerdict(label=rec.label, degree=rec.degree,
                            h_plus_one=hp1, ramified2=ram2, passes_pp2=passes)


def screen_pp3(records: Iterable[FieldRecord],
               prime_budget: int = 50) -> tuple[list[ScreeningVerdict], dict]:
    """Verdicts (ordered by label) plus per-degree counts
    {degree: {'fields': all, 'passing': definite passes, 'unknown': open}}."""
    verdicts = sorted((_verdict_pp3(r, prime_budget) for r in records),
                      key=lambda v: v.label)
    summary: dict[int, dict[str, int]] = {}
    for v in verdicts:
        row = summary.setdefault(v.degree, {"fields": 0, "passing": 0, "unknown": 0})
        row["fields"] += 1
        if v.passes_pp3 is True:
            row["passing"] += 1
        elif v.passes_pp3 is None:
            row["unknown"] += 1
    return verdicts, dict(sorted(summary.items()))


def screen_pp2(records: Iterable[FieldRecord],
               prime_budget: int = 50) -> tuple[list[ScreeningVerdict], dict]:
    """Verdicts plus per-degree counts mirroring the three nested sets:
    2 totally ramified / additionally odd h+ / additionally h+ = 1."""
    verdicts = sorted((_verdict_pp2(r) for r in records), key=lambda v: v.label)
    by_label = {r.label: r for r in records}
    summary: dict[int, dict[str, int]] = {}
    for v in verdicts:
        row = summary.setdefault(
            v.degree, {"ramified2": 0, "odd_h_plus": 0, "h_plus_one": 0})
        if v.ramified2:
            row["ramified2"] += 1
            hp = by_label[v.label].h_plus
            if hp is not None and hp % 2 == 1:
                row["odd_h_plus"] += 1
            if hp == 1:
                row["h_plus_one"] += 1
    return verdicts, dict(sorted(summary.items()))


# ---------------------------------------------------------------------------
# the 2-power tower of totally real fields

def tower_poly(n: int) -> list[int]:
    """Defining polynomial of the n-th field in the tower: the degree
    doubles each step via f_n = f_{n-1}^2 - 2, starting from x^2 - 2."""
    if not 1 <= n <= 10:
        raise ValueError("tower index must satisfy 1 <= n <= 10")
    f = [-2, 0, 1]
    for _ in range(n - 1):
        f = polys.sub(polys.mul(f, f), [2])
    return f
