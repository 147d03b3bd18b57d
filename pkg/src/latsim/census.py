"""Enumeration and counting of arithmetic similarity classes of bounded height.

Three families:
- All arithmetic classes (quadruples with c in [ceil(d*(b^2-a^2)/b^2), T])
- Semi-stable classes (additionally c <= d)
- Well-rounded classes (pairs (a, b), counted by b <= T, plus the square
  lattice class (0, 1))

count_bruteforce enumerates; count_fast sums coprime range counts in O(T^3)
and must agree with it everywhere both run. Main terms:
  N1 ~ 39 T^4 / (8 pi^4),  N2 ~ 3 T^4 / (8 pi^4),  N3 ~ 3 T^2 / (2 pi^2).
"""

from __future__ import annotations

import csv
import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterator, Sequence, Union

import numpy as np
from scipy.integrate import quad

from .arith import SieveTables, build_sieve
from .classes import TauQuadruple, WrPair

BRUTEFORCE_LIMIT = 60


class ClassSetId(enum.Enum):
    ALL = "all"
    SEMISTABLE = "semistable"
    WELL_ROUNDED = "wr"


@dataclass(frozen=True)
class CountReport:
    T: int
    n1: int
    n2: int
    n3: int
    main1: float
    main2: float
    main3: float
    rel_dev1: float
    rel_dev2: float
    rel_dev3: float


def c_lower(a: int, b: int, d: int) -> int:
    """Smallest admissible c for (a, b, d): ceil(d*(b^2 - a^2) / b^2)."""
    bsq = b * b
    return -((-d * (bsq - a * a)) // bsq)


def _coprime_pairs(T: int) -> Iterator[tuple[int, int]]:
    """(a, b) with gcd(a,b)=1, 0 <= 2a <= b <= T, lexicographic by (b, a)."""
    yield (0, 1)
    for b in range(2, T + 1):
        for a in range(1, b // 2 + 1):
            if math.gcd(a, b) == 1:
                yield (a, b)


def enumerate_classes(set_id: ClassSetId, T: int
                      ) -> Iterator[Union[TauQuadruple, WrPair]]:
    """Yield every class of height <= T exactly once.

    Quadruple sets stream lexicographically by (b, a, d, c); the well-rounded
    set streams pairs by (b, a), starting with the extra class (0, 1).
    """
    if T < 1:
        raise ValueError("T must be >= 1")
    if set_id is ClassSetId.WELL_ROUNDED:
        for a, b in _coprime_pairs(T):
            yield WrPair(a, b)
        return
    semistable = set_id is ClassSetId.SEMISTABLE
    for a, b in _coprime_pairs(T):
        for d in range(1, T + 1):
            hi = d if semistable else T
            for c in range(c_lower(a, b, d), hi + 1):
                if math.gcd(c, d) == 1:
                    yield TauQuadruple(a, b, c, d)


def count_bruteforce(set_id: ClassSetId, T: int) -> int:
    """Oracle counter by full enumeration; guarded against O(T^4) blowup."""
    if T > BRUTEFORCE_LIMIT:
        raise ValueError(f"brute-force counting capped at T={BRUTEFORCE_LIMIT}")
    return sum(1 for _ in enumerate_classes(set_id, T))


def _pair_arrays(T: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays of a and b over all coprime pairs with 2a <= b <= T."""
    a_list, b_list = zip(*_coprime_pairs(T))
    return (np.asarray(a_list, dtype=np.int64),
            np.asarray(b_list, dtype=np.int64))


def _count_quadruples_moebius(semistable: bool, T: int, tables: SieveTables,
                              b_lo: int, b_hi: int) -> int:
    """Partition of the fast counter over pairs with b in [b_lo, b_hi].

    For each d, the inner sum over c in [lo, hi] coprime to d is evaluated by
    Mobius inclusion-exclusion over the squarefree divisors of d.
    """
    a_arr, b_arr = _pair_arrays(T)
    mask = (b_arr >= b_lo) & (b_arr <= b_hi)
    a_arr, b_arr = a_arr[mask], b_arr[mask]
    if a_arr.size == 0:
        return 0
    bsq = b_arr * b_arr
    k = bsq - a_arr * a_arr
    total = 0
    for d in range(1, T + 1):
        lo_minus_1 = (d * k + bsq - 1) // bsq - 1
        hi = d if semistable else T
        for e, mu_e in tables.squarefree_divisors(d):
            part = a_arr.size * (hi // e) - int((lo_minus_1 // e).sum())
            total += mu_e * part
    return total


def _count_quadruples_prefix(semistable: bool, T: int, tables: SieveTables,
                             b_lo: int, b_hi: int) -> int:
    """Prefix-table variant: per d, a cumulative count of c <= x coprime to d."""
    a_arr, b_arr = _pair_arrays(T)
    mask = (b_arr >= b_lo) & (b_arr <= b_hi)
    a_arr, b_arr = a_arr[mask], b_arr[mask]
    if a_arr.size == 0:
        return 0
    bsq = b_arr * b_arr
    k = bsq - a_arr * a_arr
    total = 0
    for d in range(1, T + 1):
        indicator = np.ones(T + 1, dtype=np.int64)
        indicator[0] = 0
        for p in tables.distinct_primes(d):
            indicator[p::p] = 0
        prefix = np.cumsum(indicator)
        lo_minus_1 = (d * k + bsq - 1) // bsq - 1
        hi = d if semistable else T
        total += int(prefix[hi]) * a_arr.size - int(prefix[lo_minus_1].sum())
    return total


def count_fast(set_id: ClassSetId, T: int, tables: SieveTables | None = None,
               memory_mode: str = "moebius", parallelism: int = 1) -> int:
    """Exact class count at height T without enumeration.

    memory_mode selects the inner coprime counter: "moebius" (O(T) memory)
    or "prefix_tables" (per-d prefix sums). Partitions over b are summed in a
    fixed order, so parallel and serial runs return identical counts.
    """
    if T < 1:
        raise ValueError("T must be >= 1")
    if parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    if tables is None:
        tables = build_sieve(T)
    if T > tables.bound:
        raise ValueError(f"T={T} exceeds sieve bound {tables.bound}")

    if set_id is ClassSetId.WELL_ROUNDED:
        phi = tables.phi
        return 1 + sum((int(phi[b]) + 1) // 2 for b in range(2, T + 1))

    if memory_mode == "moebius":
        worker = _count_quadruples_moebius
    elif memory_mode == "prefix_tables":
        worker = _count_quadruples_prefix
    else:
        raise ValueError(f"unknown memory_mode {memory_mode!r}")

    semistable = set_id is ClassSetId.SEMISTABLE
    if parallelism == 1:
        return worker(semistable, T, tables, 1, T)
    bounds = np.linspace(0, T, parallelism + 1, dtype=int)
    chunks = [(int(lo) + 1, int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:])]
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        parts = pool.map(lambda ch: worker(semistable, T, tables, *ch), chunks)
        return sum(parts)


def main_terms(T: int) -> tuple[float, float, float]:
    """Leading asymptotic terms (39T^4/(8pi^4), 3T^4/(8pi^4), 3T^2/(2pi^2))."""
    if T < 1:
        raise ValueError("T must be >= 1")
    pi4 = math.pi ** 4
    return (39 * T ** 4 / (8 * pi4),
            3 * T ** 4 / (8 * pi4),
            3 * T ** 2 / (2 * math.pi ** 2))


def census_report(Ts: Sequence[int], tables: SieveTables | None = None,
                  memory_mode: str = "moebius",
                  parallelism: int = 1) -> list[CountReport]:
    """Exact counts with main-term comparisons for each requested T."""
    if tables is None:
        tables = build_sieve(max(Ts))
    reports = []
    for T in Ts:
        n1 = count_fast(ClassSetId.ALL, T, tables, memory_mode, parallelism)
        n2 = count_fast(ClassSetId.SEMISTABLE, T, tables, memory_mode, parallelism)
        n3 = count_fast(ClassSetId.WELL_ROUNDED, T, tables)
        m1, m2, m3 = main_terms(T)
        reports.append(CountReport(
            T=T, n1=n1, n2=n2, n3=n3, main1=m1, main2=m2, main3=m3,
            rel_dev1=abs(n1 / m1 - 1), rel_dev2=abs(n2 / m2 - 1),
            rel_dev3=abs(n3 / m3 - 1)))
    return reports


CSV_HEADER = ["T", "n1", "n2", "n3", "main1", "main2", "main3",
              "dev1", "dev2", "dev3"]


def write_census_csv(reports: Sequence[CountReport], stream: IO[str]) -> None:
    """CSV with header T,n1,n2,n3,main1,main2,main3,dev1,dev2,dev3."""
    writer = csv.writer(stream)
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow([
            r.T, r.n1, r.n2, r.n3,
            f"{r.main1:.12g}", f"{r.main2:.12g}", f"{r.main3:.12g}",
            f"{r.rel_dev1:.12g}", f"{r.rel_dev2:.12g}", f"{r.rel_dev3:.12g}",
        ])


def haar_volumes(tol: float = 1e-12) -> tuple[float, float, float]:
    """Hyperbolic volume of the class space and of its semi-stable part.

    The inner integral of dy/y^2 is taken in closed form, leaving
    vol_F = int_0^(1/2) dx / sqrt(1 - x^2)            (= pi/6)
    vol_ss = int_0^(1/2) (1/sqrt(1 - x^2) - 1) dx     (= pi/6 - 1/2)
    evaluated by adaptive quadrature. Returns (vol_F, vol_ss, vol_ss/vol_F).
    """
    vol_f, err_f = quad(lambda x: 1.0 / math.sqrt(1.0 - x * x), 0.0, 0.5,
                        epsabs=tol, epsrel=tol)
    vol_ss, err_ss = quad(lambda x: 1.0 / math.sqrt(1.0 - x * x) - 1.0,
                          0.0, 0.5, epsabs=tol, epsrel=tol)
    if err_f > 1e-9 or err_ss > 1e-9:
        raise ArithmeticError(
            f"quadrature did not converge (errors {err_f:g}, {err_ss:g})")
    return vol_f, vol_ss, vol_ss / vol_f
