"""Sieve-backed arithmetic functions and coprimality counting.

Provides:
- Linear sieve tables: smallest prime factor, Mobius mu(n), Euler phi(n),
  omega(n) (distinct prime factors), d(n) (divisor count), prefix sums of phi
- Restricted totient phi_{alpha,beta}(n) on open intervals (alpha*n, beta*n)
- Coprime counting on closed integer ranges via Mobius inclusion-exclusion
- Power sums of residues coprime to b restricted to [1, b/2]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, prod
from typing import Iterator, Sequence

import numpy as np


@dataclass(frozen=True)
class SieveTables:
    """Dense arithmetic-function tables for n = 1..bound.

    Arrays have length bound+1 and are indexed directly by n; index 0 is a
    sentinel. Immutable after construction and safe to share across threads.
    """

    bound: int
    spf: np.ndarray        # smallest prime factor, int64
    mu: np.ndarray         # Mobius function, int8
    phi: np.ndarray        # Euler totient, int64
    omega: np.ndarray      # number of distinct prime factors, int8
    divcount: np.ndarray   # number of divisors, int32
    phi_prefix: np.ndarray # phi_prefix[n] = sum_{k<=n} phi(k), int64

    def __post_init__(self):
        # numpy arrays are not hashable; lock them against accidental writes
        for arr in (self.spf, self.mu, self.phi, self.omega,
                    self.divcount, self.phi_prefix):
            arr.setflags(write=False)

    def distinct_primes(self, n: int) -> list[int]:
        """Distinct prime factors of n, using the spf table."""
        if not 1 <= n <= self.bound:
            raise ValueError(f"n={n} outside sieve bound {self.bound}")
        primes = []
        while n > 1:
            p = int(self.spf[n])
            primes.append(p)
            while n % p == 0:
                n //= p
        return primes

    def squarefree_divisors(self, n: int) -> Iterator[tuple[int, int]]:
        """Yield (e, mu(e)) over squarefree divisors e of n."""
        primes = self.distinct_primes(n)
        for r in range(len(primes) + 1):
            for combo in combinations(primes, r):
                yield prod(combo), (-1) ** r


def build_sieve(bound: int) -> SieveTables:
    """Fill all tables up to `bound` with a linear (spf-driven) sieve."""
    if bound < 1:
        raise ValueError("sieve bound must be >= 1")
    n = bound
    spf = np.zeros(n + 1, dtype=np.int64)
    mu = np.zeros(n + 1, dtype=np.int8)
    phi = np.zeros(n + 1, dtype=np.int64)
    omega = np.zeros(n + 1, dtype=np.int8)
    divcount = np.zeros(n + 1, dtype=np.int32)
    # exponent of spf[i] in i, used for the divisor-count recurrence
    e = np.zeros(n + 1, dtype=np.int8)

    spf[1] = 1
    mu[1] = 1
    phi[1] = 1
    omega[1] = 0
    divcount[1] = 1
    primes: list[int] = []

    for i in range(2, n + 1):
        if spf[i] == 0:
            spf[i] = i
            primes.append(i)
            mu[i] = -1
            phi[i] = i - 1
            omega[i] = 1
            divcount[i] = 2
            e[i] = 1
        for p in primes:
            ip = i * p
            if p > spf[i] or ip > n:
                break
            spf[ip] = p
            if i % p == 0:
                mu[ip] = 0
                phi[ip] = phi[i] * p
                omega[ip] = omega[i]
                e[ip] = e[i] + 1
                divcount[ip] = divcount[i] // (e[i] + 1) * (e[i] + 2)
            else:
                mu[ip] = -mu[i]
                phi[ip] = phi[i] * (p - 1)
                omega[ip] = omega[i] + 1
                e[ip] = 1
                divcount[ip] = divcount[i] * 2

    phi_prefix = np.cumsum(phi)
    return SieveTables(bound=n, spf=spf, mu=mu, phi=phi, omega=omega,
                       divcount=divcount, phi_prefix=phi_prefix)


def distinct_primes(n: int) -> list[int]:
    """Distinct prime factors by trial division (table-free fallback)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    primes = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        primes.append(m)
    return primes


def _squarefree_divisors(primes: Sequence[int]) -> Iterator[tuple[int, int]]:
    for r in range(len(primes) + 1):
        for combo in combinations(primes, r):
            yield prod(combo), (-1) ** r


def _multiples_in_open(lnum: int, lden: int, unum: int, uden: int, e: int) -> int:
    """Count multiples of e in the open interval (lnum/lden, unum/uden).

    Endpoints are nonnegative rationals. A multiple e*t lies inside iff
    floor(L/e) < t < ceil(U/e) with exact endpoint exclusion.
    """
    lo_t = lnum // (lden * e)            # largest t with e*t <= L
    hi_t = -((-unum) // (uden * e)) - 1  # largest t with e*t < U
    return max(0, hi_t - lo_t)


def phi_restricted(alpha: Fraction, beta: Fraction, n: int,
                   tables: "SieveTables | None" = None) -> int:
    """Count integers k in the open interval (alpha*n, beta*n) coprime to n.

    Requires 0 <= alpha < beta <= 1. Open-interval semantics: integer
    endpoints alpha*n, beta*n are excluded. Passing sieve tables skips the
    trial-division factorization of n.
    """
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    if not (0 <= alpha < beta <= 1):
        raise ValueError("need 0 <= alpha < beta <= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    primes = tables.distinct_primes(n) if tables else distinct_primes(n)
    lnum, lden = (alpha * n).numerator, (alpha * n).denominator
    unum, uden = (beta * n).numerator, (beta * n).denominator
    total = 0
    for e, mu_e in _squarefree_divisors(primes):
        total += mu_e * _multiples_in_open(lnum, lden, unum, uden, e)
    return total


def phi_restricted_scan(alpha: Fraction, beta: Fraction, n: int) -> int:
    """Direct-scan reference for phi_restricted (independent oracle)."""
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    if not (0 <= alpha < beta <= 1):
        raise ValueError("need 0 <= alpha < beta <= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(1 for k in range(0, n + 1)
               if alpha * n < k < beta * n and gcd(k, n) == 1)


def coprime_count_range(lo: int, hi: int, n: int,
                        tables: "SieveTables | None" = None) -> int:
    """Count integers k in [lo, hi] with gcd(k, n) = 1.

    Empty ranges (hi = lo - 1) are allowed and return 0.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if lo > hi + 1:
        raise ValueError("need lo <= hi + 1")
    if lo > hi:
        return 0
    primes = tables.distinct_primes(n) if tables else distinct_primes(n)
    total = 0
    for e, mu_e in _squarefree_divisors(primes):
        total += mu_e * (hi // e - (lo - 1) // e)
    return total


def coprime_count_scan(lo: int, hi: int, n: int) -> int:
    """Direct-scan reference for coprime_count_range."""
    return sum(1 for k in range(lo, hi + 1) if gcd(k, n) == 1)


def restricted_power_sum(b: int, j: int) -> int:
    """Sum of a**j over 1 <= a <= b//2 with gcd(a, b) = 1, exact."""
    if b < 2:
        raise ValueError("b must be >= 2")
    if j < 0:
        raise ValueError("j must be >= 0")
    return sum(a ** j for a in range(1, b // 2 + 1) if gcd(a, b) == 1)


def power_sum_tables(bmax: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized restricted power sums S_j(b) for j = 0, 1, 2 and b = 2..bmax.

    Returns three int64 arrays indexed by b (indices 0, 1 unused). Values fit
    in int64 for bmax up to ~1e5.
    """
    if bmax < 2:
        raise ValueError("bmax must be >= 2")
    s0 = np.zeros(bmax + 1, dtype=np.int64)
    s1 = np.zeros(bmax + 1, dtype=np.int64)
    s2 = np.zeros(bmax + 1, dtype=np.int64)
    for b in range(2, bmax + 1):
        a = np.arange(1, b // 2 + 1, dtype=np.int64)
        mask = np.gcd(a, b) == 1
        ac = a[mask]
        s0[b] = ac.size
        s1[b] = int(ac.sum())
        s2[b] = int((ac * ac).sum())
    return s0, s1, s2


def _check_T(T: int, tables: SieveTables) -> None:
    if T < 1:
        raise ValueError("T must be >= 1")
    if T > tables.bound:
        raise ValueError(f"T={T} exceeds sieve bound {tables.bound}")


def phi_sum(tables: SieveTables, T: int) -> int:
    """Exact sum of phi(n) for n <= T."""
    _check_T(T, tables)
    return int(tables.phi_prefix[T])


def phi_over_n_sum(tables: SieveTables, T: int) -> Fraction:
    """Exact sum of phi(n)/n for n <= T as a fraction."""
    _check_T(T, tables)
    return sum(Fraction(int(tables.phi[n]), n) for n in range(1, T + 1))


def divisor_sum(tables: SieveTables, T: int) -> int:
    """Exact sum of d(n) for n <= T."""
    _check_T(T, tables)
    return int(tables.divcount[1:T + 1].sum(dtype=np.int64))


def two_omega_sum(tables: SieveTables, T: int) -> int:
    """Exact sum of 2**omega(n) for n <= T."""
    _check_T(T, tables)
    om = tables.omega[1:T + 1].astype(np.int64)
    return int((np.int64(1) << om).sum(dtype=np.int64))
