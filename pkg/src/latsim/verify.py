"""Self-verification suites: each check returns (name, passed, detail).

Suites:
- counts:       fast counter vs enumeration oracle, golden small counts
- asymptotics:  main-term constants and convergence of relative deviations
- euler:        totient/divisor lemmas and the restricted power-sum constant
- haar:         hyperbolic-volume quadrature against closed forms
- modular:      j-invariant special values, symmetries, boundary realness
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import arith, census, classes, lattice, modular
from .census import ClassSetId

Check = tuple[str, bool, str]

DEFAULT_SEED = 20260823


def verify_counts(oracle_max_T: int = 40) -> list[Check]:
    checks: list[Check] = []
    tables = arith.build_sieve(oracle_max_T)

    worst = None
    ok = True
    for T in range(1, oracle_max_T + 1):
        for set_id in ClassSetId:
            fast = census.count_fast(set_id, T, tables)
            brute = census.count_bruteforce(set_id, T)
            if fast != brute:
                ok = False
                worst = (set_id.value, T, fast, brute)
    detail = ("all T in [1,%d], all sets" % oracle_max_T if ok
              else "mismatch set=%s T=%d fast=%d brute=%d" % worst)
    checks.append(("count_fast == count_bruteforce", ok, detail))

    golden = [
        ("B(1)", census.count_fast(ClassSetId.ALL, 1, tables), 1),
        ("B(2)", census.count_fast(ClassSetId.ALL, 2, tables), 4),
        ("C(2)", census.count_fast(ClassSetId.SEMISTABLE, 2, tables), 2),
        ("A(10)", census.count_fast(ClassSetId.WELL_ROUNDED, 10, tables) - 1, 16),
        ("N3(10)", census.count_fast(ClassSetId.WELL_ROUNDED, 10, tables), 17),
    ]
    for name, got, want in golden:
        checks.append((f"golden {name} = {want}", got == want, f"got {got}"))
    return checks


def verify_asymptotics(Ts: Sequence[int] = (50, 100, 200, 400)) -> list[Check]:
    checks: list[Check] = []
    c1 = 39 / (8 * math.pi ** 4)
    c2 = 3 / (8 * math.pi ** 4)

    def truncated(x: float) -> str:
        # the reference decimals are truncated ("0.05004666349..."), not rounded
        return f"0.{math.floor(x * 1e11):011d}"

    checks.append(("constant 39/(8 pi^4) = 0.05004666349...",
                   truncated(c1) == "0.05004666349", truncated(c1)))
    checks.append(("constant 3/(8 pi^4) = 0.00384974334...",
                   truncated(c2) == "0.00384974334", truncated(c2)))
    ratio = census.main_terms(10)[1] / census.main_terms(10)[0]
    checks.append(("semi-stable fraction = 1/13 (~7.7%)",
                   abs(ratio - 1 / 13) < 1e-15, f"{ratio:.10f}"))

    if len(Ts) < 2:
        return checks
    reports = census.census_report(list(Ts))
    for devs, label in ((tuple(r.rel_dev1 for r in reports), "N1"),
                        (tuple(r.rel_dev2 for r in reports), "N2")):
        decreasing = all(x > y for x, y in zip(devs, devs[1:]))
        checks.append((f"{label} relative deviation strictly decreases",
                       decreasing,
                       " -> ".join(f"{d:.5f}" for d in devs)))
    # O(log T / T) envelope between the endpoints T=100 and T=400
    by_T = {r.T: r for r in reports}
    if 100 in by_T and 400 in by_T:
        envelope = (math.log(400) / 400) / (math.log(100) / 100) * 1.5
        for label, dev100, dev400 in (
                ("N1", by_T[100].rel_dev1, by_T[400].rel_dev1),
                ("N2", by_T[100].rel_dev2, by_T[400].rel_dev2)):
            ok = dev400 / dev100 <= envelope
            checks.append((f"{label} deviation within log(T)/T envelope", ok,
                           f"ratio {dev400 / dev100:.4f} <= {envelope:.4f}"))
    return checks


def verify_euler(nmax: int = 10_000, bmax: int = 5_000,
                 pairs_per_n: int = 20, seed: int = DEFAULT_SEED,
                 power_sum_constant: float = 4.0) -> list[Check]:
    checks: list[Check] = []
    tables = arith.build_sieve(max(nmax, bmax))
    rng = random.Random(seed)

    worst_excess = -math.inf
    ok = True
    for n in range(2, nmax + 1):
        phi_n = int(tables.phi[n])
        two_om = 1 << int(tables.omega[n])
        for _ in range(pairs_per_n):
            den = rng.randint(2, 64)
            lo, hi = sorted(rng.sample(range(den + 1), 2))
            alpha, beta = Fraction(lo, den), Fraction(hi, den)
            got = arith.phi_restricted(alpha, beta, n, tables)
            excess = abs(got - (beta - alpha) * phi_n) - two_om
            worst_excess = max(worst_excess, float(excess))
            if excess > 0:
                ok = False
    checks.append(("|phi_ab(n) - (b-a)phi(n)| <= 2^omega(n), n <= %d" % nmax,
                   ok, f"worst excess {worst_excess:g}"))

    om = tables.omega[1:nmax + 1].astype(np.int64)
    dv = tables.divcount[1:nmax + 1].astype(np.int64)
    n_arr = np.arange(1, nmax + 1, dtype=np.float64)
    lower_ok = bool(((np.int64(1) << om) <= dv).all())
    upper_ok = bool((dv <= np.sqrt(3.0 * n_arr)).all())
    checks.append((f"2^omega(n) <= d(n) <= sqrt(3n), n <= {nmax}",
                   lower_ok and upper_ok,
                   f"lower {lower_ok}, upper {upper_ok}"))

    _, _, s2 = arith.power_sum_tables(bmax)
    worst = 0.0
    for b in range(2, bmax + 1):
        phi_b = int(tables.phi[b])
        two_om = 1 << int(tables.omega[b])
        main = Fraction(phi_b * b * b, 24)
        dev = abs(Fraction(int(s2[b])) - main) / Fraction(two_om * b * b, 4)
        worst = max(worst, float(dev))
    checks.append((f"power-sum S2(b) error constant <= {power_sum_constant:g}, "
                   f"b <= {bmax}", worst <= power_sum_constant,
                   f"measured max {worst:.6f}"))

    devs = []
    for T in (100, 1000, 10_000):
        devs.append(abs(arith.phi_sum(tables, T) * math.pi ** 2 / (3 * T * T) - 1))
    checks.append(("phi_sum(T) pi^2/(3T^2) -> 1 along T = 1e2, 1e3, 1e4",
                   devs[0] > devs[1] > devs[2],
                   " -> ".join(f"{d:.5f}" for d in devs)))
    return checks


def verify_haar() -> list[Check]:
    vol_f, vol_ss, fraction = census.haar_volumes()
    return [
        ("vol(F) = pi/6 within 1e-8",
         abs(vol_f - math.pi / 6) < 1e-8, f"{vol_f:.12f}"),
        ("semi-stable volume = pi/6 - 1/2 within 1e-8",
         abs(vol_ss - (math.pi / 6 - 0.5)) < 1e-8, f"{vol_ss:.12f}"),
        ("semi-stable fraction = 0.04507034144 within 1e-6",
         abs(fraction - 0.04507034144) < 1e-6, f"{fraction:.12f}"),
    ]


def _random_upper_points(n: int, rng: random.Random,
                         im_hi: float = 2.0) -> list[complex]:
    """Random points on a dyadic grid (re exactly representable after +1).

    Im is capped so |dj/dtau| ~ 2*pi*exp(2*pi*Im) stays below ~2e6 and the
    1-ulp rounding of -1/tau cannot push |j(-1/tau) - j(tau)| past 1e-8.
    """
    grid = 1 << 20
    return [complex(rng.randint(-grid // 2 + 1, grid // 2 - 1) / grid,
                    rng.randint(int(0.9 * grid), int(im_hi * grid)) / grid)
            for _ in range(n)]


def verify_modular(seed: int = DEFAULT_SEED, quadruple_height: int = 20
                   ) -> list[Check]:
    checks: list[Check] = []
    rng = random.Random(seed)

    j_i = modular.j_invariant(1j).value
    checks.append(("j(i) = 1728 within 1e-9",
                   abs(j_i - 1728) < 1e-9, f"{j_i:.12g}"))
    rho = complex(math.cos(math.pi / 3), math.sin(math.pi / 3))
    j_rho = modular.j_invariant(rho).value
    checks.append(("j(rho) = 0 within 1e-9",
                   abs(j_rho) < 1e-9, f"{abs(j_rho):.3g}"))

    pts = _random_upper_points(100, rng)
    per = max(abs(modular.j_invariant(p + 1).value
                  - modular.j_invariant(p).value) for p in pts)
    inv = max(abs(modular.j_invariant(-1 / p).value
                  - modular.j_invariant(p).value) for p in pts)
    conj = max(abs(modular.j_invariant(complex(-p.real, p.imag)).value
                   - modular.j_invariant(p).value.conjugate()) for p in pts)
    checks.append(("periodicity j(tau+1) = j(tau) within 1e-8 on 100 points",
                   per < 1e-8, f"max {per:.3g}"))
    checks.append(("inversion j(-1/tau) = j(tau) within 1e-8 on 100 points",
                   inv < 1e-8, f"max {inv:.3g}"))
    checks.append(("conjugation j(-conj(tau)) = conj(j(tau)) within 1e-8",
                   conj < 1e-8, f"max {conj:.3g}"))

    report = modular.boundary_realness_report(samples=100)
    checks.append(("boundary realness: max |Im j| < 1e-8 over 300 samples",
                   report.max_boundary_im < 1e-8,
                   f"max {report.max_boundary_im:.3g}, interior control "
                   f"min {report.min_interior_im:.3g}"))
    checks.append(("interior control |Im j| > 1e-3",
                   report.min_interior_im > 1e-3,
                   f"{report.min_interior_im:.3g}"))

    thetas = [math.pi / 3 + k * (math.pi / 6) / 99 for k in range(100)]
    arc = [modular.j_normalized(cmath_exp_i(t)).value for t in thetas]
    in_range = all(-1e-6 <= v.real <= 1 + 1e-6 and abs(v.imag) < 1e-8
                   for v in arc)
    # j rises from j(rho) = 0 at theta = pi/3 to its arc maximum j(i) = 1728
    monotone = all(x.real < y.real for x, y in zip(arc, arc[1:]))
    checks.append(("normalized j on the WR arc lies in [0,1]", in_range,
                   f"range [{min(v.real for v in arc):.3g}, "
                   f"{max(v.real for v in arc):.6f}]"))
    checks.append(("normalized j strictly monotone along the arc",
                   monotone, "100 samples"))

    ok = True
    bad = None
    for q in census.enumerate_classes(ClassSetId.ALL, quadruple_height):
        if modular.classify_by_j(q) != \
                (classes.classify(q) is classes.ClassKind.WELL_ROUNDED):
            ok = False
            bad = q
    checks.append((f"classify_by_j agrees with classify, height <= "
                   f"{quadruple_height}", ok,
                   "exhaustive" if ok else f"mismatch at {bad}"))
    return checks


def cmath_exp_i(theta: float) -> complex:
    return complex(math.cos(theta), math.sin(theta))


def verify_geometry(quadruple_height: int = 20) -> list[Check]:
    """Parametrized classification vs exact geometric predicates."""
    checks: list[Check] = []
    ok_kind = ok_tau = True
    bad = None
    for q in census.enumerate_classes(ClassSetId.ALL, quadruple_height):
        form = lattice.tau_gram(q.tau)
        wr = lattice.is_well_rounded(form)
        ss = lattice.is_semistable(form)
        kind = classes.classify(q)
        geo_kind = (classes.ClassKind.WELL_ROUNDED if wr
                    else classes.ClassKind.SEMISTABLE_NOT_WR if ss
                    else classes.ClassKind.NOT_SEMISTABLE)
        if kind is not geo_kind:
            ok_kind = False
            bad = q
        if lattice.canonical_tau(form) != q.tau:
            ok_tau = False
            bad = q
    checks.append((f"classify matches geometric predicates, height <= "
                   f"{quadruple_height}", ok_kind,
                   "exhaustive" if ok_kind else f"mismatch at {bad}"))
    checks.append((f"canonical_tau(Lambda_tau(q)) = (a/b, c/d), height <= "
                   f"{quadruple_height}", ok_tau,
                   "exhaustive" if ok_tau else f"mismatch at {bad}"))
    return checks


def verify_reduction_invariance(n_points: int = 1000, max_word: int = 10,
                                seed: int = DEFAULT_SEED) -> list[Check]:
    """Random exact tau in F, random word in S and T: reduction recovers tau."""
    rng = random.Random(seed)
    S = lattice.UnimodularMatrix.inversion()
    T = lattice.UnimodularMatrix.translation()
    Tinv = lattice.UnimodularMatrix.translation(-1)
    ok = True
    bad = None
    for _ in range(n_points):
        den = rng.randint(1, 12)
        re = Fraction(rng.randint(0, den), 2 * den)
        im_sq = 1 - re * re + Fraction(rng.randint(0, 50), rng.randint(1, 10))
        tau = lattice.CanonicalTau(re, im_sq)
        g = lattice.UnimodularMatrix.identity()
        for _ in range(rng.randint(0, max_word)):
            g = rng.choice((S, T, Tinv)) @ g
        moved = lattice.modular_act(g, tau)
        back = lattice.canonical_tau(lattice.tau_gram(moved))
        if (back.re, back.im_sq) != (tau.re, tau.im_sq):
            ok = False
            bad = (tau, g)
    return [(f"canonical_tau(Lambda_g(tau)) = tau on {n_points} random "
             f"words", ok, "exact" if ok else f"failed at {bad}")]


def verify_heights(quadruple_height: int = 50, wr_bmax: int = 200) -> list[Check]:
    checks: list[Check] = []
    ok = True
    bad = None
    for q in census.enumerate_classes(ClassSetId.ALL, quadruple_height):
        if classes.weil_height_bound(q) > classes.weil_height_ceiling(q) + 1e-9:
            ok = False
            bad = q
    checks.append((f"weil_height_bound <= (sqrt5/2) m^(3/2), height <= "
                   f"{quadruple_height}", ok,
                   "exhaustive" if ok else f"violated at {bad}"))
    ok = all(classes.wr_weil_height_bound(p) <= classes.pair_height(p)
             for p in census.enumerate_classes(ClassSetId.WELL_ROUNDED, wr_bmax))
    checks.append((f"WR height bound <= b for all pairs with b <= {wr_bmax}",
                   ok, "exhaustive"))
    return checks


SUITES: dict[str, Callable[[], list[Check]]] = {
    "counts": verify_counts,
    "asymptotics": verify_asymptotics,
    "euler": verify_euler,
    "haar": verify_haar,
    "modular": verify_modular,
}


def run_suite(name: str, printer=print) -> bool:
    """Run one named suite, print a pass/fail line per check."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    all_ok = True
    for check_name, ok, detail in SUITES[name]():
        printer(f"[{'PASS' if ok else 'FAIL'}] {check_name}: {detail}")
        all_ok = all_ok and ok
    return all_ok
