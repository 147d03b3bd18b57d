import cmath
import math
import random

import pytest

from latsim import census, classes, modular
from latsim.census import ClassSetId
from latsim.classes import TauQuadruple

RHO = cmath.exp(1j * math.pi / 3)


class TestJInvariant:
    def test_j_at_i(self):
        jv = modular.j_invariant(1j)
        assert abs(jv.value - 1728) < 1e-9
        assert jv.est_error < 1e-20

    def test_j_at_rho(self):
        assert abs(modular.j_invariant(RHO).value) < 1e-9

    def test_known_singular_moduli(self):
        # classical values j(2i) = 66^3, j(i sqrt(2)) = 20^3
        assert modular.j_invariant(2j).value.real == pytest.approx(287496)
        assert modular.j_invariant(1j * math.sqrt(2)).value.real == \
            pytest.approx(8000)

    def test_q_expansion_head(self):
        # j = 1/q + 744 + 196884 q + ... at a point with tiny q
        tau = 0.1 + 2.5j
        q = cmath.exp(2j * math.pi * tau)
        approx = 1 / q + 744 + 196884 * q
        assert abs(modular.j_invariant(tau).value - approx) < 1e-3

    def test_periodicity(self):
        tau = 0.3 + 1.7j
        assert abs(modular.j_invariant(tau + 1).value
                   - modular.j_invariant(tau).value) < 1e-9

    def test_rejects_lower_half_plane(self):
        with pytest.raises(ValueError):
            modular.j_invariant(0.5 - 1j)
        with pytest.raises(ValueError):
            modular.j_invariant(0.5 + 0j)

    def test_rejects_overflow_region(self):
        with pytest.raises(ValueError):
            modular.j_invariant(0.1 + 150j)

    def test_rejects_too_few_terms(self):
        with pytest.raises(ValueError):
            modular.j_invariant(1j, terms=3)

    def test_truncation_stability(self):
        rng = random.Random(43)
        for _ in range(20)   :
            tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(1.0, 2.0))
            tau = modular.reduce_to_fundamental_domain(tau)
            j15 = modular.j_invariant(tau, 15).value
            j30 = modular.j_invariant(tau, 30).value
            assert abs(j30 - j15) < 1e-12 * max(1.0, abs(j30))


class TestSymmetries:
    def test_inversion_invariance(self):
        rng = random.Random(47)
        for _ in range(100):
            tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.9, 3.0))
            a = modular.j_invariant(-1 / tau).value
            b = modular.j_invariant(tau).value
            # scale-aware: |j| reaches ~1e8 at Im tau = 3, where input
            # rounding alone moves j by ~1e-7 in absolute terms
            assert abs(a - b) < 1e-8 * max(1.0, abs(b))

    def test_conjugation_symmetry(self):
        rng = random.Random(53)
        for _ in range(100):
            tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.9, 3.0))
            a = modular.j_invariant(complex(-tau.real, tau.imag)).value
            b = modular.j_invariant(tau).value.conjugate()
            assert abs(a - b) < 1e-8 * max(1.0, abs(b))


class TestNormalizedArc:
    def test_endpoints(self):
        assert abs(modular.j_normalized(1j).value - 1) < 1e-12
        assert abs(modular.j_normalized(RHO).value) < 1e-12

    def test_real_and_in_unit_interval(self):
        for k in range(100):
            theta = math.pi / 3 + k * (math.pi / 6) / 99
            v = modular.j_normalized(cmath.exp(1j * theta)).value
            assert abs(v.imag) < 1e-10
            assert -1e-6 <= v.real <= 1 + 1e-6

    def test_strictly_monotone_in_theta(self):
        values = []
        for k in range(100):
            theta = math.pi / 3 + k * (math.pi / 6) / 99
            values.append(modular.j_normalized(cmath.exp(1j * theta)).value.real)
        assert all(x < y for x, y in zip(values, values[1:]))


class TestBoundaryRealness:
    def test_boundary_is_real(self):
        report = modular.boundary_realness_report(samples=100)
        assert report.max_boundary_im < 1e-8

    def test_interior_is_not(self):
        report = modular.boundary_realness_report(samples=10)
        assert report.min_interior_im > 1e-3

    def test_imaginary_ray_values_exceed_j_of_i(self):
        v = modular.j_invariant(2j).value
        assert abs(v.imag) < 1e-10
        assert v.real > 1728

    def test_sample_guard(self):
        with pytest.raises(ValueError):
            modular.boundary_realness_report(samples=5)


class TestClassifyByJ:
    def test_examples(self):
        assert modular.classify_by_j(TauQuadruple(1, 2, 3, 4))
        assert modular.classify_by_j(TauQuadruple(0, 1, 1, 1))
        assert not modular.classify_by_j(TauQuadruple(0, 1, 2, 1))

    def test_agrees_with_parametrized_classifier(self):
        for q in census.enumerate_classes(ClassSetId.ALL, 10):
            assert modular.classify_by_j(q) == \
                (classes.classify(q) is classes.ClassKind.WELL_ROUNDED)
