import cmath
import math

import pytest

from quadzero import (
    HarmonicQuadrinomial,
    OrientationClass,
    analytic_derivative,
    b0_orientation_inequality,
    circle_image,
    classify_point,
    critical_radius,
    critical_radius_alt,
    modular_root_census,
    pure_imaginary_rays,
    univalence_radius,
    verify_theorem_34,
)
from quadzero.errors import BEqualsOne, BZero, HypothesisViolation


class TestCriticalRadius:
    def test_worked_example(self):
        cc = critical_radius(2.0, 3.0, 2)
        assert cc.exists
        assert cc.radius == pytest.approx(math.sqrt(8.0 / 12.0), abs=1e-12)

    def test_degenerate_when_c_squared_is_one(self):
        cc = critical_radius(2.0, 1.0, 2)
        assert not cc.exists

    def test_b_equals_one_rejected(self):
        with pytest.raises(BEqualsOne):
            critical_radius(1.0, 3.0, 2)
        with pytest.raises(BEqualsOne):
            critical_radius(-1.0, 3.0, 2)

    def test_non_existent_for_mixed_regimes(self):
        # |b| > 1 with |c| < 1 gives a negative ratio
        assert not critical_radius(2.0, 0.5, 3).exists

    def test_closed_form_equivalence(self):
        for k in range(2, 7):
            for b in (0.2, 0.5, 1.5, 2.0, 5.0):
                for c in (0.3, 0.8, 1.2, 2.5, 4.0):
                    if (c * c - 1.0) / (b * b - 1.0) <= 0:
                        continue
                    cc = critical_radius(b, c, k)
                    alt = critical_radius_alt(b, c, k)
                    assert abs(cc.radius - alt) <= 1e-12 * alt


class TestRays:
    def test_k2(self):
        assert pure_imaginary_rays(2) == pytest.approx([math.pi / 2, 3 * math.pi / 2])

    def test_k3(self):
        assert pure_imaginary_rays(3) == pytest.approx(
            [math.pi / 4, 3 * math.pi / 4, 5 * math.pi / 4, 7 * math.pi / 4]
        )

    def test_count_and_pure_imaginarity(self):
        for k in range(2, 7):
            rays = pure_imaginary_rays(k)
            assert len(rays) == 2 * (k - 1)
            assert len(set(round(a, 12) for a in rays)) == len(rays)
            for theta in rays:
                for r in (0.3, 1.0, 2.7):
                    z = r * cmath.exp(1j * theta)
                    w = z**k * z.conjugate()
                    assert abs(w.real) <= 1e-12 * abs(w)


class TestVerifyTheorem34:
    def test_worked_point(self):
        rep = verify_theorem_34(2.0, 3.0, 2)
        assert rep.passed
        # |2z + 3| = |4z + 1| at z = i*sqrt(2/3): both moduli sqrt(35/3)
        z = rep.circle.radius * 1j
        assert abs(2 * z + 3) == pytest.approx(abs(4 * z + 1), abs=1e-12)
        assert abs(2 * z + 3) == pytest.approx(math.sqrt(35.0 / 3.0), abs=1e-12)

    def test_small_parameters(self):
        rep = verify_theorem_34(0.5, 0.2, 3)
        assert rep.circle.radius == pytest.approx(
            (1.0 / 3.0) ** 0.5 * 1.28 ** 0.25, abs=1e-12
        )
        assert rep.passed

    def test_off_circle_deviates(self):
        rep = verify_theorem_34(2.0, 3.0, 2)
        assert rep.min_off_deviation > 1e-6

    def test_propagates_b_equals_one(self):
        with pytest.raises(BEqualsOne):
            verify_theorem_34(1.0, 3.0, 2)

    def test_nonexistent_circle_rejected(self):
        with pytest.raises(HypothesisViolation):
            verify_theorem_34(2.0, 0.5, 2)


class TestUnivalenceRadius:
    def test_b_one_k_two(self):
        radius, points = univalence_radius(1.0, 2)
        assert radius == pytest.approx(0.5)
        assert points == [pytest.approx(-0.5 + 0j)]

    def test_quarter_b(self):
        radius, points = univalence_radius(0.25, 2)
        assert radius == pytest.approx(2.0)
        assert points == [pytest.approx(-2.0 + 0j)]

    def test_b_zero_rejected(self):
        with pytest.raises(BZero):
            univalence_radius(0.0, 3)

    def test_h_prime_vanishes_at_returned_points(self):
        for b in (0.5, -1.2, 3.0):
            for k in (2, 3, 5):
                radius, points = univalence_radius(b, k)
                p = HarmonicQuadrinomial(b=b, c=0.0, k=k, n=2, m=1)
                for z in points:
                    assert abs(z) == pytest.approx(radius, rel=1e-12)
                    assert abs(analytic_derivative(p, z)) <= 1e-12 * (
                        1.0 + abs(b) * k
                    )


class TestB0OrientationInequality:
    def test_matches_classification_for_m_one(self):
        # for m = 1 the printed formula agrees with the Jacobian sign
        c, n, m = 1.0, 3, 1
        p = HarmonicQuadrinomial(b=0.0, c=c, k=1, n=n, m=m)
        for z in (0.1 + 0j, 2 + 0j, 0.3 + 0.4j, -0.2 + 0.9j, 1.1j):
            cmp = b0_orientation_inequality(c, n, m, z)
            orient = classify_point(p, z)
            if cmp == "lt":
                assert orient is OrientationClass.SENSE_PRESERVING
            elif cmp == "gt":
                assert orient is OrientationClass.SENSE_REVERSING

    def test_large_modulus_is_reversing(self):
        assert b0_orientation_inequality(1.0, 3, 1, 2 + 0j) == "gt"

    def test_requires_nonzero_c(self):
        with pytest.raises(ValueError):
            b0_orientation_inequality(0.0, 3, 1, 1 + 0j)

    def test_m_above_one_can_disagree_with_jacobian(self):
        # printed middle-term exponent 2(n-1) vs 2(n-m) from expanding
        # |g'|^2 < 1: for m > 1 the comparator is a transcription, not a
        # classifier; just confirm it runs and returns a verdict
        out = b0_orientation_inequality(1.5, 4, 2, 0.7 + 0.2j)
        assert out in ("lt", "eq", "gt")


class TestCircleImage:
    def test_closed_polyline(self):
        p = HarmonicQuadrinomial(b=0.0, c=0.0, k=1, n=3, m=1)
        pts = circle_image(p, 1.0, 64)
        assert len(pts) == 65
        assert pts[0] == pts[-1]

    def test_passes_near_zero_on_unit_circle(self):
        p = HarmonicQuadrinomial(b=0.0, c=0.0, k=1, n=3, m=1)
        pts = circle_image(p, 1.0, 4096)
        near_zero = sum(1 for w in pts[:-1] if abs(w) < 5e-3)
        assert near_zero >= 4  # the four unimodular zeros

    def test_radius_zero_maps_to_origin(self):
        p = HarmonicQuadrinomial(b=1.0, c=1.0, k=3, n=2, m=1)
        pts = circle_image(p, 0.0, 16)
        assert all(w == 0j for w in pts)

    def test_minimum_samples(self):
        p = HarmonicQuadrinomial(b=1.0, c=1.0, k=3, n=2, m=1)
        with pytest.raises(ValueError):
            circle_image(p, 1.0, 8)


class TestModularRootCensus:
    def test_partition_is_complete(self):
        p = HarmonicQuadrinomial(b=2.0, c=3.0, k=2, n=2, m=1)
        from quadzero import find_zeros

        report = find_zeros(p)
        on, inside, outside = modular_root_census(p, report=report)
        assert on + inside + outside == report.count

    def test_degenerate_circle_propagates(self):
        p = HarmonicQuadrinomial(b=2.0, c=1.0, k=2, n=2, m=1)
        with pytest.raises(HypothesisViolation):
            modular_root_census(p)
