"""
Tests for the :mod:`newton_centers.center.kukles` module.
"""
from unittest import TestCase

from newton_centers.center.global_center import (
    GlobalCondition,
    decide_global_center,
)
from newton_centers.center.kukles import (
    KuklesReason,
    kukles_classification,
    kukles_global_center,
    kukles_system,
)
from newton_centers.cli.sweeps import kukles_grid
from newton_centers.monodromy.verdict import MonodromyCondition
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.utils.exceptions import InvalidParameterError


class KuklesSystemTestCase(TestCase):
    def test_polynomials(self):
        system = kukles_system(-1, {0: -1, 2: -1}, 3)
        self.assertEqual(system.P(0), RatPoly([0, -1, 0, -1]))
        self.assertTrue(system.P(1).is_zero)
        self.assertEqual(system.P(2), RatPoly([0, -1]))

    def test_global_center(self):
        system = kukles_system(-1, {0: -1, 2: -1}, 3)
        verdict = decide_global_center(system)
        self.assertIs(verdict.condition, GlobalCondition.G1)
        self.assertIs(verdict.infinity.condition, MonodromyCondition.M1)

    def test_invalid(self):
        for delta, coefficients, n in (
            (1, {0: -1}, 3),
            (-1, {0: -1}, 1),
            (-1, {5: 1}, 3),
            (-1, {0: 0}, 3),
        ):
            with self.assertRaises(InvalidParameterError):
                kukles_system(delta, coefficients, n)


class KuklesClassificationTestCase(TestCase):
    def test_reasons(self):
        cases = [
            (-1, {0: -1, 2: -1}, 3, KuklesReason.GLOBAL_CENTER),
            (-1, {1: 1}, 3, KuklesReason.FOCUS_BY_ROTATION),
            (-1, {3: 1}, 3, KuklesReason.HIGHER_Y_DEGREE),
            (-1, {0: -1}, 2, KuklesReason.EVEN_DEGREE),
            (0, {2: -1}, 3, KuklesReason.ORIGIN_NOT_MONODROMIC),
            (-1, {0: 1}, 3, KuklesReason.ORIGIN_NOT_MONODROMIC),
            (-1, {0: -1, 2: 1}, 3, KuklesReason.INFINITY_NOT_MONODROMIC),
        ]
        for delta, coefficients, n, expected in cases:
            reason = kukles_classification(delta, coefficients, n)
            self.assertIs(reason, expected)

    def test_global_center_predicate(self):
        self.assertTrue(kukles_global_center(0, {0: -1}, 3))
        self.assertFalse(kukles_global_center(-1, {1: -1}, 3))

    def test_grid_agrees_with_decision(self):
        rows = list(kukles_grid(3, values=(-1, 0, 1), indices=(0, 1, 2)))
        self.assertEqual(len(rows), 3 * 26)
        for row in rows:
            self.assertEqual(row.expected, row.decided, msg=str(row))

    def test_full_grid_agrees_with_decision(self):
        for n in (3, 5):
            rows = list(kukles_grid(n))
            self.assertEqual(len(rows), 3 * (5**4 - 1))
            centers = [row for row in rows if row.expected]
            self.assertTrue(centers)
            for row in rows:
                self.assertEqual(row.expected, row.decided, msg=str(row))
