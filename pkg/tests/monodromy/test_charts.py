"""
Tests for the :mod:`newton_centers.monodromy.charts` module.
"""
from unittest import TestCase

from newton_centers.monodromy.charts import chart_fields, y_star, y_star_shift
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.utils.exceptions import (
    UndefinedShiftError,
    WrongFamilyError,
)
from tests.fixtures import (
    LIENARD_L2,
    QUARTIC_POTENTIAL,
    REVERSIBLE_CENTER,
)


class ChartFieldsTestCase(TestCase):
    def setUp(self):
        self.charts = chart_fields(NewtonSystem(REVERSIBLE_CENTER))

    def test_x_chart(self):
        x0 = self.charts.X0
        self.assertDictEqual(x0.F.terms, {(5, 0): 1})
        self.assertDictEqual(x0.G.terms, {(0, 1): -1, (2, 3): -1})

    def test_z_chart(self):
        z0 = self.charts.Z0
        self.assertEqual(z0.names, ("x", "v"))
        self.assertDictEqual(z0.F.terms, {(0, 0): 1})
        self.assertDictEqual(z0.G.terms, {(3, 1): 1, (1, 3): 1})

    def test_y_chart(self):
        ystar0 = self.charts.Ystar0
        self.assertDictEqual(ystar0.F.terms, {(5, 1): -1})
        self.assertDictEqual(ystar0.G.terms, {(2, 0): -1, (0, 2): -1})

    def test_lienard_needs_flag(self):
        system = NewtonSystem(LIENARD_L2)
        with self.assertRaises(WrongFamilyError):
            chart_fields(system)
        x0 = chart_fields(system, allow_lienard=True).X0
        self.assertDictEqual(x0.G.terms, {(2, 2): 1, (0, 3): -1})

    def test_potential_raises(self):
        with self.assertRaises(WrongFamilyError):
            chart_fields(NewtonSystem(QUARTIC_POTENTIAL), allow_lienard=True)


class YStarTestCase(TestCase):
    def test_shift(self):
        system = NewtonSystem([[0, 0, 0, -1], [0, 0, 0, 2], [0, 0, 0, -1]])
        self.assertEqual(y_star(system), 1)
        shifted = y_star_shift(system)
        # -u⁵(y + 1) and -(y + 1)² + 2(y + 1) - 1 = -y²
        self.assertDictEqual(shifted.F.terms, {(5, 0): -1, (5, 1): -1})
        self.assertDictEqual(shifted.G.terms, {(0, 2): -1})

    def test_undefined(self):
        system = NewtonSystem([[0, 0, 0, -1], [], [1]])
        with self.assertRaises(UndefinedShiftError):
            y_star(system)
