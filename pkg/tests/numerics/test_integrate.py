"""
Tests for the :mod:`newton_centers.numerics.integrate` module.
"""
import math
from unittest import TestCase

import numpy as np
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.numerics.config import IntegratorConfig
from newton_centers.numerics.integrate import (
    Chart,
    Stepper,
    Termination,
    chart_function,
    integrate_orbit,
    section_crossing,
)
from newton_centers.utils.exceptions import InvalidParameterError
from tests.fixtures import (
    CUBIC_IN_Y,
    HARMONIC,
    QUARTIC_POTENTIAL,
    REVERSIBLE_CENTER,
)


class IntegrateOrbitTestCase(TestCase):
    def test_harmonic_return(self):
        trajectory = integrate_orbit(NewtonSystem(HARMONIC), (1.0, 0.0))
        self.assertTrue(trajectory.returned)
        self.assertAlmostEqual(trajectory.end_time, 2 * math.pi, places=6)
        self.assertAlmostEqual(trajectory.x[-1], 1.0, places=6)
        self.assertAlmostEqual(trajectory.y[-1], 0.0, places=9)

    def test_energy_is_conserved(self):
        trajectory = integrate_orbit(
            NewtonSystem(QUARTIC_POTENTIAL), (1.0, 0.0)
        )
        x, y = trajectory.x, trajectory.y
        energy = y**2 / 2 + x**2 / 2 + x**4 / 4
        self.assertLess(np.max(np.abs(energy - 0.75)), 1e-6)

    def test_as_array(self):
        trajectory = integrate_orbit(NewtonSystem(HARMONIC), (1.0, 0.0))
        array = trajectory.as_array()
        self.assertEqual(array.shape, (len(trajectory.t), 3))
        np.testing.assert_array_equal(array[0], [0.0, 1.0, 0.0])

    def test_escape(self):
        system = NewtonSystem([[0, 1]])
        trajectory = integrate_orbit(system, (1.0, 0.0))
        self.assertIs(trajectory.termination, Termination.ESCAPED)
        self.assertFalse(trajectory.returned)

    def test_bad_initial_condition(self):
        system = NewtonSystem(HARMONIC)
        for initial in ((1.0,), (math.nan, 0.0)):
            with self.assertRaises(InvalidParameterError):
                integrate_orbit(system, initial)

    def test_reversible_center_returns(self):
        system = NewtonSystem(REVERSIBLE_CENTER)
        for amplitude in (4.0, 8.0):
            trajectory = integrate_orbit(system, (amplitude, 0.0))
            self.assertTrue(trajectory.returned, msg=amplitude)
            self.assertTrue(math.isfinite(trajectory.end_time))
            self.assertGreater(trajectory.end_time, 0)
            self.assertAlmostEqual(trajectory.x[-1], amplitude, places=4)

    def test_orbit_beyond_double_range(self):
        trajectory = integrate_orbit(
            NewtonSystem(REVERSIBLE_CENTER), (8.0, 0.0)
        )
        self.assertTrue(np.any(np.isinf(trajectory.y)))
        self.assertTrue(np.all(np.isfinite(trajectory.x)))
        self.assertTrue(np.all(np.isfinite(trajectory.t)))
        self.assertTrue(np.all(np.diff(trajectory.t) >= 0))


class StepperTestCase(TestCase):
    def test_chart_is_entered_and_left(self):
        stepper = Stepper(
            NewtonSystem(REVERSIBLE_CENTER), (4.0, 0.0), IntegratorConfig()
        )
        entered = left = False
        for step in stepper:
            if step.chart is Chart.Y_INFINITY:
                entered = True
            elif entered:
                left = True
                break
        self.assertTrue(entered)
        self.assertTrue(left)

    def test_large_initial_y_starts_in_chart(self):
        config = IntegratorConfig()
        stepper = Stepper(NewtonSystem(HARMONIC), (0.0, 1e4), config)
        step = next(iter(stepper))
        self.assertIs(step.chart, Chart.Y_INFINITY)
        self.assertIsNone(step.dense)
        self.assertIsNone(section_crossing(step, config))

    def test_cubic_systems_stay_affine(self):
        stepper = Stepper(
            NewtonSystem(CUBIC_IN_Y), (0.0, 1e4), IntegratorConfig()
        )
        self.assertFalse(stepper.has_chart)
        self.assertIs(next(iter(stepper)).chart, Chart.AFFINE)

    def test_chart_escape(self):
        # ẏ = -x + xy², orbits above y = 1 leave along v = 0
        system = NewtonSystem([[0, -1], [], [0, 1]])
        stepper = Stepper(system, (1.0, 2e3), IntegratorConfig())
        steps = list(stepper)
        self.assertIs(stepper.termination, Termination.ESCAPED)
        self.assertIs(steps[-1].chart, Chart.Y_INFINITY)
        self.assertAlmostEqual(steps[-1].state1[0], 1e6)


class ChartFunctionTestCase(TestCase):
    def test_values(self):
        system = NewtonSystem(REVERSIBLE_CENTER)
        # dw/dx = x v² + x³, dt/dx = v
        f = chart_function(system, 1)
        np.testing.assert_allclose(f(2.0, (0.0, 0.0)), [10.0, 1.0])
        g = chart_function(system, -1)
        np.testing.assert_allclose(
            g(1.0, (math.log(2.0), 0.0)), [5.0, -2.0]
        )
