"""
Tests for the :mod:`newton_centers.monodromy.decide` module.
"""
from unittest import TestCase

import sympy
from newton_centers.cli.sweeps import cherkas_equivalence_sweep
from newton_centers.monodromy.decide import certify_chart, decide_monodromy
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.monodromy.verdict import FailureCase, MonodromyCondition
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.resolution.descent import TerminalReason
from tests.fixtures import (
    CUBIC_IN_Y,
    DARBOUX_CENTER,
    HARMONIC,
    LIENARD_L2,
    LIENARD_NOT_MONODROMIC,
    M2_SYSTEM,
    QUARTIC_POTENTIAL,
    REVERSIBLE_CENTER,
)
from tests.resolution.fixtures import SINGLE_EDGE, field

#: Seed of the randomized descent/curve search agreement sweep.
SWEEP_SEED = 1729


def decide(polynomials, **kwargs):
    return decide_monodromy(NewtonSystem(polynomials), **kwargs)


class DecideMonodromyTestCase(TestCase):
    def assert_failure(self, verdict, case: FailureCase):
        self.assertFalse(verdict.monodromic)
        self.assertIs(verdict.condition, MonodromyCondition.NOT_MONODROMIC)
        self.assertIs(verdict.failure_case, case)

    def test_degree_too_high(self):
        self.assert_failure(decide(CUBIC_IN_Y), FailureCase.DEGREE_TOO_HIGH)

    def test_zero_p0(self):
        self.assert_failure(decide([[], [0, 1]]), FailureCase.P0_ZERO)

    def test_potential(self):
        verdict = decide(QUARTIC_POTENTIAL)
        self.assertTrue(verdict.monodromic)
        self.assertIs(verdict.condition, MonodromyCondition.POTENTIAL)
        self.assertTrue(decide(HARMONIC).monodromic)

    def test_potential_sign(self):
        verdict = decide([[0, 1]])
        self.assertFalse(verdict.monodromic)
        self.assertIs(verdict.failure_case, FailureCase.POTENTIAL_SIGN)

    def test_even_degree(self):
        self.assert_failure(decide([[0, 0, -1], [], [1]]), FailureCase.N1)

    def test_positive_c(self):
        system = [[0, 0, 0, -1], [], [0, 0, 0, 1]]
        self.assert_failure(decide(system), FailureCase.N2)

    def test_zero_c_nonzero_b(self):
        system = [[0, 0, 0, -1], [0, 0, 0, 1], [1]]
        self.assert_failure(decide(system), FailureCase.N3)

    def test_zero_c_positive_a(self):
        self.assert_failure(decide([[0, 0, 0, 1], [], [1]]), FailureCase.N4)

    def test_m1_failure_with_curve(self):
        verdict = decide([[0, 0, 0, -1], [], [1]])
        self.assert_failure(verdict, FailureCase.N5)
        self.assertIsNotNone(verdict.curve)
        self.assertEqual(verdict.curve.leading_term[0], sympy.Rational(3, 2))
        reasons = {c.terminal.reason for c in verdict.witness}
        self.assertSetEqual(reasons, {TerminalReason.ODD_WIDTH})

    def test_m2(self):
        verdict = decide(M2_SYSTEM)
        self.assertTrue(verdict.monodromic)
        self.assertIs(verdict.condition, MonodromyCondition.M2)
        self.assertEqual(verdict.trace["discriminant"], -4)
        self.assertIs(decide(DARBOUX_CENTER).condition, MonodromyCondition.M2)

    def test_positive_discriminant(self):
        system = [[0, 0, 0, -1], [0, 0, 0, 3], [0, 0, 0, -1]]
        self.assert_failure(decide(system), FailureCase.N6)

    def test_m3(self):
        verdict = decide(REVERSIBLE_CENTER)
        self.assertTrue(verdict.monodromic)
        self.assertIs(verdict.condition, MonodromyCondition.M3)
        self.assertEqual(verdict.blowup_polynomial, RatPoly([-1, 0, -1]))
        self.assertEqual(len(verdict.witness), 2)
        self.assertTrue(all(c.verdict for c in verdict.witness))
        self.assertIsNone(verdict.curve)

    def test_lienard_specialized(self):
        verdict = decide(LIENARD_L2)
        self.assertTrue(verdict.monodromic)
        self.assertIs(verdict.condition, MonodromyCondition.L2)

    def test_lienard_general_path(self):
        verdict = decide(LIENARD_L2, specialized=False)
        self.assertTrue(verdict.monodromic)
        self.assertIs(verdict.condition, MonodromyCondition.M1)
        verdict = decide(LIENARD_NOT_MONODROMIC, specialized=False)
        self.assert_failure(verdict, FailureCase.N5)
        self.assertEqual(verdict.curve.terms, ((2, 1),))

    def test_positive_scaling_keeps_verdict(self):
        for polynomials in (M2_SYSTEM, REVERSIBLE_CENTER, QUARTIC_POTENTIAL):
            system = NewtonSystem(polynomials)
            original = decide_monodromy(system)
            for factor in (2, sympy.Rational(1, 3)):
                scaled = decide_monodromy(system.scaled(factor))
                self.assertEqual(scaled.monodromic, original.monodromic)
                self.assertIs(scaled.condition, original.condition)


class CertifyChartTestCase(TestCase):
    def test_agreement(self):
        decision = certify_chart(field(*SINGLE_EDGE), 3, 2, 3)
        self.assertTrue(decision.monodromic)
        self.assertIsNone(decision.curve)
        self.assertEqual(decision.terminal_polynomial, RatPoly([0, -3, 0, -1]))

    def test_random_cherkas_systems(self):
        results = cherkas_equivalence_sweep(SWEEP_SEED, 100)
        self.assertEqual(len(results), 100)
        for _, decision in results:
            self.assertEqual(decision.monodromic, decision.curve is None)
