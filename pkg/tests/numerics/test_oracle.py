"""
Tests for the :mod:`newton_centers.numerics.oracle` module.
"""
from unittest import TestCase

from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.numerics.oracle import (
    OracleOutcome,
    OracleReport,
    check_concordance,
    monodromy_oracle,
)
from newton_centers.utils.exceptions import ConcordanceWarning
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


class MonodromyOracleTestCase(TestCase):
    def test_winds(self):
        for polynomials in (HARMONIC, QUARTIC_POTENTIAL):
            report = monodromy_oracle(NewtonSystem(polynomials))
            self.assertIs(report.outcome, OracleOutcome.WINDS)
            self.assertTrue(report.monodromic)
            self.assertEqual(len(report.orbits), 16)

    def test_escapes(self):
        report = monodromy_oracle(
            NewtonSystem(CUBIC_IN_Y), radii=(1e2,), angles=4
        )
        self.assertIs(report.outcome, OracleOutcome.ESCAPES)
        self.assertFalse(report.monodromic)
        self.assertEqual(len(report.orbits), 4)


class CheckConcordanceTestCase(TestCase):
    system = NewtonSystem(HARMONIC)

    def test_agreement(self):
        report = OracleReport(OracleOutcome.WINDS)
        self.assertTrue(check_concordance(report, True, self.system))

    def test_inconclusive(self):
        report = OracleReport(OracleOutcome.INCONCLUSIVE)
        self.assertIsNone(report.monodromic)
        self.assertTrue(check_concordance(report, False, self.system))

    def test_contradiction(self):
        report = OracleReport(OracleOutcome.ESCAPES)
        with self.assertWarns(ConcordanceWarning):
            agrees = check_concordance(report, True, self.system)
        self.assertFalse(agrees)


class OracleCorpusTestCase(TestCase):
    def test_monodromic_systems_wind(self):
        for polynomials in (
            REVERSIBLE_CENTER,
            DARBOUX_CENTER,
            M2_SYSTEM,
            LIENARD_L2,
        ):
            report = monodromy_oracle(NewtonSystem(polynomials), angles=4)
            self.assertIs(
                report.outcome, OracleOutcome.WINDS, msg=polynomials
            )
            self.assertEqual(len(report.orbits), 8)

    def test_non_monodromic_systems_escape(self):
        for polynomials in (
            CUBIC_IN_Y,
            LIENARD_NOT_MONODROMIC,
            [[0, -1], [], [0, 1]],
        ):
            report = monodromy_oracle(NewtonSystem(polynomials), angles=4)
            self.assertIs(
                report.outcome, OracleOutcome.ESCAPES, msg=polynomials
            )
            self.assertIs(report.monodromic, False)

    def test_reversible_center_agrees_with_exact_verdict(self):
        system = NewtonSystem(REVERSIBLE_CENTER)
        report = monodromy_oracle(system, radii=(1e3,), angles=4)
        self.assertTrue(check_concordance(report, True, system))
