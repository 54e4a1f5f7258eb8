"""
Tests for the local center modules of :mod:`newton_centers.center`.
"""
from unittest import TestCase

from newton_centers.center.decomposition import check_c2_decomposition
from newton_centers.center.local_center import (
    LocalCondition,
    decide_local_center,
)
from newton_centers.center.local_monodromy import (
    OriginCase,
    local_monodromy_origin,
)
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.utils.exceptions import (
    NotAnEquilibriumError,
    PreconditionError,
    WrongFamilyError,
)
from tests.center.fixtures import COMPOSITION_CENTER, FOCUS
from tests.fixtures import (
    CUBIC_IN_Y,
    DARBOUX_CENTER,
    LIENARD_L2,
    PURE_QUARTIC_POTENTIAL,
    REVERSIBLE_CENTER,
)


def origin(polynomials):
    return local_monodromy_origin(NewtonSystem(polynomials))


class LocalMonodromyOriginTestCase(TestCase):
    def test_nondegenerate(self):
        data = origin(REVERSIBLE_CENTER)
        self.assertIs(data.case, OriginCase.W1)
        self.assertEqual((data.nu, data.iota0, data.iota1), (1, 1, None))
        self.assertTrue(data.is_monodromic)

    def test_nilpotent(self):
        data = origin(PURE_QUARTIC_POTENTIAL)
        self.assertIs(data.case, OriginCase.W2)
        self.assertEqual(data.nu, 2)

    def test_nilpotent_with_damping(self):
        self.assertIs(origin([[0, 0, 0, -1], [0, 0, 1]]).case, OriginCase.W2)
        self.assertIs(
            origin([[0, 0, 0, -1], [0, 0, 3]]).case,
            OriginCase.NOT_MONODROMIC,
        )
        self.assertIs(origin(LIENARD_L2).case, OriginCase.NOT_MONODROMIC)

    def test_not_monodromic(self):
        for polynomials in ([[0, 1]], [[0, 0, -1]], [[0, -1], [1]]):
            data = origin(polynomials)
            self.assertIs(data.case, OriginCase.NOT_MONODROMIC)
            self.assertFalse(data.is_monodromic)

    def test_as_dict(self):
        expected = {"nu": 1, "iota0": 1, "iota1": 1, "case": "W1"}
        self.assertDictEqual(origin(DARBOUX_CENTER).as_dict(), expected)

    def test_not_an_equilibrium(self):
        with self.assertRaises(NotAnEquilibriumError):
            origin([[1, -1]])

    def test_high_y_degree(self):
        with self.assertRaises(WrongFamilyError):
            origin(CUBIC_IN_Y)


class CheckC2DecompositionTestCase(TestCase):
    def test_square(self):
        system = NewtonSystem(COMPOSITION_CENTER)
        decomposition = check_c2_decomposition(system, 1)
        self.assertEqual(decomposition.r, RatPoly.monomial(2))
        self.assertEqual(decomposition.A[0], RatPoly([-1, -1]))
        self.assertEqual(decomposition.A[1], RatPoly([1]))
        self.assertEqual(decomposition.A[2], RatPoly([0, -1]))
        self.assertEqual(decomposition.kappa, 1)
        self.assertEqual(
            (
                decomposition.alpha_k,
                decomposition.beta_k,
                decomposition.gamma_k,
            ),
            (-1, 0, -1),
        )
        self.assertEqual(decomposition.y_tilde_star, 0)
        for i in range(3):
            self.assertEqual(decomposition.reconstruct(i), system.P(i))

    def test_reduced_system(self):
        decomposition = check_c2_decomposition(
            NewtonSystem(COMPOSITION_CENTER), 1
        )
        reduced = decomposition.reduced_system
        self.assertEqual(reduced.n, 1)
        self.assertEqual(reduced.P(0), RatPoly([-1, -1]))

    def test_valuation_must_match(self):
        self.assertIsNone(
            check_c2_decomposition(NewtonSystem(COMPOSITION_CENTER), 2)
        )

    def test_none(self):
        self.assertIsNone(check_c2_decomposition(NewtonSystem(FOCUS), 1))


class DecideLocalCenterTestCase(TestCase):
    def test_reversible(self):
        verdict = decide_local_center(NewtonSystem(REVERSIBLE_CENTER))
        self.assertTrue(verdict.center)
        self.assertEqual(
            verdict.conditions, (LocalCondition.C1, LocalCondition.C2)
        )
        self.assertIsNone(verdict.darboux_constant)

    def test_darboux(self):
        verdict = decide_local_center(NewtonSystem(DARBOUX_CENTER))
        self.assertEqual(
            verdict.conditions, (LocalCondition.C3, LocalCondition.C2)
        )
        self.assertEqual(verdict.darboux_constant, 1)
        self.assertFalse(verdict.invariant_curve)
        self.assertTrue(verdict.holds(LocalCondition.C3))

    def test_focus(self):
        verdict = decide_local_center(NewtonSystem(FOCUS))
        self.assertFalse(verdict.center)
        self.assertEqual(verdict.conditions, ())

    def test_not_monodromic_raises(self):
        with self.assertRaises(PreconditionError):
            decide_local_center(NewtonSystem(LIENARD_L2))
