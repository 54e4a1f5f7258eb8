"""
Tests for the :mod:`newton_centers.resolution.curve_search` and
:mod:`newton_centers.resolution.fractional_series` modules.
"""
from unittest import TestCase

import sympy
from newton_centers.resolution.curve_search import fractional_curve_search
from newton_centers.resolution.descent import USign
from newton_centers.resolution.fractional_series import (
    T,
    FractionalSeries,
    half_integer,
    invariance_residual,
    verify_witness,
)
from newton_centers.utils.exceptions import (
    InvalidParameterError,
    WitnessVerificationError,
)
from tests.resolution.fixtures import SINGLE_EDGE, SQUARE_ROOT_CURVES, field

HALF = sympy.Rational(1, 2)
ONE = sympy.Integer(1)


class FractionalCurveSearchTestCase(TestCase):
    def test_half_integer_witness(self):
        witness = fractional_curve_search(field(*SQUARE_ROOT_CURVES), 1)
        self.assertIsNotNone(witness)
        self.assertEqual(witness.terms, ((HALF, -1),))
        self.assertIs(witness.u_sign, USign.POSITIVE)
        self.assertEqual(witness.leading_term, (HALF, -1))

    def test_no_curve_on_the_other_side(self):
        witness = fractional_curve_search(
            field(*SQUARE_ROOT_CURVES), 1, USign.NEGATIVE
        )
        self.assertIsNone(witness)

    def test_no_curve(self):
        self.assertIsNone(fractional_curve_search(field(*SINGLE_EDGE), 2))

    def test_zero_curve_allowed(self):
        witness = fractional_curve_search(
            field(*SINGLE_EDGE), 2, allow_zero=True
        )
        self.assertTrue(witness.is_zero)
        self.assertEqual(str(witness), "0")

    def test_bad_order_bound(self):
        with self.assertRaises(InvalidParameterError):
            fractional_curve_search(field(*SINGLE_EDGE), "1/3")


class FractionalSeriesTestCase(TestCase):
    def setUp(self):
        self.field = field(*SQUARE_ROOT_CURVES)

    def test_residual_of_exact_curve(self):
        series = FractionalSeries(((HALF, 1),), USign.POSITIVE, 2)
        self.assertTrue(invariance_residual(self.field, series).is_zero)
        verify_witness(self.field, series)

    def test_residual_of_wrong_curve(self):
        series = FractionalSeries(((HALF, 2),), USign.POSITIVE, 2)
        residual = invariance_residual(self.field, series)
        self.assertEqual(residual.as_expr(), 12 * T**4)
        with self.assertRaises(WitnessVerificationError):
            verify_witness(self.field, series)

    def test_as_dict(self):
        series = FractionalSeries(
            ((HALF, sympy.Integer(-1)), (ONE, sympy.Integer(3))),
            USign.NEGATIVE,
            ONE,
        )
        expected = {
            "u_sign": "negative",
            "truncation_order": "2/2",
            "terms": [
                {"exponent": "1/2", "coefficient": "-1/1"},
                {"exponent": "2/2", "coefficient": "3/1"},
            ],
        }
        self.assertDictEqual(series.as_dict(), expected)

    def test_exponents_must_increase(self):
        with self.assertRaises(InvalidParameterError):
            FractionalSeries(((ONE, 1), (HALF, 1)), USign.POSITIVE, ONE)

    def test_exponents_must_be_half_integers(self):
        with self.assertRaises(InvalidParameterError):
            FractionalSeries(
                ((sympy.Rational(1, 3), 1),), USign.POSITIVE, 1
            )


class HalfIntegerTestCase(TestCase):
    def test_valid(self):
        self.assertEqual(half_integer("3/2"), sympy.Rational(3, 2))
        self.assertEqual(half_integer(2), 2)

    def test_invalid(self):
        for value in (-1, sympy.Rational(1, 3)):
            with self.assertRaises(InvalidParameterError):
                half_integer(value)
