"""
Tests for the :mod:`newton_centers.polyarith.decomposition` module.
"""
from unittest import TestCase

from newton_centers.polyarith.decomposition import (
    decompose_complete,
    expand_in_powers,
)
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.utils.exceptions import NoDecompositionError


class DecomposeCompleteTestCase(TestCase):
    def test_square(self):
        decompositions = decompose_complete(RatPoly.monomial(4))
        self.assertEqual(len(decompositions), 1)
        outer, inner = decompositions[0]
        self.assertEqual(outer, RatPoly.monomial(2))
        self.assertEqual(inner, RatPoly.monomial(2))

    def test_cubic_inner(self):
        # x⁶ + 2x³ = (x³)² + 2x³
        polynomial = RatPoly([0, 0, 0, 2, 0, 0, 1])
        decompositions = decompose_complete(polynomial)
        self.assertEqual(len(decompositions), 1)
        outer, inner = decompositions[0]
        self.assertEqual(outer, RatPoly([0, 2, 1]))
        self.assertEqual(inner, RatPoly.monomial(3))

    def test_normalization_of_lowest_coefficient(self):
        # (x² - x)², normalized to h = x - x²
        polynomial = RatPoly([0, 0, 1, -2, 1])
        outer, inner = decompose_complete(polynomial)[0]
        self.assertEqual(inner, RatPoly([0, 1, -1]))
        self.assertEqual(outer, RatPoly.monomial(2))
        self.assertEqual(outer.compose(inner), polynomial)

    def test_prime_degree(self):
        self.assertListEqual(decompose_complete(RatPoly([0, 1, 0, 1])), [])

    def test_indecomposable(self):
        self.assertListEqual(decompose_complete(RatPoly([0, 1, 0, 0, 1])), [])

    def test_linear_raises(self):
        with self.assertRaises(NoDecompositionError):
            decompose_complete(RatPoly([0, 1]))


class ExpandInPowersTestCase(TestCase):
    def test_expansion(self):
        polynomial = RatPoly([1, 0, 2, 0, 1])
        value = expand_in_powers(polynomial, RatPoly.monomial(2))
        self.assertListEqual(value, [1, 2, 1])

    def test_non_constant_remainder(self):
        polynomial = RatPoly([0, 1, 0, 0, 1])
        self.assertIsNone(expand_in_powers(polynomial, RatPoly.monomial(2)))
