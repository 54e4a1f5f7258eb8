"""
Definition of the :class:`BiRatPolyTestCase` class.
"""
from unittest import TestCase

import sympy
from newton_centers.polyarith.bi_rat_poly import BiRatPoly
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.utils.exceptions import InexactDivisionError


class BiRatPolyTestCase(TestCase):
    def setUp(self):
        # u + v
        self.linear = BiRatPoly({(1, 0): 1, (0, 1): 1})

    def test_zero_terms_are_dropped(self):
        self.assertTrue(BiRatPoly({(1, 1): 0}).is_zero)
        self.assertDictEqual(BiRatPoly().terms, {})

    def test_power(self):
        expected = {(2, 0): 1, (1, 1): 2, (0, 2): 1}
        self.assertDictEqual((self.linear**2).terms, expected)

    def test_degrees(self):
        polynomial = BiRatPoly({(3, 1): 1, (1, 4): -2})
        self.assertEqual(polynomial.degree_u, 3)
        self.assertEqual(polynomial.degree_v, 4)
        self.assertEqual(polynomial.u_valuation, 1)
        self.assertEqual(polynomial.coefficient(1, 4), -2)
        self.assertEqual(polynomial.coefficient(0, 0), 0)

    def test_substitute(self):
        polynomial = BiRatPoly({(1, 1): 1})
        u_image = BiRatPoly({(2, 0): 1})
        value = polynomial.substitute(u_image, self.linear)
        self.assertDictEqual(value.terms, {(3, 0): 1, (2, 1): 1})

    def test_divide_u_power(self):
        polynomial = BiRatPoly({(3, 0): 2, (2, 1): 1})
        value = polynomial.divide_u_power(2)
        self.assertDictEqual(value.terms, {(1, 0): 2, (0, 1): 1})

    def test_divide_u_power_raises(self):
        with self.assertRaises(InexactDivisionError):
            self.linear.divide_u_power(1)

    def test_reflections(self):
        polynomial = BiRatPoly({(2, 1): 1, (1, 0): 1})
        self.assertDictEqual(
            polynomial.reflect_u().terms, {(2, 1): 1, (1, 0): -1}
        )
        self.assertDictEqual(
            polynomial.reflect_v().terms, {(2, 1): -1, (1, 0): 1}
        )

    def test_restrictions_to_axes(self):
        polynomial = BiRatPoly({(0, 3): 1, (1, 1): 1, (2, 0): -1})
        self.assertDictEqual(polynomial.at_u_zero(), {3: 1})
        self.assertDictEqual(polynomial.at_v_zero(), {2: -1})

    def test_from_univariate(self):
        value = BiRatPoly.from_univariate(RatPoly([1, 2]), "v", shift=1)
        self.assertDictEqual(value.terms, {(1, 0): 1, (1, 1): 2})

    def test_equality(self):
        self.assertEqual(self.linear - self.linear, BiRatPoly())
        self.assertEqual(self.linear * 2, self.linear + self.linear)

    def test_as_expr_with_names(self):
        w, z = sympy.symbols("w z")
        self.assertEqual(self.linear.as_expr(("w", "z")), w + z)
