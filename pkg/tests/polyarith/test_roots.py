"""
Tests for the :mod:`newton_centers.polyarith.roots` module.
"""
from unittest import TestCase

from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.polyarith.roots import (
    RootKind,
    double_root_factor,
    nonzero_real_roots,
)
from newton_centers.utils.exceptions import ZeroPolynomialError


class DoubleRootFactorTestCase(TestCase):
    def test_double_root(self):
        # v(v - 1)²
        report = double_root_factor(RatPoly([0, 1, -2, 1]))
        self.assertIs(report.kind, RootKind.DOUBLE)
        self.assertEqual(report.root, 1)
        self.assertEqual(report.multiplicity, 2)

    def test_no_nonzero_real_roots(self):
        report = double_root_factor(RatPoly([0, -1, 0, -1]))
        self.assertIs(report.kind, RootKind.NONE)

    def test_simple_root(self):
        report = double_root_factor(RatPoly([-1, 0, 1]))
        self.assertIs(report.kind, RootKind.SIMPLE)

    def test_triple_root(self):
        # v(v - 1)³
        report = double_root_factor(RatPoly([0, -1, 3, -3, 1]))
        self.assertIs(report.kind, RootKind.OTHER)
        self.assertEqual(report.multiplicity, 3)

    def test_irrational_double_roots(self):
        # (v² - 2)²
        report = double_root_factor(RatPoly([4, 0, -4, 0, 1]))
        self.assertIs(report.kind, RootKind.OTHER)

    def test_monomial(self):
        report = double_root_factor(RatPoly.monomial(3, -2))
        self.assertIs(report.kind, RootKind.NONE)

    def test_zero_raises(self):
        with self.assertRaises(ZeroPolynomialError):
            double_root_factor(RatPoly())


class NonzeroRealRootsTestCase(TestCase):
    def test_rational_roots(self):
        roots = nonzero_real_roots({1: -1, 3: 1})
        self.assertListEqual(roots, [-1, 1])

    def test_no_roots(self):
        self.assertListEqual(nonzero_real_roots({1: -3, 3: -1}), [])

    def test_zero_raises(self):
        with self.assertRaises(ZeroPolynomialError):
            nonzero_real_roots({2: 0})
