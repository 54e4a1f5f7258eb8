"""
Tests for the :mod:`newton_centers.resolution.descent` module.
"""
from unittest import TestCase

from newton_centers.resolution.descent import (
    TerminalReason,
    USign,
    WidthPolicy,
    m1_descent,
)
from newton_centers.utils.exceptions import (
    InvalidParameterError,
    PreconditionError,
)
from tests.resolution.fixtures import (
    DOUBLE_ROOT,
    ODD_WIDTH,
    SINGLE_EDGE,
    TALL_EDGE,
    TWO_EDGES,
    field,
)


class M1DescentTestCase(TestCase):
    def test_terminal_without_real_roots(self):
        for sign in USign:
            verdict, certificate = m1_descent(field(*SINGLE_EDGE), 3, 2, sign)
            self.assertTrue(verdict)
            self.assertEqual(certificate.depth, 0)
            self.assertIs(
                certificate.terminal.reason,
                TerminalReason.NO_NONZERO_REAL_ROOTS,
            )
            self.assertIs(certificate.u_sign, sign)

    def test_terminal_corners_are_saddles(self):
        _, certificate = m1_descent(field(*SINGLE_EDGE), 3, 2)
        self.assertEqual(len(certificate.corners), 2)
        for corner in certificate.corners:
            self.assertEqual(corner.w_coefficient, 1)
            self.assertEqual(corner.z_coefficient, -1)
            self.assertTrue(corner.is_saddle)

    def test_double_root_level(self):
        verdict, certificate = m1_descent(field(*DOUBLE_ROOT), 3, 2)
        self.assertFalse(verdict)
        self.assertEqual(certificate.depth, 1)
        self.assertEqual(certificate.levels[0].phi, 1)
        self.assertEqual(certificate.levels[0].p, 1)
        self.assertIs(
            certificate.terminal.reason, TerminalReason.ZERO_LEFT_ENDPOINT
        )

    def test_odd_width(self):
        verdict, certificate = m1_descent(field(*ODD_WIDTH), 3, 2)
        self.assertFalse(verdict)
        self.assertIs(certificate.terminal.reason, TerminalReason.ODD_WIDTH)

    def test_odd_width_on_half_plane(self):
        verdict, certificate = m1_descent(
            field(*ODD_WIDTH), 3, 2, policy=WidthPolicy.HALF_PLANE
        )
        self.assertTrue(verdict)
        self.assertEqual(certificate.depth, 0)

    def test_multiple_edges(self):
        verdict, certificate = m1_descent(field(*TWO_EDGES), 3, 2)
        self.assertFalse(verdict)
        self.assertIs(
            certificate.terminal.reason, TerminalReason.MULTIPLE_EDGES
        )

    def test_tall_edge_raises(self):
        with self.assertRaises(PreconditionError):
            m1_descent(field(*TALL_EDGE), 3, 2)

    def test_negative_bound_raises(self):
        with self.assertRaises(InvalidParameterError):
            m1_descent(field(*SINGLE_EDGE), 3, -1)

    def test_u_sign_coercion(self):
        self.assertIs(USign.coerce(-1), USign.NEGATIVE)
        self.assertEqual(USign.POSITIVE.factor, 1)
        with self.assertRaises(InvalidParameterError):
            USign.coerce(0)
