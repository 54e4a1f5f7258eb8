"""
Tests for the :mod:`newton_centers.resolution.blowup` module.
"""
from unittest import TestCase

from newton_centers.cli.sweeps import blowup_identities_hold, blowup_sweep
from newton_centers.resolution.blowup import (
    blowup_u,
    blowup_vertical,
    weighted_order,
)
from newton_centers.utils.exceptions import (
    InexactDivisionError,
    InvalidParameterError,
)
from tests.resolution.fixtures import DOUBLE_ROOT, SINGLE_EDGE, field

#: Seed of the randomized identity sweep.
SWEEP_SEED = 20240229


class BlowupTestCase(TestCase):
    def setUp(self):
        self.field = field(*SINGLE_EDGE)

    def test_weighted_order(self):
        self.assertEqual(weighted_order(self.field, 2, 1), 4)
        self.assertEqual(weighted_order(self.field, 1, 1), 2)

    def test_directional_blowup(self):
        blown = blowup_u(self.field, 2, 1, 0)
        self.assertDictEqual(blown.F.terms, {(1, 0): 1})
        self.assertDictEqual(blown.G.terms, {(0, 1): -3, (0, 3): -1})

    def test_exceptional_divisor_carries_edge_polynomial(self):
        blown = blowup_u(field(*DOUBLE_ROOT), 1, 1, 1)
        self.assertDictEqual(blown.F.terms, {(1, 0): 1})
        self.assertDictEqual(blown.G.terms, {(0, 2): -1, (0, 3): -1})

    def test_vertical_blowup(self):
        for sign in (1, -1):
            corner = blowup_vertical(self.field, 2, sign)
            self.assertEqual(corner.names, ("w", "z"))
            self.assertDictEqual(corner.F.terms, {(1, 0): 1, (5, 0): 3})
            self.assertDictEqual(corner.G.terms, {(0, 1): -1, (4, 1): -1})

    def test_order_above_weighted_order_raises(self):
        with self.assertRaises(InexactDivisionError):
            blowup_u(self.field, 2, 1, 0, sigma=5)

    def test_weights_must_be_coprime(self):
        with self.assertRaises(InvalidParameterError):
            blowup_u(self.field, 2, 2, 0)

    def test_vertical_sign(self):
        with self.assertRaises(InvalidParameterError):
            blowup_vertical(self.field, 2, 0)


class BlowupIdentitiesTestCase(TestCase):
    def test_fixture_identities(self):
        self.assertTrue(blowup_identities_hold(field(*SINGLE_EDGE), 2, 1, 0))
        self.assertTrue(blowup_identities_hold(field(*DOUBLE_ROOT), 1, 1, 1))
        self.assertTrue(
            blowup_identities_hold(field(*SINGLE_EDGE), 3, 2, "-1/2")
        )

    def test_random_sweep(self):
        self.assertEqual(blowup_sweep(SWEEP_SEED, 500), 0)
