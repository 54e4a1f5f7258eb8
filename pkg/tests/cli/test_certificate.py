"""
Tests for the :mod:`newton_centers.cli.certificate` module.
"""
from unittest import TestCase

from newton_centers.center.global_center import decide_global_center
from newton_centers.center.local_center import decide_local_center
from newton_centers.cli.certificate import (
    build_certificate,
    read_certificate,
    system_from_dict,
    validate_certificate,
)
from newton_centers.monodromy.decide import decide_monodromy
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.utils.exceptions import InputError, InvariantViolation
from tests.fixtures import (
    DARBOUX_CENTER,
    GOLDEN_CERTIFICATE_PATH,
    REVERSIBLE_CENTER,
)


class BuildCertificateTestCase(TestCase):
    def test_golden(self):
        system = NewtonSystem(DARBOUX_CENTER)
        global_center = decide_global_center(system)
        document = build_certificate(
            system,
            decide_monodromy(system),
            decide_local_center(system),
            global_center,
        )
        validate_certificate(document)
        self.assertDictEqual(
            document, read_certificate(GOLDEN_CERTIFICATE_PATH)
        )

    def test_descent_witnesses(self):
        system = NewtonSystem(REVERSIBLE_CENTER)
        document = build_certificate(system, decide_monodromy(system))
        validate_certificate(document)
        monodromy = document["monodromy"]
        self.assertEqual(monodromy["condition"], "M3")
        self.assertEqual(monodromy["blowup_polynomial"], ["-1/1", "0/1", "-1/1"])
        self.assertEqual(len(monodromy["witnesses"]), 2)
        signs = [w["u_sign"] for w in monodromy["witnesses"]]
        self.assertEqual(signs, ["positive", "negative"])
        for witness in monodromy["witnesses"]:
            self.assertTrue(witness["verdict"])
            self.assertEqual(
                witness["terminal"]["reason"], "NoNonzeroRealRoots"
            )

    def test_system_echo(self):
        document = read_certificate(GOLDEN_CERTIFICATE_PATH)
        system = system_from_dict(document["system"])
        self.assertEqual(system, NewtonSystem(DARBOUX_CENTER))

    def test_system_echo_zero_denominator(self):
        document = read_certificate(GOLDEN_CERTIFICATE_PATH)
        document["system"]["coefficients"][0][1] = "1/0"
        with self.assertRaises(InputError):
            system_from_dict(document["system"])

    def test_invalid_document(self):
        document = read_certificate(GOLDEN_CERTIFICATE_PATH)
        document["monodromy"]["condition"] = "M4"
        with self.assertRaises(InvariantViolation):
            validate_certificate(document)
