"""
Tests for the :mod:`newton_centers.cli.main` module.
"""
import io
import json
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest import TestCase

from newton_centers.cli.certificate import read_certificate
from newton_centers.cli.main import (
    DECIDED,
    INPUT_ERROR,
    build_parser,
    main,
)
from tests.fixtures import GOLDEN_CERTIFICATE_PATH


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


class ExactCommandsTestCase(TestCase):
    def test_global(self):
        code, out, _ = run("global", "y' = -x - x^3*y^2")
        self.assertEqual(code, DECIDED)
        document = json.loads(out)
        self.assertEqual(document["global_center"]["condition"], "G1")
        infinity = document["global_center"]["infinity"]
        self.assertEqual(infinity["condition"], "M3")

    def test_monodromy(self):
        code, out, _ = run("monodromy", "[[0, 0, -1], [], [1]]")
        self.assertEqual(code, DECIDED)
        monodromy = json.loads(out)["monodromy"]
        self.assertFalse(monodromy["monodromic"])
        self.assertEqual(monodromy["failure_case"], "N1")

    def test_center(self):
        code, out, _ = run("center", "y' = -x + x*y - x*y^2")
        self.assertEqual(code, DECIDED)
        local = json.loads(out)["local_center"]
        self.assertEqual(local["conditions"], ["C3", "C2"])
        self.assertEqual(local["darboux_constant"], "1/1")

    def test_center_of_non_monodromic_origin(self):
        code, _, err = run("center", "y' = -x^3 + x*y")
        self.assertEqual(code, INPUT_ERROR)
        self.assertIn("error:", err)

    def test_lienard(self):
        code, out, _ = run("lienard", "y' = -x^3 + x*y")
        self.assertEqual(code, DECIDED)
        self.assertEqual(json.loads(out)["monodromy"]["condition"], "L2")

    def test_analyze_matches_golden(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "certificate.json"
            code, out, _ = run(
                "analyze",
                "--no-numeric",
                "--json",
                str(path),
                "y' = -x + x*y - x*y^2",
            )
            self.assertEqual(code, DECIDED)
            self.assertIn("global center: True (G3)", out)
            self.assertDictEqual(
                read_certificate(path),
                read_certificate(GOLDEN_CERTIFICATE_PATH),
            )

    def test_analyze_with_oracle(self):
        code, out, _ = run("analyze", "y' = -x")
        self.assertEqual(code, DECIDED)
        oracle = json.loads(out)["numeric"]["oracle"]
        self.assertEqual(oracle["outcome"], "Winds")
        self.assertTrue(oracle["agrees"])


class InputErrorsTestCase(TestCase):
    def test_syntax_error_caret(self):
        code, _, err = run("global", "y' = -x + z")
        self.assertEqual(code, INPUT_ERROR)
        self.assertIn("  " + " " * 10 + "^", err.splitlines())

    def test_unexpected_tokens(self):
        cases = {"y' = 2x": 6, "y' = x )": 7, "y' = *x": 5, "y' = x +": 8}
        for text, position in cases.items():
            code, out, err = run("monodromy", text)
            self.assertEqual(code, INPUT_ERROR, msg=text)
            self.assertEqual(out, "", msg=text)
            self.assertIn("  " + " " * position + "^", err.splitlines())

    def test_usage_errors(self):
        for argv in (["bogus"], [], ["period"]):
            with self.assertRaises(SystemExit) as context:
                run(*argv)
            self.assertEqual(context.exception.code, INPUT_ERROR)

    def test_kukles_bad_parameter(self):
        code, _, _ = run("kukles", "b=1")
        self.assertEqual(code, INPUT_ERROR)
        code, _, _ = run("kukles", "n=3", "delta=1", "a0=-1")
        self.assertEqual(code, INPUT_ERROR)


class SweepCommandsTestCase(TestCase):
    def test_kukles_instance(self):
        code, out, _ = run("kukles", "n=3", "delta=-1", "a0=-1", "a2=-1")
        self.assertEqual(code, DECIDED)
        self.assertIn("reason: GlobalCenter", out)
        self.assertIn("decision: True (G1)", out)

    def test_lienard_grid(self):
        code, out, _ = run("lienard", "--grid")
        self.assertEqual(code, DECIDED)
        lines = out.splitlines()
        self.assertEqual(
            lines[0], "ell0,ell1,a,b,expected,specialized,general"
        )
        self.assertEqual(len(lines), 217)

    def test_check(self):
        code, out, _ = run(
            "check", "--seed", "7", "--count", "5", "--blowups", "20"
        )
        self.assertEqual(code, DECIDED)
        self.assertIn("blow-ups: 20 (0 failures)", out)


class NumericCommandsTestCase(TestCase):
    def test_period(self):
        code, out, _ = run("period", "--amplitudes", "1,2", "y' = -x")
        self.assertEqual(code, DECIDED)
        lines = out.splitlines()
        self.assertEqual(
            lines[0], "amplitude,period,refinement_error,converged"
        )
        self.assertEqual(len(lines), 3)

    def test_period_of_non_center(self):
        code, _, _ = run("period", "y' = x")
        self.assertEqual(code, INPUT_ERROR)

    def test_simulate(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "orbit.csv"
            code, out, _ = run("simulate", "--csv", str(path), "y' = -x")
            self.assertEqual(code, DECIDED)
            self.assertIn("termination: SectionReturn", out)
            self.assertEqual(path.read_text().splitlines()[0], "t,x,y")

    def test_bad_initial_condition(self):
        code, _, _ = run("simulate", "--initial", "1", "y' = -x")
        self.assertEqual(code, INPUT_ERROR)


class BuildParserTestCase(TestCase):
    def test_numeric_options(self):
        args = build_parser().parse_args(
            ["period", "--tol", "1e-8", "--method", "DOP853", "y' = -x"]
        )
        self.assertEqual(args.tol, 1e-8)
        self.assertEqual(args.method, "DOP853")
        self.assertEqual(args.amplitudes, "1,2,4,8")
