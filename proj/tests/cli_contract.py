#!/usr/bin/env python3
# Copyright 2026 The qic Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exit codes and JSON output of the qic binary.

usage: cli_contract.py QIC_BINARY CORPUS_DIR SCHEMA_FILE
"""

import json
import math
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

QIC, CORPUS, SCHEMA = sys.argv[1:4]
del sys.argv[1:4]

with open(SCHEMA) as f:
    VALIDATOR = jsonschema.Draft202012Validator(json.load(f))


def corpus(name):
    return os.path.join(CORPUS, name + ".qcir")


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("QIC_DIM_CAP", None)
    if env:
        full_env.update(env)
    return subprocess.run([QIC, *args], capture_output=True, text=True, env=full_env)


def run_json(*args, env=None):
    proc = run("--json", *args, env=env)
    doc = json.loads(proc.stdout)
    VALIDATOR.validate(doc)
    return proc.returncode, doc


class CheckIdentity(unittest.TestCase):
    def test_identity_family_exits_zero(self):
        for name in ["empty", "hh", "t8", "ssdg", "cx2", "xzxz", "x_on_ancilla"]:
            for backend in ["float", "exact"]:
                code, doc = run_json("--backend", backend, "check-identity", corpus(name))
                self.assertEqual(code, 0, name)
                self.assertEqual(doc["verdict"], "identity")

    def test_non_identity_exits_one_with_witness(self):
        code, doc = run_json("check-identity", corpus("x"))
        self.assertEqual(code, 1)
        self.assertEqual(doc["verdict"], "non-identity")
        self.assertAlmostEqual(doc["fidelity"], 0.0, places=12)
        self.assertEqual(len(doc["witness"]), 4)

    def test_assert_identity_flag(self):
        self.assertEqual(run("check-identity", "--assert-identity", corpus("empty")).returncode, 0)
        self.assertEqual(run("check-identity", "--assert-identity", corpus("t")).returncode, 1)

    def test_dimension_cap(self):
        code, doc = run_json("--dim-cap", "4", "check-identity", corpus("cz"))
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["kind"], "DimensionCapExceeded")
        code, doc = run_json("check-identity", corpus("cz"), env={"QIC_DIM_CAP": "4"})
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["kind"], "DimensionCapExceeded")

    def test_exact_backend_rejects_rotations(self):
        code, doc = run_json("--backend", "exact", "check-identity", corpus("rz"))
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["kind"], "UnsupportedOnBackend")
        self.assertEqual(run("check-identity", corpus("rz")).returncode, 1)


class Validate(unittest.TestCase):
    def test_valid_file(self):
        code, doc = run_json("validate", corpus("cx_uncompute"))
        self.assertEqual(code, 0)
        self.assertEqual(doc["circuit"]["gates"], 4)

    def test_bad_gate_names_line(self):
        with tempfile.NamedTemporaryFile("w", suffix=".qcir", delete=False) as f:
            f.write("circuit bad\ninputs 1\nancillas 0\ngate FOO 0\nend\n")
        try:
            code, doc = run_json("validate", f.name)
            self.assertEqual(code, 2)
            self.assertEqual(doc["error"]["kind"], "UnknownGate")
            self.assertEqual(doc["error"]["line"], 4)
            proc = run("validate", f.name)
            self.assertEqual(proc.returncode, 2)
            self.assertIn("line 4", proc.stderr)
        finally:
            os.unlink(f.name)

    def test_empty_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".qcir", delete=False) as f:
            pass
        try:
            code, doc = run_json("validate", f.name)
            self.assertEqual(code, 2)
            self.assertEqual(doc["error"]["kind"], "MissingHeader")
        finally:
            os.unlink(f.name)

    def test_missing_file(self):
        code, doc = run_json("validate", "/nonexistent.qcir")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["kind"], "IoError")

    def test_usage_errors_exit_two(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("--backend", "quantum", "validate", corpus("x")).returncode, 2)
        self.assertEqual(run("--help").returncode, 0)


class CheckEquiv(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(run_json("check-equiv", corpus("hht"), corpus("t"))[0], 0)
        code, doc = run_json("check-equiv", corpus("t"), corpus("s"))
        self.assertEqual(code, 1)
        self.assertEqual(doc["verdict"], "inequivalent")
        code, doc = run_json("check-equiv", corpus("x"), corpus("cz"))
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["kind"], "InputSizeMismatch")

    def test_against_identity(self):
        self.assertEqual(run("check-equiv", "--against-identity", corpus("xzxz")).returncode, 0)
        self.assertEqual(run("check-equiv", "--against-identity", corpus("swap")).returncode, 1)
        self.assertEqual(run("check-equiv", corpus("x")).returncode, 2)


class Build(unittest.TestCase):
    def test_z_of_x(self):
        code, doc = run_json("build", "z", corpus("x"))
        self.assertEqual(code, 0)
        self.assertIn("gate X 0\ngate X 1\n", doc["text"])

    def test_reduce_writes_reparseable_file(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "z.qcir")
            code, doc = run_json("build", "reduce", corpus("identity_verifier"), "-o", out)
            self.assertEqual(code, 0)
            self.assertEqual(doc["circuit"]["inputs"], 2)
            self.assertAlmostEqual(doc["max_acceptance"], 1.0, places=12)
            self.assertEqual(run("validate", out).returncode, 0)
            self.assertEqual(run("check-identity", out).returncode, 1)
            out2 = os.path.join(d, "z2.qcir")
            run("build", "reduce", corpus("swap_verifier"), "-o", out2)
            self.assertEqual(run("check-identity", out2).returncode, 0)

    def test_equiv_needs_two_files(self):
        self.assertEqual(run_json("build", "equiv", corpus("t"), corpus("s"))[0], 0)
        self.assertEqual(run_json("build", "equiv", corpus("t"))[0], 2)


class Verify(unittest.TestCase):
    def test_exact(self):
        code, doc = run_json("verify", "--exact", corpus("empty"))
        self.assertEqual(code, 0)
        self.assertAlmostEqual(doc["acceptance_probability"], 0.0, places=12)
        self.assertAlmostEqual(run_json("verify", "--exact", corpus("x"))[1]["acceptance_probability"], 1.0,
                               places=12)
        self.assertAlmostEqual(run_json("verify", "--exact", corpus("t"))[1]["acceptance_probability"],
                               (2 - math.sqrt(2)) / 4, places=10)

    def test_sampling_is_reproducible(self):
        a = run("--json", "verify", corpus("t"), "--shots", "2000", "--seed", "17").stdout
        b = run("--json", "verify", corpus("t"), "--shots", "2000", "--seed", "17").stdout
        self.assertEqual(a, b)
        doc = json.loads(a)
        VALIDATOR.validate(doc)
        self.assertEqual(sum(doc["outcome_counts"].values()), 2000)


class MaxAccept(unittest.TestCase):
    def test_examples(self):
        self.assertAlmostEqual(run_json("max-accept", corpus("identity_verifier"))[1]["max_acceptance"], 1.0)
        self.assertAlmostEqual(run_json("max-accept", corpus("swap_verifier"))[1]["max_acceptance"], 0.0)
        self.assertAlmostEqual(run_json("max-accept", corpus("half_verifier"))[1]["max_acceptance"], 0.5)
        self.assertAlmostEqual(run_json("max-accept", corpus("h_verifier"))[1]["max_acceptance"], 1.0)


class Minimize(unittest.TestCase):
    def test_x_over_hst(self):
        code, doc = run_json("--backend", "exact", "minimize", corpus("x"), "--gates", "H,S,T")
        self.assertEqual(code, 0)
        self.assertEqual(doc["minimal_length"], 4)
        self.assertIn("gate H 0\ngate S 0\ngate S 0\ngate H 0\n", doc["minimal_circuit"])

    def test_budget(self):
        code, doc = run_json("minimize", corpus("x"), "--gates", "H,S,T", "--node-cap", "5")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["kind"], "SearchBudgetExceeded")

    def test_unknown_gate(self):
        self.assertEqual(run_json("minimize", corpus("x"), "--gates", "H,FOO")[0], 2)


if __name__ == "__main__":
    unittest.main(verbosity=2)
