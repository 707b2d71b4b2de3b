#	weakdiscord - Weak measurement discord, disturbance and cost function for two-qubit states
#	Copyright (C) 2026 the weakdiscord authors
#
#	This file is part of weakdiscord.
#
#	weakdiscord is free software; you can redistribute it and/or modify
#	it under the terms of the GNU General Public License as published by
#	the Free Software Foundation; this program is ONLY licensed under
#	version 3 of the License, later versions are explicitly excluded.
#
#	weakdiscord is distributed in the hope that it will be useful,
#	but WITHOUT ANY WARRANTY; without even the implied warranty of
#	MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#	GNU General Public License for more details.
#
#	You should have received a copy of the GNU General Public License
#	along with weakdiscord; if not, write to the Free Software
#	Foundation, Inc., 59 Temple Place, Suite 330, Boston, MA  02111-1307  USA

import io
import csv
import sys
import json
import contextlib
import unittest
import unittest.mock
from weakdiscord.__main__ import main

class CommandLineTests(unittest.TestCase):
	def _run(self, *args: tuple[str]) -> tuple[int, str, str]:
		(stdout, stderr) = (io.StringIO(), io.StringIO())
		with unittest.mock.patch.object(sys, "argv", [ "weakdiscord" ] + list(args)), contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
			with self.assertRaises(SystemExit) as ctx:
				main()
		return (ctx.exception.code, stdout.getvalue(), stderr.getvalue())

	def test_compute_json(self):
		(code, stdout, _) = self._run("compute", "-s", "pure:lambda0=0.5", "-x", "0", "-f", "json")
		self.assertEqual(code, 0)
		record = json.loads(stdout)
		self.assertEqual(record["state"], "pure:lambda0=0.5")
		self.assertAlmostEqual(record["cost"], 1, delta = 1e-9)
		self.assertAlmostEqual(record["classical_correlation"], 1, delta = 1e-9)

	def test_compute_csv(self):
		(code, stdout, _) = self._run("compute", "--state", "werner:z=0.25", "--x", "1.0", "-f", "csv")
		self.assertEqual(code, 0)
		(record, ) = list(csv.DictReader(io.StringIO(stdout)))
		self.assertAlmostEqual(float(record["cost"]), float(record["delta_fidelity"]) + float(record["delta_discord"]), delta = 1e-11)

	def test_compute_product_state(self):
		(code, stdout, _) = self._run("compute", "-s", "pure:lambda0=1", "-x", "2", "-f", "json")
		self.assertEqual(code, 0)
		record = json.loads(stdout)
		self.assertAlmostEqual(record["discord"], 0, delta = 1e-9)
		self.assertAlmostEqual(record["delta_discord"], 0, delta = 1e-9)

	def test_compute_fixed_basis_literal(self):
		(code, stdout, _) = self._run("compute", "-s", "pure:lambda0=0.5", "-x", "0", "--theta", "0.3", "--literal-postmeasure", "-f", "json")
		self.assertEqual(code, 0)
		record = json.loads(stdout)
		self.assertEqual(record["basis_source"], "user")
		self.assertAlmostEqual(record["postmeasure_trace"], 0.5, delta = 1e-11)

	def test_exit_codes(self):
		self.assertEqual(self._run("compute", "-s", "pure:lambda0=abc", "-x", "1")[0], 2)
		self.assertEqual(self._run("compute", "-s", "pure:lambda0=0.5", "-x", "-1")[0], 2)
		self.assertEqual(self._run("figure", "fig9")[0], 2)
		self.assertEqual(self._run("nonexistent-command")[0], 2)
		self.assertEqual(self._run("compute", "-s", "pure:lambda0=1.5", "-x", "1")[0], 3)
		self.assertEqual(self._run("compute", "-s", "general:a=0,0,0;b=0,0,0;c=1,1,1", "-x", "1")[0], 3)
		self.assertEqual(self._run("compute", "-s", "werner:z=0.5", "-x", "1", "-f", "csv", "-F", "pretty")[0], 2)

	def test_parse_error_message(self):
		(code, _, stderr) = self._run("compute", "-s", "pure:lambda0=abc", "-x", "1")
		self.assertEqual(code, 2)
		self.assertIn("position 13", stderr)

	def test_sweep(self):
		(code, stdout, _) = self._run("sweep", "-s", "werner:z=0.25", "--x-max", "2", "-n", "5", "-f", "csv")
		self.assertEqual(code, 0)
		rows = list(csv.DictReader(io.StringIO(stdout)))
		self.assertEqual([ float(row["x"]) for row in rows ], [ 0, 0.5, 1, 1.5, 2 ])
		for row in rows:
			self.assertAlmostEqual(float(row["cost"]), float(row["delta_F"]) + float(row["delta_D"]), delta = 1e-11)

	def test_sweep_columns(self):
		(code, stdout, _) = self._run("sweep", "-s", "pure:lambda0=0.2", "--x-max", "1", "-n", "2", "-c", "x,cost", "-f", "csv")
		self.assertEqual(code, 0)
		self.assertEqual(stdout.splitlines()[0], "x,cost")
		self.assertEqual(self._run("sweep", "-s", "pure:lambda0=0.2", "-c", "x,bogus")[0], 2)
		self.assertEqual(self._run("sweep", "-s", "pure:lambda0=0.2", "-n", "1")[0], 2)

	def test_sweep_deterministic_across_workers(self):
		args = [ "sweep", "-s", "general:a=0.01,0.1,0.22;b=0.1,0.03,0.5;c=0.1,0.02,0.2", "--x-max", "3", "-n", "7", "-f", "csv" ]
		(code1, serial, _) = self._run(*args, "-j", "1")
		(code2, parallel, _) = self._run(*args, "-j", "3")
		self.assertEqual((code1, code2), (0, 0))
		self.assertEqual(serial, parallel)

	def test_optimize_product_state(self):
		(code, stdout, _) = self._run("optimize", "-s", "pure:lambda0=1", "-f", "json")
		self.assertEqual(code, 0)
		record = json.loads(stdout)
		self.assertEqual(record["x_star"], 0)
		self.assertTrue(record["boundary"])
		self.assertNotIn("curvature", record)

	def test_optimize_interior(self):
		(code, stdout, _) = self._run("opt", "-s", "werner:z=0.25", "-f", "json")
		self.assertEqual(code, 0)
		record = json.loads(stdout)
		self.assertFalse(record["boundary"])
		self.assertGreater(record["curvature"], 0)

	def test_scan(self):
		(code, stdout, _) = self._run("scan", "-s", "pure:lambda0=0.5", "--x-min", "0.5", "--x-max", "6", "-n", "12", "-f", "json")
		self.assertEqual(code, 0)
		document = json.loads(stdout)
		self.assertEqual(len(document["rows"]), 12)
		self.assertEqual(document["sign_changes"], 1)
		self.assertEqual(document["zero_crossings"][0]["direction"], "rising")

	def test_scan_csv_keeps_summary(self):
		(code, stdout, _) = self._run("scan", "-s", "pure:lambda0=0.5", "--x-min", "0.5", "--x-max", "6", "-n", "12", "-f", "csv")
		self.assertEqual(code, 0)
		comments = [ line for line in stdout.splitlines() if line.startswith("#") ]
		self.assertEqual(comments[:2], [ "# sign_changes: 1", "# zero_crossings:" ])
		self.assertIn("direction = rising", comments[2])
		rows = list(csv.DictReader(line for line in stdout.splitlines() if not line.startswith("#")))
		self.assertEqual(len(rows), 12)
