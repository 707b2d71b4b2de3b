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

import math
import unittest
from weakdiscord.Oracles import pure_discord, pure_outcome_probability, pure_weak_discord, pure_delta_discord, pure_fidelity, pure_cost, werner_weak_discord, werner_discord_limit
from weakdiscord.Correlations import weak_discord, BasisOptimizer
from weakdiscord.CostFunction import CostFunction, delta_fidelity
from weakdiscord.DensityMatrix import make_pure_schmidt
from weakdiscord.Exceptions import ParameterRangeException
from weakdiscord.Measurement import make_basis

ORACLE_LAMBDAS = ( 0.05, 0.1, 0.2, 0.35, 0.5 )
ORACLE_STRENGTHS = ( 0.1, 0.5, 1, 2, 5 )
WERNER_WEIGHTS = ( 0.1, 0.25, 0.5, 0.9 )

class OraclesTests(unittest.TestCase):
	def test_pure_discord(self):
		self.assertAlmostEqual(pure_discord(0.5), 1)
		self.assertEqual(pure_discord(1), 0)
		self.assertEqual(pure_discord(0), 0)
		self.assertAlmostEqual(pure_discord(0.2), 0.7219280948873623, delta = 1e-12)

	def test_range(self):
		with self.assertRaises(ParameterRangeException):
			pure_discord(1.5)
		with self.assertRaises(ParameterRangeException):
			werner_weak_discord(-0.5, 1)

	def test_outcome_probability_parity(self):
		for lambda0 in (0.1, 0.35):
			for theta in (0.2, 1, 2.5):
				for x in (0.3, 2):
					self.assertAlmostEqual(pure_outcome_probability(lambda0, -x, theta), pure_outcome_probability(lambda0, x, math.pi - theta), delta = 1e-15)
					self.assertAlmostEqual(pure_outcome_probability(lambda0, x, theta) + pure_outcome_probability(lambda0, -x, theta), 1, delta = 1e-15)

	def test_weak_discord_limits(self):
		for lambda0 in (0.05, 0.2, 0.5):
			self.assertAlmostEqual(pure_weak_discord(lambda0, 0), 2 * pure_discord(lambda0), delta = 1e-12)
			self.assertAlmostEqual(pure_weak_discord(lambda0, 40), pure_discord(lambda0), delta = 1e-12)
			self.assertAlmostEqual(pure_delta_discord(lambda0, 0), pure_discord(lambda0), delta = 1e-12)

	def test_equator_is_optimal(self):
		for lambda0 in (0.05, 0.2, 0.35):
			for x in (0.1, 1, 3):
				self.assertAlmostEqual(pure_weak_discord(lambda0, x), pure_weak_discord(lambda0, x, minimize_theta = True), delta = 1e-9)
				self.assertLessEqual(pure_weak_discord(lambda0, x), pure_weak_discord(lambda0, x, theta = 0.4) + 1e-12)

	def test_weak_discord_matches_general_path(self):
		for lambda0 in ORACLE_LAMBDAS:
			optimizer = BasisOptimizer(make_pure_schmidt(lambda0))
			for x in ORACLE_STRENGTHS:
				self.assertAlmostEqual(weak_discord(make_pure_schmidt(lambda0), x, optimizer)[0], pure_weak_discord(lambda0, x, minimize_theta = True), delta = 1e-6)

	def test_fidelity(self):
		self.assertAlmostEqual(pure_fidelity(0.3, 0), 1)
		self.assertAlmostEqual(pure_fidelity(0.3, 800), math.sqrt(0.5))
		self.assertAlmostEqual(pure_fidelity(0.3, 2), math.sqrt((1 + 1 / math.cosh(2)) / 2))
		self.assertAlmostEqual(pure_fidelity(1, 2, 0), 1)

	def test_cost_matches_general_path(self):
		for lambda0 in (0.05, 0.2, 0.5):
			cost_function = CostFunction(make_pure_schmidt(lambda0))
			for x in (0.2, 1.5, 4):
				self.assertAlmostEqual(cost_function(x), pure_cost(lambda0, x), delta = 1e-6)

	def test_werner(self):
		self.assertAlmostEqual(werner_discord_limit(0.25), 0.074193187980818, delta = 1e-8)
		self.assertAlmostEqual(werner_discord_limit(0), 0, delta = 1e-12)
		self.assertAlmostEqual(werner_discord_limit(1), 1, delta = 1e-12)
		for z in (0.25, 0.7):
			self.assertAlmostEqual(werner_weak_discord(z, 0), 1 + sum(p * math.log2(p) for p in [ (1 - z) / 4 ] * 3 + [ (1 + 3 * z) / 4 ]) + 1, delta = 1e-12)
			self.assertGreaterEqual(werner_weak_discord(z, 1), werner_discord_limit(z))

	def test_fidelity_matches_general_path(self):
		for lambda0 in ORACLE_LAMBDAS:
			rho = make_pure_schmidt(lambda0)
			for theta in (0.4, math.pi / 2):
				basis = make_basis(theta, 0)
				for x in ORACLE_STRENGTHS:
					self.assertAlmostEqual(1 - delta_fidelity(rho, x, basis), pure_fidelity(lambda0, x, theta), delta = 1e-9)

	def test_fidelity_squared_form(self):
		for lambda0 in ORACLE_LAMBDAS:
			for theta in (0, 0.4, 1.2, math.pi / 2, 2.8):
				for x in ORACLE_STRENGTHS:
					sech = 1 / math.cosh(x)
					squared = (1 + sech) / 2 + (1 - sech) * (1 - 2 * lambda0) ** 2 * math.cos(theta) ** 2 / 2
					self.assertAlmostEqual(pure_fidelity(lambda0, x, theta), math.sqrt(squared), delta = 1e-13)

	def test_weak_discord_even_in_strength(self):
		for lambda0 in ORACLE_LAMBDAS:
			for x in ORACLE_STRENGTHS:
				self.assertAlmostEqual(pure_weak_discord(lambda0, -x), pure_weak_discord(lambda0, x), delta = 1e-15)
				self.assertAlmostEqual(pure_weak_discord(lambda0, -x, theta = 0.7), pure_weak_discord(lambda0, x, theta = 0.7), delta = 1e-15)
				self.assertAlmostEqual(pure_weak_discord(lambda0, -x, minimize_theta = True), pure_weak_discord(lambda0, x, minimize_theta = True), delta = 1e-9)

	def test_werner_nonincreasing(self):
		xs = [ 0.25 * i for i in range(25) ]
		for z in WERNER_WEIGHTS:
			values = [ werner_weak_discord(z, x) for x in xs ]
			for (previous, current) in zip(values, values[1:]):
				self.assertLessEqual(current, previous + 1e-9)
			self.assertGreaterEqual(values[-1], werner_discord_limit(z) - 1e-12)
