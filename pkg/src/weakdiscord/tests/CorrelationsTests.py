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
import numpy as np
from weakdiscord.Correlations import vn_entropy, mutual_information, strong_conditional_entropy, weak_conditional_entropy, classical_j, weak_classical_j, correlation_tensor, conditional_entropy_landscape, BasisOptimizer, optimize_classical_j, discord, weak_discord, delta_discord
from weakdiscord.DensityMatrix import DensityMatrix, make_pure_schmidt, make_werner, make_general
from weakdiscord.Measurement import make_basis, weak_elements
from weakdiscord.Oracles import pure_discord, werner_weak_discord, werner_discord_limit

class CorrelationsTests(unittest.TestCase):
	def _random_state(self, rng: np.random.Generator) -> DensityMatrix:
		g = rng.normal(size = (4, 4)) + 1j * rng.normal(size = (4, 4))
		m = g @ g.conj().T
		return DensityMatrix.validate(m / np.trace(m).real)

	def test_entropy(self):
		self.assertAlmostEqual(vn_entropy(make_werner(0)), 2, delta = 1e-12)
		self.assertAlmostEqual(vn_entropy(make_pure_schmidt(0.3)), 0, delta = 1e-12)

	def test_mutual_information(self):
		self.assertAlmostEqual(mutual_information(make_pure_schmidt(0.5)), 2, delta = 1e-12)
		self.assertAlmostEqual(mutual_information(make_pure_schmidt(1)), 0, delta = 1e-12)
		self.assertAlmostEqual(mutual_information(make_pure_schmidt(0.2)), 2 * pure_discord(0.2), delta = 1e-12)

	def test_correlation_tensor(self):
		tensor = correlation_tensor(make_pure_schmidt(0.5))
		np.testing.assert_allclose(tensor.a, [ 0, 0, 0 ], atol = 1e-12)
		np.testing.assert_allclose(tensor.b, [ 0, 0, 0 ], atol = 1e-12)
		np.testing.assert_allclose(tensor.c, np.diag([ 1, -1, 1 ]), atol = 1e-12)
		tensor = correlation_tensor(make_general((0.01, 0.1, 0.22), (0.1, 0.03, 0.5), (0.1, 0.02, 0.2)))
		np.testing.assert_allclose(tensor.c, np.diag([ 0.1, 0.02, 0.2 ]), atol = 1e-12)

	def test_landscape_matches_explicit_path(self):
		rng = np.random.default_rng(99)
		for _ in range(4):
			rho = self._random_state(rng)
			thetas = rng.uniform(0, math.pi, size = 5)
			phis = rng.uniform(0, 2 * math.pi, size = 5)
			strong = conditional_entropy_landscape(rho, 1.0, thetas, phis)
			for x in (0.1, 1.3):
				weak = conditional_entropy_landscape(rho, math.tanh(x), thetas, phis)
				for (i, (theta, phi)) in enumerate(zip(thetas, phis)):
					basis = make_basis(theta, phi)
					self.assertAlmostEqual(weak[i], weak_conditional_entropy(rho, weak_elements(x, basis)), delta = 1e-10)
					self.assertAlmostEqual(strong[i], strong_conditional_entropy(rho, basis), delta = 1e-10)

	def test_bell_discord(self):
		(value, optimum) = discord(make_pure_schmidt(0.5))
		self.assertAlmostEqual(value, 1, delta = 1e-9)
		self.assertAlmostEqual(optimum.value, 1, delta = 1e-9)

	def test_pure_discord(self):
		for lambda0 in (0.05, 0.2, 0.35):
			self.assertAlmostEqual(discord(make_pure_schmidt(lambda0))[0], pure_discord(lambda0), delta = 1e-9)

	def test_product_state(self):
		rho = make_pure_schmidt(1)
		self.assertAlmostEqual(discord(rho)[0], 0, delta = 1e-9)
		self.assertAlmostEqual(weak_discord(rho, 2)[0], 0, delta = 1e-9)

	def test_werner(self):
		for z in (0.1, 0.25, 0.5, 0.6, 0.9):
			rho = make_werner(z)
			self.assertAlmostEqual(discord(rho)[0], werner_discord_limit(z), delta = 1e-9)
			optimizer = BasisOptimizer(rho)
			for x in (0, 0.1, 0.5, 1, 2, 5):
				self.assertAlmostEqual(weak_discord(rho, x, optimizer)[0], werner_weak_discord(z, x), delta = 1e-8)

	def test_zero_strength(self):
		rho = make_general((0.01, 0.1, 0.22), (0.1, 0.03, 0.5), (0.1, 0.02, 0.2))
		(value, optimum) = weak_discord(rho, 0)
		self.assertAlmostEqual(optimum.value, 0, delta = 1e-12)
		self.assertAlmostEqual(value, mutual_information(rho), delta = 1e-12)

	def test_weak_exceeds_strong(self):
		rng = np.random.default_rng(3)
		for _ in range(4):
			rho = self._random_state(rng)
			optimizer = BasisOptimizer(rho)
			strong = discord(rho, optimizer)[0]
			self.assertGreater(strong, -1e-9)
			for x in (0.1, 1, 3):
				self.assertGreaterEqual(weak_discord(rho, x, optimizer)[0], strong - 1e-9)

	def test_strong_limit(self):
		rho = make_general((0.01, 0.1, 0.22), (0.1, 0.03, 0.5), (0.1, 0.02, 0.2))
		self.assertAlmostEqual(delta_discord(rho, 25), 0, delta = 1e-9)

	def test_optimum_consistent(self):
		rho = make_general((0.01, 0.1, 0.22), (0.1, 0.03, 0.5), (0.1, 0.02, 0.2))
		optimum = optimize_classical_j(rho)
		self.assertTrue(optimum.converged)
		self.assertAlmostEqual(optimum.value, classical_j(rho, optimum.basis), delta = 1e-10)
		optimum = BasisOptimizer(rho).maximize(math.tanh(0.7))
		self.assertAlmostEqual(optimum.value, weak_classical_j(rho, weak_elements(0.7, optimum.basis)), delta = 1e-10)
		self.assertGreater(optimum.evaluations, 37 * 19)

	def test_optimum_deterministic(self):
		rho = self._random_state(np.random.default_rng(5))
		self.assertEqual(optimize_classical_j(rho), optimize_classical_j(rho))

	def test_pure_optimum_on_equator(self):
		optimum = BasisOptimizer(make_pure_schmidt(0.2)).maximize(math.tanh(1))
		self.assertAlmostEqual(optimum.basis.theta, math.pi / 2, delta = 1e-3)

	def test_werner_tie_break(self):
		optimum = BasisOptimizer(make_werner(0.25)).maximize(math.tanh(1))
		self.assertEqual((optimum.basis.theta, optimum.basis.phi), (0, 0))

	def test_no_dense_grid_point_beats_optimizer(self):
		rng = np.random.default_rng(17)
		states = [ self._random_state(rng) for _ in range(6) ]
		states += [ make_pure_schmidt(0.2), make_werner(0.25), make_general((0.01, 0.1, 0.22), (0.1, 0.03, 0.5), (0.1, 0.02, 0.2)) ]
		thetas = np.linspace(0, math.pi, 181)
		phis = np.arange(90) * 2 * math.pi / 90
		for rho in states:
			optimizer = BasisOptimizer(rho)
			for strength in (1.0, math.tanh(0.5), math.tanh(2)):
				optimum = optimizer.maximize(strength)
				self.assertLessEqual(float(np.max(optimizer.landscape(strength, thetas, phis))), optimum.value + 1e-6)

	def test_delta_discord_nonincreasing(self):
		xs = np.arange(0, 6.01, 0.25)
		for rho in (make_pure_schmidt(0.05), make_pure_schmidt(0.2), make_pure_schmidt(0.5), make_werner(0.25), make_general((0.01, 0.1, 0.22), (0.1, 0.03, 0.5), (0.1, 0.02, 0.2))):
			optimizer = BasisOptimizer(rho)
			strong = discord(rho, optimizer)[0]
			values = [ weak_discord(rho, float(x), optimizer)[0] - strong for x in xs ]
			for (previous, current) in zip(values, values[1:]):
				self.assertLessEqual(current, previous + 1e-9)
			self.assertGreaterEqual(min(values), -1e-9)
