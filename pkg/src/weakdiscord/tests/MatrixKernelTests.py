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

import unittest
import numpy as np
from weakdiscord.MatrixKernel import Subsystem, MatrixFunction, tensor_product, partial_trace, hermitian_eigen, psd_matrix_function, xlog2x, clamp_eigenvalues
from weakdiscord.Exceptions import InvalidDimensionException, ContractViolationException, NotPositiveSemidefiniteException

class MatrixKernelTests(unittest.TestCase):
	def setUp(self):
		self._rng = np.random.default_rng(12345)

	def _random_psd(self, dim: int) -> np.ndarray:
		g = self._rng.normal(size = (dim, dim)) + 1j * self._rng.normal(size = (dim, dim))
		m = g @ g.conj().T
		return m / np.trace(m).real

	def test_partial_trace_of_product(self):
		for _ in range(10):
			(a, b) = (self._random_psd(2), self._random_psd(2))
			ab = tensor_product(a, b)
			np.testing.assert_allclose(partial_trace(ab, Subsystem.A), a, atol = 1e-12)
			np.testing.assert_allclose(partial_trace(ab, Subsystem.B), b, atol = 1e-12)

	def test_partial_trace_basis_order(self):
		# |01><01|: A in |0>, B in |1>
		m = np.zeros((4, 4))
		m[1, 1] = 1
		np.testing.assert_allclose(partial_trace(m, Subsystem.A), np.diag([ 1, 0 ]))
		np.testing.assert_allclose(partial_trace(m, Subsystem.B), np.diag([ 0, 1 ]))

	def test_partial_trace_dimension(self):
		with self.assertRaises(InvalidDimensionException):
			partial_trace(np.eye(2), Subsystem.A)
		with self.assertRaises(InvalidDimensionException):
			tensor_product(np.eye(3), np.eye(2))

	def test_hermitian_eigen(self):
		m = self._random_psd(4)
		eigen = hermitian_eigen(m)
		self.assertTrue(np.all(np.diff(eigen.eigenvalues) >= 0))
		np.testing.assert_allclose(eigen.reconstruct(), m, atol = 1e-12)

	def test_hermitian_eigen_rejects_non_hermitian(self):
		with self.assertRaises(ContractViolationException):
			hermitian_eigen(np.array([ [ 1, 1 ], [ 0, 1 ] ]))

	def test_sqrt_reconstructs(self):
		for _ in range(10):
			m = self._random_psd(4)
			root = psd_matrix_function(m, MatrixFunction.Sqrt)
			np.testing.assert_allclose(root @ root, m, atol = 1e-9)

	def test_log2(self):
		result = psd_matrix_function(np.diag([ 0.5, 0.25, 0.25, 0 ]), MatrixFunction.Log2)
		np.testing.assert_allclose(result, np.diag([ -1, -2, -2, 0 ]), atol = 1e-12)

	def test_negative_eigenvalue(self):
		with self.assertRaises(NotPositiveSemidefiniteException):
			psd_matrix_function(np.diag([ 1 + 1e-6, -1e-6 ]), MatrixFunction.Sqrt)
		np.testing.assert_allclose(psd_matrix_function(np.diag([ 1, -1e-13 ]), MatrixFunction.Sqrt), np.diag([ 1, 0 ]), atol = 1e-15)

	def test_clamp(self):
		np.testing.assert_equal(clamp_eigenvalues([ -1e-11, 1e-13, 0.5 ]), [ 0, 0, 0.5 ])

	def test_xlog2x(self):
		np.testing.assert_allclose(xlog2x([ 0, 0.5, 1, -1e-15, 0.25 ]), [ 0, -0.5, 0, 0, -0.5 ])
