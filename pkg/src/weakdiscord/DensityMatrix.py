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
import numpy as np
from .MatrixKernel import IDENTITY2, PAULIS, HERMITICITY_TOLERANCE, NEGATIVITY_TOLERANCE, Subsystem, as_matrix, hermiticity_defect, hermitian_eigen, partial_trace, pauli_expectations
from .Exceptions import NonHermitianException, TraceException, NegativityException, ParameterRangeException, InvalidDimensionException

TRACE_TOLERANCE = 1e-10

class DensityMatrix():
	"""Immutable density matrix of one qubit (2x2) or two qubits (4x4,
	basis order |00>, |01>, |10>, |11> with A the slow index). Use
	DensityMatrix.validate() for untrusted input; the constructor assumes
	the matrix is already a valid state."""

	def __init__(self, matrix: np.ndarray):
		self._matrix = np.array(matrix, dtype = complex)
		self._matrix.setflags(write = False)

	@classmethod
	def validate(cls, m: np.ndarray) -> "DensityMatrix":
		m = as_matrix(m)
		defect = hermiticity_defect(m)
		if defect > HERMITICITY_TOLERANCE:
			raise NonHermitianException(f"Matrix is not Hermitian, deviation {defect:.3e} exceeds {HERMITICITY_TOLERANCE:.0e}.")
		trace = complex(np.trace(m))
		if abs(trace - 1) > TRACE_TOLERANCE:
			raise TraceException(f"Matrix trace is {trace.real:.12g}{trace.imag:+.3g}j, expected 1.")
		smallest = hermitian_eigen(m).eigenvalues[0]
		if smallest < -NEGATIVITY_TOLERANCE:
			raise NegativityException(f"Matrix has negative eigenvalue {smallest:.6g}.")
		return cls((m + m.conj().T) / 2)

	@property
	def matrix(self) -> np.ndarray:
		return self._matrix

	@property
	def dim(self) -> int:
		return self._matrix.shape[0]

	@property
	def eigenvalues(self) -> np.ndarray:
		return hermitian_eigen(self._matrix).eigenvalues

	@property
	def purity(self) -> float:
		return float(np.trace(self._matrix @ self._matrix).real)

	def reduced(self, keep: Subsystem) -> "DensityMatrix":
		if self.dim != 4:
			raise InvalidDimensionException(f"Cannot reduce a state of dimension {self.dim}.")
		return DensityMatrix(partial_trace(self._matrix, keep))

	def __reduce__(self):
		return (DensityMatrix, (np.array(self._matrix), ))

	def __repr__(self):
		return f"DensityMatrix(dim = {self.dim}, purity = {self.purity:.6f})"

def validate(m: np.ndarray) -> DensityMatrix:
	return DensityMatrix.validate(m)

def _check_range(name: str, value: float, lower: float, upper: float):
	if (not math.isfinite(value)) or (value < lower) or (value > upper):
		raise ParameterRangeException(f"Parameter {name} = {value} outside of permissible range [{lower}, {upper}].")

def _check_vector(name: str, vector: tuple[float]) -> np.ndarray:
	vector = np.asarray(vector, dtype = float)
	if vector.shape != (3, ):
		raise ParameterRangeException(f"Parameter {name} must have three components, got {vector.shape}.")
	if not np.all(np.isfinite(vector)):
		raise ParameterRangeException(f"Parameter {name} = {tuple(vector)} has non-finite components.")
	return vector

def make_pure_schmidt(lambda0: float) -> DensityMatrix:
	"""sqrt(lambda0) |00> + sqrt(1 - lambda0) |11>"""
	_check_range("lambda0", lambda0, 0, 1)
	psi = np.zeros(4, dtype = complex)
	psi[0] = math.sqrt(lambda0)
	psi[3] = math.sqrt(1 - lambda0)
	return DensityMatrix(np.outer(psi, psi.conj()))

def make_werner(z: float) -> DensityMatrix:
	"""z |psi-><psi-| + (1 - z) I/4 with the singlet |psi->."""
	_check_range("z", z, 0, 1)
	singlet = np.array([ 0, 1, -1, 0 ], dtype = complex) / math.sqrt(2)
	return DensityMatrix(z * np.outer(singlet, singlet.conj()) + (1 - z) * np.eye(4) / 4)

def make_general(a: tuple[float], b: tuple[float], c: tuple[float]) -> DensityMatrix:
	"""1/4 (I + a.sigma x I + I x b.sigma + sum_i c_i sigma_i x sigma_i)"""
	a = _check_vector("a", a)
	b = _check_vector("b", b)
	c = _check_vector("c", c)
	m = np.eye(4, dtype = complex)
	for (i, pauli) in enumerate(PAULIS):
		m += a[i] * np.kron(pauli, IDENTITY2)
		m += b[i] * np.kron(IDENTITY2, pauli)
		m += c[i] * np.kron(pauli, pauli)
	return DensityMatrix.validate(m / 4)

def bloch_vector(rho: DensityMatrix) -> np.ndarray:
	if rho.dim != 2:
		raise InvalidDimensionException(f"Bloch vector requires a single qubit state, got dimension {rho.dim}.")
	return pauli_expectations(rho.matrix)
