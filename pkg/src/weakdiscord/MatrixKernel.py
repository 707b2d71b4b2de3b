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

import enum
import dataclasses
import numpy as np
from .Exceptions import InvalidDimensionException, ContractViolationException, NotPositiveSemidefiniteException

HERMITICITY_TOLERANCE = 1e-10
NEGATIVITY_TOLERANCE = 1e-10

# Eigenvalues at or below this are treated as exactly zero before taking
# square roots or logarithms.
EIGENVALUE_CLAMP = 1e-12

IDENTITY2 = np.eye(2, dtype = complex)
PAULI_X = np.array([ [ 0, 1 ], [ 1, 0 ] ], dtype = complex)
PAULI_Y = np.array([ [ 0, -1j ], [ 1j, 0 ] ], dtype = complex)
PAULI_Z = np.array([ [ 1, 0 ], [ 0, -1 ] ], dtype = complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

class Subsystem(enum.Enum):
	A = "A"
	B = "B"

class MatrixFunction(enum.Enum):
	Sqrt = "sqrt"
	Log2 = "log2"

@dataclasses.dataclass(frozen = True, slots = True)
class HermitianEigen():
	"""Eigenvalues in ascending order, eigenvectors as columns."""
	eigenvalues: np.ndarray
	eigenvectors: np.ndarray

	def reconstruct(self) -> np.ndarray:
		return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T

def as_matrix(m: np.ndarray, dims: tuple[int] = (2, 4)) -> np.ndarray:
	m = np.asarray(m, dtype = complex)
	if (m.ndim != 2) or (m.shape[0] != m.shape[1]) or (m.shape[0] not in dims):
		raise InvalidDimensionException(f"Expected a square matrix of dimension {' or '.join(str(dim) for dim in dims)}, but got shape {m.shape}.")
	return m

def hermiticity_defect(m: np.ndarray) -> float:
	return float(np.max(np.abs(m - m.conj().T)))

def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
	a = as_matrix(a, dims = (2, ))
	b = as_matrix(b, dims = (2, ))
	return np.kron(a, b)

def partial_trace(rho: np.ndarray, keep: Subsystem) -> np.ndarray:
	rho = as_matrix(rho, dims = (4, ))
	# Axes are (a, b, a', b') with A the slow index.
	tensor = rho.reshape(2, 2, 2, 2)
	match keep:
		case Subsystem.A:
			return np.einsum("ijkj->ik", tensor)

		case Subsystem.B:
			return np.einsum("ijil->jl", tensor)

def hermitian_eigen(m: np.ndarray) -> HermitianEigen:
	m = as_matrix(m)
	defect = hermiticity_defect(m)
	if defect > HERMITICITY_TOLERANCE:
		raise ContractViolationException(f"Matrix is not Hermitian, deviation {defect:.3e} exceeds {HERMITICITY_TOLERANCE:.0e}.")
	(eigenvalues, eigenvectors) = np.linalg.eigh((m + m.conj().T) / 2)
	return HermitianEigen(eigenvalues = eigenvalues, eigenvectors = eigenvectors)

def clamp_eigenvalues(eigenvalues: np.ndarray) -> np.ndarray:
	eigenvalues = np.asarray(eigenvalues, dtype = float)
	if (eigenvalues.size > 0) and (np.min(eigenvalues) < -NEGATIVITY_TOLERANCE):
		raise NotPositiveSemidefiniteException(f"Matrix has eigenvalue {np.min(eigenvalues):.3e}, not positive semidefinite.")
	return np.where(eigenvalues > EIGENVALUE_CLAMP, eigenvalues, 0.0)

def xlog2x(values: np.ndarray) -> np.ndarray:
	"""Elementwise v * log2(v) with the 0 * log 0 = 0 convention. Values at
	or below the clamp threshold, including tiny negative roundoff, map to
	zero."""
	values = np.asarray(values, dtype = float)
	result = np.zeros_like(values)
	mask = values > EIGENVALUE_CLAMP
	result[mask] = values[mask] * np.log2(values[mask])
	return result

def psd_matrix_function(m: np.ndarray, function: MatrixFunction) -> np.ndarray:
	eigen = hermitian_eigen(m)
	values = clamp_eigenvalues(eigen.eigenvalues)
	match function:
		case MatrixFunction.Sqrt:
			mapped = np.sqrt(values)

		case MatrixFunction.Log2:
			mapped = np.zeros_like(values)
			positive = values > 0
			mapped[positive] = np.log2(values[positive])

	return HermitianEigen(eigenvalues = mapped, eigenvectors = eigen.eigenvectors).reconstruct()

def pauli_expectations(m: np.ndarray) -> np.ndarray:
	m = as_matrix(m, dims = (2, ))
	return np.array([ np.trace(m @ pauli).real for pauli in PAULIS ])
