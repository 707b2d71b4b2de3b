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
import logging
import dataclasses
import numpy as np
import scipy.optimize
from .MatrixKernel import IDENTITY2, PAULIS, Subsystem, hermitian_eigen, xlog2x
from .DensityMatrix import DensityMatrix
from .Measurement import MeasurementBasis, WeakPOVM, make_basis, conditional_on_operator

_log = logging.getLogger(__name__)

THETA_GRID_POINTS = 37
PHI_GRID_POINTS = 19
REFINEMENT_STARTS = 3
TIE_TOLERANCE = 1e-12

def vn_entropy(rho: DensityMatrix) -> float:
	"""Von Neumann entropy in bits."""
	return float(-np.sum(xlog2x(hermitian_eigen(rho.matrix).eigenvalues)))

def mutual_information(rho: DensityMatrix) -> float:
	return vn_entropy(rho.reduced(Subsystem.A)) + vn_entropy(rho.reduced(Subsystem.B)) - vn_entropy(rho)

def _conditional_entropy(rho: DensityMatrix, operators: tuple[np.ndarray]) -> float:
	entropy = 0
	for operator in operators:
		(probability, state) = conditional_on_operator(rho, operator)
		if state is not None:
			entropy += probability * vn_entropy(state)
	return entropy

def strong_conditional_entropy(rho: DensityMatrix, basis: MeasurementBasis) -> float:
	return _conditional_entropy(rho, basis.projectors)

def weak_conditional_entropy(rho: DensityMatrix, povm: WeakPOVM) -> float:
	return _conditional_entropy(rho, (povm.plus, povm.minus))

def classical_j(rho: DensityMatrix, basis: MeasurementBasis) -> float:
	return vn_entropy(rho.reduced(Subsystem.A)) - strong_conditional_entropy(rho, basis)

def weak_classical_j(rho: DensityMatrix, povm: WeakPOVM) -> float:
	return vn_entropy(rho.reduced(Subsystem.A)) - weak_conditional_entropy(rho, povm)

def directions(thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
	thetas = np.asarray(thetas, dtype = float)
	phis = np.asarray(phis, dtype = float)
	return np.stack([ np.sin(thetas) * np.cos(phis), np.sin(thetas) * np.sin(phis), np.cos(thetas) ], axis = -1)

@dataclasses.dataclass(frozen = True, slots = True)
class CorrelationTensor():
	"""rho = 1/4 (I x I + a.sigma x I + I x b.sigma + sum_ij c_ij sigma_i x sigma_j)"""
	a: np.ndarray
	b: np.ndarray
	c: np.ndarray

	@classmethod
	def from_state(cls, rho: DensityMatrix) -> "CorrelationTensor":
		m = rho.matrix
		a = np.array([ np.trace(m @ np.kron(pauli, IDENTITY2)).real for pauli in PAULIS ])
		b = np.array([ np.trace(m @ np.kron(IDENTITY2, pauli)).real for pauli in PAULIS ])
		c = np.array([ [ np.trace(m @ np.kron(pauli_a, pauli_b)).real for pauli_b in PAULIS ] for pauli_a in PAULIS ])
		return cls(a = a, b = b, c = c)

	def conditional_entropy(self, strength: float, n: np.ndarray) -> np.ndarray:
		"""Sum over both outcomes of p * S(rho_A|outcome) for a measurement of
		the given strength (tanh x, 1 for projective) along each unit vector
		in n (shape (..., 3)). The unnormalized conditional state for
		outcome sign s is 1/4 ((1 - s t b.n) I + (a - s t C n).sigma) with
		eigenvalues (alpha +- |v|) / 4."""
		n = np.asarray(n, dtype = float)
		bn = n @ self.b
		cn = n @ self.c.T
		entropy = np.zeros(bn.shape)
		for sign in (1, -1):
			alpha = 1 - sign * strength * bn
			radius = np.linalg.norm(self.a - sign * strength * cn, axis = -1)
			entropy += -xlog2x((alpha + radius) / 4) - xlog2x((alpha - radius) / 4) + xlog2x(alpha / 2)
		return entropy

@dataclasses.dataclass(frozen = True, slots = True)
class BasisOptimum():
	basis: MeasurementBasis
	value: float
	evaluations: int
	converged: bool = True

class BasisOptimizer():
	"""Maximizes the classical correlation J over the measurement direction
	on B: a coarse (theta, phi) grid over the hemisphere followed by
	Nelder-Mead refinement of the best grid points. The result is
	deterministic; near-ties go to the smallest theta, then phi."""

	def __init__(self, rho: DensityMatrix):
		self._tensor = CorrelationTensor.from_state(rho)
		self._entropy_a = vn_entropy(rho.reduced(Subsystem.A))
		self._thetas = np.linspace(0, math.pi, THETA_GRID_POINTS)
		self._phis = np.linspace(0, math.pi, PHI_GRID_POINTS)

	def classical_correlation(self, strength: float, thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
		return self._entropy_a - self._tensor.conditional_entropy(strength, directions(thetas, phis))

	def landscape(self, strength: float, thetas: np.ndarray | None = None, phis: np.ndarray | None = None) -> np.ndarray:
		"""J over a (theta, phi) mesh, indexed [theta, phi]."""
		thetas = self._thetas if (thetas is None) else np.asarray(thetas, dtype = float)
		phis = self._phis if (phis is None) else np.asarray(phis, dtype = float)
		(theta_mesh, phi_mesh) = np.meshgrid(thetas, phis, indexing = "ij")
		return self.classical_correlation(strength, theta_mesh, phi_mesh)

	def _refine(self, strength: float, theta: float, phi: float):
		objective = lambda v: -float(self.classical_correlation(strength, v[0], v[1]))
		theta_step = math.pi / (THETA_GRID_POINTS - 1) / 2
		phi_step = math.pi / (PHI_GRID_POINTS - 1) / 2
		simplex = np.array([ [ theta, phi ], [ theta + theta_step, phi ], [ theta, phi + phi_step ] ])
		return scipy.optimize.minimize(objective, x0 = np.array([ theta, phi ]), method = "Nelder-Mead", options = {
			"initial_simplex":	simplex,
			"xatol":			1e-8,
			"fatol":			1e-12,
			"maxiter":			2000,
		})

	def maximize(self, strength: float) -> BasisOptimum:
		values = self.landscape(strength)
		(theta_mesh, phi_mesh) = np.meshgrid(self._thetas, self._phis, indexing = "ij")
		(theta_flat, phi_flat, value_flat) = (theta_mesh.ravel(), phi_mesh.ravel(), values.ravel())
		evaluations = value_flat.size

		candidates = [ (float(value), make_basis(float(theta), float(phi))) for (theta, phi, value) in zip(theta_flat, phi_flat, value_flat) ]
		order = np.lexsort((phi_flat, theta_flat, -value_flat))
		converged = True
		for index in order[:REFINEMENT_STARTS]:
			result = self._refine(strength, float(theta_flat[index]), float(phi_flat[index]))
			evaluations += result.nfev
			if not result.success:
				converged = False
				_log.warning("Basis refinement from theta = %.4f, phi = %.4f did not converge: %s", theta_flat[index], phi_flat[index], result.message)
			basis = make_basis(float(result.x[0]), float(result.x[1]))
			candidates.append((float(self.classical_correlation(strength, basis.theta, basis.phi)), basis))

		best_value = max(value for (value, basis) in candidates)
		(value, basis) = min((candidate for candidate in candidates if candidate[0] >= best_value - TIE_TOLERANCE), key = lambda candidate: (candidate[1].theta, candidate[1].phi))
		_log.debug("Maximal J = %.12g at theta = %.6f, phi = %.6f with strength %.6g after %d evaluations", value, basis.theta, basis.phi, strength, evaluations)
		return BasisOptimum(basis = basis, value = value, evaluations = evaluations, converged = converged)

def optimize_classical_j(rho: DensityMatrix) -> BasisOptimum:
	return BasisOptimizer(rho).maximize(1.0)

def discord(rho: DensityMatrix, optimizer: BasisOptimizer | None = None) -> tuple[float, BasisOptimum]:
	optimizer = optimizer or BasisOptimizer(rho)
	optimum = optimizer.maximize(1.0)
	return (mutual_information(rho) - optimum.value, optimum)

def weak_discord(rho: DensityMatrix, x: float, optimizer: BasisOptimizer | None = None) -> tuple[float, BasisOptimum]:
	optimizer = optimizer or BasisOptimizer(rho)
	optimum = optimizer.maximize(math.tanh(x))
	return (mutual_information(rho) - optimum.value, optimum)

def delta_discord(rho: DensityMatrix, x: float) -> float:
	optimizer = BasisOptimizer(rho)
	return weak_discord(rho, x, optimizer)[0] - discord(rho, optimizer)[0]

def correlation_tensor(rho: DensityMatrix) -> CorrelationTensor:
	return CorrelationTensor.from_state(rho)

def conditional_entropy_landscape(rho: DensityMatrix, strength: float, thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
	"""S(A|B) after a measurement of the given strength (tanh x, 1 for
	projective) for every (theta, phi) pair; thetas and phis broadcast."""
	return CorrelationTensor.from_state(rho).conditional_entropy(strength, directions(thetas, phis))
