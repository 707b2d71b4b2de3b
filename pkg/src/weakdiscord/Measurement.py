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
import math
import dataclasses
import numpy as np
import scipy.special
from .MatrixKernel import IDENTITY2, Subsystem, partial_trace
from .DensityMatrix import DensityMatrix
from .Exceptions import ContractViolationException, DegenerateOutcomeException

# Outcomes less likely than this have no conditional state.
DEGENERATE_PROBABILITY = 1e-14

_TWO_PI = 2 * math.pi

class Outcome(enum.IntEnum):
	Plus = 1
	Minus = -1

@dataclasses.dataclass(frozen = True, slots = True)
class MeasurementBasis():
	"""Orthonormal qubit basis. The first projector is onto
	cos(theta/2) |0> + exp(i phi) sin(theta/2) |1>. Angles are kept in
	theta in [0, pi], phi in [0, 2 pi)."""
	theta: float
	phi: float

	@classmethod
	def from_angles(cls, theta: float, phi: float) -> "MeasurementBasis":
		if (not math.isfinite(theta)) or (not math.isfinite(phi)):
			raise ContractViolationException(f"Basis angles must be finite, got theta = {theta}, phi = {phi}.")
		theta = theta % _TWO_PI
		if theta > math.pi:
			theta = _TWO_PI - theta
			phi += math.pi
		phi = phi % _TWO_PI
		if phi >= _TWO_PI:
			phi = 0.0
		return cls(theta = theta, phi = phi)

	@property
	def state_vector(self) -> np.ndarray:
		return np.array([ math.cos(self.theta / 2), np.exp(1j * self.phi) * math.sin(self.theta / 2) ], dtype = complex)

	@property
	def direction(self) -> np.ndarray:
		"""Bloch direction n of the first projector."""
		return np.array([ math.sin(self.theta) * math.cos(self.phi), math.sin(self.theta) * math.sin(self.phi), math.cos(self.theta) ])

	@property
	def projectors(self) -> tuple[np.ndarray, np.ndarray]:
		psi = self.state_vector
		pi0 = np.outer(psi, psi.conj())
		return (pi0, IDENTITY2 - pi0)

def make_basis(theta: float, phi: float) -> MeasurementBasis:
	return MeasurementBasis.from_angles(theta, phi)

@dataclasses.dataclass(frozen = True, slots = True)
class WeakPOVM():
	"""Pair of commuting Kraus operators acting on qubit B. Outcome Plus
	weights the second projector more heavily for x > 0; both approach the
	projectors as x grows and I/sqrt(2) at x = 0."""
	x: float
	basis: MeasurementBasis
	plus: np.ndarray
	minus: np.ndarray

	@property
	def strength(self) -> float:
		return math.tanh(self.x)

	def kraus(self, outcome: Outcome) -> np.ndarray:
		return self.plus if (outcome == Outcome.Plus) else self.minus

	def effect(self, outcome: Outcome) -> np.ndarray:
		operator = self.kraus(outcome)
		return operator.conj().T @ operator

def weak_elements(x: float, basis: MeasurementBasis) -> WeakPOVM:
	if not math.isfinite(x):
		raise ContractViolationException(f"Measurement strength must be finite, got {x}.")
	(pi0, pi1) = basis.projectors
	# expit(-2x) = (1 - tanh x) / 2 without cancellation at large x
	small = math.sqrt(scipy.special.expit(-2 * x))
	large = math.sqrt(scipy.special.expit(2 * x))
	return WeakPOVM(x = x, basis = basis, plus = small * pi0 + large * pi1, minus = large * pi0 + small * pi1)

def apply_on_b(rho: DensityMatrix, operator: np.ndarray) -> np.ndarray:
	"""(I x K) rho (I x K)^dagger"""
	kraus = np.kron(IDENTITY2, operator)
	return kraus @ rho.matrix @ kraus.conj().T

def outcome_probability(rho: DensityMatrix, povm: WeakPOVM, outcome: Outcome) -> float:
	return float(np.trace(apply_on_b(rho, povm.kraus(outcome))).real)

def conditional_on_operator(rho: DensityMatrix, operator: np.ndarray) -> tuple[float, DensityMatrix | None]:
	"""Returns the outcome probability and the normalized state of A, or
	None for the state when the outcome is degenerate."""
	unnormalized = apply_on_b(rho, operator)
	probability = float(np.trace(unnormalized).real)
	if probability < DEGENERATE_PROBABILITY:
		return (probability, None)
	return (probability, DensityMatrix.validate(partial_trace(unnormalized, Subsystem.A) / probability))

def conditional_state(rho: DensityMatrix, povm: WeakPOVM, outcome: Outcome) -> DensityMatrix:
	(probability, state) = conditional_on_operator(rho, povm.kraus(outcome))
	if state is None:
		raise DegenerateOutcomeException(f"Outcome {outcome.name} at x = {povm.x} has probability {probability:.3e}, no conditional state.")
	return state

def post_measurement_state(rho: DensityMatrix, povm: WeakPOVM) -> DensityMatrix:
	"""Non-selective, trace preserving: sum over both outcomes of
	(I x P) rho (I x P)."""
	return DensityMatrix.validate(apply_on_b(rho, povm.plus) + apply_on_b(rho, povm.minus))

def literal_post_measurement(rho: DensityMatrix, povm: WeakPOVM) -> np.ndarray:
	"""Outcome branches additionally weighted by their probability. The
	result has trace below one except for product-like cases and is
	therefore returned as a bare matrix."""
	result = np.zeros((4, 4), dtype = complex)
	for operator in (povm.plus, povm.minus):
		branch = apply_on_b(rho, operator)
		result += np.trace(branch).real * branch
	return result

def damped_bloch_vector(r: np.ndarray, x: float, basis: MeasurementBasis) -> np.ndarray:
	"""Bloch vector of a single qubit after the non-selective weak
	measurement: the component along the basis axis survives, the
	transverse part shrinks by sech(x)."""
	r = np.asarray(r, dtype = float)
	n = basis.direction
	parallel = np.dot(r, n) * n
	return parallel + (r - parallel) / math.cosh(min(abs(x), 700))
