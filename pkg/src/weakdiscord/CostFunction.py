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
from .MatrixKernel import MatrixFunction, psd_matrix_function
from .DensityMatrix import DensityMatrix
from .Measurement import MeasurementBasis, weak_elements, post_measurement_state, literal_post_measurement
from .Correlations import BasisOptimizer, BasisOptimum, mutual_information
from .GoldenSection import golden_section_minimize
from .Exceptions import InvalidDimensionException, ContractViolationException
from .Tools import ordered_map, chunked

_log = logging.getLogger(__name__)

STRENGTH_GRID_POINTS = 33
TIE_TOLERANCE = 1e-12
DERIVATIVE_STEP = 1e-3
# Finite-difference noise floors below which slope and curvature count as zero.
CURVATURE_FLOOR = 1e-7
SLOPE_FLOOR = 1e-10
LITERAL_TRACE_WARNING = 1e-9

def _fidelity(a: np.ndarray, b: np.ndarray) -> float:
	sqrt_a = psd_matrix_function(a, MatrixFunction.Sqrt)
	inner = sqrt_a @ b @ sqrt_a
	value = float(np.trace(psd_matrix_function(inner, MatrixFunction.Sqrt)).real)
	return min(max(value, 0.0), 1.0)

def uhlmann_fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
	"""Tr sqrt(sqrt(rho) sigma sqrt(rho)), not squared."""
	if rho.dim != sigma.dim:
		raise InvalidDimensionException(f"Cannot compare states of dimension {rho.dim} and {sigma.dim}.")
	return _fidelity(rho.matrix, sigma.matrix)

def delta_fidelity(rho: DensityMatrix, x: float, basis: MeasurementBasis) -> float:
	return 1 - uhlmann_fidelity(rho, post_measurement_state(rho, weak_elements(x, basis)))

@dataclasses.dataclass(frozen = True, slots = True)
class CorrelationReport():
	x: float
	theta_opt: float
	phi_opt: float
	mutual_information: float
	classical_correlation: float
	discord: float
	weak_discord: float
	delta_discord: float
	fidelity: float
	delta_fidelity: float
	cost: float
	postmeasure_trace: float
	basis_source: str
	converged: bool

	def as_dict(self) -> dict:
		return dataclasses.asdict(self)

class CostFunction():
	"""C(x) = delta F(x) + delta D(x) for one state. The strong discord is
	computed once. delta F uses the basis maximizing the weak classical
	correlation at each x unless a fixed basis is given."""

	def __init__(self, rho: DensityMatrix, basis: MeasurementBasis | None = None, literal_postmeasure: bool = False):
		self._rho = rho
		self._basis = basis
		self._literal_postmeasure = literal_postmeasure
		self._optimizer = BasisOptimizer(rho)
		self._mutual_information = mutual_information(rho)
		self._discord = None

	@property
	def rho(self) -> DensityMatrix:
		return self._rho

	@property
	def discord_optimum(self) -> BasisOptimum:
		if self._discord is None:
			self._discord = self._optimizer.maximize(1.0)
		return self._discord

	@property
	def discord(self) -> float:
		return self._mutual_information - self.discord_optimum.value

	def _fidelity_at(self, x: float, basis: MeasurementBasis) -> tuple[float, float]:
		povm = weak_elements(x, basis)
		if self._literal_postmeasure:
			matrix = literal_post_measurement(self._rho, povm)
			trace = float(np.trace(matrix).real)
			if abs(trace - 1) > LITERAL_TRACE_WARNING:
				_log.warning("Literal post-measurement matrix at x = %g has trace %.9f", x, trace)
			return (_fidelity(self._rho.matrix, matrix), trace)
		else:
			return (uhlmann_fidelity(self._rho, post_measurement_state(self._rho, povm)), 1.0)

	def report(self, x: float) -> CorrelationReport:
		"""C is even in x; negative strengths are accepted for stencils."""
		if not math.isfinite(x):
			raise ContractViolationException(f"Measurement strength must be finite, got {x}.")
		weak = self._optimizer.maximize(math.tanh(x))
		weak_discord = self._mutual_information - weak.value
		basis = weak.basis if (self._basis is None) else self._basis
		(fidelity, trace) = self._fidelity_at(x, basis)
		delta_discord = weak_discord - self.discord
		delta_fidelity = 1 - fidelity
		return CorrelationReport(
			x = x,
			theta_opt = weak.basis.theta,
			phi_opt = weak.basis.phi,
			mutual_information = self._mutual_information,
			classical_correlation = self.discord_optimum.value,
			discord = self.discord,
			weak_discord = weak_discord,
			delta_discord = delta_discord,
			fidelity = fidelity,
			delta_fidelity = delta_fidelity,
			cost = delta_fidelity + delta_discord,
			postmeasure_trace = trace,
			basis_source = "weak-discord-optimum" if (self._basis is None) else "user",
			converged = weak.converged and self.discord_optimum.converged,
		)

	def __call__(self, x: float) -> float:
		return self.report(x).cost

def cost(rho: DensityMatrix, x: float) -> CorrelationReport:
	if (not math.isfinite(x)) or (x < 0):
		raise ContractViolationException(f"Measurement strength must be finite and non-negative, got {x}.")
	return CostFunction(rho).report(x)

@dataclasses.dataclass(frozen = True, slots = True)
class StrengthOptimum():
	x_star: float
	report: CorrelationReport
	boundary: bool
	evaluations: int

	@property
	def cost(self) -> float:
		return self.report.cost

def optimal_strength(rho: DensityMatrix, x_max: float = 10.0, tolerance: float = 1e-6, cost_function: CostFunction | None = None) -> StrengthOptimum:
	"""Minimizes C over [0, x_max]: a uniform grid locates the best cell,
	golden-section search refines inside the neighbouring bracket. A
	minimum within tolerance of either end is flagged as boundary."""
	if (not math.isfinite(x_max)) or (x_max <= 0):
		raise ContractViolationException(f"Upper strength limit must be positive and finite, got {x_max}.")
	if (not math.isfinite(tolerance)) or (tolerance <= 0):
		raise ContractViolationException(f"Tolerance must be positive, got {tolerance}.")
	cost_function = cost_function or CostFunction(rho)

	grid = np.linspace(0, x_max, STRENGTH_GRID_POINTS)
	values = np.array([ cost_function(float(x)) for x in grid ])
	index = int(np.flatnonzero(values <= np.min(values) + TIE_TOLERANCE)[0])
	lower = float(grid[max(index - 1, 0)])
	upper = float(grid[min(index + 1, len(grid) - 1)])
	refined = golden_section_minimize(cost_function, lower, upper, tolerance = tolerance)

	candidates = [ (float(grid[index]), float(values[index])), (refined.x, refined.value) ]
	best_value = min(value for (x, value) in candidates)
	x_star = min(x for (x, value) in candidates if value <= best_value + TIE_TOLERANCE)
	boundary = (x_star <= tolerance) or (x_star >= x_max - tolerance)
	_log.info("Optimal strength x* = %.9f (boundary %s) after %d grid and %d refinement evaluations", x_star, boundary, len(grid), refined.evaluations)
	return StrengthOptimum(x_star = x_star, report = cost_function.report(x_star), boundary = boundary, evaluations = len(grid) + refined.evaluations)

@dataclasses.dataclass(frozen = True, slots = True)
class ZeroCrossing():
	x: float
	rising: bool

	@property
	def direction(self) -> str:
		return "rising" if self.rising else "falling"

@dataclasses.dataclass(frozen = True, slots = True)
class DerivativeScan():
	x: np.ndarray
	cost: np.ndarray
	first: np.ndarray
	second: np.ndarray
	masked: np.ndarray
	zero_crossings: tuple[ZeroCrossing]

	@property
	def sign_changes(self) -> int:
		return len(self.zero_crossings)

	def rows(self) -> list[dict]:
		return [ {
			"x":					float(self.x[i]),
			"C":					float(self.cost[i]),
			"C_prime":				float(self.first[i]),
			"C_double_prime":		float(self.second[i]),
			"C_prime_masked":		float(self.masked[i]),
		} for i in range(len(self.x)) ]

def _evaluate_costs(job: tuple) -> list[float]:
	(rho, basis, literal_postmeasure, xs) = job
	cost_function = CostFunction(rho, basis = basis, literal_postmeasure = literal_postmeasure)
	return [ cost_function(x) for x in xs ]

def evaluate_costs(rho: DensityMatrix, xs: list[float], workers: int = 1, basis: MeasurementBasis | None = None, literal_postmeasure: bool = False) -> np.ndarray:
	"""C at every x, in order; contiguous chunks go to the worker processes."""
	jobs = [ (rho, basis, literal_postmeasure, chunk) for chunk in chunked(list(xs), workers) ]
	return np.array([ value for values in ordered_map(_evaluate_costs, jobs, workers = workers) for value in values ])

def _zero_crossings(x: np.ndarray, masked: np.ndarray) -> tuple[ZeroCrossing]:
	crossings = [ ]
	support = [ i for i in range(len(x)) if abs(masked[i]) > SLOPE_FLOOR ]
	for (i, j) in zip(support, support[1:]):
		if (masked[i] < 0) != (masked[j] < 0):
			# Linear interpolation between the last two nonzero samples
			x0 = x[i] - masked[i] * (x[j] - x[i]) / (masked[j] - masked[i])
			crossings.append(ZeroCrossing(x = float(x0), rising = bool(masked[j] > 0)))
	return tuple(crossings)

def derivative_scan(rho: DensityMatrix, x_grid: np.ndarray, step: float = DERIVATIVE_STEP, workers: int = 1, basis: MeasurementBasis | None = None) -> DerivativeScan:
	"""Central differences of C, each from a three-point stencil around the
	grid point. The slope is masked to zero wherever the curvature is not
	positive."""
	x_grid = np.asarray(x_grid, dtype = float)
	if (x_grid.ndim != 1) or (len(x_grid) < 1) or np.any(np.diff(x_grid) <= 0):
		raise ContractViolationException("Derivative scan grid must be strictly increasing.")
	if (not math.isfinite(step)) or (step <= 0):
		raise ContractViolationException(f"Derivative step must be positive, got {step}.")

	stencil = np.stack([ x_grid - step, x_grid, x_grid + step ], axis = -1)
	values = evaluate_costs(rho, stencil.ravel().tolist(), workers = workers, basis = basis).reshape(stencil.shape)
	(below, center, above) = (values[:, 0], values[:, 1], values[:, 2])
	first = (above - below) / (2 * step)
	second = (above - 2 * center + below) / (step ** 2)
	masked = np.where(second > CURVATURE_FLOOR, first, 0.0)
	masked = np.where(np.abs(masked) > SLOPE_FLOOR, masked, 0.0)
	return DerivativeScan(x = x_grid, cost = center, first = first, second = second, masked = masked, zero_crossings = _zero_crossings(x_grid, masked))

def curvature_at(cost_function: CostFunction, x: float, step: float = DERIVATIVE_STEP) -> float:
	return (cost_function(x + step) - 2 * cost_function(x) + cost_function(x - step)) / (step ** 2)
