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

import logging
import dataclasses
import numpy as np
from .StateFamily import StateFamily
from .Measurement import MeasurementBasis
from .CostFunction import CostFunction, CorrelationReport
from .Tools import ordered_map, chunked
from .Exceptions import UsageException

_log = logging.getLogger(__name__)

@dataclasses.dataclass(frozen = True, slots = True)
class ReportRow():
	x: float
	delta_F: float
	delta_D: float
	cost: float
	discord: float
	weak_discord: float
	fidelity: float
	theta_opt: float
	phi_opt: float

	@classmethod
	def columns(cls) -> tuple[str]:
		return tuple(field.name for field in dataclasses.fields(cls))

	@classmethod
	def from_report(cls, report: CorrelationReport) -> "ReportRow":
		return cls(x = report.x, delta_F = report.delta_fidelity, delta_D = report.delta_discord, cost = report.cost, discord = report.discord, weak_discord = report.weak_discord, fidelity = report.fidelity, theta_opt = report.theta_opt, phi_opt = report.phi_opt)

	def as_dict(self) -> dict:
		return dataclasses.asdict(self)

@dataclasses.dataclass(frozen = True, slots = True)
class SweepSpec():
	family: StateFamily
	x_min: float
	x_max: float
	steps: int
	columns: tuple[str] = ReportRow.columns()

	def __post_init__(self):
		if not (0 <= self.x_min < self.x_max):
			raise UsageException(f"Sweep range must satisfy 0 <= x_min < x_max, got [{self.x_min}, {self.x_max}].")
		if self.steps < 2:
			raise UsageException(f"Sweep needs at least two steps, got {self.steps}.")
		unknown = [ column for column in self.columns if column not in ReportRow.columns() ]
		if len(unknown) > 0:
			raise UsageException(f"Unknown column(s) {', '.join(unknown)}, available are {', '.join(ReportRow.columns())}.")

	@property
	def x_grid(self) -> np.ndarray:
		return np.linspace(self.x_min, self.x_max, self.steps)

def _sweep_chunk(job: tuple) -> list[ReportRow]:
	(family, basis, literal_postmeasure, xs) = job
	cost_function = CostFunction(family.build(), basis = basis, literal_postmeasure = literal_postmeasure)
	return [ ReportRow.from_report(cost_function.report(x)) for x in xs ]

def run_sweep(spec: SweepSpec, workers: int = 1, basis: MeasurementBasis | None = None, literal_postmeasure: bool = False) -> list[ReportRow]:
	"""One row per grid point in ascending x, independent of the number of
	worker processes."""
	# Unphysical parameters fail here, not inside a worker
	spec.family.build()
	xs = [ float(x) for x in spec.x_grid ]
	jobs = [ (spec.family, basis, literal_postmeasure, chunk) for chunk in chunked(xs, workers) ]
	_log.info("Sweeping %s over %d points in [%g, %g] with %d worker(s)", spec.family.spec, len(xs), spec.x_min, spec.x_max, workers)
	return [ row for rows in ordered_map(_sweep_chunk, jobs, workers = workers) for row in rows ]
