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

import os
import logging
import numpy as np
from .StateFamily import PureSchmidt, Werner, GeneralTwoQubit
from .Sweep import SweepSpec, run_sweep
from .CostFunction import derivative_scan
from .ReportFormatter import ReportFormatter
from .Enums import ReportFormatOpts
from .Tools import ordered_map, format_float

_log = logging.getLogger(__name__)

COST_CURVE_LAMBDAS = (0.05, 0.1, 0.2, 0.5)
COST_CURVE_STEPS = 241
WERNER_Z = 0.25
GENERAL_STATE = GeneralTwoQubit(a = (0.01, 0.1, 0.22), b = (0.1, 0.03, 0.5), c = (0.1, 0.02, 0.2))
SURFACE_LAMBDAS = tuple(round(0.02 * i, 2) for i in range(1, 26))
SURFACE_X = tuple(round(0.05 * i, 2) for i in range(1, 121))

def _write_rows(filename: str, rows: list[dict], columns: list[str]):
	with open(filename, "w", newline = "") as f:
		ReportFormatter(ReportFormatOpts(ReportFormatOpts.Value.CSV)).write_rows(f, rows, columns)
	_log.info("Wrote %d rows to %s", len(rows), filename)

def _write_sweep(output_directory: str, filename: str, spec: SweepSpec, workers: int) -> str:
	path = os.path.join(output_directory, filename)
	_write_rows(path, [ row.as_dict() for row in run_sweep(spec, workers = workers) ], list(spec.columns))
	return path

def _cost_curves(output_directory: str, workers: int) -> list[str]:
	return [ _write_sweep(output_directory, f"fig1_pure_lambda0_{format_float(lambda0)}.csv", SweepSpec(family = PureSchmidt(lambda0), x_min = 0, x_max = 6, steps = COST_CURVE_STEPS), workers) for lambda0 in COST_CURVE_LAMBDAS ]

def _masked_slope(lambda0: float) -> list[float]:
	return derivative_scan(PureSchmidt(lambda0).build(), np.array(SURFACE_X)).masked.tolist()

def masked_derivative_surface(workers: int = 1) -> list[dict]:
	"""Rows (x, lambda0, C_prime_masked) over the Schmidt family grid."""
	slopes = ordered_map(_masked_slope, SURFACE_LAMBDAS, workers = workers)
	return [ { "x": x, "lambda0": lambda0, "C_prime_masked": float(slope) } for (lambda0, row) in zip(SURFACE_LAMBDAS, slopes) for (x, slope) in zip(SURFACE_X, row) ]

def _derivative_surface(output_directory: str, workers: int) -> list[str]:
	path = os.path.join(output_directory, "fig2_masked_derivative.csv")
	_write_rows(path, masked_derivative_surface(workers = workers), [ "x", "lambda0", "C_prime_masked" ])
	return [ path ]

def _werner_curve(output_directory: str, workers: int) -> list[str]:
	return [ _write_sweep(output_directory, f"fig3_werner_z_{format_float(WERNER_Z)}.csv", SweepSpec(family = Werner(WERNER_Z), x_min = 0, x_max = 6, steps = COST_CURVE_STEPS), workers) ]

def _general_curve(output_directory: str, workers: int) -> list[str]:
	return [ _write_sweep(output_directory, "fig4_general.csv", SweepSpec(family = GENERAL_STATE, x_min = 0, x_max = 6, steps = COST_CURVE_STEPS), workers) ]

FIGURES = {
	"fig1":	_cost_curves,
	"fig2":	_derivative_surface,
	"fig3":	_werner_curve,
	"fig4":	_general_curve,
}

def write_figure(name: str, output_directory: str, workers: int = 1) -> list[str]:
	os.makedirs(output_directory, exist_ok = True)
	return FIGURES[name](output_directory, workers)
