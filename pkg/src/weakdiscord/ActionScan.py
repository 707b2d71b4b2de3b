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

import numpy as np
from .MultiCommand import LoggingAction
from .StateFamily import parse_state_family
from .CostFunction import derivative_scan
from .ReportFormatter import ReportFormatter
from .Enums import ReportFormatOpts
from .Tools import open_output, worker_count
from .Exceptions import UsageException

class ActionScan(LoggingAction):
	def run(self):
		report_format = ReportFormatOpts(self._args.report_format, self._args.report_format_option)
		if not (self._args.x_min < self._args.x_max):
			raise UsageException(f"Scan range must satisfy x_min < x_max, got [{self._args.x_min}, {self._args.x_max}].")
		family = parse_state_family(self._args.state)
		x_grid = np.linspace(self._args.x_min, self._args.x_max, self._args.steps)
		scan = derivative_scan(family.build(), x_grid, step = self._args.step_size, workers = worker_count(self._args.workers))
		extra = {
			"sign_changes":		scan.sign_changes,
			"zero_crossings":	[ { "x": crossing.x, "direction": crossing.direction } for crossing in scan.zero_crossings ],
		}
		with open_output(self._args.out) as f:
			ReportFormatter(report_format).write_rows(f, scan.rows(), [ "x", "C", "C_prime", "C_double_prime", "C_prime_masked" ], extra = extra)
