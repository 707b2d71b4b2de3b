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

from .MultiCommand import LoggingAction
from .StateFamily import parse_state_family
from .CostFunction import CostFunction, optimal_strength, curvature_at
from .ReportFormatter import ReportFormatter
from .Enums import ReportFormatOpts
from .Tools import open_output

class ActionOptimize(LoggingAction):
	def run(self):
		report_format = ReportFormatOpts(self._args.report_format, self._args.report_format_option)
		family = parse_state_family(self._args.state)
		cost_function = CostFunction(family.build())
		optimum = optimal_strength(cost_function.rho, x_max = self._args.x_max, tolerance = self._args.tol, cost_function = cost_function)
		record = {
			"state":		family.spec,
			"x_star":		optimum.x_star,
			"cost_star":	optimum.cost,
			"boundary":		optimum.boundary,
		}
		if not optimum.boundary:
			record["curvature"] = curvature_at(cost_function, optimum.x_star)
		record.update(optimum.report.as_dict())
		with open_output(self._args.out) as f:
			ReportFormatter(report_format).write_record(f, record)
