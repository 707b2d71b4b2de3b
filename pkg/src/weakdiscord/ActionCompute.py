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
from .Measurement import make_basis
from .CostFunction import CostFunction
from .ReportFormatter import ReportFormatter
from .Enums import ReportFormatOpts
from .Tools import open_output

class ActionCompute(LoggingAction):
	def run(self):
		report_format = ReportFormatOpts(self._args.report_format, self._args.report_format_option)
		family = parse_state_family(self._args.state)
		basis = None if (self._args.theta is None) else make_basis(self._args.theta, self._args.phi)
		cost_function = CostFunction(family.build(), basis = basis, literal_postmeasure = self._args.literal_postmeasure)
		record = { "state": family.spec }
		record.update(cost_function.report(self._args.x).as_dict())
		with open_output(self._args.out) as f:
			ReportFormatter(report_format).write_record(f, record)
