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
from .Figures import write_figure
from .Tools import worker_count

class ActionFigure(LoggingAction):
	def run(self):
		for filename in write_figure(self._args.name, self._args.output_directory, workers = worker_count(self._args.workers)):
			print(filename)
