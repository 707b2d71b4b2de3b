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

import sys
import argparse
import weakdiscord
from .Enums import ReportFormatOpts
from .ActionCompute import ActionCompute
from .ActionSweep import ActionSweep
from .ActionOptimize import ActionOptimize
from .ActionScan import ActionScan
from .ActionFigure import ActionFigure
from .MultiCommand import MultiCommand
from .Figures import FIGURES
from .Sweep import ReportRow
from .FriendlyArgumentParser import finite_float, nonnegative_float, positive_float, positive_int, name_list
from .Exceptions import UsageException, UnphysicalStateException, NumericContractException
from .Tools import WORKERS_ENVIRONMENT_VARIABLE

EXIT_USAGE = 2
EXIT_UNPHYSICAL_STATE = 3
EXIT_NUMERIC_CONTRACT = 4

def _add_format_arguments(parser):
	parser.add_argument("-f", "--report-format", choices = list(ReportFormatOpts.Value), type = ReportFormatOpts.Value, default = ReportFormatOpts.Value.Text, help = "Print the report in the desired format. Can be one of %(choices)s, defaults to %(default)s.")
	parser.add_argument("-F", "--report-format-option", metavar = "key[=value]", action = "append", default = [ ], help = f"Report-format specific options ({ReportFormatOpts.option_summary()}). When \"value\" is omitted, defaults to the Boolean \"True\" value.")
	parser.add_argument("-o", "--out", metavar = "filename", help = "Write the output to this file instead of stdout.")

def _add_state_argument(parser):
	parser.add_argument("-s", "--state", metavar = "spec", required = True, help = "Two-qubit state to analyze. One of \"pure:lambda0=<f>\", \"werner:z=<f>\" or \"general:a=<f>,<f>,<f>;b=<f>,<f>,<f>;c=<f>,<f>,<f>\". Mandatory argument.")

def _add_basis_arguments(parser):
	parser.add_argument("--theta", metavar = "angle", type = finite_float, help = "Use this fixed polar angle of the measurement basis on B for the disturbance instead of the basis that maximizes the weak classical correlation.")
	parser.add_argument("--phi", metavar = "angle", type = finite_float, default = 0.0, help = "Azimuthal angle of the fixed measurement basis, only used together with --theta. Defaults to %(default)s.")
	parser.add_argument("--literal-postmeasure", action = "store_true", help = "Weight both outcome branches of the post-measurement state by their probability. The result is not trace preserving; its trace is reported.")

def _add_workers_argument(parser):
	parser.add_argument("-j", "--workers", metavar = "count", type = positive_int, help = f"Number of worker processes. Defaults to the value of the {WORKERS_ENVIRONMENT_VARIABLE} environment variable or 1 if that is unset.")

def _add_verbose_argument(parser):
	parser.add_argument("-v", "--verbose", action = "count", default = 0, help = "Increase verbosity. Can be given multiple times.")

def main():
	mc = MultiCommand(description = "Weak measurement quantum discord toolkit: compute discord, weak discord, fidelity and the disturbance cost function of two-qubit states and find the optimal measurement strength.", trailing_text = f"weakdiscord v{weakdiscord.VERSION}")

	def genparser(parser):
		_add_state_argument(parser)
		parser.add_argument("-x", "--x", metavar = "strength", type = nonnegative_float, required = True, help = "Measurement strength x >= 0. Mandatory argument.")
		_add_basis_arguments(parser)
		_add_format_arguments(parser)
		_add_verbose_argument(parser)
	mc.register("compute", "Compute discord, fidelity and cost function of a state at one measurement strength", genparser, action = ActionCompute)

	def genparser(parser):
		_add_state_argument(parser)
		parser.add_argument("--x-min", metavar = "strength", type = nonnegative_float, default = 0.0, help = "Smallest measurement strength of the sweep. Defaults to %(default)s.")
		parser.add_argument("--x-max", metavar = "strength", type = positive_float, default = 6.0, help = "Largest measurement strength of the sweep. Defaults to %(default)s.")
		parser.add_argument("-n", "--steps", metavar = "count", type = positive_int, default = 241, help = "Number of equidistant grid points, including both ends. Defaults to %(default)s.")
		parser.add_argument("-c", "--columns", metavar = "name,name,...", type = name_list, help = f"Comma-separated list of output columns. Can be any of {', '.join(ReportRow.columns())}; all of them by default.")
		_add_basis_arguments(parser)
		_add_workers_argument(parser)
		_add_format_arguments(parser)
		_add_verbose_argument(parser)
	mc.register("sweep", "Tabulate the cost function over a range of measurement strengths", genparser, action = ActionSweep)

	def genparser(parser):
		_add_state_argument(parser)
		parser.add_argument("--x-max", metavar = "strength", type = positive_float, default = 10.0, help = "Upper limit of the strength search interval. Defaults to %(default)s.")
		parser.add_argument("-t", "--tol", metavar = "tolerance", type = positive_float, default = 1e-6, help = "Absolute tolerance of the optimal strength. Defaults to %(default)s.")
		_add_format_arguments(parser)
		_add_verbose_argument(parser)
	mc.register("optimize", "Find the measurement strength that minimizes the cost function", genparser, action = ActionOptimize, aliases = [ "opt" ])

	def genparser(parser):
		_add_state_argument(parser)
		parser.add_argument("--x-min", metavar = "strength", type = nonnegative_float, default = 0.05, help = "Smallest measurement strength of the scan. Defaults to %(default)s.")
		parser.add_argument("--x-max", metavar = "strength", type = positive_float, default = 6.0, help = "Largest measurement strength of the scan. Defaults to %(default)s.")
		parser.add_argument("-n", "--steps", metavar = "count", type = positive_int, default = 120, help = "Number of equidistant grid points, including both ends. Defaults to %(default)s.")
		parser.add_argument("--step-size", metavar = "h", type = positive_float, default = 1e-3, help = "Finite difference step of the derivative stencil. Defaults to %(default)s.")
		_add_workers_argument(parser)
		_add_format_arguments(parser)
		_add_verbose_argument(parser)
	mc.register("scan", "Scan first and second derivative of the cost function and count the sign changes of the slope where the curvature is positive", genparser, action = ActionScan)

	def genparser(parser):
		parser.add_argument("-d", "--output-directory", metavar = "dirname", default = ".", help = "Directory into which the data files are written. Defaults to %(default)s.")
		_add_workers_argument(parser)
		_add_verbose_argument(parser)
		parser.add_argument("name", choices = sorted(FIGURES), help = "Figure whose data should be regenerated. Can be one of %(choices)s.")
	mc.register("figure", "Regenerate the data files of one of the reference figures", genparser, action = ActionFigure, aliases = [ "fig" ])

	try:
		returncode = mc.run(sys.argv[1:])
	except (UsageException, argparse.ArgumentTypeError) as e:
		print(f"Error: {e}", file = sys.stderr)
		returncode = EXIT_USAGE
	except UnphysicalStateException as e:
		print(f"Unphysical state: {e}", file = sys.stderr)
		returncode = EXIT_UNPHYSICAL_STATE
	except NumericContractException as e:
		print(f"Numeric contract violated: {e}", file = sys.stderr)
		returncode = EXIT_NUMERIC_CONTRACT
	except OSError as e:
		print(f"Error: {e}", file = sys.stderr)
		returncode = 1
	sys.exit(returncode or 0)

if __name__ == "__main__":
	main()
