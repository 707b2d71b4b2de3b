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

from .MatrixKernelTests import MatrixKernelTests
from .DensityMatrixTests import DensityMatrixTests
from .StateFamilyTests import StateFamilyTests
from .MeasurementTests import MeasurementTests
from .CorrelationsTests import CorrelationsTests
from .CostFunctionTests import CostFunctionTests
from .OraclesTests import OraclesTests
from .FigureReproductionTests import FigureReproductionTests
from .ToolsTests import ToolsTests
from .EnumTests import EnumTests
from .ReportFormatterTests import ReportFormatterTests
from .CommandLineTests import CommandLineTests
