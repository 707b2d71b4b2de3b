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
import dataclasses

INVERSE_GOLDEN_RATIO = (math.sqrt(5) - 1) / 2

@dataclasses.dataclass(frozen = True, slots = True)
class GoldenSectionResult():
	x: float
	value: float
	evaluations: int

def golden_section_minimize(fnc: callable, lower: float, upper: float, tolerance: float = 1e-6) -> GoldenSectionResult:
	"""Minimizes a unimodal function on [lower, upper] until the bracket is
	narrower than the absolute tolerance. The bracket endpoints are
	candidates, too; among equal values the smaller x wins."""
	if lower > upper:
		(lower, upper) = (upper, lower)
	evaluated = { }
	def evaluate(x: float) -> float:
		if x not in evaluated:
			evaluated[x] = fnc(x)
		return evaluated[x]

	(a, b) = (lower, upper)
	c = b - INVERSE_GOLDEN_RATIO * (b - a)
	d = a + INVERSE_GOLDEN_RATIO * (b - a)
	while (b - a) > tolerance:
		if evaluate(c) <= evaluate(d):
			(b, d) = (d, c)
			c = b - INVERSE_GOLDEN_RATIO * (b - a)
		else:
			(a, c) = (c, d)
			d = a + INVERSE_GOLDEN_RATIO * (b - a)

	evaluate((a + b) / 2)
	evaluate(lower)
	evaluate(upper)
	(x, value) = min(evaluated.items(), key = lambda item: (item[1], item[0]))
	return GoldenSectionResult(x = x, value = value, evaluations = len(evaluated))
