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

"""Closed forms for the pure Schmidt and Werner families, computed without
any of the general matrix machinery. They serve as independent
references for the numerical path."""

import math
import scipy.optimize
from .Exceptions import ParameterRangeException

def _check_unit_interval(name: str, value: float):
	if (not math.isfinite(value)) or (value < 0) or (value > 1):
		raise ParameterRangeException(f"Parameter {name} = {value} outside of permissible range [0, 1].")

def _plogp(p: float) -> float:
	return p * math.log2(p) if (p > 0) else 0.0

def _binary_entropy(p: float) -> float:
	return -_plogp(p) - _plogp(1 - p)

def _sech(y: float) -> float:
	return 0.0 if (abs(y) > 700) else 1 / math.cosh(y)

def pure_discord(lambda0: float) -> float:
	_check_unit_interval("lambda0", lambda0)
	return _binary_entropy(lambda0)

def pure_outcome_probability(lambda0: float, y: float, theta: float) -> float:
	"""Probability of the outcome with signed strength y."""
	_check_unit_interval("lambda0", lambda0)
	return (1 + (1 - 2 * lambda0) * math.cos(theta) * math.tanh(y)) / 2

def _conditional_bracket(lambda0: float, x: float, theta: float) -> float:
	"""sum over y = +-x of p(y) (k+ log k+ + k- log k-); minus the
	conditional entropy of A after the weak measurement."""
	product = lambda0 * (1 - lambda0)
	total = 0
	for y in (x, -x):
		p = pure_outcome_probability(lambda0, y, theta)
		if p < 1e-300:
			continue
		argument = min(max(1 - product * _sech(y) ** 2 / p ** 2, 0.0), 1.0)
		root = math.sqrt(argument)
		total += p * (_plogp((1 + root) / 2) + _plogp((1 - root) / 2))
	return total

def _best_theta(lambda0: float, x: float) -> float:
	# The bracket is symmetric under theta -> pi - theta.
	result = scipy.optimize.minimize_scalar(lambda theta: -_conditional_bracket(lambda0, x, theta), bounds = (0, math.pi / 2), method = "bounded", options = { "xatol": 1e-10 })
	candidates = [ 0.0, math.pi / 2, float(result.x) ]
	return max(candidates, key = lambda theta: _conditional_bracket(lambda0, x, theta))

def pure_delta_discord(lambda0: float, x: float, theta: float = math.pi / 2, minimize_theta: bool = False) -> float:
	_check_unit_interval("lambda0", lambda0)
	if minimize_theta:
		theta = _best_theta(lambda0, x)
	return -_conditional_bracket(lambda0, x, theta)

def pure_weak_discord(lambda0: float, x: float, theta: float = math.pi / 2, minimize_theta: bool = False) -> float:
	return pure_discord(lambda0) + pure_delta_discord(lambda0, x, theta = theta, minimize_theta = minimize_theta)

def pure_fidelity(lambda0: float, x: float, theta: float = math.pi / 2) -> float:
	_check_unit_interval("lambda0", lambda0)
	lambda1 = 1 - lambda0
	sech = _sech(x)
	bracket = 2 * (lambda0 ** 2 + lambda1 ** 2) - math.cos(2 * theta) * (lambda0 - lambda1) ** 2 * (sech - 1) + (4 * lambda0 * lambda1 + 1) * sech + 1
	return min(math.sqrt(max(bracket, 0.0)) / 2, 1.0)

def pure_cost(lambda0: float, x: float, theta: float = math.pi / 2) -> float:
	return (1 - pure_fidelity(lambda0, x, theta)) + pure_delta_discord(lambda0, x, theta = theta)

def werner_weak_discord(z: float, x: float) -> float:
	"""Identical for every measurement basis."""
	_check_unit_interval("z", z)
	spectrum = [ (1 - z) / 4 ] * 3 + [ (1 + 3 * z) / 4 ]
	return 1 + sum(_plogp(value) for value in spectrum) + _binary_entropy((1 + z * math.tanh(x)) / 2)

def werner_discord_limit(z: float) -> float:
	return werner_weak_discord(z, math.inf)
