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

import re
import abc
import math
import dataclasses
from .DensityMatrix import DensityMatrix, make_pure_schmidt, make_werner, make_general
from .Exceptions import SpecParseException

class StateFamily(abc.ABC):
	@abc.abstractmethod
	def build(self) -> DensityMatrix:
		pass

	@property
	@abc.abstractmethod
	def spec(self) -> str:
		pass

def _fmt(value: float) -> str:
	return f"{value:.12g}"

def _fmt_vector(vector: tuple[float]) -> str:
	return ",".join(_fmt(value) for value in vector)

@dataclasses.dataclass(frozen = True, slots = True)
class PureSchmidt(StateFamily):
	lambda0: float

	@property
	def lambda1(self) -> float:
		return 1 - self.lambda0

	@property
	def spec(self) -> str:
		return f"pure:lambda0={_fmt(self.lambda0)}"

	def build(self) -> DensityMatrix:
		return make_pure_schmidt(self.lambda0)

@dataclasses.dataclass(frozen = True, slots = True)
class Werner(StateFamily):
	z: float

	@property
	def spec(self) -> str:
		return f"werner:z={_fmt(self.z)}"

	def build(self) -> DensityMatrix:
		return make_werner(self.z)

@dataclasses.dataclass(frozen = True, slots = True)
class GeneralTwoQubit(StateFamily):
	a: tuple[float]
	b: tuple[float]
	c: tuple[float]

	@property
	def spec(self) -> str:
		return f"general:a={_fmt_vector(self.a)};b={_fmt_vector(self.b)};c={_fmt_vector(self.c)}"

	def build(self) -> DensityMatrix:
		return make_general(self.a, self.b, self.c)

class _SpecScanner():
	_NUMBER_RE = re.compile(r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?")
	_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

	def __init__(self, text: str):
		self._text = text
		self._pos = 0

	@property
	def pos(self) -> int:
		return self._pos

	@property
	def at_end(self) -> bool:
		return self._pos >= len(self._text)

	def error(self, msg: str, position: int | None = None):
		raise SpecParseException(msg, self._text, self._pos if (position is None) else position)

	def peek(self, literal: str) -> bool:
		return self._text.startswith(literal, self._pos)

	def expect(self, literal: str):
		if not self.peek(literal):
			self.error(f"Expected '{literal}'")
		self._pos += len(literal)

	def _match(self, regex: re.Pattern, what: str) -> str:
		result = regex.match(self._text, self._pos)
		if result is None:
			self.error(f"Expected {what}")
		self._pos = result.end()
		return result.group(0)

	def name(self) -> str:
		return self._match(self._NAME_RE, "a name")

	def number(self) -> float:
		start = self._pos
		value = float(self._match(self._NUMBER_RE, "a number"))
		if not math.isfinite(value):
			self.error("Number out of range", position = start)
		return value

	def vector(self) -> tuple[float]:
		components = [ self.number() ]
		while self.peek(","):
			self.expect(",")
			components.append(self.number())
		return tuple(components)

def _parse_assignments(scanner: _SpecScanner, parsers: dict) -> dict:
	values = { }
	while True:
		start = scanner.pos
		key = scanner.name()
		if key not in parsers:
			scanner.error(f"Unknown parameter '{key}', expected one of {', '.join(sorted(parsers))}", position = start)
		if key in values:
			scanner.error(f"Duplicate parameter '{key}'", position = start)
		scanner.expect("=")
		values[key] = (start, parsers[key](scanner))
		if scanner.at_end:
			break
		scanner.expect(";")
	missing = [ key for key in parsers if key not in values ]
	if len(missing) > 0:
		scanner.error(f"Missing parameter(s) {', '.join(missing)}")
	return values

def parse_state_family(text: str) -> StateFamily:
	"""Parses one of
		pure:lambda0=<float>
		werner:z=<float>
		general:a=<f>,<f>,<f>;b=<f>,<f>,<f>;c=<f>,<f>,<f>
	Parameter ranges are checked when the state is built."""
	text = text.strip()
	scanner = _SpecScanner(text)
	start = scanner.pos
	family = scanner.name()
	scanner.expect(":")
	match family:
		case "pure":
			values = _parse_assignments(scanner, { "lambda0": _SpecScanner.number })
			return PureSchmidt(lambda0 = values["lambda0"][1])

		case "werner":
			values = _parse_assignments(scanner, { "z": _SpecScanner.number })
			return Werner(z = values["z"][1])

		case "general":
			values = _parse_assignments(scanner, { "a": _SpecScanner.vector, "b": _SpecScanner.vector, "c": _SpecScanner.vector })
			for (key, (position, vector)) in values.items():
				if len(vector) != 3:
					scanner.error(f"Parameter '{key}' needs three components, got {len(vector)}", position = position)
			return GeneralTwoQubit(a = values["a"][1], b = values["b"][1], c = values["c"][1])

		case _:
			scanner.error(f"Unknown state family '{family}', expected pure, werner or general", position = start)
