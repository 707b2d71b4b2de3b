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

import enum
import argparse
import dataclasses

def _parse_bool(text: str | bool) -> bool:
	if isinstance(text, bool):
		return text
	match text.lower():
		case "1" | "on" | "true" | "yes":
			return True
		case "0" | "off" | "false" | "no":
			return False
	raise ValueError(f"Not a boolean value: {text}")

def _parse_indent(text: str | bool) -> int | None:
	"""JSON indentation; 0 writes everything on one line."""
	if isinstance(text, bool):
		return 4 if text else None
	indent = int(text)
	if indent < 0:
		raise ValueError(f"Indent must not be negative: {text}")
	return indent or None

@dataclasses.dataclass(frozen = True, slots = True)
class FormatOption():
	parse: callable
	default: object

class OptionedEnum():
	"""An enum value plus "-F key[=value]" options that are only valid for
	that particular value. A bare key means True."""
	Value = None
	_OPTIONS = { }

	def __init__(self, enum_value: enum.Enum, option_list: list[str] | None = None):
		self._value = enum_value
		self._options = { key: option.default for (key, option) in self.supported_options.items() }
		for option_text in (option_list or [ ]):
			(key, value) = self._split(option_text)
			self._options[key] = self._convert(key, value)

	@classmethod
	def option_summary(cls) -> str:
		return "; ".join(f"{value}: {', '.join(sorted(options))}" for (value, options) in cls._OPTIONS.items())

	@property
	def supported_options(self) -> dict[str, FormatOption]:
		return self._OPTIONS.get(self._value, { })

	@property
	def value(self) -> enum.Enum:
		return self._value

	@property
	def name(self) -> str:
		return self._value.name

	def _split(self, option_text: str) -> tuple[str, str | bool]:
		(key, separator, value) = option_text.partition("=")
		key = key.lower()
		if key not in self.supported_options:
			valid = ", ".join(sorted(self.supported_options)) or "none"
			raise argparse.ArgumentTypeError(f"Format \"{self._value}\" does not know option \"{key}\"; valid options: {valid}.")
		return (key, value if separator else True)

	def _convert(self, key: str, value: str | bool):
		try:
			return self.supported_options[key].parse(value)
		except ValueError as e:
			raise argparse.ArgumentTypeError(f"Option \"{key}\" of format \"{self._value}\" cannot take \"{value}\": {e}")

	def __getitem__(self, option_name: str):
		if option_name not in self._options:
			raise KeyError(f"{self.__class__.__name__} {self.name} has no option \"{option_name}\".")
		return self._options[option_name]

	def __repr__(self):
		return f"{repr(self._value)} <{self._options}>"

class ReportFormatOpts(OptionedEnum):
	class Value(enum.StrEnum):
		Text = "text"
		CSV = "csv"
		JSON = "json"

	_OPTIONS = {
		Value.Text: {
			"pretty":	FormatOption(parse = _parse_bool, default = False),
		},
		Value.CSV: {
			"header":	FormatOption(parse = _parse_bool, default = True),
			"comments":	FormatOption(parse = _parse_bool, default = True),
		},
		Value.JSON: {
			"indent":	FormatOption(parse = _parse_indent, default = 4),
		},
	}
