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

import csv
import json
import enum
import collections
import dataclasses
from .Enums import ReportFormatOpts
from .Tools import format_float

class CellFormatter():
	class Alignment(enum.IntEnum):
		Left = enum.auto()
		Right = enum.auto()

	def __init__(self, content_to_str_fnc: callable = str, align: Alignment = Alignment.Left):
		self._content_to_str_fnc = content_to_str_fnc
		self._align = align

	def width_of(self, content: any) -> int:
		return len(self._content_to_str_fnc(content))

	def __call__(self, content: any, length: int) -> str:
		value = self._content_to_str_fnc(content)
		match self._align:
			case self.Alignment.Left:
				return value.ljust(length)

			case self.Alignment.Right:
				return value.rjust(length)

def _cell_str(content: any) -> str:
	if isinstance(content, bool):
		return "yes" if content else "no"
	elif isinstance(content, float):
		return format_float(content)
	return str(content)

class Table():
	class RowType(enum.IntEnum):
		Data = enum.auto()
		Separator = enum.auto()

	@dataclasses.dataclass(frozen = True, slots = True)
	class Row():
		row_type: "RowType"
		data: dict[str, any] | None = None

	_PRETTY_STYLE = {
		"V":	"│",
		"H":	"─",
		"TL":	"┌",
		"ML":	"├",
		"BL":	"└",
		"TR":	"┐",
		"MR":	"┤",
		"BR":	"┘",
		"TM":	"┬",
		"MM":	"┼",
		"BM":	"┴",
	}
	_PLAIN_STYLE = {
		"V":	" ",
		"H":	"-",
		"TL":	None,
		"ML":	" ",
		"BL":	None,
		"TR":	" ",
		"MR":	" ",
		"BR":	" ",
		"TM":	" ",
		"MM":	" ",
		"BM":	" ",
	}

	def __init__(self, pretty: bool = False, pad: int = 1):
		self._style = self._PRETTY_STYLE if pretty else self._PLAIN_STYLE
		self._pad = pad
		self._rows = [ ]
		self._column_formatters = { }

	def format_column(self, col_name: str, formatter: CellFormatter):
		self._column_formatters[col_name] = formatter
		return self

	def add_separator_row(self):
		self._rows.append(self.Row(row_type = self.RowType.Separator))
		return self

	def add_row(self, row_data: dict):
		self._rows.append(self.Row(row_type = self.RowType.Data, data = row_data))
		return self

	def _get_column_formatter(self, col_name: str) -> CellFormatter:
		return self._column_formatters.get(col_name, CellFormatter(content_to_str_fnc = _cell_str))

	def _determine_col_width(self, col_name: str) -> int:
		return max((self._get_column_formatter(col_name).width_of(row.data[col_name]) for row in self._rows if (row.row_type == self.RowType.Data) and (col_name in row.data)), default = 0)

	def _rule(self, col_widths: dict[str, int], left: str, middle: str, right: str) -> str:
		return left + middle.join(self._style["H"] * (col_width + 2 * self._pad) for col_width in col_widths.values()) + right

	def _format_row(self, col_widths: dict[str, int], row: Row) -> str:
		match row.row_type:
			case self.RowType.Data:
				line = [ ]
				for (col_name, col_width) in col_widths.items():
					if col_name not in row.data:
						line.append(" " * (col_width + 2 * self._pad))
					else:
						line.append((" " * self._pad) + self._get_column_formatter(col_name)(row.data[col_name], col_width) + (" " * self._pad))
				return self._style["V"] + self._style["V"].join(line) + self._style["V"]

			case self.RowType.Separator:
				return self._rule(col_widths, self._style["ML"], self._style["MM"], self._style["MR"])

	def render(self, *col_names: tuple[str]) -> list[str]:
		col_widths = collections.OrderedDict((col_name, self._determine_col_width(col_name)) for col_name in col_names)
		col_widths = collections.OrderedDict((col_name, col_width) for (col_name, col_width) in col_widths.items() if col_width != 0)
		lines = [ ]
		if self._style["TL"] is not None:
			lines.append(self._rule(col_widths, self._style["TL"], self._style["TM"], self._style["TR"]))
		lines += [ self._format_row(col_widths, row).rstrip() if (self._style["TL"] is None) else self._format_row(col_widths, row) for row in self._rows ]
		if self._style["BL"] is not None:
			lines.append(self._rule(col_widths, self._style["BL"], self._style["BM"], self._style["BR"]))
		return lines

	def write(self, f, *col_names: tuple[str]):
		for line in self.render(*col_names):
			print(line, file = f)

def _json_value(value: any) -> any:
	if isinstance(value, float):
		return float(format_float(value))
	return value

def _extra_lines(extra: dict | None) -> list[str]:
	"""Summary values that accompany a table, e.g. the zero crossings of a
	derivative scan. Lists of dicts become one indented line per item."""
	lines = [ ]
	for (key, value) in (extra or { }).items():
		if isinstance(value, list):
			lines.append(f"{key}:")
			lines += [ "    " + ", ".join(f"{item_key} = {_cell_str(item_value)}" for (item_key, item_value) in item.items()) for item in value ]
		else:
			lines.append(f"{key}: {_cell_str(value)}")
	return lines

class ReportFormatter():
	"""Writes either a single record (key/value pairs) or a table of rows in
	one of the supported report formats. Floats carry 12 significant
	digits in every format."""

	def __init__(self, format_opts: ReportFormatOpts):
		self._format_opts = format_opts

	def _table(self, rows: list[dict], columns: list[str]) -> Table:
		table = Table(pretty = self._format_opts["pretty"])
		for column in columns:
			if (len(rows) > 0) and isinstance(rows[0].get(column), float):
				table.format_column(column, CellFormatter(content_to_str_fnc = _cell_str, align = CellFormatter.Alignment.Right))
		table.add_row({ column: column for column in columns })
		table.add_separator_row()
		for row in rows:
			table.add_row(row)
		return table

	def write_rows(self, f, rows: list[dict], columns: list[str], extra: dict | None = None):
		match self._format_opts.value:
			case ReportFormatOpts.Value.Text:
				self._table(rows, columns).write(f, *columns)
				for line in _extra_lines(extra):
					print(line, file = f)

			case ReportFormatOpts.Value.CSV:
				writer = csv.writer(f, lineterminator = "\n")
				if self._format_opts["header"]:
					writer.writerow(columns)
				for row in rows:
					writer.writerow([ _cell_str(row[column]) for column in columns ])
				if self._format_opts["comments"]:
					for line in _extra_lines(extra):
						print(f"# {line}", file = f)

			case ReportFormatOpts.Value.JSON:
				document = { "rows": [ { column: _json_value(row[column]) for column in columns } for row in rows ] }
				for (key, value) in (extra or { }).items():
					document[key] = value
				json.dump(document, f, indent = self._format_opts["indent"])
				print(file = f)

	def write_record(self, f, record: dict):
		match self._format_opts.value:
			case ReportFormatOpts.Value.Text:
				table = Table(pretty = self._format_opts["pretty"])
				for (key, value) in record.items():
					table.add_row({ "key": key, "value": value })
				table.write(f, "key", "value")

			case ReportFormatOpts.Value.CSV:
				writer = csv.writer(f, lineterminator = "\n")
				if self._format_opts["header"]:
					writer.writerow(list(record))
				writer.writerow([ _cell_str(value) for value in record.values() ])

			case ReportFormatOpts.Value.JSON:
				json.dump({ key: _json_value(value) for (key, value) in record.items() }, f, indent = self._format_opts["indent"])
				print(file = f)
