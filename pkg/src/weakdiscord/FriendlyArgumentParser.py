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
import math
import argparse
import textwrap

class FriendlyArgumentParser(argparse.ArgumentParser):
	"""Prints the error followed by the full help page and exits with the
	usage error code."""

	def error(self, msg: str):
		for line in textwrap.wrap(f"Error: {msg}", subsequent_indent = "  "):
			print(line, file = sys.stderr)
		print(file = sys.stderr)
		self.print_help(file = sys.stderr)
		sys.exit(2)

def finite_float(value: str) -> float:
	result = float(value)
	if not math.isfinite(result):
		raise argparse.ArgumentTypeError(f"Not a finite number: {value}")
	return result

def nonnegative_float(value: str) -> float:
	result = finite_float(value)
	if result < 0:
		raise argparse.ArgumentTypeError(f"Must not be negative: {value}")
	return result

def positive_float(value: str) -> float:
	result = finite_float(value)
	if result <= 0:
		raise argparse.ArgumentTypeError(f"Must be positive: {value}")
	return result

def positive_int(value: str) -> int:
	result = int(value)
	if result < 1:
		raise argparse.ArgumentTypeError(f"Must be at least 1: {value}")
	return result

def name_list(value: str) -> list[str]:
	return [ name.strip() for name in value.split(",") if (name.strip() != "") ]
