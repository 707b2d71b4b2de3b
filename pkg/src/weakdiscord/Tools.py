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

import os
import sys
import contextlib
import concurrent.futures
from .Exceptions import UsageException

WORKERS_ENVIRONMENT_VARIABLE = "WEAKDISCORD_WORKERS"

def open_output(filename: str | None):
	if (filename is None) or (filename == "-"):
		return contextlib.nullcontext(sys.stdout)
	else:
		return open(filename, "w", newline = "")

def format_float(value: float) -> str:
	return f"{value:.12g}"

def worker_count(requested: int | None = None) -> int:
	if requested is None:
		requested = os.environ.get(WORKERS_ENVIRONMENT_VARIABLE, "1")
	try:
		workers = int(requested)
	except ValueError:
		raise UsageException(f"Worker count must be an integer, got \"{requested}\".")
	if workers < 1:
		raise UsageException(f"Worker count must be at least 1, got {workers}.")
	return workers

def chunked(items: list, count: int) -> list[list]:
	"""Splits into at most count contiguous, non-empty chunks of nearly equal size."""
	count = max(1, min(count, len(items)))
	(size, remainder) = divmod(len(items), count)
	chunks = [ ]
	start = 0
	for i in range(count):
		end = start + size + (1 if (i < remainder) else 0)
		chunks.append(items[start : end])
		start = end
	return [ chunk for chunk in chunks if len(chunk) > 0 ]

def ordered_map(fnc: callable, items: list, workers: int = 1) -> list:
	"""map() that fans out over worker processes; results keep input order."""
	items = list(items)
	if (workers <= 1) or (len(items) <= 1):
		return [ fnc(item) for item in items ]
	with concurrent.futures.ProcessPoolExecutor(max_workers = min(workers, len(items))) as executor:
		return list(executor.map(fnc, items))
