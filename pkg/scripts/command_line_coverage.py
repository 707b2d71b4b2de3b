#!/usr/bin/python3
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
import re
import sys
import hashlib
import dataclasses
import subprocess
from weakdiscord.FriendlyArgumentParser import FriendlyArgumentParser

REFERENCE_DIRECTORY = "scripts/reference/"
PRODUCED_DIRECTORY = "/tmp/weakdiscord-output/"
FIGURE_DIRECTORY = "/tmp/weakdiscord-figures/"

@dataclasses.dataclass(frozen = True)
class Invocation():
	"""One weakdiscord command line and the exit code it must return. In the
	listings below a leading "[N] " sets the expected exit code."""
	arguments: str
	returncode: int = 0
	environment: dict = dataclasses.field(default_factory = dict)
	produces: tuple[str] = ( )
	same_stdout_as: str | None = None

	@classmethod
	def parse_listing(cls, listing: str) -> list["Invocation"]:
		invocations = [ ]
		for line in listing.splitlines():
			line = line.strip()
			if line == "":
				continue
			match = re.fullmatch(r"\[(?P<code>\d+)\]\s+(?P<arguments>.*)", line)
			if match is None:
				invocations.append(cls(arguments = line))
			else:
				invocations.append(cls(arguments = match["arguments"], returncode = int(match["code"])))
		return invocations

	@property
	def display(self) -> str:
		prefix = "".join(f"{key}={value} " for (key, value) in sorted(self.environment.items()))
		return f"{prefix}weakdiscord {self.arguments}"

	@property
	def digest(self) -> str:
		return hashlib.md5(self.display.encode("utf-8")).hexdigest()

	def shell_command(self, with_coverage: bool) -> str:
		if with_coverage:
			return f"coverage run -a --source weakdiscord -m weakdiscord.__main__ {self.arguments}"
		else:
			return f"python3 -m weakdiscord.__main__ {self.arguments}"

class ReferenceChecker():
	def __init__(self, args):
		self._args = args
		self._stdout = { }
		os.makedirs(PRODUCED_DIRECTORY, exist_ok = True)

	def _accept(self, channel: str, produced: bytes) -> bool:
		if self._args.accept_all:
			return True
		print(f"This was produced on {channel}:")
		print(produced.decode("utf-8"))
		answer = input(f"{channel} OK (y/n)? ")
		return answer.lower() in ("y", "")

	def _compare(self, invocation: Invocation, channel: str, produced: bytes):
		produced_filename = f"{PRODUCED_DIRECTORY}{invocation.digest}-{channel}.txt"
		reference_filename = f"{REFERENCE_DIRECTORY}{invocation.digest}-{channel}.txt"
		with open(produced_filename, "wb") as f:
			f.write(produced)

		if not os.path.exists(reference_filename):
			# First run: the produced output becomes the baseline.
			print(f"Recording new {channel} reference {reference_filename} for: {invocation.display}")
			with open(reference_filename, "wb") as f:
				f.write(produced)
			return
		with open(reference_filename, "rb") as f:
			if f.read() == produced:
				return
		print(f"Different {channel} output of {invocation.display}: {reference_filename} vs. {produced_filename}")
		if not (self._args.interactive or self._args.accept_all):
			raise RuntimeError(f"Output deviates from reference: {invocation.display}")
		if self._accept(channel, produced):
			with open(reference_filename, "wb") as f:
				f.write(produced)

	def check(self, invocation: Invocation):
		print(invocation.display)
		environment = dict(os.environ)
		environment.update(invocation.environment)
		proc = subprocess.run(invocation.shell_command(not self._args.no_coverage), shell = True, check = False, capture_output = True, env = environment)
		if proc.returncode != invocation.returncode:
			raise RuntimeError(f"Expected exit code {invocation.returncode}, got {proc.returncode}: {invocation.display}")
		for filename in invocation.produces:
			if not os.path.isfile(filename):
				raise RuntimeError(f"Expected output file {filename} was not written: {invocation.display}")
		if (invocation.same_stdout_as is not None) and (self._stdout[invocation.same_stdout_as] != proc.stdout):
			raise RuntimeError(f"Output differs from that of \"{invocation.same_stdout_as}\": {invocation.display}")
		self._stdout[invocation.arguments] = proc.stdout
		# Error output is compared too.
		self._compare(invocation, "stdout", proc.stdout)
		self._compare(invocation, "stderr", proc.stderr)

invocations = Invocation.parse_listing("""
compute -s pure:lambda0=0.5 -x 0
compute -s pure:lambda0=1 -x 2
compute -s werner:z=0.25 -x 1.0
compute -s werner:z=0.25 -x 1.0 -F pretty
compute -s "general:a=0.01,0.1,0.22;b=0.1,0.03,0.5;c=0.1,0.02,0.2" -x 1.5 -f json
compute -s pure:lambda0=0.2 -x 1 --theta 0.3 -f csv
compute -s pure:lambda0=0.2 -x 1 --literal-postmeasure -f json -F indent=0
[2] compute -s pure:lambda0=abc -x 1
[2] compute -s werner:z=0.5 -x -1
[2] compute -s werner:z=0.5 -x 1 -f csv -F pretty
[3] compute -s pure:lambda0=1.5 -x 1
[3] compute -s "general:a=0,0,0;b=0,0,0;c=1,1,1" -x 1
""")

invocations += [ Invocation(f"sweep -s pure:lambda0=0.05 --x-max 6 -n 13 -f {report_format}") for report_format in ("text", "csv", "json") ]
invocations += Invocation.parse_listing("""
sweep -s werner:z=0.25 -n 25 -c x,delta_F,delta_D,cost -f csv
sweep -s pure:lambda0=0.2 -n 25 -j 1 -f csv
[2] sweep -s pure:lambda0=0.2 -c x,bogus
[2] sweep -s pure:lambda0=0.2 --x-min 3 --x-max 2

optimize -s pure:lambda0=1
optimize -s pure:lambda0=0.05 -f json
opt -s werner:z=0.25 -t 1e-7

scan -s pure:lambda0=0.5 -n 24 --x-min 0.25
scan -s pure:lambda0=0.02 -n 24 --x-min 0.25 -f json
scan -s pure:lambda0=0.5 -n 24 --x-min 0.25 -f csv
[2] scan -s pure:lambda0=0.5 --x-min 6 --x-max 1

[2] figure fig9
[2] unknowncommand
""")
invocations += [
	Invocation("sweep -s pure:lambda0=0.2 -n 25 -j 2 -f csv", same_stdout_as = "sweep -s pure:lambda0=0.2 -n 25 -j 1 -f csv"),
	Invocation("sweep -s pure:lambda0=0.2 -n 25 -f csv", environment = { "WEAKDISCORD_WORKERS": "2" }, same_stdout_as = "sweep -s pure:lambda0=0.2 -n 25 -j 1 -f csv"),
	Invocation(f"figure -d {FIGURE_DIRECTORY} fig3", produces = (f"{FIGURE_DIRECTORY}fig3_werner_z_0.25.csv", )),
	Invocation(f"figure -d {FIGURE_DIRECTORY} fig4", produces = (f"{FIGURE_DIRECTORY}fig4_general.csv", )),
]

parser = FriendlyArgumentParser(description = "Run the weakdiscord command line tool and verify exit codes and output against stored references.")
parser.add_argument("-c", "--no-coverage", action = "store_true", help = "Do not collect coverage information")
parser.add_argument("-i", "--interactive", action = "store_true", help = "Interactive query if output is acceptable")
parser.add_argument("-a", "--accept-all", action = "store_true", help = "When deviations from expected test output occur, just accept them")
args = parser.parse_args(sys.argv[1:])
checker = ReferenceChecker(args)
for invocation in invocations:
	checker.check(invocation)
