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
import logging
import textwrap
import argparse
import dataclasses
from .FriendlyArgumentParser import FriendlyArgumentParser
from .Exceptions import UsageException

HELP_OPTIONS = ( "-h", "--help" )

def match_unique_prefix(value: str, options: set[str]) -> str:
	if value in options:
		return value
	candidates = sorted(option for option in options if option.startswith(value))
	if len(candidates) == 0:
		raise UsageException(f"'{value}' did not match any command.")
	elif len(candidates) > 1:
		raise UsageException(f"'{value}' is ambiguous. Please clarify further. Available: {', '.join(candidates)}")
	return candidates[0]

@dataclasses.dataclass(frozen = True, slots = True)
class Subcommand():
	name: str
	description: str
	parser: FriendlyArgumentParser
	action: type
	aliases: tuple[str]

	@property
	def label(self) -> str:
		if len(self.aliases) == 0:
			return self.name
		return f"{self.name} ({', '.join(self.aliases)})"

class MultiCommand():
	"""Dispatches the first command line word to one of several registered
	subcommands. Unique prefixes of command names and aliases are accepted."""

	def __init__(self, description: str | None = None, trailing_text: str | None = None):
		self._description = description
		self._trailing_text = trailing_text
		self._commands = { }
		self._aliases = { }

	@property
	def names(self) -> set[str]:
		return set(self._commands) | set(self._aliases)

	def register(self, name: str, description: str, parser_generator: callable, action: type, aliases: list[str] | None = None):
		aliases = tuple(aliases or [ ])
		for new_name in (name, ) + aliases:
			if new_name in self.names:
				raise ValueError(f"Command or alias '{new_name}' already registered.")
		self._aliases.update({ alias: name for alias in aliases })

		parser = FriendlyArgumentParser(prog = f"{sys.argv[0]} {name}", description = description, add_help = False)
		parser_generator(parser)
		parser.add_argument("--help", action = "help", help = "Show this help page.")
		self._commands[name] = Subcommand(name = name, description = description, parser = parser, action = action, aliases = aliases)

	def _print_usage(self, f):
		print(f"usage: {sys.argv[0]} [command] [options]", file = f)
		print(file = f)
		if self._description is not None:
			print(self._description, file = f)
			print(file = f)
		print("Available commands:", file = f)
		for command in self._commands.values():
			label = command.label
			for description_line in textwrap.wrap(command.description, width = 52):
				print(f"    {label:<19s}    {description_line}", file = f)
				label = ""
		print(file = f)
		if self._trailing_text is not None:
			print(self._trailing_text, file = f)
			print(file = f)
		print("Options vary from command to command. To receive further info, type", file = f)
		print(f"    {sys.argv[0]} [command] --help", file = f)

	def _usage_error(self, msg: str):
		print(f"Error: {msg}", file = sys.stderr)
		self._print_usage(sys.stderr)
		sys.exit(2)

	def resolve(self, word: str) -> Subcommand | None:
		"""Returns the subcommand a command line word selects, None for a help
		request."""
		try:
			name = match_unique_prefix(word, self.names | set(HELP_OPTIONS))
		except UsageException as e:
			self._usage_error(f"Invalid command supplied: {e}")
		if name in HELP_OPTIONS:
			return None
		return self._commands[self._aliases.get(name, name)]

	def run(self, cmdline: list[str]) -> int | None:
		if len(cmdline) == 0:
			self._usage_error("No command supplied.")
		command = self.resolve(cmdline[0])
		if command is None:
			self._print_usage(sys.stdout)
			return 0
		args = command.parser.parse_args(cmdline[1:])
		return command.action(self, command.name, args).run()

class BaseAction():
	def __init__(self, multi_command: MultiCommand, cmd: str, args: argparse.Namespace):
		self._multi_command = multi_command
		self._cmd = cmd
		self._args = args

	@property
	def cmd(self) -> str:
		return self._cmd

	@property
	def args(self) -> argparse.Namespace:
		return self._args

	def run(self) -> int | None:
		raise NotImplementedError(self.__class__.__name__)

class LoggingAction(BaseAction):
	"""-v enables INFO, -vv DEBUG. numpy and scipy runtime warnings are routed
	through the same handler."""
	_LOG_LEVELS = ( logging.WARNING, logging.INFO, logging.DEBUG )

	def __init__(self, multi_command: MultiCommand, cmd: str, args: argparse.Namespace):
		super().__init__(multi_command, cmd, args)
		loglevel = self._LOG_LEVELS[min(self.args.verbose, len(self._LOG_LEVELS) - 1)]
		logging.basicConfig(format = "{name:>20s} [{levelname:.1s}]: {message}", style = "{", level = loglevel, stream = sys.stderr)
		logging.captureWarnings(True)
