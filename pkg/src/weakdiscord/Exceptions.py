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

class WeakDiscordException(Exception): pass

class UsageException(WeakDiscordException): pass

class SpecParseException(UsageException):
	def __init__(self, msg: str, text: str, position: int):
		super().__init__(f"{msg} at position {position}: {text[:position]}>>>{text[position:]}")
		self.text = text
		self.position = position

class UnphysicalStateException(WeakDiscordException): pass
class NonHermitianException(UnphysicalStateException): pass
class TraceException(UnphysicalStateException): pass
class NegativityException(UnphysicalStateException): pass
class ParameterRangeException(UnphysicalStateException): pass

class NumericContractException(WeakDiscordException): pass
class InvalidDimensionException(NumericContractException): pass
class ContractViolationException(NumericContractException): pass
class NotPositiveSemidefiniteException(NumericContractException): pass
class DegenerateOutcomeException(NumericContractException): pass
