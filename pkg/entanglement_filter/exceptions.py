"""
Exception hierarchy for entanglement-filter.

Precondition failures raise ContractViolationError (also a ValueError so
callers that only know about ValueError still catch it). Outcomes that are
physically meaningful rather than programming mistakes get their own types so
the CLI can map them to distinct exit codes.
"""


class EntanglementFilterError(Exception):
    """Base class for all package errors"""


class ContractViolationError(EntanglementFilterError, ValueError):
    """An operation was called outside its documented preconditions"""


class InvalidRunConfigError(ContractViolationError):
    """A CLI input that only turns out invalid once settings defaults are merged in"""


class FilterAnnihilatesStateError(EntanglementFilterError):
    """The filter outcome has (numerically) zero probability"""

    def __init__(self, success_prob: float):
        self.success_prob = success_prob
        super().__init__(
            f"filter annihilates state (success probability {success_prob:.3e})"
        )


class NeverEntangledError(EntanglementFilterError):
    """The chosen pair has zero concurrence before any noise acts"""


class NoDeathFoundError(EntanglementFilterError):
    """Concurrence is still positive at the end of the search horizon"""

    def __init__(self, horizon: float, concurrence: float):
        self.horizon = horizon
        self.concurrence = concurrence
        super().__init__(
            f"no death found: concurrence {concurrence:.6g} at gamma_t={horizon:g}"
        )


__all__ = [
    "EntanglementFilterError",
    "ContractViolationError",
    "InvalidRunConfigError",
    "FilterAnnihilatesStateError",
    "NeverEntangledError",
    "NoDeathFoundError",
]
