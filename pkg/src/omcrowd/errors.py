"""Exception and warning types shared across the package."""

from __future__ import annotations


class OmcrowdError(Exception):
    """Base class for all package errors."""

    code = "Error"


class ParseError(OmcrowdError):
    """Malformed input document; carries a best-effort location."""

    code = "ParseError"

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", offset {offset}" if offset is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.offset = offset


class ValidationError(OmcrowdError):
    """A parsed value violates a structural invariant."""

    code = "ValidationError"


class UnsupportedRelation(OmcrowdError):
    """Alignment cell uses a relation other than equivalence."""

    code = "UnsupportedRelation"


class IncompatibleAlignments(OmcrowdError):
    """Two alignments do not bind the same ontology pair in the same orientation."""

    code = "IncompatibleAlignments"


class MissingLexicalForm(OmcrowdError):
    """An entity has no local name and no labels to compare."""

    code = "MissingLexicalForm"


class EmptySeedSource(OmcrowdError):
    """No non-disputed mappings exist, so positive seeds cannot be generated."""

    code = "EmptySeedSource"


class TrustUnavailable(OmcrowdError):
    """Task has no seed pairs; trust weighting must be disabled."""

    code = "TrustUnavailable"


class NoVotes(OmcrowdError):
    """No complete user has voted on the pair; it stays undecided."""

    code = "NoVotes"


class DanglingAssertion(OmcrowdError):
    """Assertion references an entity unknown to every network ontology."""

    code = "DanglingAssertion"


class NotFound(OmcrowdError):
    code = "NotFound"


class Forbidden(OmcrowdError):
    code = "Forbidden"


class Conflict(OmcrowdError):
    code = "Conflict"


class BadRequest(OmcrowdError):
    code = "BadRequest"


class TaskClosed(OmcrowdError):
    """Decisions are rejected because the task, dataset, or domain is closed."""

    code = "TaskClosed"


class InfeasibleSpec(OmcrowdError):
    """Synthetic domain spec asks for more mappings than entities allow."""

    code = "InfeasibleSpec"


class ShortfallWarning(UserWarning):
    """Negative-seed generation could not fill a difficulty class.

    Carries the achieved counts so callers can decide whether the realized
    balance is still acceptable.
    """

    def __init__(self, requested: int, achieved_trivial: int, achieved_nontrivial: int):
        self.requested = requested
        self.achieved_trivial = achieved_trivial
        self.achieved_nontrivial = achieved_nontrivial
        super().__init__(
            f"negative seed shortfall: requested {requested}, "
            f"achieved {achieved_trivial} trivial + {achieved_nontrivial} non-trivial"
        )
