"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the CLI can emit
structured diagnostics without parsing messages.
"""


class RacklabError(Exception):
    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        return {"code": self.code, "message": str(self), "details": self.details}


class MalformedInputError(RacklabError, ValueError):
    code = "malformed_input"


class CapExceededError(RacklabError):
    """A configured size cap was hit.  ``partial`` holds whatever was built."""

    code = "cap_exceeded"

    def __init__(self, message, cap=None, partial=None, **details):
        super().__init__(message, cap=cap, **details)
        self.cap = cap
        self.partial = partial


class NotClosedError(RacklabError, ValueError):
    code = "not_closed"


class HypothesisError(RacklabError, ValueError):
    """An operation's mathematical precondition does not hold."""

    code = "hypothesis_violated"


class NotALatticeError(RacklabError, ValueError):
    code = "not_a_lattice"


class InvariantViolation(RacklabError):
    code = "invariant_violation"
