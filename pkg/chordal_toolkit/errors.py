"""
Exception hierarchy shared by the library and the CLI.

Every error carries a stable ``code`` so the command line can report it as
JSON without inspecting the class.
"""

from typing import Any, Dict, Optional


class ToolkitError(Exception):
    code = "toolkit-error"

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness or {}

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"error": self.code, "message": self.message}
        if self.witness:
            payload["witness"] = self.witness
        return payload


class InvalidArgumentError(ToolkitError, ValueError):
    code = "invalid-argument"


class NotChordalError(ToolkitError):
    code = "not-chordal"


class IllegitimateWeightingError(ToolkitError):
    code = "illegitimate-weighting"


class DisconnectedError(ToolkitError):
    code = "disconnected"


class NoPathError(ToolkitError):
    code = "no-path"


class TooLargeError(ToolkitError):
    code = "too-large"


class GenerationFailedError(ToolkitError):
    code = "generation-failed"


class LemmaViolationError(ToolkitError):
    """Raised when a structural law fails on a concrete instance.

    On valid chordal inputs this never fires; the witness dict is what a
    failing verification run prints.
    """
    code = "lemma-violation"
