"""
Exception hierarchy for the verification engine.

Every error carries a ``detail`` payload (string or dict) that the CLI
copies into its log line and, for usage errors, into the exit message.
"""
from typing import Any, Optional, Union


class EngineError(Exception):
    """Base class for all engine errors."""

    def __init__(self, detail: Union[str, dict], *, context: Optional[dict] = None):
        self.detail = detail
        self.context = context or {}
        super().__init__(detail if isinstance(detail, str) else detail.get("error", str(detail)))

    def as_dict(self) -> dict:
        payload: dict[str, Any] = {"type": type(self).__name__}
        if isinstance(self.detail, dict):
            payload.update(self.detail)
        else:
            payload["error"] = self.detail
        if self.context:
            payload["context"] = self.context
        return payload


class ParameterError(EngineError, ValueError):
    """Invalid user-facing input: parameters, subsets, intervals, indices."""


class LatticeError(EngineError, ArithmeticError):
    """A q-exponent fell off the 1/L lattice. Internal assertion."""


class PoleError(EngineError, ZeroDivisionError):
    """Division by zero or evaluation at a pole of a rational function."""


class ArityError(EngineError, ValueError):
    """Tensor operands with different arity or slot layout."""


class DomainError(EngineError, ValueError):
    """Operand outside the domain of an operation."""


class NotClaimedError(EngineError):
    """The inputs do not satisfy the hypotheses under which a relation is claimed."""
