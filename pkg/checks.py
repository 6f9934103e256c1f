"""
Helpers that turn an exact comparison into a CheckReport.

A check body returns None when every claimed identity holds and a witness
dict otherwise. NotClaimedError inside the body becomes status "skipped";
other engine errors become "fail" with the error as witness. ParameterError
and LatticeError propagate to the CLI exit codes.
"""
import logging
import time
from typing import Callable, Iterable, Optional, Tuple

from errors import EngineError, LatticeError, NotClaimedError, ParameterError
from schemas import CheckReport, Witness

logger = logging.getLogger(__name__)

WitnessDict = Optional[dict]


def first_mismatch(pairs: Iterable[Tuple[str, object, object]]) -> WitnessDict:
    """Compare (label, left, right) pairs in order; witness of the first mismatch."""
    for label, left, right in pairs:
        witness = left.first_difference(right)
        if witness is not None:
            witness["term"] = f"{label}: {witness['term']}"
            return witness
    return None


def is_zero_witness(label: str, value) -> WitnessDict:
    """Witness that ``value`` (an element or tensor) is nonzero."""
    return first_mismatch([(label, value, value.scalar_like(0))])


def scalar_witness(label: str, left, right) -> WitnessDict:
    if left == right:
        return None
    return {"term": label, "left": str(left), "right": str(right)}


def engine_witness(exc: EngineError) -> dict:
    """Witness for an identity that broke by raising instead of comparing unequal."""
    payload = exc.as_dict()
    return {"term": payload.pop("type"), "left": str(payload.pop("error", exc)), "right": str(payload) if payload else "expected no error"}


def run_check(name: str, anchor: str, params: dict, body: Callable[[], WitnessDict]) -> CheckReport:
    module = name.split(".", 1)[0]
    start = time.perf_counter()
    reason = None
    try:
        witness = body()
        status = "pass" if witness is None else "fail"
    except NotClaimedError as exc:
        witness, status, reason = None, "skipped", str(exc)
    except (ParameterError, LatticeError):
        raise
    except EngineError as exc:
        witness, status = engine_witness(exc), "fail"
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    if status == "fail":
        logger.info("FAIL %s %s: %s", name, params, witness.get("term"))
    else:
        logger.debug("%s %s %s (%d ms)", status, name, params, elapsed_ms)
    return CheckReport(
        name=name,
        module=module,
        paper_anchor=anchor,
        params=params,
        status=status,
        witness=Witness(**witness) if witness else None,
        reason=reason,
        elapsed_ms=elapsed_ms,
    )
