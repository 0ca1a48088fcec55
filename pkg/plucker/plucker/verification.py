"""
Independent re-checking of a trace document against its input vector.

The checks work on the validated JSON data rather than on the value types,
so that a corrupted trace is reported as a failed check instead of being
rejected while it is read.
"""
from typing import List, Optional, Sequence

import attr

from plucker.coordinates import compute_plucker, plucker_gcd
from plucker.exceptions import DimensionError, PluckerValidationError
from plucker.helpers import Logger, as_int_matrix, determinant
from plucker.models import (
    STAGE,
    Descriptor,
    LatticeMatrix,
    PluckerVector,
    Trace,
    TraceStep,
    UnimodularTransform,
)
from plucker.reconstruct import assemble
from plucker.transforms import replay

logger = Logger(__name__)


@attr.s(frozen=True, slots=True)
class Check:
    name = attr.ib()
    passed = attr.ib()
    detail = attr.ib(default="")


@attr.s(frozen=True, slots=True)
class VerificationReport:
    checks = attr.ib(converter=tuple)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def lines(self) -> List[str]:
        return [
            f"{'PASS' if check.passed else 'FAIL'} {check.name}"
            + (f": {check.detail}" if check.detail else "")
            for check in self.checks
        ]


def _failures(positions: Sequence[int]) -> str:
    shown = ", ".join(str(position) for position in positions[:10])
    more = f" and {len(positions) - 10} more" if len(positions) > 10 else ""
    return f"steps {shown}{more}"


def _transforms(steps):
    """UnimodularTransform per step, None where the matrix is not unimodular."""
    transforms, singular, mismatched = [], [], []
    for position, step in enumerate(steps):
        n = step["ambient_n"]
        matrix = as_int_matrix(step["transform"]["matrix"])
        if len(matrix) != n or any(len(row) != n for row in matrix):
            singular.append(position)
            transforms.append(None)
            continue
        if abs(determinant(matrix)) != 1:
            singular.append(position)
            transforms.append(None)
            continue
        transform = UnimodularTransform(n, matrix)
        data = step["transform"].get("descriptor")
        if data is not None:
            try:
                descriptor = Descriptor(data["kind"], data.get("params", ()))
                descriptor.check(n)
                if descriptor.structured and descriptor.matrix(n) != matrix:
                    raise PluckerValidationError("descriptor does not match")
            except (PluckerValidationError, ValueError):
                mismatched.append(position)
            else:
                transform = UnimodularTransform(n, matrix, descriptor)
        transforms.append(transform)
    return transforms, singular, mismatched


def _bookkeeping(k: int, n: int, steps) -> Optional[str]:
    current = n
    for position, step in enumerate(steps):
        if step["ambient_n"] != current:
            return f"step {position} is at n={step['ambient_n']}, expected {current}"
        if step["stage_label"] == STAGE.CoordinateDrop:
            current -= 1
    if current != k:
        return f"{n - current} coordinate drops, expected {n - k}"
    return None


def _replay(p: PluckerVector, trace: Trace) -> Optional[str]:
    # position ends at the index of the step that raised
    position = 0
    try:
        for position, p in enumerate(replay(trace, p), start=1):
            pass
    except PluckerValidationError as e:
        return f"step {position}: {e}"
    if p.entries[0] != trace.terminal_p_hat:
        claimed = trace.terminal_p_hat
        return f"replay ends at {p.entries[0]}, the trace claims {claimed}"
    return None


def verify(
    trace_data: dict, p: PluckerVector, result_data: Optional[dict] = None
) -> VerificationReport:
    """
    Re-checks a validated trace document (``TraceSerializer`` data) against
    the vector it was computed from: the dimension bookkeeping, that every
    matrix is unimodular and matches its descriptor, that pushing p through
    the matrices drops only zero columns and ends at p_hat, that |p_hat| is
    the gcd of p, and that the reconstruction realizes p.

    :raises DimensionError: if the trace and the vector disagree on k or n
    """
    k, n = trace_data["k"], trace_data["n_initial"]
    if (k, n) != (p.k, p.n):
        raise DimensionError(
            f"trace of G({k},{n}) does not fit a vector of G({p.k},{p.n})"
        )
    steps = trace_data["steps"]
    p_hat = trace_data.get("terminal_p_hat")
    checks = []

    problem = _bookkeeping(k, n, steps)
    checks.append(Check("dimensions", problem is None, problem or ""))
    transforms, singular, mismatched = _transforms(steps)
    checks.append(
        Check("unimodular", not singular, _failures(singular) if singular else "")
    )
    checks.append(
        Check(
            "descriptors", not mismatched, _failures(mismatched) if mismatched else ""
        )
    )
    checks.append(Check("complete", p_hat is not None))
    replayable = problem is None and not singular and p_hat is not None
    if replayable:
        try:
            trace = (
                Trace(k, n)
                .extend(
                    TraceStep(transform, step["stage_label"], step["ambient_n"])
                    for step, transform in zip(steps, transforms)
                )
                .finish(p_hat)
            )
        except PluckerValidationError as e:
            problem = str(e)
        else:
            problem = _replay(p, trace)
        checks.append(Check("pushforward", problem is None, problem or ""))
        replayable = problem is None
    else:
        checks.append(Check("pushforward", False, "skipped after earlier failures"))
    gcd = plucker_gcd(p)
    checks.append(
        Check(
            "gcd",
            p_hat is not None and abs(p_hat) == gcd,
            f"|p_hat| = {abs(p_hat) if p_hat is not None else '-'}, gcd = {gcd}",
        )
    )
    if replayable:
        try:
            matrix = assemble(trace, p).matrix
        except PluckerValidationError as e:
            checks.append(Check("reconstruction", False, str(e)))
        else:
            realized = compute_plucker(matrix).entries == p.entries
            checks.append(Check("reconstruction", realized))
    else:
        checks.append(Check("reconstruction", False, "skipped after earlier failures"))
    if result_data is not None:
        checks.append(_check_result(result_data, p, p_hat, gcd))
    report = VerificationReport(checks)
    logger.info(f"verification of G({k},{n}) trace: {report.passed}")
    return report


def _check_result(result_data: dict, p: PluckerVector, p_hat, gcd) -> Check:
    try:
        matrix = LatticeMatrix(result_data["matrix"]["rows"])
        realized = compute_plucker(matrix).entries == p.entries
    except PluckerValidationError as e:
        return Check("result", False, str(e))
    if not realized:
        return Check("result", False, "the result matrix does not realize the input")
    if result_data["p_hat"] != p_hat or result_data["sublattice_index"] != gcd:
        return Check("result", False, "p_hat or index differ from the trace")
    return Check("result", True)
