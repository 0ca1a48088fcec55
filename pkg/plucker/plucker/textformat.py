"""
Plain text forms of matrices, Plücker vectors and traces.

Matrices are whitespace separated rows, one per line. Plücker vectors are
written ``k n : e_0 e_1 .. e_{N-1}`` and may span several lines. ``#``
starts a comment in both.
"""
import re
from typing import List

from plucker.exceptions import PluckerValidationError
from plucker.helpers import IntMatrix
from plucker.models import LatticeMatrix, PluckerVector, Trace

COMMENT = re.compile(r"#.*$", re.MULTILINE)


def _integers(words: List[str], where: str) -> List[int]:
    try:
        return [int(word) for word in words]
    except ValueError:
        raise PluckerValidationError(f"{where} contains a non-integer value")


def _strip(text: str) -> str:
    return COMMENT.sub("", text)


def parse_matrix(text: str) -> LatticeMatrix:
    """
    :raises PluckerValidationError: on non-integer values, ragged rows or an
        empty matrix
    """
    rows = []
    for number, line in enumerate(_strip(text).splitlines(), start=1):
        words = line.split()
        if words:
            rows.append(_integers(words, f"line {number}"))
    if not rows:
        raise PluckerValidationError("the matrix is empty")
    for number, row in enumerate(rows[1:], start=2):
        if len(row) != len(rows[0]):
            raise PluckerValidationError(
                f"row {number} has {len(row)} entries, row 1 has {len(rows[0])}"
            )
    return LatticeMatrix(rows)


def parse_plucker(text: str) -> PluckerVector:
    """
    :raises PluckerValidationError: if the text is not ``k n : entries`` or
        the entries do not fit G(k,n)
    """
    head, colon, tail = _strip(text).partition(":")
    if not colon:
        raise PluckerValidationError("expected 'k n : entries'")
    dimensions = _integers(head.split(), "the header")
    if len(dimensions) != 2:
        raise PluckerValidationError("the header must be 'k n'")
    k, n = dimensions
    return PluckerVector(k, n, _integers(tail.split(), "the coordinates"))


def format_rows(rows: IntMatrix) -> str:
    widths = [max(len(str(row[c])) for row in rows) for c in range(len(rows[0]))]
    return "\n".join(
        " ".join(str(value).rjust(width) for value, width in zip(row, widths))
        for row in rows
    )


def format_matrix(matrix: LatticeMatrix) -> str:
    return format_rows(matrix.rows) + "\n"


def format_plucker(p: PluckerVector) -> str:
    return f"{p.k} {p.n} : " + " ".join(str(value) for value in p.entries) + "\n"


def format_trace(trace: Trace) -> str:
    lines = [f"# trace of G({trace.k},{trace.n_initial}), {len(trace.steps)} steps"]
    for position, step in enumerate(trace.steps, start=1):
        descriptor = step.transform.descriptor
        params = ",".join(str(value) for value in descriptor.params)
        lines.append(
            f"{position:>5} {step.stage_label:<18} n={step.ambient_n} "
            f"{descriptor.kind}({params})"
        )
    if trace.is_complete:
        lines.append(f"p_hat = {trace.terminal_p_hat}")
    return "\n".join(lines) + "\n"
