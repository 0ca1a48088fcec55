"""
This module defines the value types used by the Plücker algorithms.

Every type is an immutable ``attrs`` class, so values can be shared between
threads and runs freely. Integer matrices are stored as tuples of tuples of
Python integers, which keeps arbitrary precision everywhere.
"""
from itertools import combinations
from typing import Iterator, Optional, Sequence, Tuple

import attr
from model_utils import Choices

from plucker.exceptions import (
    DimensionError,
    IncompleteTraceError,
    NotUnimodularError,
    PluckerValidationError,
)
from plucker.helpers import (
    IntMatrix,
    as_int_matrix,
    binomial,
    determinant,
    identity_matrix,
    lex_position,
)


class PluckerChoices(Choices):
    """A subclass to give a readable representation of the choices"""

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(key for key, _ in self)})"


STAGE = PluckerChoices(
    "Positivize",
    "MaxSelectRotate",
    "MaxSubtract",
    "MinSubtract",
    "DimReductionEuclid",
    "DimReductionJP",
    "CoordinateDrop",
    "Swap",
)
"""Labels of the trace steps, one per stage of the algorithms."""

DESCRIPTOR = PluckerChoices(
    "ElementarySubtract",
    "ColumnSwap",
    "SignFlip",
    "Rotation",
    "Permutation",
    "DropToLast",
    "General",
)
"""Kinds of :class:`Descriptor`."""

ALGORITHM = PluckerChoices("mee", "minee")
PARITY = PluckerChoices("even", "odd")
FORMAT = PluckerChoices("json", "text")


def _int_tuple(values) -> Tuple[int, ...]:
    return tuple(int(value) for value in values)


@attr.s(frozen=True, slots=True)
class SubsetIndex:
    """
    A strictly increasing k-tuple of 1-based column indices of {1..n}.
    """

    indices = attr.ib(converter=_int_tuple)
    n = attr.ib(converter=int)

    def __attrs_post_init__(self):
        if not self.indices:
            raise PluckerValidationError("a subset index needs at least one index")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise PluckerValidationError(
                f"subset {self.indices} is not strictly increasing"
            )
        if self.indices[0] < 1 or self.indices[-1] > self.n:
            raise PluckerValidationError(
                f"subset {self.indices} is out of the range 1..{self.n}"
            )

    @property
    def k(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __getitem__(self, slot):
        return self.indices[slot]


@attr.s(frozen=True, slots=True)
class PluckerVector:
    """
    The C(n,k) Plücker coordinates of an element of G(k,n), in lexicographic
    order of the k-subsets of {1..n}.

    For k=2 the vector is the upper triangle of the skew matrix
    p_{i,j} = -p_{j,i}; see :func:`plucker.coordinates.skew_matrix`.
    """

    k = attr.ib(converter=int)
    n = attr.ib(converter=int)
    entries = attr.ib(converter=_int_tuple)

    def __attrs_post_init__(self):
        if self.k < 1:
            raise DimensionError(f"k must be at least 1, got {self.k}")
        if self.n < self.k:
            raise DimensionError(f"n={self.n} is smaller than k={self.k}")
        expected = binomial(self.n, self.k)
        if len(self.entries) != expected:
            raise DimensionError(
                f"G({self.k},{self.n}) needs {expected} coordinates, "
                f"got {len(self.entries)}"
            )
        if not any(self.entries):
            raise PluckerValidationError("the Plücker vector is identically zero")

    def __getitem__(self, indices: Sequence[int]) -> int:
        """Entry at a strictly increasing index tuple."""
        return self.entries[lex_position(tuple(indices), self.n)]

    def items(self) -> Iterator[Tuple[Tuple[int, ...], int]]:
        return zip(combinations(range(1, self.n + 1), self.k), self.entries)

    def evolve(self, entries) -> "PluckerVector":
        return PluckerVector(self.k, self.n, entries)


@attr.s(frozen=True, slots=True)
class LatticeMatrix:
    """
    A k x n integer matrix. Rows are the spanning vectors v_1..v_k, columns
    are the vectors w_1..w_n of their i-th coordinates.
    """

    rows = attr.ib(converter=as_int_matrix)

    def __attrs_post_init__(self):
        if not self.rows or not self.rows[0]:
            raise PluckerValidationError("a lattice matrix needs at least one entry")
        if any(len(row) != len(self.rows[0]) for row in self.rows):
            raise PluckerValidationError("all rows must have the same length")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def columns(self, indices: Sequence[int]) -> IntMatrix:
        """The k x len(indices) submatrix of the given 1-based columns."""
        return tuple(tuple(row[index - 1] for index in indices) for row in self.rows)


@attr.s(frozen=True, slots=True)
class Descriptor:
    """
    Structured description of a unimodular transform.

    ``params`` are, by kind:

    * ``ElementarySubtract``: (s, t, q), column w_s becomes w_s - q*w_t
    * ``ColumnSwap``: (s, t)
    * ``SignFlip``: (s,)
    * ``Rotation``: (i,), columns become (w_{i+1},..,w_n,-w_1,..,-w_i)
    * ``Permutation``: (sigma_1,..,sigma_n), new column c is old column sigma_c
    * ``DropToLast``: (s,), old column s moves to slot n, order kept otherwise
    * ``General``: ()
    """

    kind = attr.ib()
    params = attr.ib(converter=_int_tuple, default=())

    @kind.validator
    def _check_kind(self, attribute, value):
        if value not in DESCRIPTOR:
            raise PluckerValidationError(f"unknown transform descriptor {value!r}")

    @property
    def structured(self) -> bool:
        return self.kind != DESCRIPTOR.General

    def columns(self, n: int) -> Optional[Tuple[Tuple[int, int], ...]]:
        """
        For signed-permutation kinds, the (source column, sign) pair of each
        new column. ``None`` for the other kinds.
        """
        kind, params = self.kind, self.params
        if kind == DESCRIPTOR.ColumnSwap:
            s, t = params
            swap = {s: t, t: s}
            return tuple((swap.get(c, c), 1) for c in range(1, n + 1))
        elif kind == DESCRIPTOR.SignFlip:
            (s,) = params
            return tuple((c, -1 if c == s else 1) for c in range(1, n + 1))
        elif kind == DESCRIPTOR.Rotation:
            (i,) = params
            return tuple(
                (i + c, 1) if c <= n - i else (c - (n - i), -1)
                for c in range(1, n + 1)
            )
        elif kind == DESCRIPTOR.Permutation:
            return tuple((source, 1) for source in params)
        elif kind == DESCRIPTOR.DropToLast:
            (s,) = params
            order = [c for c in range(1, n + 1) if c != s] + [s]
            return tuple((source, 1) for source in order)
        return None

    def check(self, n: int):
        """Validates the parameters against the ambient dimension n."""
        kind, params = self.kind, self.params
        arity = {
            DESCRIPTOR.ElementarySubtract: 3,
            DESCRIPTOR.ColumnSwap: 2,
            DESCRIPTOR.SignFlip: 1,
            DESCRIPTOR.Rotation: 1,
            DESCRIPTOR.DropToLast: 1,
            DESCRIPTOR.General: 0,
        }
        if kind == DESCRIPTOR.Permutation:
            if sorted(params) != list(range(1, n + 1)):
                raise PluckerValidationError(
                    f"{params} is not a permutation of 1..{n}"
                )
            return
        if len(params) != arity[kind]:
            raise PluckerValidationError(
                f"{kind} takes {arity[kind]} parameters, got {params}"
            )
        if kind == DESCRIPTOR.Rotation:
            if not 1 <= params[0] <= n - 1:
                raise PluckerValidationError(
                    f"rotation index {params[0]} is out of the range 1..{n - 1}"
                )
            return
        slots = params[:2]
        if any(not 1 <= slot <= n for slot in slots):
            raise PluckerValidationError(f"{kind}{params} is out of the range 1..{n}")
        if kind in (DESCRIPTOR.ElementarySubtract, DESCRIPTOR.ColumnSwap):
            if slots[0] == slots[1]:
                raise PluckerValidationError(f"{kind} needs two distinct columns")

    def matrix(self, n: int) -> Optional[IntMatrix]:
        """The n x n matrix regenerated from the descriptor, for structured kinds."""
        if self.kind == DESCRIPTOR.General:
            return None
        if self.kind == DESCRIPTOR.ElementarySubtract:
            s, t, q = self.params
            rows = [list(row) for row in identity_matrix(n)]
            rows[t - 1][s - 1] = -q
            return as_int_matrix(rows)
        rows = [[0] * n for _ in range(n)]
        for column, (source, sign) in enumerate(self.columns(n)):
            rows[source - 1][column] = sign
        return as_int_matrix(rows)


@attr.s(frozen=True, slots=True)
class UnimodularTransform:
    """
    An n x n integer matrix U of determinant ±1 acting on the columns of a
    k x n lattice matrix M by right multiplication, M -> M.U.

    Structured transforms must regenerate their matrix from the descriptor,
    general ones have their determinant checked.
    """

    n = attr.ib(converter=int)
    matrix = attr.ib(converter=as_int_matrix)
    descriptor = attr.ib(factory=lambda: Descriptor(DESCRIPTOR.General))

    def __attrs_post_init__(self):
        if len(self.matrix) != self.n or any(len(row) != self.n for row in self.matrix):
            raise DimensionError(f"transform matrix must be {self.n}x{self.n}")
        self.descriptor.check(self.n)
        if self.descriptor.structured:
            if self.descriptor.matrix(self.n) != self.matrix:
                raise PluckerValidationError(
                    f"matrix does not match descriptor {self.descriptor.kind}"
                    f"{self.descriptor.params}"
                )
        elif abs(determinant(self.matrix)) != 1:
            raise NotUnimodularError("transform matrix is not unimodular")


@attr.s(frozen=True, slots=True)
class TraceStep:
    transform = attr.ib()
    stage_label = attr.ib()
    ambient_n = attr.ib(converter=int)

    @stage_label.validator
    def _check_label(self, attribute, value):
        if value not in STAGE:
            raise PluckerValidationError(f"unknown stage label {value!r}")

    def __attrs_post_init__(self):
        if self.transform.n != self.ambient_n:
            raise DimensionError(
                f"step recorded at n={self.ambient_n} carries a "
                f"{self.transform.n}x{self.transform.n} transform"
            )
        if (
            self.stage_label == STAGE.CoordinateDrop
            and self.transform.descriptor.kind != DESCRIPTOR.DropToLast
        ):
            raise PluckerValidationError("CoordinateDrop steps must be DropToLast")


@attr.s(frozen=True, slots=True)
class Trace:
    """
    The continued-fraction sequence of a run: every GL(n,Z) transformation
    applied, each recorded at the ambient dimension of its step. A
    CoordinateDrop step moves the excluded coordinate to the last slot and
    the steps after it live one dimension lower.
    """

    k = attr.ib(converter=int)
    n_initial = attr.ib(converter=int)
    steps = attr.ib(converter=tuple, default=())
    terminal_p_hat = attr.ib(default=None)

    def __attrs_post_init__(self):
        if self.n_initial < self.k:
            raise DimensionError(f"n={self.n_initial} is smaller than k={self.k}")
        if self.terminal_p_hat is not None and self.current_n != self.k:
            raise IncompleteTraceError(
                "a terminal coordinate is only defined once n has dropped to k"
            )

    @property
    def current_n(self) -> int:
        """Ambient dimension after the last step, assuming a validated sequence."""
        if not self.steps:
            return self.n_initial
        last = self.steps[-1]
        return last.ambient_n - int(last.stage_label == STAGE.CoordinateDrop)

    @property
    def drop_count(self) -> int:
        return self.n_initial - self.current_n

    @property
    def is_complete(self) -> bool:
        return self.terminal_p_hat is not None

    def validate(self):
        """
        Checks the dimension bookkeeping of every step: each step lives at the
        dimension left by the previous one and no drop goes below k.
        """
        self._check_sequence(self.n_initial, self.steps)
        if self.terminal_p_hat is not None and self.current_n != self.k:
            raise IncompleteTraceError(
                f"a complete trace needs {self.n_initial - self.k} coordinate "
                f"drops, found {self.drop_count}"
            )

    def _check_sequence(self, current: int, steps: Sequence[TraceStep]) -> int:
        for position, step in enumerate(steps):
            if step.ambient_n != current:
                raise DimensionError(
                    f"step {position} is recorded at n={step.ambient_n}, "
                    f"expected n={current}"
                )
            if step.stage_label == STAGE.CoordinateDrop:
                current -= 1
                if current < self.k:
                    raise DimensionError("coordinate drops went below n=k")
        return current

    def extend(self, steps: Sequence[TraceStep]) -> "Trace":
        """New trace with ``steps`` appended, only the new steps are checked."""
        if self.is_complete:
            raise IncompleteTraceError("cannot extend a finished trace")
        steps = tuple(steps)
        self._check_sequence(self.current_n, steps)
        return attr.evolve(self, steps=self.steps + steps)

    def finish(self, p_hat: int) -> "Trace":
        if self.current_n != self.k:
            raise IncompleteTraceError(
                f"a complete trace needs {self.n_initial - self.k} coordinate "
                f"drops, found {self.drop_count}"
            )
        return attr.evolve(self, terminal_p_hat=int(p_hat))
