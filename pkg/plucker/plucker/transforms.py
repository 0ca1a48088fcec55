"""
Structured GL(n,Z) transformations and their action on lattice matrices and
Plücker vectors.

A transform U acts on a k x n :class:`~plucker.models.LatticeMatrix` by right
multiplication, M -> M.U, so it is a column operation on the vectors
w_1..w_n. ``compose(a, b)`` is "a, then b" and has matrix A.B.
"""
from typing import Iterator, Sequence

from plucker.coordinates import signed_entry, subsets
from plucker.exceptions import DimensionError, PluckerValidationError
from plucker.helpers import (
    IntMatrix,
    determinant,
    identity_matrix,
    matmul,
    transpose,
    unimodular_inverse,
)
from plucker.models import (
    DESCRIPTOR,
    STAGE,
    Descriptor,
    LatticeMatrix,
    PluckerVector,
    Trace,
    UnimodularTransform,
)

MONOMIAL_KINDS = (
    DESCRIPTOR.ColumnSwap,
    DESCRIPTOR.SignFlip,
    DESCRIPTOR.Rotation,
    DESCRIPTOR.Permutation,
    DESCRIPTOR.DropToLast,
)


def _structured(n: int, kind: str, *params: int) -> UnimodularTransform:
    descriptor = Descriptor(kind, params)
    descriptor.check(n)
    return UnimodularTransform(n, descriptor.matrix(n), descriptor)


def elementary_subtract(n: int, s: int, t: int, q: int = 1) -> UnimodularTransform:
    """Replaces column w_s by w_s - q*w_t. With q=1 this is T_{s,t}."""
    return _structured(n, DESCRIPTOR.ElementarySubtract, s, t, q)


def column_swap(n: int, s: int, t: int) -> UnimodularTransform:
    return _structured(n, DESCRIPTOR.ColumnSwap, s, t)


def sign_flip(n: int, s: int) -> UnimodularTransform:
    return _structured(n, DESCRIPTOR.SignFlip, s)


def rotation_transform(n: int, i: int) -> UnimodularTransform:
    """
    Cyclic shift of the columns to (w_{i+1},..,w_n,-w_1,..,-w_i). The old
    entry p_{i,i+1} of a G(2,n) vector becomes the new p_{1,n}, and positive
    vectors stay positive.
    """
    return _structured(n, DESCRIPTOR.Rotation, i)


def permutation_transform(n: int, sigma: Sequence[int]) -> UnimodularTransform:
    """New column c is the old column ``sigma[c-1]``."""
    return _structured(n, DESCRIPTOR.Permutation, *sigma)


def drop_to_last(n: int, s: int) -> UnimodularTransform:
    """Moves column s to slot n, the other columns keep their relative order."""
    return _structured(n, DESCRIPTOR.DropToLast, s)


def identity(n: int) -> UnimodularTransform:
    return permutation_transform(n, range(1, n + 1))


def general_transform(matrix: IntMatrix) -> UnimodularTransform:
    """
    :raises NotUnimodularError: if the determinant is not ±1
    """
    return UnimodularTransform(len(matrix), matrix)


def pad(u: UnimodularTransform, n: int) -> UnimodularTransform:
    """
    Extends a transform of dimension m <= n by the identity on the trailing
    slots m+1..n. Descriptors are kept whenever the padded matrix still has
    one.
    """
    if u.n == n:
        return u
    if u.n > n:
        raise DimensionError(f"cannot pad a {u.n}x{u.n} transform to {n}x{n}")
    kind, params = u.descriptor.kind, u.descriptor.params
    trailing = tuple(range(u.n + 1, n + 1))
    if kind in (
        DESCRIPTOR.ElementarySubtract,
        DESCRIPTOR.ColumnSwap,
        DESCRIPTOR.SignFlip,
    ):
        return _structured(n, kind, *params)
    if kind in (DESCRIPTOR.Permutation, DESCRIPTOR.DropToLast):
        sources = tuple(source for source, _ in u.descriptor.columns(u.n))
        return permutation_transform(n, sources + trailing)
    rows = [list(row) + [0] * len(trailing) for row in u.matrix]
    rows += [list(row) for row in identity_matrix(n)[u.n :]]
    return general_transform(rows)


def compose(a: UnimodularTransform, b: UnimodularTransform) -> UnimodularTransform:
    """The transform applying a first and b second, with matrix A.B."""
    if a.n != b.n:
        raise DimensionError(f"cannot compose a {a.n}- and a {b.n}-transform")
    return general_transform(matmul(a.matrix, b.matrix))


def invert(a: UnimodularTransform) -> UnimodularTransform:
    kind, params = a.descriptor.kind, a.descriptor.params
    if kind == DESCRIPTOR.ElementarySubtract:
        s, t, q = params
        return elementary_subtract(a.n, s, t, -q)
    if kind in (DESCRIPTOR.ColumnSwap, DESCRIPTOR.SignFlip):
        return a
    if kind in MONOMIAL_KINDS:
        columns = a.descriptor.columns(a.n)
        if all(sign == 1 for _, sign in columns):
            inverse = [0] * a.n
            for column, (source, _) in enumerate(columns, start=1):
                inverse[source - 1] = column
            return permutation_transform(a.n, inverse)
        return general_transform(transpose(a.matrix))
    return general_transform(unimodular_inverse(a.matrix))


def apply_matrix(u: UnimodularTransform, m: LatticeMatrix) -> LatticeMatrix:
    if u.n != m.n:
        raise DimensionError(
            f"a {u.n}x{u.n} transform cannot act on a {m.k}x{m.n} matrix"
        )
    return LatticeMatrix(matmul(m.rows, u.matrix))


def _push_subtract(p: PluckerVector, s: int, t: int, q: int) -> PluckerVector:
    entries = []
    for indices, value in p.items():
        if s in indices and t not in indices:
            moved = tuple(t if index == s else index for index in indices)
            value -= q * signed_entry(p, moved)
        entries.append(value)
    return p.evolve(entries)


def _push_monomial(p: PluckerVector, descriptor: Descriptor) -> PluckerVector:
    columns = descriptor.columns(p.n)
    entries = []
    for indices in subsets(p.k, p.n):
        sign = 1
        for index in indices:
            sign *= columns[index - 1][1]
        sources = tuple(columns[index - 1][0] for index in indices)
        entries.append(sign * signed_entry(p, sources))
    return p.evolve(entries)


def _push_compound(p: PluckerVector, matrix: IntMatrix) -> PluckerVector:
    # p'_J = sum over I of det(U[I, J]) p_I
    targets = list(subsets(p.k, p.n))
    entries = [0] * len(targets)
    for rows, value in p.items():
        if not value:
            continue
        for position, columns in enumerate(targets):
            minor = tuple(
                tuple(matrix[r - 1][c - 1] for c in columns) for r in rows
            )
            entries[position] += determinant(minor) * value
    return p.evolve(entries)


def push_plucker(p: PluckerVector, u: UnimodularTransform) -> PluckerVector:
    """
    The Plücker vector of M.U for any matrix M with Plücker vector p.

    Elementary subtractions and signed permutations use their closed forms,
    general transforms the k-th compound matrix.
    """
    if u.n != p.n:
        raise DimensionError(
            f"a {u.n}x{u.n} transform cannot act on a vector of G({p.k},{p.n})"
        )
    kind = u.descriptor.kind
    if kind == DESCRIPTOR.ElementarySubtract:
        return _push_subtract(p, *u.descriptor.params)
    if kind in MONOMIAL_KINDS:
        return _push_monomial(p, u.descriptor)
    return _push_compound(p, u.matrix)


def restrict(p: PluckerVector) -> PluckerVector:
    """
    Reads off the G(k,n-1) vector of the entries not containing n, once the
    last column is zero.

    :raises PluckerValidationError: if an entry containing n is nonzero
    """
    if p.n == p.k:
        raise DimensionError(f"G({p.k},{p.n}) has no coordinate left to drop")
    kept = []
    for indices, value in p.items():
        if indices[-1] != p.n:
            kept.append(value)
        elif value:
            raise PluckerValidationError(
                f"coordinate {p.n} is not zero: entry {indices} is {value}"
            )
    return PluckerVector(p.k, p.n - 1, kept)


def composed(trace: Trace) -> UnimodularTransform:
    """Product of every step of the trace, each padded to n_initial."""
    total = identity_matrix(trace.n_initial)
    for step in trace.steps:
        total = matmul(total, pad(step.transform, trace.n_initial).matrix)
    return general_transform(total)


def replay(trace: Trace, p: PluckerVector) -> Iterator[PluckerVector]:
    """
    Pushes p through the trace, yielding the vector after every step. After
    a CoordinateDrop the vector is restricted to the lower dimension.
    """
    if (p.k, p.n) != (trace.k, trace.n_initial):
        raise DimensionError(
            f"trace of G({trace.k},{trace.n_initial}) cannot replay a vector "
            f"of G({p.k},{p.n})"
        )
    for step in trace.steps:
        p = push_plucker(p, step.transform)
        if step.stage_label == STAGE.CoordinateDrop:
            p = restrict(p)
        yield p
