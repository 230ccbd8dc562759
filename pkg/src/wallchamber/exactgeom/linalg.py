"""Exact rational linear algebra on tuples of Fractions, computed with sympy."""
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

import sympy as sp

from ..utils.types import RatMatrix, RatVec


class AffineSolution(NamedTuple):
    particular: RatVec
    kernel_basis: Tuple[RatVec, ...]


def as_vec(values: Iterable) -> RatVec:
    return tuple(Fraction(value) for value in values)


def as_matrix(rows: Iterable[Iterable]) -> RatMatrix:
    return tuple(as_vec(row) for row in rows)


def zero_vector(n: int) -> RatVec:
    return (Fraction(0),) * n


def unit_vector(n: int, index: int) -> RatVec:
    """Standard basis vector e_index in R^n (0-based index)."""
    return tuple(Fraction(1 if k == index else 0) for k in range(n))


def is_zero(vector: Sequence) -> bool:
    return all(value == 0 for value in vector)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"Cannot pair vectors of lengths {len(u)} and {len(v)}!")
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def vec_add(u: Sequence, v: Sequence) -> RatVec:
    return tuple(Fraction(a) + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> RatVec:
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def vec_scale(c, u: Sequence) -> RatVec:
    return tuple(Fraction(c) * a for a in u)


def vec_sum(vectors: Iterable[Sequence], n: int) -> RatVec:
    total = zero_vector(n)
    for vector in vectors:
        total = vec_add(total, vector)
    return total


def identity(n: int) -> RatMatrix:
    return tuple(unit_vector(n, i) for i in range(n))


def transpose(matrix: Sequence[Sequence]) -> RatMatrix:
    return tuple(as_vec(column) for column in zip(*matrix))


def mat_vec(matrix: Sequence[Sequence], vector: Sequence) -> RatVec:
    return tuple(dot(row, vector) for row in matrix)


def vec_mat(vector: Sequence, matrix: Sequence[Sequence]) -> RatVec:
    """Row vector times matrix, i.e. (v^T M)^T."""
    return mat_vec(transpose(matrix), vector)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> RatMatrix:
    columns = transpose(b)
    return tuple(tuple(dot(row, column) for column in columns) for row in a)


def to_sympy(rows: Sequence[Sequence], ncols: int) -> sp.Matrix:
    """Exact sympy matrix with Rational entries; ncols fixes the shape when rows is empty."""
    entries = [sp.Rational(value.numerator, value.denominator) for row in rows for value in as_vec(row)]
    if len(entries) != len(rows) * ncols:
        raise ValueError(f"Matrix rows do not all have {ncols} entries!")
    return sp.Matrix(len(rows), ncols, entries)


def from_sympy(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def rref(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Tuple[RatMatrix, Tuple[int, ...]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return (), ()
    reduced, pivots = to_sympy(rows, ncols).rref()
    return tuple(tuple(from_sympy(value) for value in reduced.row(i)) for i in range(len(pivots))), tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    if not rows:
        return 0
    return to_sympy(rows, ncols if ncols is not None else len(rows[0])).rank()


def nullspace(rows: Sequence[Sequence], ncols: int) -> Tuple[RatVec, ...]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column."""
    if not rows:
        return identity(ncols)
    return tuple(tuple(from_sympy(value) for value in column) for column in to_sympy(rows, ncols).nullspace())


def solve_affine(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[AffineSolution]:
    """
    Solve A x = b exactly.

    Returns None when the system is infeasible; otherwise the solution set is
    particular + span(kernel_basis), with free variables set to zero in the particular solution.
    """
    rows = as_matrix(matrix)
    rhs = as_vec(rhs)
    if len(rows) != len(rhs):
        raise ValueError(f"Matrix has {len(rows)} rows but the right-hand side has {len(rhs)} entries!")
    if rows and len({len(row) for row in rows}) != 1:
        raise ValueError("Matrix rows have inconsistent lengths!")
    if not rows:
        raise ValueError("Cannot infer the number of unknowns from an empty matrix; pass at least one row.")
    ncols = len(rows[0])
    augmented = [row + (value,) for row, value in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    particular = [Fraction(0)] * ncols
    for row, pivot in zip(reduced, pivots):
        particular[pivot] = row[ncols]
    return AffineSolution(particular=tuple(particular), kernel_basis=nullspace(rows, ncols))


def inverse(matrix: Sequence[Sequence]) -> RatMatrix:
    n = len(matrix)
    square = to_sympy(matrix, n)
    if square.rank() < n:
        raise ValueError("Matrix is singular!")
    inverted = square.inv()
    return tuple(tuple(from_sympy(value) for value in inverted.row(i)) for i in range(n))


def primitive(vector: Sequence) -> RatVec:
    """Positive rescaling of a nonzero rational vector to a primitive integer vector."""
    vector = as_vec(vector)
    if is_zero(vector):
        return vector
    denominator = lcm(*(value.denominator for value in vector))
    integers = [int(value * denominator) for value in vector]
    divisor = gcd(*integers)
    return tuple(Fraction(value // divisor) for value in integers)


def canonical_basis(vectors: Sequence[Sequence], ncols: int) -> Tuple[RatVec, ...]:
    """Row-reduced basis of span(vectors), each row rescaled to a primitive integer vector."""
    if not vectors:
        return ()
    reduced, _ = rref(vectors, ncols)
    return tuple(primitive(row) for row in reduced)


def project_out(vector: Sequence, basis: Sequence[Sequence]) -> RatVec:
    """Orthogonal projection of vector onto the complement of span(basis)."""
    vector = as_vec(vector)
    basis = [row for row in canonical_basis(basis, len(vector))]
    if not basis:
        return vector
    gram = [[dot(a, b) for b in basis] for a in basis]
    solution = solve_affine(gram, [dot(a, vector) for a in basis])
    coefficients = solution.particular
    return vec_sub(vector, vec_sum((vec_scale(c, row) for c, row in zip(coefficients, basis)), len(vector)))


def integer_kernel_generator(rows: Sequence[Sequence], ncols: int) -> Optional[RatVec]:
    """The primitive integer generator of a one-dimensional kernel, or None when the kernel has another rank."""
    basis = nullspace(rows, ncols)
    if len(basis) != 1:
        return None
    return primitive(basis[0])


def lex_sign(values: Sequence) -> int:
    """Sign of the first nonzero entry (0 when all vanish)."""
    for value in values:
        if value > 0:
            return 1
        if value < 0:
            return -1
    return 0
