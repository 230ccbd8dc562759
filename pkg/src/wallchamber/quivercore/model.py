from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Tuple

from .quiver import Quiver
from ..exactgeom.linalg import (
    as_matrix,
    as_vec,
    dot,
    integer_kernel_generator,
    inverse,
    is_zero,
    mat_vec,
    matmul,
    transpose,
    vec_scale,
)
from ..exceptions import NotEuclidean
from ..utils.types import RatMatrix, RatVec


class DimClass(str, Enum):
    PREPROJECTIVE = "Preprojective"
    REGULAR = "Regular"
    PREINJECTIVE = "Preinjective"


@dataclass(frozen=True)
class HereditaryModel:
    """
    Exact data of the path algebra of a Euclidean quiver.

    The Euler form is <d, e> = d^T E e with E = I - A (A counts arrows i -> j); the projective P(i) is
    spanned by the paths starting at i, so the rows of E^{-1} are the dimension vectors dim P(i).
    """

    quiver: Quiver
    euler: RatMatrix
    proj_dims: Tuple[RatVec, ...]
    eta: RatVec
    g_eta: RatVec

    @property
    def n(self) -> int:
        return self.quiver.n

    def euler_form(self, d: Sequence, e: Sequence) -> Fraction:
        return dot(d, mat_vec(self.euler, e))

    def coxeter_matrix(self) -> RatMatrix:
        """Phi = -E^{-1} E^T, so that dim tau X = Phi dim X for every non-projective indecomposable X."""
        return tuple(vec_scale(-1, row) for row in matmul(inverse(self.euler), transpose(self.euler)))

    def tau_dim(self, d: Sequence) -> RatVec:
        return mat_vec(self.coxeter_matrix(), d)

    def tau_inverse_dim(self, d: Sequence) -> RatVec:
        return mat_vec(inverse(self.coxeter_matrix()), d)


def euler_matrix(quiver: Quiver) -> RatMatrix:
    arrows = quiver.arrow_matrix()
    return as_matrix(
        [[(1 if i == j else 0) - int(arrows[i, j]) for j in range(quiver.n)] for i in range(quiver.n)]
    )


def g_from_dim(model: HereditaryModel, d: Sequence) -> RatVec:
    """The g-vector g with sum_i g_i dim P(i) = d, i.e. g = E^T d."""
    return mat_vec(transpose(model.euler), as_vec(d))


def build_model(quiver: Quiver) -> HereditaryModel:
    if not quiver.is_acyclic():
        raise NotEuclidean(f"Quiver '{quiver}' has an oriented cycle; it is not a hereditary model.")
    euler = euler_matrix(quiver)
    symmetrized = tuple(tuple(a + b for a, b in zip(row, column)) for row, column in zip(euler, transpose(euler)))
    eta = integer_kernel_generator(symmetrized, quiver.n)
    if eta is None:
        raise NotEuclidean(f"The symmetrized Euler form of '{quiver}' does not have a radical of rank one.")
    if all(value <= 0 for value in eta):
        eta = vec_scale(-1, eta)
    if any(value <= 0 for value in eta):
        raise NotEuclidean(f"The radical of the Euler form of '{quiver}' has no positive generator (found {eta}).")

    proj_dims = inverse(euler)
    model = HereditaryModel(quiver=quiver, euler=euler, proj_dims=proj_dims, eta=eta, g_eta=())
    g_eta = g_from_dim(model, eta)
    return HereditaryModel(quiver=quiver, euler=euler, proj_dims=proj_dims, eta=eta, g_eta=g_eta)


def classify_dim(model: HereditaryModel, d: Sequence) -> DimClass:
    d = as_vec(d)
    if is_zero(d):
        raise ValueError("Cannot classify the zero dimension vector!")
    defect = dot(model.g_eta, d)
    if defect < 0:
        return DimClass.PREPROJECTIVE
    if defect > 0:
        return DimClass.PREINJECTIVE
    return DimClass.REGULAR

