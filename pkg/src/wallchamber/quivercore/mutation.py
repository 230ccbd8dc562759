from typing import Tuple

import numpy as np


def _check_vertex(exchange_matrix: np.ndarray, k: int) -> None:
    n = exchange_matrix.shape[0]
    if not (1 <= k <= n):
        raise ValueError(f"Mutation vertex k={k} is out of range 1..{n}!")


def check_exchange_matrix(exchange_matrix) -> np.ndarray:
    matrix = np.array(exchange_matrix, dtype=int)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Exchange matrix must be square; got shape {matrix.shape}!")
    if not np.array_equal(matrix, -matrix.T):
        raise ValueError("Exchange matrix must be skew-symmetric!")
    return matrix


def fz_mutate(exchange_matrix: np.ndarray, k: int) -> np.ndarray:
    """
    Fomin-Zelevinsky mutation of a skew-symmetric exchange matrix at the vertex k (1-based).

    b'_ij = -b_ij if i = k or j = k, and b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2 otherwise.
    """
    matrix = check_exchange_matrix(exchange_matrix)
    _check_vertex(matrix, k)
    index = k - 1
    column, row = matrix[:, index], matrix[index, :]
    mutated = matrix + (np.outer(np.abs(column), row) + np.outer(column, np.abs(row))) // 2
    mutated[index, :] = -matrix[index, :]
    mutated[:, index] = -matrix[:, index]
    return mutated


def a_matrices(exchange_matrix: np.ndarray, k: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    The transport matrices (A_k^+, A_k^-) at the vertex k (1-based).

    Both agree with the identity outside row k; there the diagonal entry is -1 and the off-diagonal
    entries are max(b_kj, 0) for A_k^+ and max(-b_kj, 0) for A_k^-. Each squares to the identity.
    """
    matrix = check_exchange_matrix(exchange_matrix)
    _check_vertex(matrix, k)
    index = k - 1
    n = matrix.shape[0]
    a_plus = np.eye(n, dtype=int)
    a_minus = np.eye(n, dtype=int)
    a_plus[index, :] = np.maximum(matrix[index, :], 0)
    a_minus[index, :] = np.maximum(-matrix[index, :], 0)
    a_plus[index, index] = -1
    a_minus[index, index] = -1
    return a_plus, a_minus
