"""Fox-calculus twisted cohomology and character Jacobian ranks.

The free differential calculus follows the left product rule
``d(uv) = du + u dv`` with ``dg/dg = 1`` and ``dg^-1/dg = -g^-1``,
evaluated through a representation or through its adjoint action on
trace-zero matrices.  Stacking the adjoint-evaluated derivatives of the
relators gives the cocycle condition as a linear system; its rank
yields dim Z^1, and dim B^1 comes from the adjoint invariants (H^0).
The reported H^1 is a tangent-space value used only for lower-bound
certifications.

Character Jacobians are complex central differences of a trace vector
along the trace-zero tangent directions of the parameter matrices
(perturbations ``M exp(h X)`` stay special linear exactly).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import expm

from .matreps import MatrixRep
from .ranks import RankResult, matrix_rank
from .words import Word

H1_REL_THRESHOLD = 1e-7
JACOBIAN_REL_THRESHOLD = 1e-6


def sl_basis(n: int) -> list[np.ndarray]:
    """A basis of the trace-zero matrices: off-diagonal units E_ij, then
    the diagonal differences E_ii - E_(i+1)(i+1)."""
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                E = np.zeros((n, n), dtype=complex)
                E[i, j] = 1.0
                basis.append(E)
    for i in range(n - 1):
        D = np.zeros((n, n), dtype=complex)
        D[i, i] = 1.0
        D[i + 1, i + 1] = -1.0
        basis.append(D)
    return basis


def sl_coords(X: np.ndarray) -> np.ndarray:
    """Coordinates of a trace-zero matrix in :func:`sl_basis` order."""
    n = X.shape[0]
    coords = [X[i, j] for i in range(n) for j in range(n) if i != j]
    prefix = 0j
    for i in range(n - 1):
        prefix += X[i, i]
        coords.append(prefix)
    return np.array(coords)


def adjoint_matrix(M: np.ndarray) -> np.ndarray:
    """Matrix of X -> M X M^-1 on trace-zero matrices, in sl_basis coordinates."""
    n = M.shape[0]
    M_inv = np.linalg.inv(M)
    cols = [sl_coords(M @ B @ M_inv) for B in sl_basis(n)]
    return np.column_stack(cols)


def fox_derivative(
    r: Word, g: int | str, rep: MatrixRep, adjoint: bool = False
) -> np.ndarray:
    """The Fox derivative of ``r`` by generator ``g``, evaluated through
    ``rep`` (dimension n) or through its adjoint (dimension n^2 - 1)."""
    if isinstance(g, str):
        g = rep.presentation.alphabet.index(g)
    if adjoint:
        pos = [adjoint_matrix(A) for A in rep.images]
        neg = [np.linalg.inv(P) for P in pos]
        dim = rep.n * rep.n - 1
    else:
        pos = list(rep.images)
        neg = [np.linalg.inv(A) for A in pos]
        dim = rep.n
    deriv = np.zeros((dim, dim), dtype=complex)
    prefix = np.eye(dim, dtype=complex)
    for gen, step in r.letters():
        letter = pos[gen] if step > 0 else neg[gen]
        if gen == g:
            if step > 0:
                deriv += prefix
            else:
                deriv -= prefix @ letter
        prefix = prefix @ letter
    return deriv


def fox_matrix(rep: MatrixRep, adjoint: bool = True) -> np.ndarray:
    """Stacked Fox derivatives of all relators by all generators: one
    (n^2-1)-square block per (relator, generator) pair."""
    dim = rep.n * rep.n - 1 if adjoint else rep.n
    relators = rep.presentation.relators
    gens = rep.presentation.num_generators
    J = np.zeros((len(relators) * dim, gens * dim), dtype=complex)
    for a, r in enumerate(relators):
        for b in range(gens):
            J[a * dim : (a + 1) * dim, b * dim : (b + 1) * dim] = fox_derivative(
                r, b, rep, adjoint=adjoint
            )
    return J


@dataclass(frozen=True)
class DimReport:
    """Twisted-cohomology dimensions at a representation, with the rank
    diagnostics behind them.  ``flagged`` means some rank decision had no
    clear singular-value gap and the numbers should not be trusted."""

    dim_z1: int
    dim_b1: int
    dim_h0: int
    dim_h1: int
    cocycle_rank: RankResult
    invariant_rank: RankResult

    @property
    def flagged(self) -> bool:
        return not (self.cocycle_rank.clear and self.invariant_rank.clear)

    def to_dict(self) -> dict:
        return {
            "dim_Z1": self.dim_z1,
            "dim_B1": self.dim_b1,
            "dim_H0": self.dim_h0,
            "dim_H1": self.dim_h1,
            "flagged": self.flagged,
            "cocycle_rank": self.cocycle_rank.to_dict(),
            "invariant_rank": self.invariant_rank.to_dict(),
        }


def h1_dimension(rep: MatrixRep) -> DimReport:
    """Cocycle, coboundary, and H^1 dimensions with adjoint coefficients.

    dim Z^1 = (#generators)(n^2-1) - rank(Fox matrix); dim H^0 is the
    nullity of the stacked adjoint-invariance system; dim B^1 =
    (n^2-1) - dim H^0; dim H^1 = dim Z^1 - dim B^1.
    """
    n = rep.n
    d = n * n - 1
    gens = rep.presentation.num_generators

    J = fox_matrix(rep, adjoint=True)
    cocycle_rank = matrix_rank(J, H1_REL_THRESHOLD)
    dim_z1 = gens * d - cocycle_rank.rank

    eye = np.eye(d)
    invariance = np.vstack([adjoint_matrix(A) - eye for A in rep.images])
    invariant_rank = matrix_rank(invariance, H1_REL_THRESHOLD)
    dim_h0 = d - invariant_rank.rank

    dim_b1 = d - dim_h0
    dim_h1 = dim_z1 - dim_b1
    if dim_h1 < 0:
        raise ValueError("negative H^1 dimension; rank thresholds are inconsistent")
    return DimReport(dim_z1, dim_b1, dim_h0, dim_h1, cocycle_rank, invariant_rank)


@dataclass(frozen=True)
class JacobianRank:
    rank: int
    step: float
    detail: RankResult

    def to_dict(self) -> dict:
        return {"rank": self.rank, "step": self.step, "detail": self.detail.to_dict()}


def character_jacobian_rank(
    char_fn: Callable[[Sequence[np.ndarray]], np.ndarray],
    base: Sequence[np.ndarray],
    step: float = 1e-5,
    rel_threshold: float = JACOBIAN_REL_THRESHOLD,
) -> JacobianRank:
    """Numeric rank of the Jacobian of a trace vector in the parameters.

    ``char_fn`` maps the parameter matrices to a complex trace vector.
    Each parameter matrix contributes one column per trace-zero basis
    direction X via the central difference of ``M exp(step X)`` against
    ``M exp(-step X)``; the determinant constraint is thereby respected
    exactly.  The rank is complex (columns are complex derivatives of
    polynomial trace functions).
    """
    columns = []
    base = [np.asarray(M, dtype=complex) for M in base]
    for t, M in enumerate(base):
        for X in sl_basis(M.shape[0]):
            plus = list(base)
            minus = list(base)
            plus[t] = M @ expm(step * X)
            minus[t] = M @ expm(-step * X)
            col = (np.asarray(char_fn(plus)) - np.asarray(char_fn(minus))) / (2.0 * step)
            columns.append(col)
    J = np.column_stack(columns)
    detail = matrix_rank(J, rel_threshold)
    return JacobianRank(detail.rank, step, detail)
