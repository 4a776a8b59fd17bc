"""Complex matrix representations of presented groups.

Evaluation, relation verification, direct sums, abelian twists, the
determinant-balanced twisted direct sum, restriction to a subgroup,
conjugate (twisted) representations on parent words, and the induced
representation as a block matrix over a coset transversal.

All arithmetic is complex double precision.  Relation residuals are
Frobenius norms ``||rho(r) - I||``; a representation of dimension n is
accepted at tolerance ``tol`` for n <= 4 and ``tol * n`` above that
(error growth is linear in dimension at these scales).
"""

from __future__ import annotations

import json
from typing import Sequence

import numpy as np

from .presentations import Presentation
from .schreier import SubgroupPresentation
from .words import Word, conjugate, exponent_sum, generator

DEFAULT_TOL = 1e-9
_INVERTIBILITY_FLOOR = 1e-12


def effective_tol(tol: float, n: int) -> float:
    return tol if n <= 4 else tol * n


class MatrixRep:
    """Invertible matrix images for each generator of a presentation.

    Relators are verified at construction (pass ``check=False`` to
    defer, e.g. for deliberately broken inputs in tests).
    """

    def __init__(
        self,
        presentation: Presentation,
        images: Sequence[np.ndarray],
        tol: float = DEFAULT_TOL,
        check: bool = True,
    ):
        if len(images) != presentation.num_generators:
            raise ValueError("one matrix per generator required")
        mats = []
        for M in images:
            A = np.array(M, dtype=complex)
            if A.ndim != 2 or A.shape[0] != A.shape[1]:
                raise ValueError("generator images must be square matrices")
            if not np.all(np.isfinite(A)):
                raise ValueError("non-finite entries in generator image")
            A.setflags(write=False)
            mats.append(A)
        dims = {A.shape[0] for A in mats}
        if len(dims) != 1:
            raise ValueError("generator images have mixed dimensions")
        self.presentation = presentation
        self.images = tuple(mats)
        self.n = mats[0].shape[0]
        self.tol = tol
        for A in self.images:
            if abs(np.linalg.det(A)) <= _INVERTIBILITY_FLOOR:
                raise ValueError("generator image is numerically singular")
        self._inverses = tuple(np.linalg.inv(A) for A in self.images)
        if check:
            residual = verify_relations(self)
            if residual > effective_tol(tol, self.n):
                raise ValueError(
                    f"relation residual {residual:.3e} exceeds tolerance "
                    f"{effective_tol(tol, self.n):.3e}"
                )

    def eval(self, w: Word) -> np.ndarray:
        if w.alphabet != self.presentation.alphabet:
            raise ValueError("word over a different alphabet")
        out = np.eye(self.n, dtype=complex)
        for gen, exp in w.syllables:
            base = self.images[gen] if exp > 0 else self._inverses[gen]
            out = out @ np.linalg.matrix_power(base, abs(exp))
        return out

    def trace(self, w: Word) -> complex:
        return complex(np.trace(self.eval(w)))

    def to_dict(self) -> dict:
        return {
            "presentation": self.presentation.to_dict(),
            "n": self.n,
            "tol": self.tol,
            "images": {
                name: _matrix_to_json(A)
                for name, A in zip(self.presentation.alphabet.names, self.images)
            },
        }

    @classmethod
    def from_dict(cls, data: dict, check: bool = True) -> "MatrixRep":
        pres = Presentation.from_dict(data["presentation"])
        images = [
            _matrix_from_json(data["images"][name]) for name in pres.alphabet.names
        ]
        return cls(pres, images, tol=float(data.get("tol", DEFAULT_TOL)), check=check)

    def save(self, path) -> None:
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)
            f.write("\n")

    @classmethod
    def load(cls, path, check: bool = True) -> "MatrixRep":
        with open(path) as f:
            return cls.from_dict(json.load(f), check=check)


def _matrix_to_json(A: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in A]


def _matrix_from_json(rows: list) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows])


def verify_relations(rep: MatrixRep) -> float:
    """Max Frobenius residual ||rho(r) - I|| over the relators."""
    ident = np.eye(rep.n)
    residual = 0.0
    for r in rep.presentation.relators:
        residual = max(residual, float(np.linalg.norm(rep.eval(r) - ident)))
    return residual


def direct_sum(reps: Sequence[MatrixRep]) -> MatrixRep:
    if not reps:
        raise ValueError("direct_sum needs at least one representation")
    pres = reps[0].presentation
    if any(r.presentation != pres for r in reps):
        raise ValueError("direct summands are over different presentations")
    n = sum(r.n for r in reps)
    images = []
    for g in range(pres.num_generators):
        M = np.zeros((n, n), dtype=complex)
        off = 0
        for r in reps:
            M[off : off + r.n, off : off + r.n] = r.images[g]
            off += r.n
        images.append(M)
    return MatrixRep(pres, images, tol=max(r.tol for r in reps))


def abelian_twist(rep: MatrixRep, lam: complex, exponent: int = 1) -> MatrixRep:
    """Tensor with the abelian character lam^(exponent * phi).

    phi is the meridional exponent sum, so each generator image is
    scaled by lam**exponent (generators are meridians, phi = 1).
    Requires every generator of the alphabet to be meridional.
    """
    if lam == 0:
        raise ValueError("twist parameter must be nonzero")
    alphabet = rep.presentation.alphabet
    scales = []
    for g in range(len(alphabet)):
        phi = exponent_sum(generator(alphabet, g))  # raises on non-meridional
        scales.append(lam ** (exponent * phi))
    images = [c * A for c, A in zip(scales, rep.images)]
    return MatrixRep(rep.presentation, images, tol=rep.tol)


def phi_direct_sum(reps: Sequence[MatrixRep], lambdas: Sequence[complex]) -> MatrixRep:
    """Determinant-balanced twisted direct sum.

    With summand dimensions p_1..p_l and parameters lambda_1..lambda_(l-1),
    the first l-1 summands are twisted by lambda_i^(p_l * phi) and the
    last by (lambda_1^-p_1 ... lambda_(l-1)^-p_(l-1))^phi, so the result
    stays special linear whenever each input is.
    """
    reps = list(reps)
    if len(lambdas) != len(reps) - 1:
        raise ValueError("need one lambda per summand except the last")
    for r in reps:
        for A in r.images:
            if abs(np.linalg.det(A) - 1.0) > effective_tol(1e-8, r.n):
                raise ValueError("phi_direct_sum requires special-linear inputs")
    dims = [r.n for r in reps]
    p_last = dims[-1]
    twisted = [abelian_twist(r, lam, p_last) for r, lam in zip(reps[:-1], lambdas)]
    balance = complex(np.prod([lam ** (-p) for lam, p in zip(lambdas, dims[:-1])]))
    twisted.append(abelian_twist(reps[-1], balance, 1))
    return direct_sum(twisted)


def conjugated(rep: MatrixRep, P: np.ndarray) -> MatrixRep:
    """The equivalent representation P rho P^-1."""
    P_inv = np.linalg.inv(P)
    return MatrixRep(rep.presentation, [P @ A @ P_inv for A in rep.images], tol=rep.tol)


class ParentWordRep:
    """Evaluate a subgroup representation on parent-alphabet words.

    Plain restriction sends x to rep(rewrite(x)); with a twist word g
    the evaluation is x -> rep(rewrite(g^-1 x g)), the conjugate
    representation of the conjugated subgroup, so the input must land in
    the subgroup after conjugation.
    """

    def __init__(self, rep: MatrixRep, sub: SubgroupPresentation, twist: Word | None = None):
        if rep.presentation.alphabet != sub.alphabet:
            raise ValueError("representation is not over the subgroup's generators")
        self.rep = rep
        self.sub = sub
        self.twist = twist
        self.n = rep.n

    def eval(self, w: Word) -> np.ndarray:
        if self.twist is not None:
            w = conjugate(w, self.twist)
        return self.rep.eval(self.sub.rewrite(w))

    def trace(self, w: Word) -> complex:
        return complex(np.trace(self.eval(w)))


def conjugate_rep(rep: MatrixRep, sub: SubgroupPresentation, g: Word) -> ParentWordRep:
    return ParentWordRep(rep, sub, twist=g)


def restrict(rep: MatrixRep, sub: SubgroupPresentation) -> MatrixRep:
    """Restriction of a parent representation to the subgroup generators."""
    if rep.presentation.alphabet != sub.parent.alphabet:
        raise ValueError("representation is not over the subgroup's parent")
    images = [rep.eval(g.expansion) for g in sub.generators]
    return MatrixRep(sub.presentation, images, tol=rep.tol)


def induce(alpha: MatrixRep, sub: SubgroupPresentation, tol: float | None = None) -> MatrixRep:
    """The induced representation as a k x k grid of m x m blocks.

    Block layout is coset-major over the table's transversal ``t_1..t_k``
    (ordered basis ``t_1 e_1 .. t_1 e_m, .., t_k e_1 .. t_k e_m``): for a
    parent generator g, block (j, i) is alpha(rewrite(h)) where
    ``g t_i = t_j h``, all other blocks zero.  The result is verified
    against the parent relators, and its generator determinants obey
    det = 1 for even m and det = sign of the coset permutation for odd m.
    """
    if alpha.presentation.alphabet != sub.alphabet:
        raise ValueError("representation is not over the subgroup's generators")
    tbl = sub.table
    m, k = alpha.n, tbl.k
    n = m * k
    parent = sub.parent
    images = []
    for g in range(parent.num_generators):
        M = np.zeros((n, n), dtype=complex)
        for i in range(k):
            j, h = tbl.factorize(g, i)
            M[j * m : (j + 1) * m, i * m : (i + 1) * m] = alpha.eval(sub.rewrite(h))
        images.append(M)
    rep = MatrixRep(parent, images, tol=tol if tol is not None else alpha.tol)
    for g in range(parent.num_generators):
        expected = 1.0 if m % 2 == 0 else float(_coset_sign(tbl, g))
        det = np.linalg.det(rep.images[g])
        if abs(det - expected) > effective_tol(1e-8, n):
            raise ValueError("induced determinant law violated; inputs are inconsistent")
    return rep


def _coset_sign(tbl, g: int) -> int:
    from .cosets import Permutation

    return Permutation(tuple(tbl.left_action[g])).sign()


def block(M: np.ndarray, i: int, j: int, m: int) -> np.ndarray:
    """The (i, j) block of an m-blocked matrix (0-based block indices)."""
    return M[i * m : (i + 1) * m, j * m : (j + 1) * m]


def random_sl(m: int, seed) -> np.ndarray:
    """A seeded random element of SL(m, C).

    Entries have real and imaginary parts uniform in [-1, 1]; the matrix
    is rescaled by the principal m-th root of its determinant.  Draws
    with |det| < 1e-8 are rejected and resampled (hard failure after 100
    attempts).  ``seed`` may be an integer or a numpy Generator, and
    identical seeds give identical matrices.
    """
    if m < 1:
        raise ValueError("dimension must be positive")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for _ in range(100):
        M = rng.uniform(-1.0, 1.0, (m, m)) + 1j * rng.uniform(-1.0, 1.0, (m, m))
        det = complex(np.linalg.det(M))
        if abs(det) < 1e-8:
            continue
        return M / np.exp(np.log(det) / m)
    raise RuntimeError("determinant rejection sampling failed 100 times")
