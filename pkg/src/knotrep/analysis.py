"""Characters, equivalence tests, and irreducibility certificates.

Characters are sampled on a finite, reproducible word set: every
reduced word up to a small deterministic length plus seeded random
words.  Two certificates of irreducibility are provided and used
together: the commutant dimension (Schur: equals 1 for irreducibles,
and conversely for semisimples) and the dimension of the matrix algebra
spanned by the image (Burnside: reaching n^2 certifies irreducibility
unconditionally).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .matreps import MatrixRep, ParentWordRep, induce
from .ranks import matrix_rank
from .schreier import SubgroupPresentation
from .words import Alphabet, Word, conjugate, reduce

RANK_REL_THRESHOLD = 1e-8


def reduced_words_up_to(alphabet: Alphabet, max_len: int) -> list[Word]:
    """All freely reduced words of letter length <= max_len, shortest first."""
    words = [Word(alphabet)]
    letters = [(g, s) for g in range(len(alphabet)) for s in (1, -1)]
    level: list[tuple[tuple[tuple[int, int], ...], tuple[int, int] | None]] = [((), None)]
    for _ in range(max_len):
        nxt = []
        for seq, last in level:
            for gen, step in letters:
                if last is not None and last == (gen, -step):
                    continue
                seq2 = seq + ((gen, step),)
                nxt.append((seq2, (gen, step)))
                words.append(reduce(alphabet, seq2))
        level = nxt
    return words


@dataclass(frozen=True)
class WordSample:
    """A reproducible character-sampling word set.

    Deterministic part: all reduced words of length <= det_len.  Random
    part: rand_count seeded words of length <= rand_max_len.  When a
    membership oracle is supplied at build time, both parts are filtered
    through it (rejection sampling for the random part) and ``tag``
    records what was filtered.
    """

    alphabet: Alphabet
    det_len: int
    rand_count: int
    rand_max_len: int
    seed: int
    tag: str | None
    words: tuple[Word, ...] = field(repr=False)

    @classmethod
    def build(
        cls,
        alphabet: Alphabet,
        det_len: int = 3,
        rand_count: int = 50,
        rand_max_len: int = 12,
        seed: int = 0,
        member: Callable[[Word], bool] | None = None,
        tag: str | None = None,
    ) -> "WordSample":
        picked: dict[Word, None] = {}
        for w in reduced_words_up_to(alphabet, det_len):
            if member is None or member(w):
                picked.setdefault(w)
        rng = np.random.default_rng(seed)
        r2 = 2 * len(alphabet)
        needed = rand_count
        attempts = 0
        max_attempts = max(1000, 400 * rand_count)
        while needed > 0 and attempts < max_attempts:
            attempts += 1
            length = int(rng.integers(1, rand_max_len + 1))
            seq: list[tuple[int, int]] = []
            prev = None
            for _ in range(length):
                if prev is None:
                    idx = int(rng.integers(0, r2))
                else:
                    idx = int(rng.integers(0, r2 - 1))
                    if idx >= (prev ^ 1):
                        idx += 1
                seq.append((idx // 2, 1 if idx % 2 == 0 else -1))
                prev = idx
            w = reduce(alphabet, seq)
            if member is not None and not member(w):
                continue
            if w not in picked:
                picked.setdefault(w)
                needed -= 1
        if needed > 0:
            raise ValueError("could not sample enough words satisfying the membership oracle")
        return cls(alphabet, det_len, rand_count, rand_max_len, seed, tag, tuple(picked))

    def descriptor(self) -> dict:
        return {
            "det_len": self.det_len,
            "rand_count": self.rand_count,
            "rand_max_len": self.rand_max_len,
            "seed": self.seed,
            "tag": self.tag,
            "size": len(self.words),
        }


@dataclass(frozen=True)
class TraceVector:
    """A character sample: matched lists of words and their traces."""

    words: tuple[Word, ...]
    traces: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.words) != len(self.traces):
            raise ValueError("words and traces differ in length")


def character(rep, sample: WordSample) -> TraceVector:
    """Traces of ``rep`` over the sample; ``rep`` needs only an eval method."""
    traces = tuple(complex(np.trace(rep.eval(w))) for w in sample.words)
    return TraceVector(sample.words, traces)


def character_distance(c1: TraceVector, c2: TraceVector) -> float:
    if c1.words != c2.words:
        raise ValueError("trace vectors are over different word samples")
    if not c1.traces:
        return 0.0
    return max(abs(a - b) for a, b in zip(c1.traces, c2.traces))


def characters_equal(c1: TraceVector, c2: TraceVector, tol: float) -> bool:
    return character_distance(c1, c2) <= tol


def commutant_dimension(rep: MatrixRep) -> int:
    """Dimension of {X : X rho(g) = rho(g) X for all generators}.

    Computed as the nullity of the stacked linear system, singular
    values thresholded at 1e-8 relative.  Equals 1 exactly when the
    Schur condition holds.
    """
    n = rep.n
    eye = np.eye(n)
    rows = []
    for A in rep.images:
        rows.append(np.kron(eye, A.T) - np.kron(A, eye))
    system = np.vstack(rows)
    return n * n - matrix_rank(system, RANK_REL_THRESHOLD).rank


def algebra_dimension(rep: MatrixRep, max_len: int) -> int:
    """Dimension of the span of {rho(w) : |w| <= max_len}.

    Burnside certificate: the value n^2 certifies irreducibility with no
    semisimplicity hypothesis.  Words are enumerated breadth first with
    incremental products; the span's rank is tracked through compressed
    SVD passes and enumeration stops early once it saturates at n^2
    (the reported value is unaffected: the span grows monotonically).
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    n = rep.n
    target = n * n
    letters = []
    for g in range(rep.presentation.num_generators):
        letters.append(rep.images[g])
        letters.append(rep._inverses[g])

    # Compressed row-space tracking: replacing accumulated rows by
    # sigma-scaled right singular vectors preserves the Gram matrix, so
    # singular values of the running stack are exact.
    basis = np.zeros((0, target), dtype=complex)
    sigma_max = 0.0
    rank = 0
    pending: list[np.ndarray] = [np.eye(n, dtype=complex).reshape(-1)]

    def flush(basis, sigma_max):
        stacked = np.vstack([basis, np.asarray(pending)])
        _, svals, vh = np.linalg.svd(stacked, full_matrices=False)
        sigma_max = max(sigma_max, float(svals[0]))
        keep = svals > 1e-14 * sigma_max
        basis = svals[keep, None] * vh[keep]
        rank = int(np.sum(svals > RANK_REL_THRESHOLD * sigma_max))
        return basis, sigma_max, rank

    frontier: list[tuple[int, np.ndarray]] = [(-1, np.eye(n, dtype=complex))]
    for _ in range(max_len):
        nxt = []
        for last, P in frontier:
            for idx, letter in enumerate(letters):
                if last >= 0 and idx == (last ^ 1):
                    continue
                Q = P @ letter
                nxt.append((idx, Q))
                pending.append(Q.reshape(-1))
        frontier = nxt
        basis, sigma_max, rank = flush(basis, sigma_max)
        pending = []
        if rank == target:
            return target
    return rank


def table_is_normal(tbl) -> bool:
    """True iff the table's subgroup is normal: any image element fixing
    the basepoint fixes the whole orbit pointwise."""
    orbit = tbl.rep.orbit(tbl.basepoint)
    for elt in tbl.rep.image_elements():
        if elt(tbl.basepoint) == tbl.basepoint:
            if any(elt(p) != p for p in orbit):
                return False
    return True


def res_ind_character_identity(
    alpha: MatrixRep, sub: SubgroupPresentation, sample: WordSample
) -> float:
    """Max residual of the restriction-of-induction character identity.

    For a normal finite-index subgroup N, restricting the induced
    representation back to N splits as the direct sum of the conjugate
    twists of alpha over a transversal; the two characters are computed
    along independent paths (block-matrix traces vs. rewritten conjugate
    words) and compared on the sampled N-words.
    """
    if not table_is_normal(sub.table):
        raise ValueError("subgroup is not normal; the identity needs a normal subgroup")
    ind = induce(alpha, sub)
    direct = ParentWordRep(alpha, sub)
    residual = 0.0
    for w in sample.words:
        if not sub.table.contains(w):
            raise ValueError(f"sampled word {w} is not in the subgroup")
        lhs = complex(np.trace(ind.eval(w)))
        rhs = 0j
        for t in sub.table.transversal:
            rhs += complex(np.trace(direct.eval(conjugate(w, t))))
        residual = max(residual, abs(lhs - rhs))
    return residual


def summand_dimension_check(dims: Sequence[int], m: int, k: int) -> bool:
    """Divisibility and range constraints on irreducible summand dimensions
    of a representation induced from dimension m over index k."""
    if m < 1 or k < 1:
        return False
    return (
        sum(dims) == m * k
        and all(p % m == 0 and m <= p <= m * k for p in dims)
    )


@dataclass(frozen=True)
class Collision:
    i: int
    j: int
    induced_gap: float
    source_gap: float

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "induced_gap": self.induced_gap,
            "source_gap": self.source_gap,
        }


def fiber_sampling(
    source_chars: Sequence[TraceVector],
    induced_chars: Sequence[TraceVector],
    tol: float,
) -> list[Collision]:
    """Report pairs whose induced characters agree but whose source
    characters differ by more than 10*tol.  An empty report is the
    expected outcome (the induction map on characters has finite
    fibers); identical or conjugate sources are not collisions."""
    if len(source_chars) != len(induced_chars):
        raise ValueError("need matching source and induced character lists")
    if len(source_chars) < 2:
        raise ValueError("need at least two samples to compare")
    collisions = []
    for i in range(len(source_chars)):
        for j in range(i + 1, len(source_chars)):
            induced_gap = character_distance(induced_chars[i], induced_chars[j])
            if induced_gap > tol:
                continue
            source_gap = character_distance(source_chars[i], source_chars[j])
            if source_gap > 10.0 * tol:
                collisions.append(Collision(i, j, induced_gap, source_gap))
    return collisions


__all__ = [
    "WordSample",
    "TraceVector",
    "character",
    "character_distance",
    "characters_equal",
    "commutant_dimension",
    "algebra_dimension",
    "table_is_normal",
    "res_ind_character_identity",
    "summand_dimension_check",
    "Collision",
    "fiber_sampling",
    "reduced_words_up_to",
]
