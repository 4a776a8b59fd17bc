"""Permutation representations and left-coset tables with Schreier transversals.

Conventions, fixed throughout the package:

* Permutations act on the right on points ``{0..d-1}`` (1-based in text
  cycle notation), and words evaluate left to right: the image of a
  point under ``u v`` is its image under ``u``, then under ``v``.
* A :class:`CosetTable` enumerates the left cosets ``t H`` of a point
  stabilizer ``H``.  Its stored ``action`` is the left action,
  ``action[g][i] = j`` where ``g t_i`` lies in ``t_j H``; that is what
  the induced-representation block construction consumes via
  :meth:`CosetTable.factorize`.
* The transversal is grown breadth first from the empty word, appending
  generators in declaration order with positive exponents (negative
  exponents are never needed, since generator images have finite
  order).  For the dihedral tables used here this yields the power
  transversal ``1, a, a^2, ...``.
* Whenever the transversal happens to be simultaneously a right
  transversal (true for every table in this package), the table also
  carries the right-coset action ``H t_i g -> H t_j``, which is what
  Reidemeister-Schreier rewriting consumes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .presentations import Presentation
from .words import Word, concat, generator


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0..d-1}, stored as the tuple of right-action images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a permutation")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def then(self, other: "Permutation") -> "Permutation":
        """Composite acting as self first, then other (left-to-right)."""
        return Permutation(tuple(other.images[x] for x in self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.then(other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        s = 1
        for cyc in self.cycles():
            if len(cyc) % 2 == 0:
                s = -s
        return s

    def cycle_string(self) -> str:
        """One-line cycle notation with 1-based points; identity is ``()``."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in cyc) + ")" for cyc in cycs)

    @classmethod
    def from_cycle_string(cls, degree: int, text: str) -> "Permutation":
        images = list(range(degree))
        body = text.strip()
        if body in ("", "()"):
            return cls(tuple(images))
        if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\))+", body):
            raise ValueError(f"bad cycle notation {text!r}")
        for part in re.findall(r"\(([^()]*)\)", body):
            pts = [int(tok) - 1 for tok in part.split()]
            if any(not 0 <= p < degree for p in pts) or len(set(pts)) != len(pts):
                raise ValueError(f"bad cycle {part!r} for degree {degree}")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(tuple(images))


@dataclass(frozen=True)
class PermRep:
    """A homomorphism of a presented group into a symmetric group.

    Every relator must evaluate to the identity permutation; this is
    checked at construction.
    """

    presentation: Presentation
    images: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.presentation.num_generators:
            raise ValueError("one permutation per generator required")
        degrees = {p.degree for p in self.images}
        if len(degrees) != 1:
            raise ValueError("generator images have mixed degrees")
        for r in self.presentation.relators:
            if not self.eval(r).is_identity():
                raise ValueError(f"relator {r} does not map to the identity permutation")

    @property
    def degree(self) -> int:
        return self.images[0].degree

    def eval(self, w: Word) -> Permutation:
        """Right-action evaluation: letters applied left to right."""
        if w.alphabet != self.presentation.alphabet:
            raise ValueError("word over a different alphabet")
        out = Permutation.identity(self.degree)
        for gen, step in w.letters():
            img = self.images[gen] if step > 0 else self.images[gen].inverse()
            out = out.then(img)
        return out

    def apply(self, point: int, w: Word) -> int:
        return self.eval(w)(point)

    def orbit(self, point: int) -> tuple[int, ...]:
        seen = {point}
        queue = [point]
        while queue:
            x = queue.pop(0)
            for img in self.images:
                y = img(x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def image_elements(self) -> list[Permutation]:
        """The image subgroup, breadth first from the identity in generator order."""
        ident = Permutation.identity(self.degree)
        elements = [ident]
        index = {ident.images: 0}
        queue = [ident]
        while queue:
            e = queue.pop(0)
            for img in self.images:
                f = e.then(img)
                if f.images not in index:
                    index[f.images] = len(elements)
                    elements.append(f)
                    queue.append(f)
        return elements

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "images": {
                name: perm.cycle_string()
                for name, perm in zip(self.presentation.alphabet.names, self.images)
            },
        }

    @classmethod
    def from_dict(cls, presentation: Presentation, data: dict) -> "PermRep":
        degree = int(data["degree"])
        images = tuple(
            Permutation.from_cycle_string(degree, data["images"][name])
            for name in presentation.alphabet.names
        )
        return cls(presentation, images)


def eval_perm(rep: PermRep, w: Word) -> Permutation:
    return rep.eval(w)


def in_stabilizer(rep: PermRep, w: Word, point: int) -> bool:
    return rep.eval(w)(point) == point


def in_kernel(rep: PermRep, w: Word) -> bool:
    return rep.eval(w).is_identity()


def dihedral_rep(alpha: int, presentation: Presentation) -> PermRep:
    """The dihedral permutation representation of a two-bridge group.

    Defined on the two-generator presentation whose first generator maps
    to the involution fixing point 1 (1-based: ``(2, 2n+1)(3, 2n)...``)
    and whose second maps to the full alpha-cycle.  The homomorphism
    property is verified on the relators at construction.
    """
    if alpha < 3 or alpha % 2 == 0:
        raise ValueError("alpha must be an odd integer >= 3")
    if presentation.num_generators != 2:
        raise ValueError("dihedral representation needs a two-generator presentation")
    refl = Permutation(tuple((-x) % alpha for x in range(alpha)))
    cycle = Permutation(tuple((x + 1) % alpha for x in range(alpha)))
    return PermRep(presentation, (refl, cycle))


def regular_perm_rep(rep: PermRep) -> PermRep:
    """The right-regular action of the image group of ``rep``.

    Points are the image elements in breadth-first enumeration order
    (identity first); a generator sends each element to its right
    product with the generator's image.  The stabilizer of point 0 is
    exactly the kernel of ``rep``.
    """
    elements = rep.image_elements()
    index = {e.images: i for i, e in enumerate(elements)}
    perms = tuple(
        Permutation(tuple(index[e.then(img).images] for e in elements))
        for img in rep.images
    )
    return PermRep(rep.presentation, perms)


class CosetTable:
    """Left cosets of a point stabilizer, with transversal and both actions.

    ``transversal[i]`` is the representative word of coset ``t_i H``;
    ``transversal[0]`` is the empty word.  The membership oracle for
    ``H`` is :meth:`contains`.  See the module docstring for the action
    conventions.
    """

    def __init__(self, rep: PermRep, basepoint: int, transversal: Sequence[Word]):
        if not 0 <= basepoint < rep.degree:
            raise ValueError("basepoint out of range")
        self.rep = rep
        self.basepoint = basepoint
        self.transversal = tuple(transversal)
        if not self.transversal or not self.transversal[0].is_empty():
            raise ValueError("transversal must start with the empty word")

        orbit = rep.orbit(basepoint)
        if len(self.transversal) != len(orbit):
            raise ValueError("transversal size does not match the orbit of the basepoint")

        evals = [rep.eval(t) for t in self.transversal]
        self._left_points = tuple(e.inverse()(basepoint) for e in evals)
        self._right_points = tuple(e(basepoint) for e in evals)
        if sorted(self._left_points) != list(orbit):
            raise ValueError("transversal words do not represent distinct left cosets")
        self._left_index = {p: i for i, p in enumerate(self._left_points)}

        gens = range(rep.presentation.num_generators)
        inv_images = [rep.images[g].inverse() for g in gens]
        self.left_action = tuple(
            tuple(self._left_index[inv_images[g](p)] for p in self._left_points)
            for g in gens
        )
        self._left_action_inv = tuple(_invert_table(row) for row in self.left_action)

        # Right-coset structure exists iff the left transversal is also a
        # right transversal; Schreier rewriting requires it.
        if len(set(self._right_points)) == len(self._right_points):
            right_index = {p: i for i, p in enumerate(self._right_points)}
            self.right_action = tuple(
                tuple(right_index[rep.images[g](p)] for p in self._right_points)
                for g in gens
            )
            self._right_action_inv = tuple(_invert_table(row) for row in self.right_action)
        else:
            self.right_action = None
            self._right_action_inv = None

    @property
    def k(self) -> int:
        """The index [G : H]."""
        return len(self.transversal)

    @property
    def alphabet(self):
        return self.rep.presentation.alphabet

    def contains(self, w: Word) -> bool:
        """Membership oracle for the stabilizer subgroup."""
        return self.rep.eval(w)(self.basepoint) == self.basepoint

    # -- left-coset action (feeds the induced-representation blocks) ------

    def left_act(self, w: Word | int, i: int) -> int:
        """Index j with w t_i in t_j H."""
        if isinstance(w, int):
            return self.left_action[w][i]
        # left action composes outermost-first: apply the last letter first
        for gen, step in reversed(list(w.letters())):
            table = self.left_action[gen] if step > 0 else self._left_action_inv[gen]
            i = table[i]
        return i

    def factorize(self, g: Word | int, i: int) -> tuple[int, Word]:
        """Split g t_i = t_j h with h in H; returns (j, h).

        h = t_j^-1 g t_i, freely reduced, and is checked against the
        membership oracle.
        """
        word = generator(self.alphabet, g) if isinstance(g, int) else g
        j = self.left_act(word, i)
        h = concat(self.transversal[j].inverse(), word, self.transversal[i])
        if not self.contains(h):
            raise ValueError("factorization left the subgroup; table is inconsistent")
        return j, h

    # -- right-coset action (feeds Reidemeister-Schreier rewriting) -------

    def _require_right(self):
        if self.right_action is None:
            raise ValueError(
                "transversal is not a right transversal; Schreier rewriting unavailable"
            )

    def right_act(self, w: Word | int, i: int) -> int:
        """Index j with H t_i w = H t_j."""
        self._require_right()
        if isinstance(w, int):
            return self.right_action[w][i]
        for gen, step in w.letters():
            table = self.right_action[gen] if step > 0 else self._right_action_inv[gen]
            i = table[i]
        return i

    def right_act_inv(self, gen: int, i: int) -> int:
        self._require_right()
        return self._right_action_inv[gen][i]

    def to_dict(self) -> dict:
        return {
            "basepoint": self.basepoint + 1,
            "transversal": [str(t) for t in self.transversal],
        }


def _invert_table(row: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(row)
    for i, j in enumerate(row):
        inv[j] = i
    return tuple(inv)


def coset_table(rep: PermRep, point: int, transversal: Iterable[Word] | None = None) -> CosetTable:
    """Build the left-coset table of H = Stab(point).

    Without an explicit transversal, representatives are grown breadth
    first from the empty word by appending positive generators in
    declaration order, so every coset gets its shortest such word
    (deterministic; yields ``1, a, a^2, ...`` for the dihedral tables).
    """
    if transversal is not None:
        return CosetTable(rep, point, tuple(transversal))

    orbit = rep.orbit(point)
    alphabet = rep.presentation.alphabet
    empty_word = Word(alphabet)
    ident = Permutation.identity(rep.degree)

    words = [empty_word]
    evals = [ident]
    seen = {point}
    head = 0
    while head < len(words):
        w, q = words[head], evals[head]
        head += 1
        for gen in range(len(alphabet)):
            q_new = q.then(rep.images[gen])
            p = q_new.inverse()(point)
            if p not in seen:
                seen.add(p)
                words.append(w * generator(alphabet, gen))
                evals.append(q_new)
    if len(words) != len(orbit):
        raise ValueError("positive words failed to reach every coset in the orbit")
    return CosetTable(rep, point, words)
