"""Reidemeister-Schreier presentations of finite-index subgroups.

Given a coset table for ``H <= G`` whose transversal ``t_0 = 1, t_1,
...`` is simultaneously a right transversal, the Schreier generator
attached to the pair (coset ``i``, parent generator ``g``) is::

    sigma(i, g) = t_i g t_j^-1        where H t_i g = H t_j,

membership in ``H`` being immediate from the right-coset identity.
Pairs whose expansion freely reduces to the empty word are dropped; the
survivors are named ``y0, y1, ...`` in (coset, generator) lexicographic
order.  Rewriting a word of ``H`` scans its letters left to right while
tracking the current right coset and emits one Schreier letter per
step; the emitted word telescopes, so expanding it through the
generator expansions recovers the input exactly (free-group identity,
no tolerance).  Subgroup relators are the rewrites of the conjugated
parent relators ``t_i R t_i^-1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cosets import CosetTable, PermRep, coset_table, regular_perm_rep
from .presentations import Presentation
from .words import Alphabet, Word, apply_hom, concat, format_word, generator, parse_word, reduce


@dataclass(frozen=True)
class SchreierGenerator:
    name: str
    coset: int
    generator: int
    expansion: Word


def _expansion(tbl: CosetTable, i: int, g: int) -> Word:
    j = tbl.right_act(g, i)
    return concat(tbl.transversal[i], generator(tbl.alphabet, g), tbl.transversal[j].inverse())


def schreier_generators(tbl: CosetTable) -> list[SchreierGenerator]:
    """Named nontrivial Schreier generators of the table's subgroup."""
    out = []
    for i in range(tbl.k):
        for g in range(len(tbl.alphabet)):
            exp = _expansion(tbl, i, g)
            if exp.is_empty():
                continue
            if not tbl.contains(exp):
                raise ValueError("Schreier expansion left the subgroup; table inconsistent")
            out.append(SchreierGenerator(f"y{len(out)}", i, g, exp))
    return out


def kernel_coset_table(rep: PermRep, point: int) -> CosetTable:
    """Coset table of the kernel of ``rep`` (the normal core of Stab(point)).

    The table lives over the right-regular action of the image group, so
    its membership oracle is exactly kernel membership.  Its transversal
    is composed: representatives of the kernel inside H = Stab(point)
    (products of H's Schreier generators, breadth first) times H's own
    transversal.  The composition keeps the familiar subgroup data
    visible: for the dihedral tables the result is ``{a^i} union
    {s a^i}``, whose Schreier generators include ``s^2`` and
    ``a^alpha``.
    """
    tbl_h = coset_table(rep, point)
    h_gens = [g.expansion for g in schreier_generators(tbl_h)]

    # enumerate the image of H, keeping one H-word per kernel coset of H
    ident_key = tuple(range(rep.degree))
    v_words = [Word(rep.presentation.alphabet)]
    seen = {ident_key}
    head = 0
    while head < len(v_words):
        v = v_words[head]
        head += 1
        for exp in h_gens:
            w = v * exp
            key = rep.eval(w).images
            if key not in seen:
                seen.add(key)
                v_words.append(w)

    composed = [v * u for v in v_words for u in tbl_h.transversal]
    return coset_table(regular_perm_rep(rep), 0, transversal=composed)


def kernel_subgroup_generators(tbl_n: CosetTable) -> list[Word]:
    """Expansions of the Schreier generators of a kernel coset table."""
    return [g.expansion for g in schreier_generators(tbl_n)]


class SubgroupPresentation:
    """A finite-index subgroup with Schreier generators and rewritten relators.

    Construction verifies, exactly (no tolerance):

    * every generator expansion passes the membership oracle,
    * every relator, expanded through the generator expansions, freely
      reduces to the conjugated parent relator it came from.
    """

    def __init__(self, parent: Presentation, table: CosetTable):
        if table.rep.presentation != parent:
            raise ValueError("coset table does not belong to the parent presentation")
        self.parent = parent
        self.table = table
        self.generators = tuple(schreier_generators(table))
        self.alphabet = Alphabet(
            tuple(g.name for g in self.generators),
            (False,) * len(self.generators),
        )
        self._gen_lookup: dict[tuple[int, int], int] = {
            (g.coset, g.generator): idx for idx, g in enumerate(self.generators)
        }

        relators: list[Word] = []
        origins: list[tuple[int, int]] = []
        for r_idx, rel in enumerate(parent.relators):
            for i in range(table.k):
                conjugated = concat(table.transversal[i], rel, table.transversal[i].inverse())
                rewritten = self.rewrite(conjugated)
                if rewritten.is_empty():
                    continue
                if self.expand(rewritten) != conjugated:
                    raise ValueError("rewriting round trip failed; conventions are inconsistent")
                relators.append(rewritten)
                origins.append((r_idx, i))
        self.relators = tuple(relators)
        self.relator_origins = tuple(origins)

    @property
    def presentation(self) -> Presentation:
        return Presentation(self.alphabet, self.relators)

    def expansion_map(self) -> dict[int, Word]:
        return {idx: g.expansion for idx, g in enumerate(self.generators)}

    def expand(self, w: Word) -> Word:
        """Expand a subgroup word into the parent alphabet."""
        return apply_hom(w, self.expansion_map(), self.parent.alphabet)

    def rewrite(self, w: Word) -> Word:
        """Express a parent word of the subgroup in the Schreier generators.

        Raises ValueError if ``w`` fails the membership oracle.  The
        result expands back to ``w`` exactly.
        """
        if w.alphabet != self.parent.alphabet:
            raise ValueError("word over a different alphabet")
        if not self.table.contains(w):
            raise ValueError(f"word {w} is not in the subgroup")
        raw: list[tuple[int, int]] = []
        i = 0
        for gen, step in w.letters():
            if step > 0:
                key = self._gen_lookup.get((i, gen))
                if key is not None:
                    raw.append((key, 1))
                i = self.table.right_act(gen, i)
            else:
                i = self.table.right_act_inv(gen, i)
                key = self._gen_lookup.get((i, gen))
                if key is not None:
                    raw.append((key, -1))
        if i != 0:
            raise ValueError("rewriting did not return to the base coset")
        return reduce(self.alphabet, raw)

    # -- serialization -----------------------------------------------------

    def to_dict(self, permrep: PermRep | None = None, kernel: bool = False) -> dict:
        rep = permrep if permrep is not None else self.table.rep
        data = {
            "parent": self.parent.to_dict(),
            "permrep": rep.to_dict(),
            "kernel": kernel,
            "basepoint": (self.table.basepoint + 1) if not kernel else 1,
            "transversal": [str(t) for t in self.table.transversal],
            "generators": [
                {
                    "name": g.name,
                    "coset": g.coset + 1,
                    "generator": self.parent.alphabet.names[g.generator],
                    "expansion": str(g.expansion),
                }
                for g in self.generators
            ],
            "relators": [str(r) for r in self.relators],
        }
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "SubgroupPresentation":
        """Rebuild from stored inputs and verify the stored outputs.

        The table and presentation are recomputed from the permutation
        representation; any mismatch with the stored transversal,
        generators, or relators raises, so a corrupted file cannot load
        silently.
        """
        parent = Presentation.from_dict(data["parent"])
        rep = PermRep.from_dict(parent, data["permrep"])
        if data.get("kernel", False):
            table = kernel_coset_table(rep, int(data["basepoint"]) - 1)
        else:
            table = coset_table(rep, int(data["basepoint"]) - 1)
        sub = cls(parent, table)
        stored_transversal = [parse_word(parent.alphabet, t) for t in data["transversal"]]
        if list(table.transversal) != stored_transversal:
            raise ValueError("stored transversal does not match recomputation")
        stored_gens = [
            (g["name"], g["coset"] - 1, parent.alphabet.index(g["generator"]),
             parse_word(parent.alphabet, g["expansion"]))
            for g in data["generators"]
        ]
        ours = [(g.name, g.coset, g.generator, g.expansion) for g in sub.generators]
        if ours != stored_gens:
            raise ValueError("stored Schreier generators do not match recomputation")
        stored_relators = [parse_word(sub.alphabet, r) for r in data["relators"]]
        if list(sub.relators) != stored_relators:
            raise ValueError("stored relators do not match recomputation")
        return sub

    def save(self, path, permrep: PermRep | None = None, kernel: bool = False) -> None:
        with open(path, "w") as f:
            json.dump(self.to_dict(permrep, kernel), f, indent=2)
            f.write("\n")

    @classmethod
    def load(cls, path) -> "SubgroupPresentation":
        with open(path) as f:
            return cls.from_dict(json.load(f))


def subgroup_presentation(parent: Presentation, tbl: CosetTable) -> SubgroupPresentation:
    return SubgroupPresentation(parent, tbl)


def rewrite(sub: SubgroupPresentation, w: Word) -> Word:
    return sub.rewrite(w)


@dataclass(frozen=True)
class Epimorphism:
    """A verified quotient map from a subgroup presentation onto a free group.

    ``images[i]`` is the image of the i-th subgroup generator.  The map
    is accepted only if every subgroup relator dies under substitution.
    ``surjective_onto_target`` records whether every target generator
    occurs verbatim among the images.
    """

    source: Alphabet
    target: Alphabet
    images: tuple[Word, ...]
    surjective_onto_target: bool

    def image_map(self) -> dict[int, Word]:
        return dict(enumerate(self.images))

    def apply(self, w: Word) -> Word:
        if w.alphabet != self.source:
            raise ValueError("word over a different alphabet")
        return apply_hom(w, self.image_map(), self.target)

    def to_dict(self) -> dict:
        return {
            "target": [{"name": n} for n in self.target.names],
            "images": {
                name: format_word(img) for name, img in zip(self.source.names, self.images)
            },
        }


def quotient_to_free(
    sub: SubgroupPresentation,
    target: Alphabet,
    images: dict[str, Word | str],
) -> Epimorphism:
    """Verify that generator images define a quotient map killing all relators.

    ``images`` maps subgroup generator names to words over ``target``
    (strings are parsed).  Raises if some relator does not map to the
    empty word.
    """
    image_words: list[Word] = []
    for name in sub.alphabet.names:
        if name not in images:
            raise ValueError(f"no image for subgroup generator {name!r}")
        img = images[name]
        if isinstance(img, str):
            img = parse_word(target, img)
        if img.alphabet != target:
            raise ValueError("image over a different alphabet")
        image_words.append(img)
    image_map = dict(enumerate(image_words))
    for rel in sub.relators:
        img = apply_hom(rel, image_map, target)
        if not img.is_empty():
            raise ValueError(f"relator {rel} maps to {img}, not the identity")
    singles = {generator(target, g).syllables for g in range(len(target))}
    covered = {w.syllables for w in image_words}
    return Epimorphism(sub.alphabet, target, tuple(image_words), singles <= covered)
