"""Finite presentations and two-bridge knot group presentations.

A presentation is an alphabet plus a list of relator words (each relator
``r`` means ``r = 1``; the equation form ``u = v`` is stored as
``u v^-1``).  Two-bridge groups b(alpha, beta) get the standard
two-generator, one-relator presentation built from the sign sequence
eps_k = (-1)^floor(k*beta/alpha), with the relator word alternating the
two meridians.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping

from .words import Alphabet, Word, apply_hom, concat, format_word, generator, parse_word, reduce


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        for r in self.relators:
            if r.alphabet != self.alphabet:
                raise ValueError("relator over a different alphabet")
            if r.is_empty():
                raise ValueError("empty relator")

    @property
    def num_generators(self) -> int:
        return len(self.alphabet)

    def generator_word(self, name: str) -> Word:
        return generator(self.alphabet, name)

    def word(self, text: str) -> Word:
        return parse_word(self.alphabet, text)

    def to_dict(self) -> dict:
        return {
            "generators": [
                {"name": n, "meridional": m}
                for n, m in zip(self.alphabet.names, self.alphabet.meridional)
            ],
            "relators": [format_word(r) for r in self.relators],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        gens = data["generators"]
        alphabet = Alphabet(
            tuple(g["name"] for g in gens),
            tuple(bool(g.get("meridional", False)) for g in gens),
        )
        relators = tuple(parse_word(alphabet, r) for r in data["relators"])
        return cls(alphabet, relators)

    def save(self, path) -> None:
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)
            f.write("\n")

    @classmethod
    def load(cls, path) -> "Presentation":
        with open(path) as f:
            return cls.from_dict(json.load(f))


@dataclass(frozen=True)
class TwoBridgeParams:
    """Parameters (alpha, beta) of a two-bridge knot: alpha odd >= 3,
    0 < beta < alpha, gcd(alpha, beta) = 1.  beta is used verbatim; no
    normalization beyond the stated range."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 3 or self.alpha % 2 == 0:
            raise ValueError("alpha must be an odd integer >= 3")
        if not 0 < self.beta < self.alpha:
            raise ValueError("beta must satisfy 0 < beta < alpha")
        if math.gcd(self.alpha, self.beta) != 1:
            raise ValueError("alpha and beta must be coprime")


def epsilon_sequence(params: TwoBridgeParams) -> tuple[int, ...]:
    """Signs eps_k = (-1)^floor(k*beta/alpha) for k = 1..alpha-1, on exact integers."""
    a, b = params.alpha, params.beta
    return tuple(-1 if ((k * b) // a) % 2 else 1 for k in range(1, a))


def two_bridge_presentation(params: TwoBridgeParams) -> Presentation:
    """The two-generator presentation of the knot group of b(alpha, beta).

    Generators s, t (both meridians); single relator (l s)(t l)^-1 where
    l alternates s, t, s, t, ... for alpha-1 letters with exponents from
    :func:`epsilon_sequence`.
    """
    alphabet = Alphabet(("s", "t"), (True, True))
    eps = epsilon_sequence(params)
    syl = [(k % 2, e) for k, e in enumerate(eps)]  # even positions s, odd t
    l_word = reduce(alphabet, syl)
    s = generator(alphabet, 0)
    t = generator(alphabet, 1)
    relator = concat(l_word, s, (t * l_word).inverse())
    return Presentation(alphabet, (relator,))


def change_generators(
    pres: Presentation,
    new_alphabet: Alphabet,
    new_in_old: Mapping[int, Word],
    old_in_new: Mapping[int, Word],
) -> Presentation:
    """Rewrite a presentation under a change of generating set.

    ``new_in_old`` defines each new generator as a word over the old
    alphabet; ``old_in_new`` expresses each old generator over the new
    one.  The two maps must be mutually inverse substitutions, which is
    verified by free reduction of both round trips.
    """
    for gen in range(len(pres.alphabet)):
        expected = generator(pres.alphabet, gen)
        back = apply_hom(apply_hom(expected, old_in_new, new_alphabet), new_in_old, pres.alphabet)
        if back != expected:
            name = pres.alphabet.names[gen]
            raise ValueError(f"substitution round trip fails on old generator {name!r}")
    for gen in range(len(new_alphabet)):
        expected = generator(new_alphabet, gen)
        back = apply_hom(apply_hom(expected, new_in_old, pres.alphabet), old_in_new, new_alphabet)
        if back != expected:
            name = new_alphabet.names[gen]
            raise ValueError(f"substitution round trip fails on new generator {name!r}")
    relators = []
    for r in pres.relators:
        image = apply_hom(r, old_in_new, new_alphabet)
        if not image.is_empty():
            relators.append(image)
    return Presentation(new_alphabet, tuple(relators))
