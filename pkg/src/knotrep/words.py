"""Free-group word algebra.

Words are stored in syllable (run-length) form over a fixed, named
alphabet: a word is a sequence of (generator index, nonzero exponent)
pairs in which adjacent syllables carry distinct generators.  That is
the freely reduced normal form, so word equality is free-group
equality.  All operations return reduced words; nothing here knows
about relators.

Text syntax: whitespace-separated tokens ``name^k`` with ``k`` a
nonzero integer and ``^1`` omitted, e.g. ``s t^-1 s^-1 t s``.  The
empty word is written ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_TOKEN_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class Alphabet:
    """A ranked list of generator names with per-generator meridian flags."""

    names: tuple[str, ...]
    meridional: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.meridional):
            raise ValueError("names and meridional flags differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be unique")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid generator name {name!r}")

    @classmethod
    def make(cls, names: Iterable[str], meridional: Iterable[bool] | bool = False) -> "Alphabet":
        names = tuple(names)
        if isinstance(meridional, bool):
            flags = (meridional,) * len(names)
        else:
            flags = tuple(meridional)
        return cls(names, flags)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown generator {name!r}") from None


@dataclass(frozen=True)
class Word:
    """A freely reduced word over an :class:`Alphabet`.

    The constructor insists on reduced input; use :func:`reduce` (or the
    arithmetic operations, which reduce their results) to build words
    from arbitrary syllable lists.
    """

    alphabet: Alphabet
    syllables: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = -1
        for gen, exp in self.syllables:
            if not 0 <= gen < len(self.alphabet):
                raise ValueError(f"generator index {gen} out of range")
            if exp == 0:
                raise ValueError("zero exponent in word")
            if gen == prev:
                raise ValueError("word is not freely reduced")
            prev = gen

    # -- queries ---------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        """Letter length: the sum of absolute syllable exponents."""
        return sum(abs(e) for _, e in self.syllables)

    def letters(self) -> Iterable[tuple[int, int]]:
        """Yield single letters (gen, +1/-1) left to right."""
        for gen, exp in self.syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, step

    def generators_used(self) -> set[int]:
        return {g for g, _ in self.syllables}

    # -- arithmetic ------------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __pow__(self, k: int) -> "Word":
        if k == 0:
            return Word(self.alphabet)
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def inverse(self) -> "Word":
        return Word(self.alphabet, tuple((g, -e) for g, e in reversed(self.syllables)))

    def __str__(self) -> str:
        return format_word(self)


def _check_same_alphabet(*words: Word) -> None:
    alphabets = {w.alphabet for w in words}
    if len(alphabets) > 1:
        raise ValueError("words are over different alphabets")


def reduce(alphabet: Alphabet, raw: Iterable[tuple[int, int]]) -> Word:
    """Freely reduce a raw syllable list into normal form.

    Zero exponents are dropped, runs of the same generator are merged,
    and cancellations cascade.  Idempotent.
    """
    stack: list[list[int]] = []
    for gen, exp in raw:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return Word(alphabet, tuple((g, e) for g, e in stack))


def empty(alphabet: Alphabet) -> Word:
    return Word(alphabet)


def generator(alphabet: Alphabet, gen: int | str, exp: int = 1) -> Word:
    """The one-syllable word gen^exp."""
    if isinstance(gen, str):
        gen = alphabet.index(gen)
    return reduce(alphabet, [(gen, exp)])


def multiply(u: Word, v: Word) -> Word:
    _check_same_alphabet(u, v)
    return reduce(u.alphabet, u.syllables + v.syllables)


def invert(w: Word) -> Word:
    return w.inverse()


def conjugate(w: Word, g: Word) -> Word:
    """g^-1 w g."""
    _check_same_alphabet(w, g)
    return multiply(g.inverse(), multiply(w, g))


def concat(*words: Word) -> Word:
    if not words:
        raise ValueError("concat needs at least one word")
    _check_same_alphabet(*words)
    syl: list[tuple[int, int]] = []
    for w in words:
        syl.extend(w.syllables)
    return reduce(words[0].alphabet, syl)


def apply_hom(w: Word, images: Mapping[int, Word], target: Alphabet | None = None) -> Word:
    """Substitute images for generators and reduce.

    ``images`` maps generator indices of ``w``'s alphabet to words over a
    common target alphabet.  Every generator occurring in ``w`` must have
    an image.  ``target`` is only needed to type the result when neither
    ``w`` nor ``images`` determine it (the empty-map, empty-word case).
    """
    if target is None:
        for img in images.values():
            target = img.alphabet
            break
    if target is None:
        raise ValueError("cannot infer target alphabet for substitution")
    syl: list[tuple[int, int]] = []
    for gen, exp in w.syllables:
        if gen not in images:
            name = w.alphabet.names[gen]
            raise ValueError(f"no image for generator {name!r}")
        img = images[gen]
        if img.alphabet != target:
            raise ValueError("substitution images are over different alphabets")
        piece = img.syllables if exp > 0 else img.inverse().syllables
        for _ in range(abs(exp)):
            syl.extend(piece)
    return reduce(target, syl)


def exponent_sum(w: Word) -> int:
    """Total exponent sum, defined only over all-meridional generators.

    This is the image of ``w`` under the abelianization onto the
    integers sending every meridian to 1.
    """
    for gen in w.generators_used():
        if not w.alphabet.meridional[gen]:
            name = w.alphabet.names[gen]
            raise ValueError(f"generator {name!r} is not meridional")
    return sum(e for _, e in w.syllables)


# -- text syntax ----------------------------------------------------------


def format_word(w: Word) -> str:
    if w.is_empty():
        return "1"
    parts = []
    for gen, exp in w.syllables:
        name = w.alphabet.names[gen]
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts)


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse the ``name^k`` token syntax; ``1`` (or blank) is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return Word(alphabet)
    raw: list[tuple[int, int]] = []
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if not m:
            raise ValueError(f"bad word token {token!r}")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise ValueError(f"zero exponent in token {token!r}")
        raw.append((alphabet.index(m.group(1)), exp))
    return reduce(alphabet, raw)
