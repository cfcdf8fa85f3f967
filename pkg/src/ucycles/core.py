"""Cyclic words over an integer alphabet, their windows, and their symmetries.

A cycle word is a finite sequence of letters drawn from ``1..alphabet_size``.
It can be read cyclically (length-t windows wrap past the end, one window per
position) or linearly (windows stop at the end).  Windows are compared as
multisets and encoded as sorted tuples.

A universal cycle for a family of t-multisets is a cycle word whose cyclic
windows enumerate the family exactly once; this module supplies the raw
material for building and comparing such words, while :mod:`ucycles.verify`
holds the actual coverage checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

Letter = int
MultisetKey = tuple[Letter, ...]
Pair = tuple[Letter, Letter]
PairSet = frozenset[Pair]


@dataclass(frozen=True)
class CycleWord:
    """Immutable word whose letters lie in ``1..alphabet_size``."""

    alphabet_size: int
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if len(self.letters) < 1:
            raise ValueError("word must contain at least one letter")
        for x in self.letters:
            if not (isinstance(x, int) and 1 <= x <= self.alphabet_size):
                raise ValueError(f"letter {x!r} out of range 1..{self.alphabet_size}")

    def __len__(self) -> int:
        return len(self.letters)

    def rotate(self, offset: int) -> "CycleWord":
        """Cyclic rotation moving position ``offset`` to the front."""
        off = offset % len(self.letters)
        return CycleWord(self.alphabet_size, self.letters[off:] + self.letters[:off])

    def reflected(self) -> "CycleWord":
        return CycleWord(self.alphabet_size, self.letters[::-1])

    def concat(self, other: "CycleWord") -> "CycleWord":
        """Concatenation over the union alphabet (the larger of the two)."""
        return CycleWord(
            max(self.alphabet_size, other.alphabet_size),
            self.letters + other.letters,
        )


def _check_window(word: CycleWord, t: int) -> None:
    if t < 1:
        raise ValueError("window size must be positive")
    if len(word.letters) < t:
        raise ValueError("word shorter than window")


def cyclic_windows(word: CycleWord, t: int) -> list[MultisetKey]:
    """All length-t windows read cyclically: one per starting position."""
    _check_window(word, t)
    ls = word.letters
    doubled = ls + ls[: t - 1]
    return [tuple(sorted(doubled[i : i + t])) for i in range(len(ls))]


def linear_windows(word: CycleWord, t: int) -> list[MultisetKey]:
    """Length-t windows without wraparound (``len(word) - t + 1`` of them)."""
    _check_window(word, t)
    ls = word.letters
    return [tuple(sorted(ls[i : i + t])) for i in range(len(ls) - t + 1)]


def relabel(
    word: CycleWord,
    mapping: Mapping[Letter, Letter],
    alphabet_size: int | None = None,
) -> CycleWord:
    """Characterwise letter substitution.

    Letters absent from ``mapping`` pass through unchanged.  The effective
    substitution must be injective on the letters that occur, and every output
    letter must fit the target alphabet (``alphabet_size`` defaults to the
    input's).  Length is always preserved.
    """
    n_out = word.alphabet_size if alphabet_size is None else alphabet_size
    occurring = set(word.letters)
    effective = {x: mapping.get(x, x) for x in occurring}
    if len(set(effective.values())) != len(effective):
        raise ValueError("relabeling collides on letters that occur in the word")
    out = tuple(effective[x] for x in word.letters)
    for y in out:
        if not (1 <= y <= n_out):
            raise ValueError(f"relabeled letter {y} out of range 1..{n_out}")
    return CycleWord(n_out, out)


@dataclass(frozen=True)
class CanonicalClass:
    """Least representative of a cycle word's rotation + relabeling class.

    Two cycle words compare equal here exactly when one can be turned into the
    other by rotating and bijectively renaming letters.  Reflection is a
    separate, coarser folding handled by the counting code.
    """

    representative: CycleWord


def _least_form(seq: tuple[Letter, ...]) -> tuple[Letter, ...]:
    # First-occurrence renaming: maps the first distinct letter to 1, the
    # second to 2, and so on.  For a fixed sequence this is the
    # lexicographically least relabeling.
    mapping: dict[Letter, Letter] = {}
    out = []
    for x in seq:
        if x not in mapping:
            mapping[x] = len(mapping) + 1
        out.append(mapping[x])
    return tuple(out)


def canonicalize(word: CycleWord) -> CanonicalClass:
    """Lexicographically least word over all rotations and relabelings."""
    ls = word.letters
    best: tuple[Letter, ...] | None = None
    for r in range(len(ls)):
        form = _least_form(ls[r:] + ls[:r])
        if best is None or form < best:
            best = form
    assert best is not None
    return CanonicalClass(CycleWord(word.alphabet_size, best))
