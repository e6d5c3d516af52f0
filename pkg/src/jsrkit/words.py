"""Finite words over the alphabet {1, ..., r} and rotation combinatorics.

Words are plain tuples of 1-based ints.  The textual form is
comma-separated, e.g. "1,2,2".  Two words are rotation equivalent when
one is a cyclic shift of the other; the canonical representative of a
class is its lexicographically least rotation.
"""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Iterator

from .config import DEFAULTS, pick
from .errors import BudgetError, InputError

Word = tuple[int, ...]


def parse_word(text: str) -> Word:
    """Parse "1,2,2" into (1, 2, 2)."""
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise InputError("empty word")
    try:
        letters = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"word {text!r} is not a comma-separated list of integers") from exc
    if any(letter < 1 for letter in letters):
        raise InputError(f"word {text!r} has letters outside 1..r")
    return letters


def format_word(w: Word) -> str:
    return ",".join(str(letter) for letter in w)


def validate_word(w: Word, r: int | None = None) -> Word:
    w = tuple(int(letter) for letter in w)
    if len(w) == 0:
        raise InputError("empty word")
    if any(letter < 1 for letter in w):
        raise InputError(f"word {w} has letters below 1")
    if r is not None and any(letter > r for letter in w):
        raise InputError(f"word {w} uses letters above alphabet size {r}")
    return w


def least_rotation_index(w: Word) -> int:
    """Index k such that w[k:] + w[:k] is the least rotation (Booth's algorithm)."""
    n = len(w)
    doubled = w + w
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        letter = doubled[j]
        i = fail[j - k - 1]
        while i != -1 and letter != doubled[k + i + 1]:
            if letter < doubled[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if letter != doubled[k + i + 1]:
            if letter < doubled[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def canonical_rotation(w: Word) -> Word:
    w = validate_word(w)
    k = least_rotation_index(w)
    return w[k:] + w[:k]


def rotation_equivalent(z: Word, w: Word) -> bool:
    """True iff the words have equal length and one is a cyclic shift of the other."""
    z = validate_word(z)
    w = validate_word(w)
    if len(z) != len(w):
        return False
    return canonical_rotation(z) == canonical_rotation(w)


def is_primitive(w: Word) -> bool:
    """True iff w is not a proper power.

    Checks whether w occurs inside w + w at an index strictly between
    0 and len(w); such an occurrence exhibits a shorter period.
    """
    w = validate_word(w)
    n = len(w)
    doubled = w + w
    for i in range(1, n):
        if doubled[i:i + n] == w:
            return False
    return True


def power(w: Word, p: int) -> Word:
    w = validate_word(w)
    if p < 1:
        raise InputError(f"power must be >= 1, got {p}")
    return w * p


def _check_budget(r: int, n: int, budget: int | None) -> None:
    budget = pick(budget, DEFAULTS.word_budget)
    if r < 1:
        raise InputError(f"alphabet size must be >= 1, got {r}")
    if n < 1:
        raise InputError(f"word length must be >= 1, got {n}")
    total = r ** n
    if total > budget:
        raise BudgetError(
            f"enumeration of {r}^{n} = {total} words exceeds budget {budget}; lower the length"
        )


def enumerate_words(r: int, n: int, budget: int | None = None) -> Iterator[Word]:
    """All words of length n over {1..r} in lexicographic order."""
    _check_budget(r, n, budget)
    return _cartesian(range(1, r + 1), repeat=n)


def enumerate_necklaces(r: int, n: int, budget: int | None = None) -> Iterator[Word]:
    """One representative per rotation class: the words equal to their canonical rotation."""
    _check_budget(r, n, budget)
    return (w for w in _cartesian(range(1, r + 1), repeat=n) if canonical_rotation(w) == w)
