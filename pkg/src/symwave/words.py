"""Symplectic lattice words over the signed alphabet C_n.

Letters are nonzero integers: ``+i`` is the letter i and ``-i`` its barred
partner.  Words are tuples of letters.  Letters are ordered

    1 < 2 < ... < n < -n < ... < -2 < -1

which mirrors the basis order p_1 < ... < p_n < q_n < ... < q_1, so the
same key sorts words and tensor monomials.
"""

from __future__ import annotations

import enum
from collections import Counter
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetOverflowError, InvalidInputError, InvalidPatternError

Word = tuple[int, ...]
Pattern = tuple[int, ...]


def letter_key(x: int) -> tuple[bool, int]:
    return (x < 0, x)


def word_key(w: Sequence[int]) -> tuple[tuple[bool, int], ...]:
    return tuple((x < 0, x) for x in w)


def parse_word(text: str) -> Word:
    """Parse the space-separated signed-integer form, e.g. ``"1 2 -2 -1"``."""
    letters = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise InvalidInputError(f"bad letter {tok!r} in word {text!r}") from None
        if x == 0:
            raise InvalidInputError(f"bad letter {tok!r} in word {text!r}: zero is not a letter")
        letters.append(x)
    return tuple(letters)


def format_word(w: Iterable[int]) -> str:
    return " ".join(str(x) for x in w)


def is_symplectic_lattice_word(w: Sequence[int], n: int) -> bool:
    """True iff every prefix weight (tau_1, ..., tau_n) is a partition."""
    tau = [0] * (n + 1)  # tau[0] unused
    for x in w:
        i = abs(x)
        if x == 0 or i > n:
            return False
        tau[i] += 1 if x > 0 else -1
        if tau[i] < 0:
            return False
        if x > 0 and i > 1 and tau[i] > tau[i - 1]:
            return False
        if x < 0 and i < n and tau[i] < tau[i + 1]:
            return False
    return True


def is_balanced(w: Iterable[int]) -> bool:
    c = Counter(w)
    return all(c[x] == c[-x] for x in c)


def enumerate_balanced_words(m: int, n: int) -> list[Word]:
    """All balanced symplectic lattice words of length m over C_n, in word order."""
    if m < 0:
        raise InvalidInputError(f"length must be nonnegative, got {m}")
    if n < 1:
        raise InvalidInputError(f"alphabet bound must be positive, got {n}")
    if m % 2:
        return []
    return list(_dfs([0] * (n + 2), [], m, n))


def _dfs(tau: list[int], prefix: list[int], m: int, n: int) -> Iterator[Word]:
    # tau is 1-indexed with sentinels tau[0] = inf-ish and tau[n+1] = 0
    left = m - len(prefix)
    if left == 0:
        yield tuple(prefix)
        return
    size = sum(tau[1 : n + 1])
    for i in range(1, n + 1):
        if (i == 1 or tau[i] < tau[i - 1]) and size + 1 <= left - 1:
            tau[i] += 1
            prefix.append(i)
            yield from _dfs(tau, prefix, m, n)
            prefix.pop()
            tau[i] -= 1
    for i in range(n, 0, -1):
        if tau[i] > tau[i + 1]:
            tau[i] -= 1
            prefix.append(-i)
            yield from _dfs(tau, prefix, m, n)
            prefix.pop()
            tau[i] += 1


def pattern(w: Iterable[int]) -> Pattern:
    return tuple(1 if x > 0 else -1 for x in w)


def lat(delta: Sequence[int], n: int) -> Word:
    """Smallest word of the strictly alternating class with sign pattern ``delta``.

    Letter k has magnitude max(s_k, s_{k-1}) where s_k is the k-th prefix sum.
    """
    if any(d not in (1, -1) for d in delta):
        raise InvalidPatternError(f"pattern entries must be +1 or -1: {tuple(delta)}")
    sums = [0, *accumulate(delta)]
    if min(sums) < 0:
        raise InvalidPatternError(f"pattern {tuple(delta)} has a negative prefix sum")
    if sums[-1] != 0:
        raise InvalidPatternError(f"pattern {tuple(delta)} does not sum to zero")
    word = []
    for k, d in enumerate(delta, start=1):
        mag = max(sums[k], sums[k - 1])
        if mag > n:
            raise AlphabetOverflowError(
                f"pattern {tuple(delta)} needs letter {mag} at position {k}, alphabet has {n}"
            )
        word.append(d * mag)
    return tuple(word)


class AlternationClass(enum.Enum):
    NOT_IN_M = "not_in_M"
    IN_M = "in_M"
    IN_M_PLUS = "in_M_plus"


def alternation_class(w: Sequence[int]) -> AlternationClass:
    """Classify a balanced word by how each i / -i subword alternates.

    In M: every prefix of each subword has sign sum in {-1, 0, 1}.
    In M+: additionally each subword reads i, -i, i, -i, ...
    """
    if not is_balanced(w):
        raise InvalidInputError(f"word {tuple(w)} is not balanced")
    plus = True
    for i in {abs(x) for x in w}:
        sub = [1 if x > 0 else -1 for x in w if abs(x) == i]
        if any(abs(s) > 1 for s in accumulate(sub)):
            return AlternationClass.NOT_IN_M
        if any(s != (1 if k % 2 == 0 else -1) for k, s in enumerate(sub)):
            plus = False
    return AlternationClass.IN_M_PLUS if plus else AlternationClass.IN_M
