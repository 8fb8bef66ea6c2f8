from typing import List, Union

from hpfold.errors import InputError
from hpfold.lattice import get_spec
from hpfold.words.word import Word


def _as_word(w: Union[Word, str]) -> Word:
    return w if isinstance(w, Word) else Word.parse(w)


def zeros(w: Union[Word, str]) -> int:
    """Z(w): the number of zeros"""
    return _as_word(w).letters.count("0")


def occurrences(pattern: Union[Word, str], w: Union[Word, str]) -> int:
    """Overlapping occurrences of pattern in w; windows wrap when w is cyclic"""
    p = _as_word(pattern).letters
    word = _as_word(w)
    text, n, k = word.letters, len(word), len(p)
    if word.cyclic:
        return sum(
            1 for i in range(n) if all(text[(i + j) % n] == p[j] for j in range(k))
        )
    return sum(1 for i in range(n - k + 1) if text[i:i + k] == p)


def reverse(w: Union[Word, str]) -> Word:
    word = _as_word(w)
    return Word(letters=word.letters[::-1], cyclic=word.cyclic)


def internal_zero_capacity(kind, w: Union[Word, str], wrapped: bool = False) -> List[int]:
    """
    Per-position count of lattice directions a zero can use for contacts:
    coordination minus its chain neighbours. Nonzero letters get 0.

    With wrapped=True the word is read as 1w1, so no zero is terminal.
    """
    word = _as_word(w)
    coordination = get_spec(kind).coordination
    n = len(word)
    closed = wrapped or word.cyclic
    caps = []
    for i, letter in enumerate(word.letters):
        if letter == "2":
            raise InputError("Contact capacities are defined for {0,1} words only")
        if letter != "0":
            caps.append(0)
            continue
        chain_degree = int(i > 0 or closed) + int(i < n - 1 or closed)
        caps.append(max(coordination - chain_degree, 0))
    return caps
