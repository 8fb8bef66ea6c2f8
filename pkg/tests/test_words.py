import pytest
from pydantic import ValidationError

from hpfold.errors import InputError
from hpfold.folding import Fold, read_fold_file, score
from hpfold.lattice import LatticeKind
from hpfold.words import (
    Word,
    hex_family,
    hex_family_fold,
    internal_zero_capacity,
    multiset_M,
    occurrences,
    rect_family,
    reverse,
    special_words,
    tri_family,
    tri_family_fold,
    zeros,
)


def test_parse_cyclic():
    w = Word.parse("cyc:0^8")
    assert w.cyclic
    assert len(w) == 8
    assert str(w) == "cyc:00000000"


def test_rejects_bad_letters():
    with pytest.raises(ValidationError):
        Word(letters="0130")
    with pytest.raises(InputError):
        Word.parse("")


@pytest.mark.parametrize("k", range(6))
def test_rect_family_counts(k):
    word, moves = rect_family(k)
    assert len(word) == 26 + 8 * k
    assert zeros(word) == 6 + 4 * k
    assert len(moves) == len(word) - 1


def test_hex_family_counts():
    w = hex_family(4)
    assert len(w) == 26
    assert zeros(w) == 10
    with pytest.raises(InputError):
        hex_family(0)


@pytest.mark.parametrize("n,length", [(1, 10), (2, 25), (3, 43), (4, 73)])
def test_tri_family_lengths(n, length):
    w = tri_family(n)
    assert len(w) == length
    assert "0" * (2 * n + 1) not in w.letters


@pytest.mark.parametrize("n", range(1, 5))
def test_tri_family_fold_matches_corpus(corpus_file, n):
    fold, word = read_fold_file(corpus_file(f"tri_n{n}.fold"))
    assert fold.moves == tri_family_fold(n)
    assert word.letters == tri_family(n).letters


def test_hex_family_fold():
    assert score(Fold(kind="hex", moves=hex_family_fold(4)), hex_family(4)) == 6
    assert score(Fold(kind="hex", moves=hex_family_fold(1)), hex_family(1)) == 3
    with pytest.raises(InputError):
        hex_family_fold(0)


def test_hex_family_fold_matches_platypus(corpus_file):
    fold, word = read_fold_file(corpus_file("platypus.fold"))
    assert fold.moves == hex_family_fold(4)
    assert word.letters == hex_family(4).letters


def test_special_words():
    words = special_words()
    assert (len(words["cube54"]), zeros(words["cube54"])) == (54, 27)
    assert (len(words["berger_leighton"]), zeros(words["berger_leighton"])) == (60, 36)
    assert len(words["trefoil24"]) == 24 and words["trefoil24"].cyclic
    assert len(words["link56"]) == 56
    assert len(words["trefoil70"]) == 70


def test_occurrences():
    assert occurrences("00", "0000") == 3
    assert occurrences("00", "cyc:0000") == 4
    assert occurrences("00", "cyc:1^3 0^22 1^3 0^42") == 62
    assert occurrences("010", "01010") == 2


def test_reverse_keeps_cyclic_flag():
    w = reverse(Word.parse("cyc:0011"))
    assert w.letters == "1100"
    assert w.cyclic


def test_internal_zero_capacity():
    assert internal_zero_capacity(LatticeKind.RECT2D, "010") == [3, 0, 3]
    assert internal_zero_capacity(LatticeKind.RECT2D, "010", wrapped=True) == [2, 0, 2]
    assert internal_zero_capacity(LatticeKind.HEX, "00") == [2, 2]
    with pytest.raises(InputError):
        internal_zero_capacity(LatticeKind.RECT2D, "020")


def test_multiset_m():
    words = multiset_M(2)
    assert [w.letters for w in words[:3]] == ["01010101"] * 3
    assert words[3].letters == "222" + "1" * 13
    assert all(w.cyclic for w in words)
