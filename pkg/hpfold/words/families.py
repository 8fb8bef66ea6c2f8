"""
Generators for every word family and named construction used by the corpus
"""
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from hpfold.errors import InputError
from hpfold.lattice import LatticeKind, ORIGIN, Site
from hpfold.notation import expand
from hpfold.words.word import Word


class Construction(BaseModel):
    """A word together with a fold of it, given as a move string"""
    model_config = ConfigDict(frozen=True)

    name: str
    kind: LatticeKind
    word: Word
    moves: str
    closed: bool = False
    start: Site = ORIGIN


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


def rect_family(k: int) -> Tuple[Word, str]:
    """
    (011)^3 1^10 (0011)^k 0110 (1100)^k 110 with its rect2d fold.

    The word has length 26+8k and Z = 6+4k; the fold scores Z+1.
    """
    _require(k >= 0, f"rect_family needs k >= 0, got {k}")
    word = Word.parse(f"(011)^3 1^10 (0011)^{k} 0110 (1100)^{k} 110")
    moves = expand(f"urdrdldrr u^4 l^4 dd (luld)^{k} ldr (drur)^{k} dru", "uldr")
    return word, moves


def hex_family(k: int) -> Word:
    """0 1^4 011 (01)^k 11 (10)^k, length 10+4k with Z = 2+2k"""
    _require(k >= 1, f"hex_family needs k >= 1, got {k}")
    return Word.parse(f"0 1^4 011 (01)^{k} 11 (10)^{k}")


def hex_family_fold(k: int) -> str:
    """Hex fold of hex_family(k) scoring Z/2+1; k=4 is the platypus-shaped fold"""
    _require(k >= 1, f"hex_family_fold needs k >= 1, got {k}")
    return expand(f"vllvrv r^{2 * k + 2} v l^{2 * k}", "lrv")


_TRI_WORDS = {
    1: "(001)^3 0",
    2: "(0001)^6 0",
    3: "0^5 1 (0^6 1)^5 00",
    4: "0^5 1 0^3 1 (0^7 1 0^3 1)^5 0^3",
}

# Folds start at the daisy centre; the zeros fill the radius-n daisy.
_TRI_FOLDS = {
    1: "wqeeemmmq",
    2: "wwqeeqnppnemmepwwpmqqmwn",
    3: "wwmqqeeeqwnnpppnqeemmmenppwwwpemmqqqmpwwnn",
    4: "wwmmwnnwqeeeeqwwqeeqnppppnqqnppnemmmmennemmepwwwwpeepwwpmqqqqmppmqqmwnnn",
}


def tri_family(n: int) -> Word:
    """Triangular-lattice words w_1..w_4; w_n has no factor 0^(2n+1)"""
    _require(n in _TRI_WORDS, f"tri_family is defined for n in 1..4, got {n}")
    return Word.parse(_TRI_WORDS[n])


def tri_family_fold(n: int) -> str:
    _require(n in _TRI_FOLDS, f"tri_family_fold is defined for n in 1..4, got {n}")
    return _TRI_FOLDS[n]


_SQUARE_CONSTRUCTIONS = {
    # 5x5 zero square, then with boundary 00 chain edges detoured through 1s
    "p2": ("0^25", "llddrurdrruluruuldlulldr"),
    "p2_whiskers": (
        "000 11 00 11 0000 11 00 11 0000 11 00 11 0000 11 00 11 00",
        "llldrddruurddrurrullurruluulddluuldlldrr",
    ),
    # 7x7 zero square
    "p3": (
        "0000 (11 000000)^7 11 000",
        "lllldrrdldrdruuurdddruurdrurulllurrrullurululdddluuulddluldldrrr",
    ),
}


def square_construction(name: str) -> Construction:
    """Square-lattice folds whose zeros fill an n-square: p2, p2_whiskers, p3"""
    _require(name in _SQUARE_CONSTRUCTIONS, f"Unknown square construction {name!r}")
    word_text, moves = _SQUARE_CONSTRUCTIONS[name]
    return Construction(name=name, kind=LatticeKind.RECT2D, word=Word.parse(word_text), moves=moves)


def berger_leighton_fold() -> Construction:
    """The 60-letter word whose 36 zeros fill a 6x6 square, scoring Z+1 = 37"""
    return Construction(
        name="berger_leighton",
        kind=LatticeKind.RECT2D,
        word=special_words()["berger_leighton"],
        moves="urddlluuurrrdddddrurulurulurululdluldluldldrdldrdldrdrurdru",
    )


def whiskers_zeta() -> Construction:
    """0(01)^6 folded onto the radius-1 daisy: one chain 00 edge, 11 contacts"""
    return Construction(name="whiskers_zeta", kind=LatticeKind.TRI, word=Word.parse("0 (01)^6"), moves="wqenpempwmqw")


def whiskers_eta() -> Construction:
    """0^7 folded onto the radius-1 daisy: six chain 00 edges, 6 contacts"""
    return Construction(name="whiskers_eta", kind=LatticeKind.TRI, word=Word.parse("0^7"), moves="enqwme")


def special_words() -> Dict[str, Word]:
    """Named words with fixed lengths and zero counts"""
    return {
        "cube54": Word.parse("(0011)^12 011100"),
        "berger_leighton": Word.parse("0^16 0110 ((1100)^2 110)^3 1100110"),
        "trefoil24": Word.parse("cyc:1^2 (0^4 1^7)^2"),
        "link8": Word.parse("cyc:0^8"),
        "link56": Word.parse("cyc:0^6 1^20 0^2 1^2 0^2 1^9 0^2 1^4 0^2 1^2 0^5"),
        "trefoil70": Word.parse("cyc:1^3 0^22 1^3 0^42"),
    }


def multiset_M(m: int) -> List[Word]:
    """Three copies of (01)^4 and one 2^3 1^(9+2m), all cyclic"""
    _require(m >= 0, f"multiset_M needs m >= 0, got {m}")
    ring = Word(letters="01" * 4, cyclic=True)
    return [ring, ring, ring, Word(letters="222" + "1" * (9 + 2 * m), cyclic=True)]
