"""
Embedding files: one chain per line,

    chain 01010101: (0,0,1);(0,1,1);(0,1,0);...

Chains are cyclic, so the closing step from the last site back to the first
is implied. Blank lines and lines starting with `#` are skipped.
"""
import logging
import re
from pathlib import Path
from typing import List, Union

from hpfold.errors import InputError
from hpfold.multichain.embedding import chain_from_word
from hpfold.multichain.models import Chain, Embedding
from hpfold.words import Word

logger = logging.getLogger(__name__)

_SITE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_embedding_text(text: str) -> Embedding:
    chains: List[Chain] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not line.startswith("chain ") or ":" not in line:
            raise InputError(f"Line {lineno}: expected 'chain <word>: (x,y,z);...', got {raw!r}")
        head, body = line[len("chain "):].split(":", 1)
        word = Word.parse(head)
        cells = [c.strip() for c in body.split(";") if c.strip()]
        sites = []
        for cell in cells:
            match = _SITE.fullmatch(cell)
            if match is None:
                raise InputError(f"Line {lineno}: malformed site {cell!r}")
            sites.append(tuple(int(g) for g in match.groups()))
        chains.append(chain_from_word(word, sites))
    if not chains:
        raise InputError("Embedding file has no chains")
    return Embedding(chains=chains)


def format_embedding_text(e: Embedding) -> str:
    lines = []
    for chain in e.chains:
        cells = ";".join(f"({x},{y},{z})" for x, y, z in chain.sites)
        lines.append(f"chain {chain.word.letters}: {cells}")
    return "\n".join(lines) + "\n"


def read_embedding_file(path: Union[str, Path]) -> Embedding:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read embedding file {path}: {e}")
    return parse_embedding_text(text)


def write_embedding_file(path: Union[str, Path], e: Embedding) -> Path:
    path = Path(path)
    path.parent.mkdir(exist_ok=True, parents=True)
    path.write_text(format_embedding_text(e), encoding="utf-8")
    logger.info(f"Wrote embedding file {path}")
    return path
