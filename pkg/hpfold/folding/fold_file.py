"""
Line-oriented fold files:

    lattice: rect2d
    word: (011)^3 1^10 0110 110
    moves: urdrdldrr u^4 l^4 dd ldr dru
    closed: false
    start: 0,0,0

`start` is optional and defaults to the origin; `#` starts a comment line.
Files written here use flat digit and move strings, so reading a written file
and writing it again gives the same text.
"""
import logging
from pathlib import Path
from typing import Dict, Tuple, Union

from hpfold.errors import InputError
from hpfold.folding.fold import Fold
from hpfold.lattice import ORIGIN, LatticeKind, get_spec
from hpfold.words import Word

logger = logging.getLogger(__name__)

REQUIRED_KEYS = ("lattice", "word", "moves", "closed")
OPTIONAL_KEYS = ("start",)


def _parse_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise InputError(f"Expected true or false, got {value!r}")


def _parse_site(value: str) -> Tuple[int, int, int]:
    parts = [p.strip() for p in value.strip().strip("()").split(",")]
    try:
        coords = [int(p) for p in parts]
    except ValueError:
        raise InputError(f"Malformed site {value!r}")
    if len(coords) == 2:
        coords.append(0)
    if len(coords) != 3:
        raise InputError(f"Site needs 2 or 3 coordinates, got {value!r}")
    return coords[0], coords[1], coords[2]


def parse_fold_text(text: str) -> Tuple[Fold, Word]:
    """Parse fold file text into a fold and its word"""
    fields: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise InputError(f"Line {lineno}: expected 'key: value', got {raw!r}")
        key, value = line.split(":", 1)
        key = key.strip().lower()
        if key not in REQUIRED_KEYS + OPTIONAL_KEYS:
            raise InputError(f"Line {lineno}: unknown key {key!r}")
        if key in fields:
            raise InputError(f"Line {lineno}: duplicate key {key!r}")
        fields[key] = value.strip()

    missing = [k for k in REQUIRED_KEYS if k not in fields]
    if missing:
        raise InputError(f"Fold file is missing {missing}")

    kind = get_spec(fields["lattice"]).kind
    word = Word.parse(fields["word"])
    start = _parse_site(fields["start"]) if "start" in fields else ORIGIN
    fold = Fold.parse(kind, fields["moves"], closed=_parse_bool(fields["closed"]), start=start)
    return fold, word


def format_fold_text(f: Fold, w: Word) -> str:
    lines = [
        f"lattice: {LatticeKind(f.kind).value}",
        f"word: {w}",
        f"moves: {f.moves}",
        f"closed: {'true' if f.closed else 'false'}",
    ]
    if f.start != ORIGIN:
        lines.append(f"start: {','.join(str(c) for c in f.start)}")
    return "\n".join(lines) + "\n"


def read_fold_file(path: Union[str, Path]) -> Tuple[Fold, Word]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read fold file {path}: {e}")
    logger.debug(f"Reading fold file {path}")
    return parse_fold_text(text)


def write_fold_file(path: Union[str, Path], f: Fold, w: Word) -> Path:
    path = Path(path)
    path.parent.mkdir(exist_ok=True, parents=True)
    path.write_text(format_fold_text(f, w), encoding="utf-8")
    logger.info(f"Wrote fold file {path}")
    return path
