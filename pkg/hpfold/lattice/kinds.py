"""
The four lattice graphs: tags, move alphabets and basic invariants
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from hpfold.errors import InputError

Site = Tuple[int, int, int]
Vector = Tuple[int, int, int]

ORIGIN: Site = (0, 0, 0)


class LatticeKind(str, Enum):
    """Lattice tags used in files, flags and models"""
    RECT2D = "rect2d"
    RECT3D = "rect3d"
    TRI = "tri"
    HEX = "hex"


@dataclass(frozen=True)
class LatticeSpec:
    """Static description of one lattice"""
    kind: LatticeKind
    alphabet: str  # move letters in tie-break order
    coordination: int
    bipartite: bool
    planar: bool
    steps: Dict[str, Optional[Vector]] = field(default_factory=dict)  # None = parity dependent


LATTICES: Dict[LatticeKind, LatticeSpec] = {
    LatticeKind.RECT2D: LatticeSpec(
        kind=LatticeKind.RECT2D,
        alphabet="uldr",
        coordination=4,
        bipartite=True,
        planar=True,
        steps={"u": (0, 1, 0), "l": (-1, 0, 0), "d": (0, -1, 0), "r": (1, 0, 0)},
    ),
    LatticeKind.RECT3D: LatticeSpec(
        kind=LatticeKind.RECT3D,
        alphabet="uldrfb",
        coordination=6,
        bipartite=True,
        planar=False,
        steps={
            "u": (0, 1, 0), "l": (-1, 0, 0), "d": (0, -1, 0),
            "r": (1, 0, 0), "f": (0, 0, 1), "b": (0, 0, -1),
        },
    ),
    LatticeKind.TRI: LatticeSpec(
        kind=LatticeKind.TRI,
        alphabet="ewpqmn",
        coordination=6,
        bipartite=False,
        planar=True,
        # axial coordinates (q, r)
        steps={
            "e": (1, 0, 0), "w": (-1, 0, 0), "p": (0, 1, 0),
            "q": (0, -1, 0), "m": (-1, 1, 0), "n": (1, -1, 0),
        },
    ),
    LatticeKind.HEX: LatticeSpec(
        kind=LatticeKind.HEX,
        alphabet="lrv",
        coordination=3,
        bipartite=True,
        planar=True,
        # brick wall: v goes up when x+y is even, down when odd
        steps={"l": (-1, 0, 0), "r": (1, 0, 0), "v": None},
    ),
}


def get_spec(kind) -> LatticeSpec:
    """Look up a lattice by enum member or tag string"""
    try:
        return LATTICES[LatticeKind(kind)]
    except ValueError:
        raise InputError(f"Unknown lattice {kind!r}; expected one of {[k.value for k in LatticeKind]}")
