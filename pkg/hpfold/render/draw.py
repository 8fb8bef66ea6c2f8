"""
SVG drawings of folds, multichain embeddings and knot diagrams
"""
import logging
import math
from typing import List, Optional, Sequence, Tuple

from hpfold.config import settings
from hpfold.folding import Fold, contacts, sites
from hpfold.lattice import LatticeKind, Site
from hpfold.multichain import Embedding, potential_contacts
from hpfold.render.svg import SVG
from hpfold.topology import Diagram
from hpfold.words import Word

logger = logging.getLogger(__name__)

HYDROPHOBIC_COLOR = "#d62728"
POLAR_COLOR = "#1f77b4"
BACKBONE_COLOR = "#333333"
CONTACT_COLOR = "#999999"
CHAIN_PALETTE = ["#333333", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"]

ISO_COS = 0.866
ISO_SIN = 0.5
TRI_HEIGHT = math.sqrt(3) / 2
DIAGRAM_EXTENT = 16  # lattice pitches across the longer side of a diagram
GAP = 0.3  # pitches left blank on each side of an under-crossing


def letter_color(letter: str) -> str:
    return POLAR_COLOR if letter == "1" else HYDROPHOBIC_COLOR


def plane_point(kind: LatticeKind, site: Site, pitch: float) -> Tuple[float, float]:
    """Drawing coordinates of a lattice site; SVG y grows downwards"""
    x, y, z = site
    if kind == LatticeKind.TRI:
        return (x + y * 0.5) * pitch, -y * TRI_HEIGHT * pitch
    if kind == LatticeKind.RECT3D:
        return (x - z) * ISO_COS * pitch, (-y + (x + z) * ISO_SIN) * pitch
    return x * pitch, -y * pitch


def _draw_sites(canvas: SVG, points: Sequence[Tuple[float, float]], letters: str, pitch: float) -> None:
    for i, ((px, py), letter) in enumerate(zip(points, letters)):
        canvas.circle(px, py, pitch * 0.3, fill=letter_color(letter))
        canvas.text(px, py, str(i), color="#ffffff", size=pitch * 0.3)


def render_fold_svg(fold: Fold, word: Word, show_contacts: bool = True, pitch: Optional[int] = None) -> str:
    """
    Draw a fold: backbone bonds, dashed contacts, and sites coloured by letter
    (0 and 2 red, 1 blue) and labelled with their word index.
    """
    pitch = pitch or settings.SVG_PITCH
    pairs = contacts(fold, word)
    positions = sites(fold)
    points = [plane_point(fold.kind, s, pitch) for s in positions]
    canvas = SVG(title=f"{fold.kind.value} {word}")

    if show_contacts:
        for i, j in pairs:
            canvas.line([points[i], points[j]], color=CONTACT_COLOR, width=pitch / 16, dash="3,3")
    backbone = points + [points[0]] if fold.closed else points
    canvas.line(backbone, color=BACKBONE_COLOR, width=pitch / 8)
    _draw_sites(canvas, points, word.letters, pitch)
    logger.debug(f"Rendered {fold.kind.value} fold of length {len(word)} with {len(pairs)} contacts")
    return canvas.render()


def render_embedding_svg(embedding: Embedding, show_contacts: bool = False, pitch: Optional[int] = None) -> str:
    """Draw every chain of an embedding in the isometric projection, one backbone colour per chain"""
    pitch = pitch or settings.SVG_PITCH
    canvas = SVG(title=f"embedding of {len(embedding.chains)} chains")
    drawn = [[plane_point(LatticeKind.RECT3D, s, pitch) for s in chain.sites] for chain in embedding.chains]

    if show_contacts:
        for a, b in sorted(potential_contacts(embedding)):
            canvas.line(
                [plane_point(LatticeKind.RECT3D, a, pitch), plane_point(LatticeKind.RECT3D, b, pitch)],
                color=CONTACT_COLOR, width=pitch / 16, dash="3,3",
            )
    for k, points in enumerate(drawn):
        canvas.line(points + points[:1], color=CHAIN_PALETTE[k % len(CHAIN_PALETTE)], width=pitch / 8)
    for chain, points in zip(embedding.chains, drawn):
        _draw_sites(canvas, points, chain.word.letters, pitch)
    return canvas.render()


def _visible_pieces(start: Tuple[float, float], end: Tuple[float, float],
                    cuts: List[float], gap: float) -> List[List[Tuple[float, float]]]:
    """Split a segment into the pieces left after blanking `gap` around each cut parameter"""
    length = math.hypot(end[0] - start[0], end[1] - start[1]) or 1.0
    half = gap / length
    pieces, t = [], 0.0
    for cut in sorted(cuts):
        lo = max(cut - half, 0.0)
        if lo > t:
            pieces.append((t, lo))
        t = max(t, min(cut + half, 1.0))
    if t < 1.0:
        pieces.append((t, 1.0))

    def at(s: float) -> Tuple[float, float]:
        return start[0] + s * (end[0] - start[0]), start[1] + s * (end[1] - start[1])

    return [[at(a), at(b)] for a, b in pieces]


def render_diagram_svg(diagram: Diagram, pitch: Optional[int] = None) -> str:
    """
    Draw a projected diagram with gaps in the under strand at every crossing.

    Args:
        diagram: a diagram from topology.project
        pitch: drawing unit; the longer side spans DIAGRAM_EXTENT pitches

    Returns:
        The SVG document
    """
    pitch = pitch or settings.SVG_PITCH
    flat = [p for curve in diagram.plane for p in curve]
    min_u, max_u = min(p[0] for p in flat), max(p[0] for p in flat)
    min_v, max_v = min(p[1] for p in flat), max(p[1] for p in flat)
    size = DIAGRAM_EXTENT * pitch
    su = size / max(max_u - min_u, 1)
    sv = size / max(max_v - min_v, 1)

    def to_canvas(p) -> Tuple[float, float]:
        return (p[0] - min_u) * su, (max_v - p[1]) * sv

    canvas = SVG(title=f"diagram N={diagram.n_param}, {len(diagram.crossings)} crossings")
    for ci, curve_plane in enumerate(diagram.plane):
        color = CHAIN_PALETTE[ci % len(CHAIN_PALETTE)]
        m = len(curve_plane)
        for e in range(m):
            cuts = [float(c.under_t) for c in diagram.crossings if c.under_curve == ci and c.under_edge == e]
            a, b = to_canvas(curve_plane[e]), to_canvas(curve_plane[(e + 1) % m])
            for piece in _visible_pieces(a, b, cuts, GAP * pitch):
                canvas.line(piece, color=color, width=pitch / 8)
    return canvas.render()
