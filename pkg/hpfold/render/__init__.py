from .svg import SVG
from .draw import letter_color, plane_point, render_diagram_svg, render_embedding_svg, render_fold_svg
from .ascii import render_fold_ascii

__all__ = [
    "SVG",
    "letter_color",
    "plane_point",
    "render_diagram_svg",
    "render_embedding_svg",
    "render_fold_svg",
    "render_fold_ascii",
]
