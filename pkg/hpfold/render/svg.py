"""
A minimal SVG canvas. Drawing calls record items and grow the bounding box;
render() pads the box and fills the canvas template.
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from jinja2 import Environment, FileSystemLoader, select_autoescape

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).resolve().parent / "templates"

_env = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    autoescape=select_autoescape(["svg", "xml", "j2"]),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def _num(value: float) -> str:
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


class SVG:
    def __init__(self, title: str = ""):
        self.title = title
        self.min_x: Optional[float] = None
        self.max_x: Optional[float] = None
        self.min_y: Optional[float] = None
        self.max_y: Optional[float] = None
        self.items: List[Dict[str, str]] = []

    def require(self, x: float, y: float) -> None:
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x = min(self.min_x, x)
            self.max_x = max(self.max_x, x)
            self.min_y = min(self.min_y, y)
            self.max_y = max(self.max_y, y)

    def line(self, points: Sequence[Tuple[float, float]], color: str = "#000000",
             width: float = 2.0, dash: str = "") -> None:
        for x, y in points:
            self.require(x, y)
        self.items.append({
            "kind": "line",
            "points": " ".join(f"{_num(x)},{_num(y)}" for x, y in points),
            "color": color,
            "width": _num(width),
            "dash": dash,
        })

    def circle(self, x: float, y: float, radius: float, fill: str = "#ffffff") -> None:
        self.require(x - radius, y - radius)
        self.require(x + radius, y + radius)
        self.items.append({"kind": "circle", "x": _num(x), "y": _num(y), "r": _num(radius), "fill": fill})

    def text(self, x: float, y: float, text: str, color: str = "#000000", size: float = 8.0) -> None:
        self.require(x, y)
        self.items.append({
            "kind": "text", "x": _num(x), "y": _num(y), "text": text, "color": color, "size": _num(size),
        })

    def render(self) -> str:
        """The document as text; an empty canvas renders as a 1x1 box"""
        if self.min_x is None:
            self.require(0.0, 0.0)
        pad = max(self.max_x - self.min_x, self.max_y - self.min_y, 1.0) * 0.1
        template = _env.get_template("canvas.svg.j2")
        return template.render(
            title=self.title,
            min_x=_num(self.min_x - pad),
            min_y=_num(self.min_y - pad),
            width=_num(self.max_x - self.min_x + 2 * pad),
            height=_num(self.max_y - self.min_y + 2 * pad),
            items=self.items,
        )

    def save(self, filename) -> None:
        Path(filename).write_text(self.render(), encoding="utf-8")
        logger.info(f"Wrote SVG with {len(self.items)} items to {filename}")
