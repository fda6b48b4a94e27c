import logging
from dataclasses import dataclass
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, select_autoescape

from app.config import settings
from app.exceptions import DimensionMismatchError, MulticubeError
from app.models.cube import MulCube
from app.models.digits import DigitConfig
from app.models.lattice import Prebasis
from app.models.tessellation import Patch
from app.schemas.cube import FaceLabelSchema, TileSchema, TileSetResponse
from app.services.cube_service import bot, cube, face_labels, tileset, top

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"
TILES_PER_ROW = 10


@dataclass(frozen=True)
class RenderSpec:
    cell_size: int = settings.SVG_CELL_SIZE
    show_edge_labels: bool = True
    show_origin: bool = True

    def __post_init__(self):
        if self.cell_size <= 0:
            raise MulticubeError(f"Cell size must be positive, got {self.cell_size}")


def tileset_payload(n: Prebasis) -> TileSetResponse:
    tiles = []
    for c in tileset(n).cubes:
        faces = [
            FaceLabelSchema(anchor=list(s.anchor), direction=list(s.direction), label=label)
            for s, label in face_labels(c).items()
        ]
        tiles.append(TileSchema(
            value=c.value,
            bot=[bot(c, i) for i in range(n.dim)],
            top=[top(c, i) for i in range(n.dim)],
            faces=faces,
        ))
    return TileSetResponse(prebasis=list(n.n), base=n.base, tiles=tiles)


class RenderService:
    """Draws tiles, patches and space-time diagrams as SVG or plain text."""

    def __init__(self):
        self.env = Environment(
            loader=FileSystemLoader(str(TEMPLATE_DIR)),
            autoescape=select_autoescape(["svg", "j2"]),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    @staticmethod
    def _require_planar(d: int) -> None:
        if d > 2:
            raise DimensionMismatchError(f"Only dimensions 1 and 2 can be drawn, got {d}")

    def _edge_labels(self, c: MulCube, x: int, y: int, size: int) -> list[dict]:
        """Left/right carry axis 0, bottom/top carry axis 1."""
        inset = max(size // 8, 1)
        middle = size // 2
        labels = [
            {"x": x + inset, "y": y + middle, "text": bot(c, 0)},
            {"x": x + size - inset, "y": y + middle, "text": top(c, 0)},
        ]
        if c.dim == 2:
            labels.append({"x": x + middle, "y": y + size - inset, "text": bot(c, 1)})
            labels.append({"x": x + middle, "y": y + inset, "text": top(c, 1)})
        return labels

    def _svg(self, cells: list[dict], spec: RenderSpec, origin: dict | None) -> str:
        size = spec.cell_size
        if cells:
            min_x = min(cell["x"] for cell in cells)
            min_y = min(cell["y"] for cell in cells)
            width = max(cell["x"] for cell in cells) + size - min_x
            height = max(cell["y"] for cell in cells) + size - min_y
        else:
            min_x = min_y = 0
            width = height = size
        pad = size // 4
        template = self.env.get_template("grid.svg.j2")
        return template.render(
            cells=cells,
            size=size,
            min_x=min_x - pad,
            min_y=min_y - pad,
            width=width + 2 * pad,
            height=height + 2 * pad,
            value_font=max(size // 3, 6),
            edge_font=max(size // 6, 4),
            origin=origin,
        )

    def _cell(self, c: MulCube, pos: tuple[int, ...], x: int, y: int, spec: RenderSpec) -> dict:
        size = spec.cell_size
        return {
            "pos": ",".join(str(p) for p in pos),
            "x": x,
            "y": y,
            "cx": x + size // 2,
            "cy": y + size // 2,
            "value": c.value,
            "labels": self._edge_labels(c, x, y, size) if spec.show_edge_labels else [],
        }

    def tiles_svg(self, n: Prebasis, spec: RenderSpec = RenderSpec()) -> str:
        self._require_planar(n.dim)
        gap = spec.cell_size // 4
        cells = []
        for c in tileset(n).cubes:
            row, col = divmod(c.value, TILES_PER_ROW)
            x = col * (spec.cell_size + gap)
            y = row * (spec.cell_size + gap)
            cells.append(self._cell(c, (c.value,), x, y, spec))
        return self._svg(cells, spec, None)

    def tiles_ascii(self, n: Prebasis) -> str:
        self._require_planar(n.dim)
        width = len(str(n.base - 1))
        blocks = []
        for c in tileset(n).cubes:
            upper = str(top(c, 1)) if n.dim == 2 else ""
            lower = str(bot(c, 1)) if n.dim == 2 else ""
            middle = f"{bot(c, 0):>{width}}[{c.value:^{width}}]{top(c, 0):<{width}}"
            blocks.append([
                f"{upper:^{len(middle)}}",
                middle,
                f"{lower:^{len(middle)}}",
            ])
        lines = []
        for start in range(0, len(blocks), TILES_PER_ROW):
            chunk = blocks[start:start + TILES_PER_ROW]
            for i in range(3):
                lines.append("  ".join(block[i] for block in chunk).rstrip())
        return "\n".join(lines) + "\n"

    def patch_svg(self, patch: Patch, spec: RenderSpec = RenderSpec()) -> str:
        """Cell z is drawn with its upper-right corner at z, y pointing up."""
        self._require_planar(patch.dim)
        size = spec.cell_size
        cells = []
        for z, value in sorted(patch.cells.items()):
            zx = z[0]
            zy = z[1] if patch.dim == 2 else 0
            cells.append(self._cell(cube(patch.prebasis, value), z, (zx - 1) * size, -zy * size, spec))
        origin = {"x": 0, "y": 0, "r": max(size // 12, 2)} if spec.show_origin else None
        logger.debug(f"Rendered {len(cells)} cells as SVG")
        return self._svg(cells, spec, origin)

    def patch_ascii(self, patch: Patch) -> str:
        """Rows from the top (largest second coordinate) down; holes as '.'."""
        self._require_planar(patch.dim)
        bounds = patch.bounds()
        if bounds is None:
            return "\n"
        lo, hi = bounds
        width = len(str(patch.prebasis.base - 1))
        rows_range = range(hi[1], lo[1] - 1, -1) if patch.dim == 2 else [None]
        lines = []
        for y in rows_range:
            row = []
            for x in range(lo[0], hi[0] + 1):
                pos = (x, y) if y is not None else (x,)
                value = patch.cells.get(pos)
                row.append(f"{'.' if value is None else value:>{width}}")
            lines.append(" ".join(row))
        return "\n".join(lines) + "\n"

    def spacetime_ascii(self, rows: list[DigitConfig]) -> str:
        """One line per time step on a shared index window; '|' sits between index 0 and 1."""
        if not rows:
            return "\n"
        lo = min(min(x.start, 0) for x in rows)
        hi = max(max(x.tail_start + 2 * len(x.tail), 1) for x in rows)
        width = len(str(rows[0].base - 1))
        lines = []
        for t, x in enumerate(rows):
            left = " ".join(f"{x.digit_at(i):>{width}}" for i in range(lo, 1))
            right = " ".join(f"{x.digit_at(i):>{width}}" for i in range(1, hi + 1))
            marker = "..." if x.tail else ""
            lines.append(f"t={t:<3} {left} | {right}{marker}")
        return "\n".join(lines) + "\n"


render_service = RenderService()
