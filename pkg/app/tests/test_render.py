from fractions import Fraction

import pytest

from app.exceptions import DimensionMismatchError, MulticubeError
from app.models.automata import RationalMultiplier
from app.models.lattice import Prebasis
from app.models.tessellation import Patch
from app.services.automata_service import run
from app.services.exact_arith import config_of_real
from app.services.render_service import RenderSpec, render_service, tileset_payload
from app.tests.conftest import N_25


class TestTileSetPayload:
    def test_tile_count(self):
        """Test that the payload lists every tile once."""
        payload = tileset_payload(N_25)
        assert payload.base == 10
        assert [t.value for t in payload.tiles] == list(range(10))

    def test_edge_labels_of_seven(self):
        """Test bot and top of tile 7."""
        tile = tileset_payload(N_25).tiles[7]
        assert tile.bot == [3, 1]
        assert tile.top == [2, 1]
        assert len(tile.faces) == 9


class TestTilesRendering:
    def test_svg_is_deterministic(self):
        """Test that two renders of T_(2,5) are identical."""
        first = render_service.tiles_svg(N_25)
        assert first == render_service.tiles_svg(N_25)
        assert first.startswith("<svg")
        assert first.count('class="cell"') == 10

    def test_svg_without_edge_labels(self):
        """Test that edge labels can be switched off."""
        svg = render_service.tiles_svg(N_25, RenderSpec(show_edge_labels=False))
        assert 'class="edge"' not in svg

    def test_ascii_tiles(self):
        """Test the text form of tile 7 with its four edge labels."""
        text = render_service.tiles_ascii(N_25)
        lines = text.splitlines()
        assert len(lines) == 3
        assert "3[7]2" in lines[1]

    def test_one_dimensional_tiles(self):
        """Test that 1-dimensional tiles have no upper or lower labels."""
        lines = render_service.tiles_ascii(Prebasis((3,))).splitlines()
        assert lines[0] == ""
        assert "0[2]0" in lines[1]

    def test_three_dimensions_refused(self):
        """Test that 3-dimensional tile sets are not drawn."""
        with pytest.raises(DimensionMismatchError):
            render_service.tiles_svg(Prebasis((2, 3, 5)))

    def test_invalid_cell_size(self):
        """Test that the cell size must be positive."""
        with pytest.raises(MulticubeError):
            RenderSpec(cell_size=0)


class TestPatchRendering:
    def test_grid_1638_ascii(self, patch_1638):
        """Test that the 1638 patch prints as its grid."""
        assert render_service.patch_ascii(patch_1638) == "4 9 9 8\n0 1 3 7\n8 6 2 5\n1 3 6 3\n"

    def test_holes(self, holed_patch):
        """Test that holes print as dots."""
        lines = render_service.patch_ascii(holed_patch).splitlines()
        assert lines[0] == "0 0 0 0"
        assert lines[1] == "0 . . 2"
        assert lines[2] == "0 . . 0"

    def test_empty_patch(self):
        """Test that an empty patch prints an empty line."""
        assert render_service.patch_ascii(Patch(prebasis=N_25)) == "\n"

    def test_grid_1638_svg(self, patch_1638):
        """Test that every cell of the patch is drawn at its position."""
        svg = render_service.patch_svg(patch_1638)
        assert svg.count('class="cell"') == 16
        assert 'data-pos="-3,0"' in svg
        assert 'class="origin"' in svg
        assert svg == render_service.patch_svg(patch_1638)

    def test_three_dimensional_patch(self):
        """Test that 3-dimensional patches are not drawn."""
        patch = Patch(prebasis=Prebasis((2, 3, 5)), cells={(0, 0, 0): 1})
        with pytest.raises(DimensionMismatchError):
            render_service.patch_ascii(patch)


class TestSpaceTime:
    def test_powers_of_three(self):
        """Test the space-time diagram of 1, 3, 9, 27 in base 6."""
        rows = run(RationalMultiplier(Fraction(3), 6), config_of_real(Fraction(1), 6), 3)
        lines = render_service.spacetime_ascii(rows).splitlines()
        assert len(lines) == 4
        assert all(line.startswith(f"t={t}") for t, line in enumerate(lines))
        assert lines[0].endswith("0 1 | 0")
        assert lines[3].endswith("4 3 | 0")

    def test_periodic_marker(self):
        """Test that periodic rows are marked as continuing."""
        text = render_service.spacetime_ascii([config_of_real(Fraction(1, 3), 10)])
        assert text.rstrip().endswith("...")
