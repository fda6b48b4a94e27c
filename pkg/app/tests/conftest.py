import random
from fractions import Fraction

import pytest
from fastapi.testclient import TestClient

from app.main import app
from app.models.digits import DigitConfig
from app.models.lattice import Prebasis
from app.models.tessellation import LatticePath, Patch
from app.services.tessellation_service import from_rational

client = TestClient(app)

N_25 = Prebasis((2, 5))

# Tessellation of 1638 over (2,5) on [-3,0]^2, top row first; column j is z1 = j - 3, row i is z2 = -i.
GRID_1638_ROWS = [
    [4, 9, 9, 8],
    [0, 1, 3, 7],
    [8, 6, 2, 5],
    [1, 3, 6, 3],
]

# Tessellation of 64 over (2,5) on [-4,1]^2, top row (z2 = 1) first.
GRID_64_ROWS = [
    [0, 0, 0, 0, 0, 0],
    [4, 8, 6, 2, 4, 8],
    [0, 1, 3, 6, 2, 5],
    [0, 0, 0, 1, 2, 5],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0],
]

HOLE = {(-1, 0), (0, 0), (-1, -1), (0, -1)}

HOLE_CYCLE = (
    (0, 0), (-1, 0), (-2, 0), (-2, -1), (-2, -2), (-1, -2), (0, -2), (0, -1), (0, 0),
)


def grid_cells(rows: list[list[int]], left: int, top: int) -> dict[tuple[int, int], int]:
    """Cells of a printed grid whose top-left entry sits at (left, top)."""
    return {
        (left + j, top - i): value
        for i, row in enumerate(rows)
        for j, value in enumerate(row)
    }


def random_config(rng: random.Random, base: int) -> DigitConfig:
    """Finite-support or periodic config with a short core."""
    digits = tuple(rng.randrange(base) for _ in range(rng.randint(0, 5)))
    tail = tuple(rng.randrange(base) for _ in range(rng.randint(1, 3))) if rng.random() < 0.5 else ()
    return DigitConfig(base=base, start=rng.randint(-3, 3), digits=digits, tail=tail)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(0, 2000), rng.randint(1, 60))


@pytest.fixture
def rng():
    """Seeded generator so property suites are reproducible."""
    return random.Random(20240615)


@pytest.fixture
def tessellation_64():
    return from_rational(N_25, Fraction(64))


@pytest.fixture
def tessellation_1638():
    return from_rational(N_25, Fraction(1638))


@pytest.fixture
def patch_1638():
    return Patch(prebasis=N_25, cells=grid_cells(GRID_1638_ROWS, left=-3, top=0))


@pytest.fixture
def holed_patch():
    cells = {
        (x, y): 0
        for x in range(-2, 2)
        for y in range(-2, 2)
        if (x, y) not in HOLE
    }
    cells[(1, 0)] = 2
    return Patch(prebasis=N_25, cells=cells)


@pytest.fixture
def hole_cycle():
    return LatticePath(HOLE_CYCLE)
