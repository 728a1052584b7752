from pathlib import Path

import pytest

from treebij.core import PlaneTree, SlottedTree

DATA = Path(__file__).parent / "data"


def golden(name: str) -> str:
    return (DATA / name).read_text().strip()


def _colors(whites, n):
    return {v: ("w" if v in whites else "b") for v in range(1, n + 1)}


@pytest.fixture
def flip_input():
    # colored binary tree with right-improper vertices 3, 6, 7
    return SlottedTree.binary(
        3,
        left={3: 7, 7: 4, 5: 2},
        right={3: 6, 7: 5, 6: 1, 1: 8, 5: 9},
        color=_colors({1, 9}, 9),
    )


@pytest.fixture
def flip_output():
    return SlottedTree.binary(
        3,
        left={3: 6, 6: 1, 7: 5, 5: 2},
        right={3: 7, 1: 8, 7: 4, 5: 9},
        color=_colors({1, 3, 6, 7, 9}, 9),
    )


@pytest.fixture
def phi_output():
    return PlaneTree(
        10,
        {10: [3, 7, 4], 3: [6], 6: [1, 8], 7: [5, 9], 5: [2]},
        color=_colors({1, 3, 6, 7, 9}, 10),
    )
