import gzip
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from indroots.graph import Graph

DATA = Path(__file__).parent / "data"

settings.register_profile("indroots", deadline=None)
settings.load_profile("indroots")

# a 14-vertex tree, vertices labelled 1..14
FIG4_EDGES = [(1, 8), (1, 14), (14, 2), (14, 3), (14, 4), (14, 5), (2, 9), (3, 10),
              (4, 11), (5, 12), (5, 13), (12, 6), (13, 7)]


def tree_14() -> Graph:
    return Graph.from_edges(14, [(a - 1, b - 1) for a, b in FIG4_EDGES])


def corpus_lines(name: str) -> list[str]:
    with gzip.open(DATA / name, "rt", encoding="ascii") as fh:
        return [line.strip() for line in fh if line.strip()]


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def random_graph(rng, n, p=0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


@pytest.fixture
def tree14():
    return tree_14()
