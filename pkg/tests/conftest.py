from pathlib import Path

import pytest

from artinkit.graph import CoxeterGraph, load_graph

GRAPHS = Path(__file__).resolve().parent.parent / "graphs"


def bundled(name: str) -> CoxeterGraph:
    return load_graph(GRAPHS / f"{name}.json")


@pytest.fixture(scope="session")
def graphs_dir() -> Path:
    return GRAPHS


@pytest.fixture(scope="session")
def A2():
    return bundled("A2")


@pytest.fixture(scope="session")
def A3():
    return bundled("A3")


@pytest.fixture(scope="session")
def D4():
    return bundled("D4")


@pytest.fixture(scope="session")
def cyc4():
    return bundled("A3_affine")


@pytest.fixture(scope="session")
def K33():
    return bundled("K33")


def two_vertex(m) -> CoxeterGraph:
    return CoxeterGraph.from_edges(["s", "t"], [] if m == 2 else [("s", "t", m)])
