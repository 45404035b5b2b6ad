from __future__ import annotations

import pytest

from posetmorse import (
    Matching,
    build_poset,
    face_poset,
    parse_simplicial_complex,
    validate_matching,
)

RP2_TEXT = "\n".join([
    "1 2 5", "1 2 6", "1 3 4", "1 3 5", "1 4 6",
    "2 3 4", "2 3 6", "2 4 5", "3 5 6", "4 5 6",
])

MOBIUS_TEXT = "1 2 3\n2 3 4\n3 4 5\n1 4 5\n1 2 5\n"


def make_t3():
    return build_poset(
        ["v1", "v2", "v3", "e12", "e13", "e23"],
        [("v1", "e12"), ("v2", "e12"), ("v1", "e13"),
         ("v3", "e13"), ("v2", "e23"), ("v3", "e23")],
    )


@pytest.fixture(scope="session")
def t3():
    return make_t3()


@pytest.fixture(scope="session")
def t3_m1(t3) -> Matching:
    return validate_matching(t3, [("v1", "e12"), ("v2", "e23")])


@pytest.fixture(scope="session")
def t3_m2(t3) -> Matching:
    return validate_matching(t3, [("v1", "e12"), ("v2", "e23"), ("v3", "e13")])


@pytest.fixture(scope="session")
def t3_empty_matching(t3) -> Matching:
    return validate_matching(t3, [])


@pytest.fixture(scope="session")
def triangle_boundary():
    return parse_simplicial_complex("1 2\n2 3\n1 3\n")


@pytest.fixture(scope="session")
def full_triangle():
    return parse_simplicial_complex("1 2 3\n")


@pytest.fixture(scope="session")
def tetra_boundary():
    return parse_simplicial_complex("1 2 3\n1 2 4\n1 3 4\n2 3 4\n")


@pytest.fixture(scope="session")
def rp2():
    return parse_simplicial_complex(RP2_TEXT)


@pytest.fixture(scope="session")
def rp2_poset(rp2):
    return face_poset(rp2)


@pytest.fixture(scope="session")
def rp2_star5_matching(rp2_poset) -> Matching:
    # ring of the five triangles around vertex 5, matched to their spokes
    return validate_matching(rp2_poset, [
        ("2|5", "2|4|5"), ("4|5", "4|5|6"), ("5|6", "3|5|6"),
        ("3|5", "1|3|5"), ("1|5", "1|2|5"),
    ])


@pytest.fixture(scope="session")
def mobius():
    return parse_simplicial_complex(MOBIUS_TEXT)


@pytest.fixture(scope="session")
def mobius_poset(mobius):
    return face_poset(mobius)


@pytest.fixture(scope="session")
def mobius_ring_matching(mobius_poset) -> Matching:
    # orientation-reversing ring of all five triangles along shared edges
    return validate_matching(mobius_poset, [
        ("2|3", "2|3|4"), ("3|4", "3|4|5"), ("4|5", "1|4|5"),
        ("1|5", "1|2|5"), ("1|2", "1|2|3"),
    ])
