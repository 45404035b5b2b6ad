"""Simplicial complexes and the two functors linking them to posets:
the face poset of a complex and the order complex of a poset.

Simplices are stored as vertex-id tuples sorted lexicographically; that
sorted order is the canonical orientation used by every boundary
operator.  Face-poset element identifiers join the sorted vertex list
with "|" so reports diff cleanly.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import EmptyComplex, MalformedLine
from .posets import GradedPoset, Poset

Simplex = tuple[str, ...]


class SimplicialComplex:
    """An abstract simplicial complex, closed under faces on construction."""

    def __init__(self, simplices: Iterable[Sequence[str]]):
        closed: set[Simplex] = set()
        for s in simplices:
            s = tuple(sorted(str(v) for v in s))
            if len(set(s)) != len(s):
                raise MalformedLine(f"repeated vertex in simplex {s}")
            for k in range(1, len(s) + 1):
                closed.update(combinations(s, k))
        self.simplices: dict[int, tuple[Simplex, ...]] = {}
        if closed:
            top = max(len(s) for s in closed) - 1
            for d in range(top + 1):
                self.simplices[d] = tuple(sorted(s for s in closed if len(s) == d + 1))
        self.vertices: tuple[str, ...] = tuple(v for (v,) in self.simplices.get(0, ()))
        self.maximal: tuple[Simplex, ...] = tuple(
            s for s in sorted(closed, key=lambda s: (len(s), s))
            if not any(s != t and set(s) <= set(t) for t in closed)
        )

    # -- queries ----------------------------------------------------------

    def dimension(self) -> int:
        if not self.simplices:
            raise EmptyComplex("the empty complex has no dimension")
        return max(self.simplices)

    def is_empty(self) -> bool:
        return not self.simplices

    def n_simplices(self, dim: int) -> tuple[Simplex, ...]:
        return self.simplices.get(dim, ())

    def all_simplices(self) -> list[Simplex]:
        out: list[Simplex] = []
        for d in sorted(self.simplices):
            out.extend(self.simplices[d])
        return out

    def __contains__(self, simplex: Sequence[str]) -> bool:
        s = tuple(sorted(simplex))
        return s in set(self.simplices.get(len(s) - 1, ()))

    def contains_complex(self, other: "SimplicialComplex") -> bool:
        for d, sims in other.simplices.items():
            mine = set(self.simplices.get(d, ()))
            if not set(sims) <= mine:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.simplices == other.simplices

    def __hash__(self):
        return hash(tuple(sorted(self.simplices.items())))

    def __repr__(self):
        counts = [len(self.simplices[d]) for d in sorted(self.simplices)]
        return f"SimplicialComplex(f-vector {counts})"

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(s) for d, s in self.simplices.items())


def simplex_id(simplex: Sequence[str]) -> str:
    return "|".join(sorted(simplex))


def parse_simplicial_complex(text: str) -> SimplicialComplex:
    """One maximal simplex per nonempty line, vertices whitespace-separated."""
    maximal = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        vertices = line.split()
        if len(set(vertices)) != len(vertices):
            raise MalformedLine(f"line {lineno}: repeated vertex in {line!r}")
        maximal.append(vertices)
    if not maximal:
        raise EmptyComplex("no simplices found in input")
    return SimplicialComplex(maximal)


def serialize_simplicial_complex(complex: SimplicialComplex) -> str:
    return "\n".join(" ".join(s) for s in complex.maximal) + "\n"


def face_poset(complex: SimplicialComplex) -> GradedPoset:
    """The poset of simplices ordered by inclusion; degree = dimension.

    The result carries `simplex_of`, mapping element ids back to vertex
    tuples; the cellular module uses it for its simplicial fast path.
    """
    elements = []
    simplex_of: dict[str, Simplex] = {}
    for d in sorted(complex.simplices):
        for s in complex.simplices[d]:
            name = simplex_id(s)
            elements.append(name)
            simplex_of[name] = s
    covers = []
    for d in sorted(complex.simplices):
        if d == 0:
            continue
        for s in complex.simplices[d]:
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                covers.append((simplex_id(face), simplex_id(s)))
    poset = Poset(elements, covers).as_graded()
    poset.analysis_cache["simplex_of"] = simplex_of
    return poset


def order_complex(poset: Poset) -> SimplicialComplex:
    """The complex of nonempty chains of the poset."""
    return SimplicialComplex(poset.chains())


def subdivision(poset: Poset) -> GradedPoset:
    """First subdivision: the face poset of the order complex."""
    return face_poset(order_complex(poset))
