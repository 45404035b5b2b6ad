"""Finite posets stored by their cover relations (Hasse diagram).

Element identifiers are opaque strings.  The declared element order fixes
every iteration order in the library, which keeps matrix layouts and
reports deterministic.  Poset values are immutable after construction and
all derived data (reachability, heights, homology) is cached lazily on
the instance.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    CycleDetected,
    DuplicateElement,
    EmptyPoset,
    NotGraded,
    UnknownElement,
)


class Poset:
    """A finite poset; `covers` holds pairs (w, x) meaning w is covered by x.

    The constructor trusts its arguments to already be a transitive
    reduction; use :func:`build_poset` for raw input.  Empty posets are
    legal values (they arise as strict down-sets) but are rejected as
    top-level inputs by :func:`build_poset`.
    """

    def __init__(self, elements: Sequence[str], covers: Iterable[tuple[str, str]]):
        self.elements = tuple(elements)
        self.covers = frozenset((str(w), str(x)) for w, x in covers)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise DuplicateElement("duplicate element identifiers")
        self._upper: dict[str, tuple[str, ...]] = {e: () for e in self.elements}
        self._lower: dict[str, tuple[str, ...]] = {e: () for e in self.elements}
        up: dict[str, list[str]] = {e: [] for e in self.elements}
        dn: dict[str, list[str]] = {e: [] for e in self.elements}
        for w, x in self.covers:
            if w not in self.index or x not in self.index:
                raise UnknownElement(f"cover ({w}, {x}) references undeclared element")
            up[w].append(x)
            dn[x].append(w)
        order = self.index
        for e in self.elements:
            self._upper[e] = tuple(sorted(up[e], key=order.__getitem__))
            self._lower[e] = tuple(sorted(dn[e], key=order.__getitem__))
        self._below: dict[str, frozenset[str]] | None = None
        self._above: dict[str, frozenset[str]] | None = None
        self._heights: dict[str, int] | None = None
        self._graded: bool | None = None
        # caches populated by other modules (homology, cellular structure)
        self.analysis_cache: dict = {}

    # -- basic queries --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: str) -> bool:
        return element in self.index

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.elements == other.elements
                and self.covers == other.covers)

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        return f"Poset({len(self.elements)} elements, {len(self.covers)} covers)"

    def require(self, element: str) -> None:
        if element not in self.index:
            raise UnknownElement(f"unknown element {element!r}")

    def upper_covers(self, element: str) -> tuple[str, ...]:
        self.require(element)
        return self._upper[element]

    def lower_covers(self, element: str) -> tuple[str, ...]:
        self.require(element)
        return self._lower[element]

    # -- reachability ----------------------------------------------------------

    def _reach(self) -> tuple[dict[str, frozenset[str]], dict[str, frozenset[str]]]:
        if self._below is None:
            below: dict[str, set[str]] = {}
            for e in self._topo_order():
                acc: set[str] = set()
                for w in self._lower[e]:
                    acc.add(w)
                    acc |= below[w]
                below[e] = acc
            self._below = {e: frozenset(s) for e, s in below.items()}
            above: dict[str, set[str]] = {e: set() for e in self.elements}
            for e, s in self._below.items():
                for w in s:
                    above[w].add(e)
            self._above = {e: frozenset(s) for e, s in above.items()}
        return self._below, self._above

    def _topo_order(self) -> list[str]:
        # covers are acyclic by construction; order by increasing height
        pending = {e: len(self._lower[e]) for e in self.elements}
        queue = [e for e in self.elements if pending[e] == 0]
        out: list[str] = []
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            out.append(e)
            for x in self._upper[e]:
                pending[x] -= 1
                if pending[x] == 0:
                    queue.append(x)
        if len(out) != len(self.elements):
            raise CycleDetected("cover relation contains a cycle")
        return out

    def strictly_below(self, element: str) -> frozenset[str]:
        self.require(element)
        return self._reach()[0][element]

    def strictly_above(self, element: str) -> frozenset[str]:
        self.require(element)
        return self._reach()[1][element]

    def less(self, a: str, b: str) -> bool:
        """True iff a < b in the partial order."""
        return a in self.strictly_below(b)

    def leq(self, a: str, b: str) -> bool:
        self.require(a)
        return a == b or self.less(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return a == b or self.less(a, b) or self.less(b, a)

    # -- heights and grading ---------------------------------------------------

    def heights(self) -> dict[str, int]:
        """height(x) = length of the longest chain ending at x."""
        if self._heights is None:
            h: dict[str, int] = {}
            for e in self._topo_order():
                lows = self._lower[e]
                h[e] = 1 + max(h[w] for w in lows) if lows else 0
            self._heights = h
        return self._heights

    def height(self, element: str | None = None) -> int:
        if element is None:
            if not self.elements:
                raise EmptyPoset("height of the empty poset is undefined")
            return max(self.heights().values())
        self.require(element)
        return self.heights()[element]

    def is_graded(self) -> bool:
        """Graded means every U_x is homogeneous; equivalently the height
        increases by exactly one along every cover."""
        if self._graded is None:
            h = self.heights()
            self._graded = all(h[x] == h[w] + 1 for w, x in self.covers)
        return self._graded

    def degree(self, element: str) -> int:
        if not self.is_graded():
            raise NotGraded("degrees are only defined on graded posets")
        return self.heights()[element]

    def as_graded(self) -> "GradedPoset":
        if isinstance(self, GradedPoset):
            return self
        if not self.is_graded():
            raise NotGraded("poset is not graded")
        view = self.analysis_cache.get("graded_view")
        if view is None:
            view = GradedPoset(self)
            # share one cache so derived analyses are computed once
            view.analysis_cache = self.analysis_cache
            self.analysis_cache["graded_view"] = view
        return view

    # -- subposets ---------------------------------------------------------

    def induced(self, subset: Iterable[str]) -> "Poset":
        """The induced subposet: covers are recomputed from the restricted
        order, so skipped levels become covers."""
        keep = set(subset)
        for e in keep:
            self.require(e)
        elements = [e for e in self.elements if e in keep]
        below, _ = self._reach()
        covers = []
        for x in elements:
            under = below[x] & keep
            for w in under:
                # w covers x inside `keep` iff nothing of `keep` sits between
                if not any(w in below[z] for z in under):
                    covers.append((w, x))
        return Poset(elements, covers)

    def down_set(self, element: str, strict: bool = False) -> "Poset":
        """U_x, or the strict version without x itself."""
        self.require(element)
        members = set(self.strictly_below(element))
        if not strict:
            members.add(element)
        return self.induced(members)

    def up_set(self, element: str, strict: bool = False) -> "Poset":
        self.require(element)
        members = set(self.strictly_above(element))
        if not strict:
            members.add(element)
        return self.induced(members)

    def chains(self) -> list[tuple[str, ...]]:
        """All nonempty chains, each listed in increasing order."""
        below, _ = self._reach()
        ending: dict[str, list[tuple[str, ...]]] = {}
        order = self.index
        out: list[tuple[str, ...]] = []
        for x in self._topo_order():
            local: list[tuple[str, ...]] = [(x,)]
            for y in sorted(below[x], key=order.__getitem__):
                for c in ending[y]:
                    local.append(c + (x,))
            ending[x] = local
            out.extend(local)
        return out

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(e for e in self.elements if not self._upper[e])

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(e for e in self.elements if not self._lower[e])


class GradedPoset(Poset):
    """A poset whose every U_x is homogeneous; degree(x) = height(x)."""

    def __init__(self, base: Poset):
        super().__init__(base.elements, base.covers)
        if not self.is_graded():
            raise NotGraded("poset is not graded")
        self.degrees = dict(self.heights())

    def degree(self, element: str) -> int:
        self.require(element)
        return self.degrees[element]

    def max_degree(self) -> int:
        return max(self.degrees.values()) if self.degrees else 0

    def level(self, p: int) -> tuple[str, ...]:
        """The elements of degree exactly p."""
        return tuple(e for e in self.elements if self.degrees[e] == p)

    def skeleton(self, p: int) -> Poset:
        """The subposet of elements of degree at most p."""
        if p < 0:
            raise ValueError("skeleton degree must be nonnegative")
        return self.induced([e for e in self.elements if self.degrees[e] <= p])


def build_poset(elements: Sequence[str], relations: Iterable[tuple[str, str]]) -> Poset:
    """Build a poset from declared elements and any generating relation.

    The relation is closed transitively and then reduced to covers; cyclic
    input raises CycleDetected, empty input raises EmptyPoset.  Returns the
    canonical Hasse-diagram representation.
    """
    elements = [str(e) for e in elements]
    if not elements:
        raise EmptyPoset("empty posets are rejected as inputs")
    seen = set()
    for e in elements:
        if e in seen:
            raise DuplicateElement(f"duplicate element {e!r}")
        seen.add(e)
    pairs = []
    for w, x in relations:
        w, x = str(w), str(x)
        if w not in seen:
            raise UnknownElement(f"unknown element {w!r}")
        if x not in seen:
            raise UnknownElement(f"unknown element {x!r}")
        if w == x:
            raise CycleDetected(f"reflexive pair ({w}, {x}) is not allowed")
        pairs.append((w, x))

    position = {e: i for i, e in enumerate(elements)}
    succ: dict[str, set[str]] = {e: set() for e in elements}
    for w, x in pairs:
        succ[w].add(x)

    # transitive closure with cycle detection (iterative DFS, three colours)
    reach: dict[str, set[str]] = {}
    state: dict[str, int] = {}
    for root in elements:
        if state.get(root, 0) == 2:
            continue
        stack = [(root, iter(sorted(succ[root], key=position.__getitem__)))]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for child in it:
                if state.get(child, 0) == 1:
                    raise CycleDetected("input relation is not a partial order")
                if state.get(child, 0) == 0:
                    state[child] = 1
                    stack.append((child, iter(sorted(succ[child], key=position.__getitem__))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                acc: set[str] = set()
                for child in succ[node]:
                    acc.add(child)
                    acc |= reach[child]
                reach[node] = acc
                state[node] = 2
    covers = []
    for w in elements:
        for x in sorted(reach[w], key=position.__getitem__):
            if not any(x in reach[z] for z in reach[w]):
                covers.append((w, x))
    return Poset(elements, covers)


def was_reduced(elements: Sequence[str], relations: Iterable[tuple[str, str]]) -> bool:
    """True when the input relation contained non-cover pairs (so the
    Hasse diagram silently dropped some of them)."""
    poset = build_poset(elements, relations)
    given = {(str(w), str(x)) for w, x in relations}
    return not given <= poset.covers


def height_and_degree(poset: Poset):
    """Heights per element, gradedness verdict, and the graded view if any."""
    heights = dict(poset.heights())
    graded = poset.is_graded()
    return heights, graded, (poset.as_graded() if graded else None)
