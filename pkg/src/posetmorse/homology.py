"""Exact homology of finitely generated free chain complexes over the
integers (or rationals), plus the simplicial and poset front ends.

Betti numbers come from boundary ranks, torsion from the invariant
factors of the next boundary matrix; both are read off Smith normal
forms.  A formal degree -1 slot holds the augmentation of reduced
complexes, so the empty poset has reduced homology Z in degree -1 and
the cellularity check is uniform at degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

from .errors import EmptyPoset, NotAChainComplex, NotASubcomplex
from .intmatrix import IntMatrix
from .simplicial import SimplicialComplex, Simplex, order_complex, simplex_id
from .posets import Poset
from .snf import diagonal_form

Coefficients = Literal["int", "rat"]


class ChainComplex:
    """Free chain complex with explicit integer boundary matrices.

    `ranks[p]` is the rank of C_p; `boundary[p]` maps C_p to C_{p-1} and
    has shape ranks[p-1] x ranks[p].  Degrees may start at -1 (reduced
    complexes).  d*d = 0 is validated on construction.
    """

    def __init__(self, ranks: dict[int, int], boundary: dict[int, IntMatrix],
                 labels: dict[int, tuple[str, ...]] | None = None):
        self.ranks = {p: r for p, r in ranks.items() if r > 0}
        self.boundary: dict[int, IntMatrix] = {}
        for p, mat in boundary.items():
            if mat.rows == 0 or mat.cols == 0:
                continue
            if mat.cols != self.ranks.get(p, 0) or mat.rows != self.ranks.get(p - 1, 0):
                raise ValueError(f"boundary in degree {p} has wrong shape")
            self.boundary[p] = mat
        self.labels = dict(labels or {})
        for p, mat in self.boundary.items():
            upper = self.boundary.get(p + 1)
            if upper is not None and not (mat @ upper).is_zero():
                raise NotAChainComplex(f"d_{p} . d_{p + 1} != 0")

    def rank(self, p: int) -> int:
        return self.ranks.get(p, 0)

    def degrees(self) -> list[int]:
        return sorted(self.ranks)

    def min_degree(self) -> int:
        return min(self.ranks, default=0)

    def max_degree(self) -> int:
        return max(self.ranks, default=0)

    def total_rank(self) -> int:
        return sum(self.ranks.values())

    def boundary_or_empty(self, p: int) -> IntMatrix:
        mat = self.boundary.get(p)
        if mat is None:
            return IntMatrix.zeros(self.rank(p - 1), self.rank(p))
        return mat

    def __repr__(self):
        ranks = [f"{p}:{self.ranks[p]}" for p in self.degrees()]
        return f"ChainComplex({', '.join(ranks)})"


@dataclass(frozen=True)
class HomologySummary:
    """Betti numbers and torsion invariant factors per degree.

    Over the integers `betti[k]` is the free rank and `torsion[k]` the
    invariant-factor chain (entries >= 2); over the rationals torsion is
    empty and betti are dimensions.  `mu[k]` counts torsion factors.
    """

    betti: dict[int, int] = field(default_factory=dict)
    torsion: dict[int, tuple[int, ...]] = field(default_factory=dict)
    coefficients: Coefficients = "int"

    def b(self, k: int) -> int:
        return self.betti.get(k, 0)

    def t(self, k: int) -> tuple[int, ...]:
        return self.torsion.get(k, ())

    def mu(self, k: int) -> int:
        return len(self.t(k))

    def degrees(self) -> list[int]:
        keys = set(self.betti) | set(self.torsion)
        return sorted(keys)

    def nontrivial(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        out = {}
        for k in self.degrees():
            if self.b(k) or self.t(k):
                out[k] = (self.b(k), self.t(k))
        return out

    def is_trivial(self) -> bool:
        return not self.nontrivial()

    def total_betti(self) -> int:
        return sum(self.betti.values())

    def total_mu(self) -> int:
        return sum(len(t) for t in self.torsion.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in self.betti.items() if k >= 0)

    def __eq__(self, other):
        if not isinstance(other, HomologySummary):
            return NotImplemented
        return self.nontrivial() == other.nontrivial()

    def __hash__(self):
        return hash(tuple(sorted(self.nontrivial().items())))

    def __str__(self):
        parts = []
        for k, (b, tor) in sorted(self.nontrivial().items()):
            term = []
            if b:
                term.append("Z" if b == 1 else f"Z^{b}")
            term.extend(f"Z/{t}" for t in tor)
            parts.append(f"H_{k}={'+'.join(term)}")
        return "; ".join(parts) if parts else "trivial"

    def to_doc(self) -> dict:
        degrees = self.degrees()
        lo = min(degrees, default=0)
        hi = max(degrees, default=-1)
        return {
            "min_degree": lo,
            "betti": [self.b(k) for k in range(lo, hi + 1)],
            "torsion": [list(self.t(k)) for k in range(lo, hi + 1)],
            "mu": [self.mu(k) for k in range(lo, hi + 1)],
            "coefficients": self.coefficients,
        }


def sphere_summary(dim: int) -> HomologySummary:
    """Reduced homology of the dim-sphere; dim = -1 is the empty space."""
    return HomologySummary(betti={dim: 1})


def homology(complex: ChainComplex, coefficients: Coefficients = "int") -> HomologySummary:
    """Homology of the complex; exact in either coefficient ring."""
    if not complex.ranks:
        return HomologySummary(coefficients=coefficients)
    lo, hi = complex.min_degree(), complex.max_degree()
    diag: dict[int, tuple[int, ...]] = {}
    for p in range(lo, hi + 1):
        mat = complex.boundary.get(p)
        diag[p] = diagonal_form(mat) if mat is not None else ()
    betti: dict[int, int] = {}
    torsion: dict[int, tuple[int, ...]] = {}
    for p in range(lo, hi + 1):
        rank_d_p = sum(1 for d in diag[p] if d)
        rank_d_up = sum(1 for d in diag.get(p + 1, ()) if d)
        betti[p] = complex.rank(p) - rank_d_p - rank_d_up
        if betti[p] < 0:
            raise AssertionError("negative betti number: rank bookkeeping bug")
        if coefficients == "int":
            tor = tuple(d for d in diag.get(p + 1, ()) if d > 1)
            if tor:
                torsion[p] = tor
    summary = HomologySummary(betti=betti, torsion=torsion, coefficients=coefficients)
    # Euler characteristic must agree between chain ranks and homology
    chain_euler = sum((-1) ** p * r for p, r in complex.ranks.items())
    hom_euler = sum((-1) ** p * b for p, b in betti.items())
    assert chain_euler == hom_euler, "Euler characteristic mismatch"
    return summary


def simplicial_chain_complex(complex: SimplicialComplex, reduced: bool = False) -> ChainComplex:
    """The simplicial chain complex with sorted-vertex orientation.

    With reduced=True an augmentation slot C_{-1} = Z is added; the empty
    complex then has homology Z in degree -1.
    """
    ranks: dict[int, int] = {}
    boundary: dict[int, IntMatrix] = {}
    labels: dict[int, tuple[str, ...]] = {}
    dims = sorted(complex.simplices)
    for d in dims:
        sims = complex.simplices[d]
        ranks[d] = len(sims)
        labels[d] = tuple(simplex_id(s) for s in sims)
        if d > 0:
            index = {s: i for i, s in enumerate(complex.simplices[d - 1])}
            rows = len(index)
            cols = len(sims)
            data = [[0] * cols for _ in range(rows)]
            for j, s in enumerate(sims):
                for i in range(len(s)):
                    face = s[:i] + s[i + 1:]
                    data[index[face]][j] += (-1) ** i
            boundary[d] = IntMatrix(rows, cols, data)
    if reduced:
        ranks[-1] = 1
        labels[-1] = ("[]",)
        n0 = ranks.get(0, 0)
        if n0:
            boundary[0] = IntMatrix(1, n0, [[1] * n0])
    return ChainComplex(ranks, boundary, labels)


def relative_chain_complex(complex: SimplicialComplex,
                           subcomplex: SimplicialComplex) -> ChainComplex:
    """The quotient complex C(K)/C(L) for a subcomplex L of K."""
    if not complex.contains_complex(subcomplex):
        raise NotASubcomplex("second complex is not contained in the first")
    excluded: set[Simplex] = set()
    for sims in subcomplex.simplices.values():
        excluded.update(sims)
    ranks: dict[int, int] = {}
    boundary: dict[int, IntMatrix] = {}
    labels: dict[int, tuple[str, ...]] = {}
    kept: dict[int, list[Simplex]] = {}
    for d in sorted(complex.simplices):
        kept[d] = [s for s in complex.simplices[d] if s not in excluded]
        ranks[d] = len(kept[d])
        labels[d] = tuple(simplex_id(s) for s in kept[d])
    for d in sorted(complex.simplices):
        if d == 0 or not kept[d] or not kept.get(d - 1):
            continue
        index = {s: i for i, s in enumerate(kept[d - 1])}
        rows, cols = len(kept[d - 1]), len(kept[d])
        data = [[0] * cols for _ in range(rows)]
        for j, s in enumerate(kept[d]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                if face in index:
                    data[index[face]][j] += (-1) ** i
        boundary[d] = IntMatrix(rows, cols, data)
    return ChainComplex(ranks, boundary, labels)


def relative_homology(complex: SimplicialComplex, subcomplex: SimplicialComplex,
                      coefficients: Coefficients = "int") -> HomologySummary:
    return homology(relative_chain_complex(complex, subcomplex), coefficients)


def poset_homology(poset: Poset, reduced: bool = False,
                   coefficients: Coefficients = "int") -> HomologySummary:
    """Homology of the finite space via its order complex."""
    if not poset.elements and not reduced:
        raise EmptyPoset("unreduced homology of the empty poset is undefined")
    key = ("poset_homology", reduced, coefficients)
    cached = poset.analysis_cache.get(key)
    if cached is None:
        cached = homology(
            simplicial_chain_complex(order_complex(poset), reduced=reduced),
            coefficients,
        )
        poset.analysis_cache[key] = cached
    return cached


def poset_pair_homology(poset: Poset, members: Sequence[str], sub_members: Sequence[str],
                        coefficients: Coefficients = "int") -> HomologySummary:
    """Relative homology of the order-complex pair of two induced subposets."""
    big = order_complex(poset.induced(members))
    small = order_complex(poset.induced(sub_members))
    return relative_homology(big, small, coefficients)


def is_acyclic(poset: Poset) -> bool:
    """Reduced homology vanishes everywhere; the empty poset is not acyclic."""
    return poset_homology(poset, reduced=True).is_trivial()
