"""Morse-Bott numbers and the inequality theorems.

m_k sums, over the basic sets, the free rank of the relative homology of
the closure of the set against its lower closure; a critical point of
degree p contributes a single unit in degree p, an orbit of index p one
unit in each of degrees p and p+1.  The strong inequalities compare the
alternating partial sums of m against those of the Betti numbers; the
orbit theorems additionally count prime orbits, with torsion generators
on the right for integer coefficients and only multiplicity-one orbits on
the left for rational ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cellular import cellular_chain_complex, check_cellularity, require_admissible
from .dynamics import (
    Matching,
    basic_sets,
    critical_counts,
    orbit_counts,
    orbit_multiplicity,
    prime_orbits,
)
from .homology import Coefficients, HomologySummary, poset_homology, poset_pair_homology
from .posets import Poset
from .simplicial import order_complex


@dataclass(frozen=True)
class IneqRow:
    k: int
    lhs: int
    rhs: int
    ok: bool


@dataclass(frozen=True)
class InequalityReport:
    name: str
    rows: tuple[IneqRow, ...]
    holds: bool
    data: dict

    def to_doc(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "rows": [{"k": r.k, "lhs": r.lhs, "rhs": r.rhs, "ok": r.ok} for r in self.rows],
            "data": {key: value for key, value in sorted(self.data.items())},
        }


def _closure_pair(poset: Poset, members) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """The closure of a subset (union of its minimal open sets) and the
    closure minus the subset."""
    bar: set[str] = set()
    for x in members:
        bar.add(x)
        bar |= poset.strictly_below(x)
    dot = bar - set(members)
    order = poset.index
    return (tuple(sorted(bar, key=order.__getitem__)),
            tuple(sorted(dot, key=order.__getitem__)))


def basic_set_relative_homology(poset: Poset, members,
                                coefficients: Coefficients = "int") -> HomologySummary:
    bar, dot = _closure_pair(poset, members)
    return poset_pair_homology(poset, bar, dot, coefficients)


def morse_bott_numbers(poset: Poset, matching: Matching,
                       coefficients: Coefficients = "int") -> tuple[list[int], list[str]]:
    """m_k per degree, plus notes about torsion met in relative homology
    (the ranks ignore it by definition; we surface it separately)."""
    graded = require_admissible(poset)
    dec = basic_sets(poset, matching)
    top = graded.max_degree() + 1
    m = [0] * (top + 1)
    torsion_notes: list[str] = []
    for e in dec.critical:
        summary = basic_set_relative_homology(poset, (e,), coefficients)
        for k in summary.degrees():
            if summary.b(k):
                m[k] += summary.b(k)
            if summary.t(k):
                torsion_notes.append(f"critical {e}: torsion {summary.t(k)} in degree {k}")
    for cls in dec.orbit_classes:
        summary = basic_set_relative_homology(poset, cls.elements, coefficients)
        for k in summary.degrees():
            if summary.b(k):
                m[k] += summary.b(k)
            if summary.t(k):
                torsion_notes.append(
                    f"orbit at {cls.elements[0]}: torsion {summary.t(k)} in degree {k}")
    while len(m) > 1 and m[-1] == 0:
        m.pop()
    return m, torsion_notes


def lemma_basic_set_window(poset: Poset, matching: Matching,
                           coefficients: Coefficients = "int") -> bool:
    """Relative homology of each basic set sits in {p} for a critical
    point (one copy of the coefficients) and in {p, p+1} for an orbit."""
    graded = require_admissible(poset)
    dec = basic_sets(poset, matching)
    for e in dec.critical:
        p = graded.degree(e)
        summary = basic_set_relative_homology(poset, (e,), coefficients)
        if summary.nontrivial() != {p: (1, ())}:
            return False
    for cls in dec.orbit_classes:
        summary = basic_set_relative_homology(poset, cls.elements, coefficients)
        for k, (b, tor) in summary.nontrivial().items():
            if k not in (cls.index, cls.index + 1):
                return False
    return True


def _alternating(seq, k: int) -> int:
    """sum_{i=0..k} (-1)^i seq[k-i], missing entries count as zero."""
    total = 0
    for i in range(k + 1):
        j = k - i
        v = seq[j] if 0 <= j < len(seq) else 0
        total += v if i % 2 == 0 else -v
    return total


def strong_morse_bott(poset: Poset, matching: Matching,
                      coefficients: Coefficients = "int") -> InequalityReport:
    """Strong inequalities, their weak corollary, and the Euler identity."""
    graded = require_admissible(poset)
    m, torsion_notes = morse_bott_numbers(poset, matching, coefficients)
    summary = poset_homology(poset, coefficients=coefficients)
    top = max(graded.max_degree(), len(m) - 1)
    b = [summary.b(k) for k in range(top + 1)]
    rows = []
    weak_rows = []
    for k in range(top + 1):
        lhs = _alternating(m, k)
        rhs = _alternating(b, k)
        rows.append(IneqRow(k, lhs, rhs, lhs >= rhs))
        mk = m[k] if k < len(m) else 0
        weak_rows.append(IneqRow(k, mk, b[k], mk >= b[k]))
    euler_m = sum((-1) ** k * (m[k] if k < len(m) else 0) for k in range(top + 1))
    euler_b = sum((-1) ** k * b[k] for k in range(top + 1))
    holds = all(r.ok for r in rows) and all(r.ok for r in weak_rows) and euler_m == euler_b
    return InequalityReport(
        name="strong-morse-bott",
        rows=tuple(rows),
        holds=holds,
        data={
            "m": m,
            "betti": b,
            "weak": [{"k": r.k, "lhs": r.lhs, "rhs": r.rhs, "ok": r.ok} for r in weak_rows],
            "euler_m": euler_m,
            "euler_b": euler_b,
            "torsion_notes": torsion_notes,
            "coefficients": coefficients,
        },
    )


def orbit_inequalities_torsion(poset: Poset, matching: Matching) -> InequalityReport:
    """A_k + alt-sum of critical counts against mu_k + alt-sum of Betti
    numbers, over the integers; needs a Morse-Smale matching."""
    graded = require_admissible(poset)
    orbits = prime_orbits(poset, matching)
    c = critical_counts(poset, matching)
    A = orbit_counts(orbits)
    summary = poset_homology(poset)
    top = graded.max_degree()
    c_list = [c.get(k, 0) for k in range(top + 1)]
    b_list = [summary.b(k) for k in range(top + 1)]
    rows = []
    for k in range(top + 1):
        lhs = A.get(k, 0) + _alternating(c_list, k)
        rhs = summary.mu(k) + _alternating(b_list, k)
        rows.append(IneqRow(k, lhs, rhs, lhs >= rhs))
    return InequalityReport(
        name="orbit-torsion",
        rows=tuple(rows),
        holds=all(r.ok for r in rows),
        data={
            "c": c_list,
            "A": [A.get(k, 0) for k in range(top + 1)],
            "betti": b_list,
            "mu": [summary.mu(k) for k in range(top + 1)],
        },
    )


def orbit_inequalities_multiplicity(poset: Poset, matching: Matching) -> InequalityReport:
    """A'_k + alt-sum of critical counts against alt-sum of rational
    Betti numbers, counting only multiplicity-one orbits."""
    graded = require_admissible(poset)
    orbits = prime_orbits(poset, matching)
    cell = cellular_chain_complex(poset)
    c = critical_counts(poset, matching)
    summary = poset_homology(poset, coefficients="rat")
    top = graded.max_degree()
    multiplicities = {orbit: orbit_multiplicity(poset, matching, orbit, cell)
                      for orbit in orbits}
    A1: dict[int, int] = {}
    for orbit, mult in multiplicities.items():
        if mult == 1:
            A1[orbit.index] = A1.get(orbit.index, 0) + 1
    c_list = [c.get(k, 0) for k in range(top + 1)]
    b_list = [summary.b(k) for k in range(top + 1)]
    rows = []
    for k in range(top + 1):
        lhs = A1.get(k, 0) + _alternating(c_list, k)
        rhs = _alternating(b_list, k)
        rows.append(IneqRow(k, lhs, rhs, lhs >= rhs))
    return InequalityReport(
        name="orbit-multiplicity-one",
        rows=tuple(rows),
        holds=all(r.ok for r in rows),
        data={
            "c": c_list,
            "A1": [A1.get(k, 0) for k in range(top + 1)],
            "betti_rational": b_list,
            "multiplicities": [
                {"start": orbit.nodes[0], "index": orbit.index, "multiplicity": mult}
                for orbit, mult in sorted(multiplicities.items(),
                                          key=lambda kv: kv[0].nodes)
            ],
        },
    )


def euler_characteristics(poset: Poset) -> tuple[int | None, int]:
    """(chi_g, chi of the order complex); equal on cellular posets.

    chi_g needs a grading and comes back as None otherwise; the
    order-complex value is always defined.  Contractible graded posets
    can still have chi_g != 1, which is what separates cellular posets
    from merely graded ones.
    """
    chi = order_complex(poset).euler_characteristic() if poset.elements else 0
    if not poset.is_graded():
        return None, chi
    graded = poset.as_graded()
    chi_g = sum((-1) ** p * len(graded.level(p)) for p in range(graded.max_degree() + 1))
    report = check_cellularity(poset)
    if report.is_cellular:
        assert chi_g == chi, "cellular poset with mismatched Euler characteristics"
    return chi_g, chi
