"""Morse and Morse-Bott functions on posets.

Integration turns any matching into a Morse-Bott function by condensing
the matched digraph into its strongly connected components, ordering the
condensation topologically, and assigning the reverse rank as the value:
constant on each basic set, strictly decreasing along every arc between
distinct classes.  Matched pairs outside the recurrent set then satisfy
f(x) > f(y), which realizes the weak inequality the integration theorem
allows.

The two verification operations implement the fundamental theorems as
exact computations: a regular interval must leave relative homology of
the sublevel pair trivial, and crossing a single critical value must
attach exactly the class [x] along its lower boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cellular import require_admissible
from .dynamics import (
    BasicSetDecomposition,
    Matching,
    basic_sets,
    matched_digraph,
    validate_matching,
    _strongly_connected_components,
)
from .errors import (
    CriticalValueInInterval,
    NotGraded,
    NotMorse,
    WrongCriticalCount,
)
from .homology import poset_pair_homology
from .posets import Poset


@dataclass(frozen=True)
class MorseVerdict:
    is_morse: bool
    critical: tuple[str, ...]
    violations: tuple[str, ...] = ()


def is_morse_function(poset: Poset, values: dict[str, Fraction]) -> MorseVerdict:
    """At most one exceptional cover on each side of every element."""
    for e in poset.elements:
        if e not in values:
            raise NotMorse(f"function has no value at {e!r}")
    critical = []
    violations = []
    morse = True
    for x in poset.elements:
        up = [y for y in poset.upper_covers(x) if values[x] >= values[y]]
        down = [z for z in poset.lower_covers(x) if values[z] >= values[x]]
        if len(up) > 1 or len(down) > 1:
            morse = False
            violations.append(x)
        if not up and not down:
            critical.append(x)
    return MorseVerdict(morse, tuple(critical), tuple(violations))


def morse_function_to_matching(poset: Poset, values: dict[str, Fraction]) -> Matching:
    """The matching of exceptional pairs {(x, y): x < y covers, f(x) >= f(y)}.

    On homologically admissible posets a Morse function never has both an
    exceptional face and an exceptional coface at one element (between a
    chain w < x < y with a two-step degree gap there are at least two
    intermediate elements, which forces contradictory strict
    inequalities), so the pair set really is a matching; validation still
    runs and surfaces any violation on exotic inputs.
    """
    verdict = is_morse_function(poset, values)
    if not verdict.is_morse:
        raise NotMorse(f"function is not Morse at {verdict.violations[:3]}")
    pairs = [(x, y) for (x, y) in sorted(poset.covers) if values[x] >= values[y]]
    return validate_matching(poset, pairs)


@dataclass(frozen=True)
class MorseBottFunction:
    """A function constant on basic sets and Morse away from them."""

    poset: Poset
    values: dict[str, Fraction]
    matching: Matching | None = None

    def __post_init__(self):
        object.__setattr__(self, "_decomposition", None)

    def value(self, element: str) -> Fraction:
        return self.values[element]

    def decomposition(self) -> BasicSetDecomposition:
        if self.matching is None:
            raise NotMorse("no matching attached to this function")
        if self._decomposition is None:
            object.__setattr__(self, "_decomposition",
                               basic_sets(self.poset, self.matching))
        return self._decomposition

    def critical_values(self) -> tuple[Fraction, ...]:
        """Images of the basic sets, sorted increasingly."""
        dec = self.decomposition()
        out = {self.values[e] for e in dec.critical}
        out |= {self.values[c.elements[0]] for c in dec.orbit_classes}
        return tuple(sorted(out))

    def all_values(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.values.values())))

    def class_values(self) -> dict[tuple[str, ...], Fraction]:
        dec = self.decomposition()
        out: dict[tuple[str, ...], Fraction] = {}
        for e in dec.critical:
            out[(e,)] = self.values[e]
        for c in dec.orbit_classes:
            out[c.elements] = self.values[c.elements[0]]
        for e in dec.transient:
            out[(e,)] = self.values[e]
        return out


def integrate_matching(poset: Poset, matching: Matching) -> MorseBottFunction:
    """A Morse-Bott function integrating the matching (canonical witness).

    Values are the reverse topological ranks of the condensation of the
    matched digraph, as exact integers (Fractions).
    """
    if not poset.is_graded():
        raise NotGraded("integration needs a graded poset")
    digraph = matched_digraph(poset, matching)
    components = _strongly_connected_components(digraph.nodes, digraph.successors)
    comp_id = {}
    for i, comp in enumerate(components):
        for e in comp:
            comp_id[e] = i
    n = len(components)
    succ: dict[int, set[int]] = {i: set() for i in range(n)}
    indeg = {i: 0 for i in range(n)}
    for a, b in digraph.arcs:
        ca, cb = comp_id[a], comp_id[b]
        if ca != cb and cb not in succ[ca]:
            succ[ca].add(cb)
            indeg[cb] += 1
    # deterministic Kahn order, ties broken by smallest member position
    key = {i: min(poset.index[e] for e in comp) for i, comp in enumerate(components)}
    ready = sorted((i for i in range(n) if indeg[i] == 0), key=key.__getitem__)
    rank: dict[int, int] = {}
    processed = 0
    while ready:
        i = ready.pop(0)
        rank[i] = n - processed
        processed += 1
        opened = []
        for j in sorted(succ[i], key=key.__getitem__):
            indeg[j] -= 1
            if indeg[j] == 0:
                opened.append(j)
        ready = sorted(ready + opened, key=key.__getitem__)
    assert processed == n
    values = {e: Fraction(rank[comp_id[e]]) for e in poset.elements}
    return MorseBottFunction(poset=poset, values=values, matching=matching)


def sublevel(poset: Poset, values: dict[str, Fraction], level) -> Poset:
    """X_a: the union of the minimal open sets U_x with f(x) <= a."""
    level = Fraction(level)
    members: set[str] = set()
    for x in poset.elements:
        if values[x] <= level:
            members.add(x)
            members |= poset.strictly_below(x)
    return poset.induced(members)


def boundary_of_class(poset: Poset, matching: Matching, element: str) -> frozenset[str]:
    """The lower boundary of [x]: covers leaving the class downward."""
    dec = basic_sets(poset, matching)
    members = set(dec.class_elements(element))
    out: set[str] = set()
    for x in members:
        for w in poset.lower_covers(x):
            if w not in members:
                out.add(w)
    return frozenset(out)


def verify_collapse(poset: Poset, function: MorseBottFunction, a, b) -> bool:
    """A critical-value-free interval leaves sublevel homology unchanged:
    relative homology of the order-complex pair must vanish entirely."""
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise ValueError("interval is empty")
    require_admissible(poset)
    for c in function.critical_values():
        if a <= c <= b:
            raise CriticalValueInInterval(f"critical value {c} lies in [{a}, {b}]")
    lower = sublevel(poset, function.values, a)
    upper = sublevel(poset, function.values, b)
    summary = poset_pair_homology(poset, upper.elements, lower.elements)
    return summary.is_trivial()


@dataclass(frozen=True)
class AttachmentReport:
    interval: tuple[Fraction, Fraction]
    kind: str
    class_elements: tuple[str, ...] = ()
    boundary: tuple[str, ...] = ()
    new_elements: tuple[str, ...] = ()
    identities: dict[str, bool] | None = None
    ok: bool = True

    def to_doc(self) -> dict:
        return {
            "interval": [str(self.interval[0]), str(self.interval[1])],
            "kind": self.kind,
            "class": list(self.class_elements),
            "boundary": list(self.boundary),
            "new_elements": list(self.new_elements),
            "identities": dict(self.identities or {}),
            "ok": self.ok,
        }


def verify_attachment(poset: Poset, function: MorseBottFunction,
                      matching: Matching, a, b) -> AttachmentReport:
    """Crossing one critical value attaches exactly the class [x].

    Checks the set identities X_b \\ X_a = [x], boundary([x]) inside X_a,
    and [x] disjoint from X_a.  They are guaranteed when [a, b] contains
    no other value of the function besides the critical one.
    """
    a, b = Fraction(a), Fraction(b)
    crit = [c for c in function.critical_values() if a <= c <= b]
    if len(crit) != 1:
        raise WrongCriticalCount(f"[{a}, {b}] contains {len(crit)} critical values")
    value = crit[0]
    dec = basic_sets(poset, matching)
    classes = []
    for e in dec.critical:
        if function.values[e] == value:
            classes.append((e,))
    for c in dec.orbit_classes:
        if function.values[c.elements[0]] == value:
            classes.append(c.elements)
    if len(classes) != 1:
        raise WrongCriticalCount(
            f"critical value {value} is shared by {len(classes)} basic sets")
    members = classes[0]
    lower = set(sublevel(poset, function.values, a).elements)
    upper = set(sublevel(poset, function.values, b).elements)
    boundary = boundary_of_class(poset, matching, members[0])
    identities = {
        "new_elements_equal_class": upper - lower == set(members),
        "boundary_inside_lower": boundary <= lower,
        "class_misses_lower": not (set(members) & lower),
    }
    return AttachmentReport(
        interval=(a, b),
        kind="critical-attachment",
        class_elements=members,
        boundary=tuple(sorted(boundary)),
        new_elements=tuple(sorted(upper - lower)),
        identities=identities,
        ok=all(identities.values()),
    )


def filtration_sweep(poset: Poset, function: MorseBottFunction,
                     matching: Matching | None = None) -> tuple[list[AttachmentReport], bool]:
    """Walk the whole filtration: tight attachment checks around every
    critical value, collapse checks across every maximal regular gap."""
    if matching is None:
        matching = function.matching
    if matching is None:
        raise NotMorse("sweep needs the matching behind the function")
    require_admissible(poset)
    values = function.all_values()
    critical = set(function.critical_values())
    if not values:
        return [], True
    # midpoints between consecutive distinct values, padded on both ends
    cuts = [values[0] - 1]
    for lo, hi in zip(values, values[1:]):
        cuts.append((lo + hi) / 2)
    cuts.append(values[-1] + 1)
    reports: list[AttachmentReport] = []
    ok = True
    # attachment at each critical value, on the tight straddling interval
    for i, v in enumerate(values):
        if v in critical:
            report = verify_attachment(poset, function, matching, cuts[i], cuts[i + 1])
            reports.append(report)
            ok = ok and report.ok
    # collapse across each maximal interval free of critical values
    crit_sorted = sorted(critical)
    anchors = [cuts[0]]
    for v in crit_sorted:
        i = values.index(v)
        anchors.extend([cuts[i], cuts[i + 1]])
    anchors.append(cuts[-1])
    for lo, hi in zip(anchors[::2], anchors[1::2]):
        if lo > hi:
            continue
        passed = verify_collapse(poset, function, lo, hi)
        reports.append(AttachmentReport(
            interval=(lo, hi), kind="regular-interval", ok=passed))
        ok = ok and passed
    return reports, ok
