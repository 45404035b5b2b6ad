"""Independent brute-force oracles the tests check the library against.

Everything here is deliberately naive and shares no code path with the
implementations under test.
"""

from __future__ import annotations

from posetmorse import Matching, Poset


def brute_force_relation(poset: Poset) -> dict[str, set[str]]:
    """below[x] computed by naive repeated expansion of the covers."""
    below = {e: set() for e in poset.elements}
    for w, x in poset.covers:
        below[x].add(w)
    changed = True
    while changed:
        changed = False
        for x in poset.elements:
            extra = set()
            for w in below[x]:
                extra |= below[w]
            if not extra <= below[x]:
                below[x] |= extra
                changed = True
    return below


def brute_force_maximal_chains(poset: Poset, members: set[str]) -> list[list[str]]:
    """All maximal chains of the induced subposet, by exhaustive extension."""
    below = brute_force_relation(poset)

    def less(a, b):
        return a in below[b]

    minimal = [e for e in members if not any(less(w, e) for w in members)]
    chains = []
    stack = [[m] for m in minimal]
    while stack:
        chain = stack.pop()
        top = chain[-1]
        extensions = [y for y in members
                      if less(top, y)
                      and not any(less(top, z) and less(z, y) for z in members)]
        if not extensions:
            chains.append(chain)
        else:
            for y in extensions:
                stack.append(chain + [y])
    return chains


def brute_force_is_graded(poset: Poset) -> bool:
    """Definition check: all maximal chains in every U_x share one length."""
    below = brute_force_relation(poset)
    for x in poset.elements:
        members = below[x] | {x}
        lengths = {len(c) for c in brute_force_maximal_chains(poset, members)}
        if len(lengths) > 1:
            return False
    return True


def digraph_arcs(poset: Poset, matching: Matching) -> dict[str, list[str]]:
    succ: dict[str, list[str]] = {e: [] for e in poset.elements}
    for w, x in sorted(poset.covers):
        if (w, x) in matching.pairs:
            succ[w].append(x)
        else:
            succ[x].append(w)
    return succ


def reachable_from(succ: dict[str, list[str]], start: str) -> set[str]:
    seen: set[str] = set()
    stack = list(succ[start])
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(succ[node])
    return seen


def brute_force_recurrent(poset: Poset, matching: Matching) -> set[str]:
    """Critical elements plus every node lying on some directed cycle."""
    succ = digraph_arcs(poset, matching)
    matched = matching.matched_elements()
    recurrent = {e for e in poset.elements if e not in matched}
    for e in poset.elements:
        if e in reachable_from(succ, e):
            recurrent.add(e)
    return recurrent


def brute_force_equivalent(poset: Poset, matching: Matching, a: str, b: str) -> bool:
    """a ~ b: a cycle passes through both, i.e. mutual reachability."""
    if a == b:
        return True
    succ = digraph_arcs(poset, matching)
    return b in reachable_from(succ, a) and a in reachable_from(succ, b)


def check_integration_conditions(poset: Poset, matching: Matching, values) -> list[str]:
    """Independent check of the two conditions the integration theorem
    promises, with recurrence recomputed from scratch.  Returns the list
    of violations (empty = pass)."""
    succ = digraph_arcs(poset, matching)
    matched = matching.matched_elements()
    on_cycle = {e for e in poset.elements if e in reachable_from(succ, e)}
    recurrent = {e for e in poset.elements if e not in matched} | on_cycle

    def equivalent(a, b):
        if a == b:
            return True
        if a not in on_cycle or b not in on_cycle:
            return False
        return b in reachable_from(succ, a) and a in reachable_from(succ, b)

    failures = []
    for w, x in sorted(poset.covers):
        fw, fx = values[w], values[x]
        if w not in recurrent:
            if (w, x) in matching.pairs:
                if not fw >= fx:
                    failures.append(f"matched pair ({w},{x}) needs f({w}) >= f({x})")
            elif not fw < fx:
                failures.append(f"unmatched cover ({w},{x}) needs f({w}) < f({x})")
        else:
            if equivalent(w, x):
                if fw != fx:
                    failures.append(f"equivalent cover ({w},{x}) needs equality")
            elif not fw < fx:
                failures.append(f"recurrent cover ({w},{x}) needs f({w}) < f({x})")
    # Morse away from the recurrent set
    for x in poset.elements:
        if x in recurrent:
            continue
        up = [y for y in poset.upper_covers(x) if values[x] >= values[y]]
        down = [z for z in poset.lower_covers(x) if values[z] >= values[x]]
        if len(up) > 1 or len(down) > 1:
            failures.append(f"{x} violates the Morse conditions away from recurrence")
    # constant on basic sets
    for x in poset.elements:
        for y in poset.elements:
            if x < y and equivalent(x, y) and values[x] != values[y]:
                failures.append(f"class of {x} is not constant")
    return failures
