from fractions import Fraction

import pytest

from posetmorse import (
    build_poset,
    cellular_chain_complex,
    face_poset,
    flow_operator,
    gauge_flip,
    hccat,
    hccat_face_poset_consistency,
    homology,
    integrate_matching,
    ls_corollary_morse_function,
    ls_theorem_check,
    parse_simplicial_complex,
    perturb_to_morse,
    minimal_subcomplex,
    poset_homology,
    validate_matching,
)
from posetmorse.category import verify_quasi_isomorphism
from posetmorse.errors import NotMorse, NotMorseMatching, NotMorseSmale
from posetmorse.intmatrix import IntMatrix
from posetmorse.randgen import XorShift64Star, random_matching, random_simplicial_complex


def test_hccat_values(t3, rp2_poset, full_triangle):
    assert hccat(t3) == 2
    assert hccat(rp2_poset) == 3
    assert hccat(face_poset(full_triangle)) == 1
    assert hccat(build_poset(["a"], [])) == 1


def test_hccat_acyclic_iff_one():
    cone = build_poset(["a", "b", "c"], [("a", "c"), ("b", "c")])
    assert hccat(cone) == 1
    assert poset_homology(cone, reduced=True).is_trivial()


def test_hccat_formula(rp2_poset):
    summary = poset_homology(rp2_poset)
    assert hccat(rp2_poset) == summary.total_betti() + 2 * summary.total_mu()
    assert hccat(summary) == hccat(rp2_poset)


def test_minimal_subcomplex_t3(t3):
    cell = cellular_chain_complex(t3)
    witness = minimal_subcomplex(cell.complex)
    assert witness.rank_profile == {0: 1, 1: 1}
    assert witness.quasi_isomorphism_verified
    assert sum(witness.rank_profile.values()) == hccat(t3)


def test_minimal_subcomplex_rp2(rp2_poset):
    cell = cellular_chain_complex(rp2_poset)
    witness = minimal_subcomplex(cell.complex)
    assert witness.rank_profile == {0: 1, 1: 1, 2: 1}
    assert witness.quasi_isomorphism_verified
    assert sum(witness.rank_profile.values()) == 3 == hccat(rp2_poset)
    # rank profile matches b_k + mu_k + mu_(k-1)
    summary = poset_homology(rp2_poset)
    for k, rank in witness.rank_profile.items():
        assert rank == summary.b(k) + summary.mu(k) + summary.mu(k - 1)


def test_minimal_subcomplex_point():
    point = build_poset(["a"], [])
    cell = cellular_chain_complex(point)
    witness = minimal_subcomplex(cell.complex)
    assert witness.rank_profile == {0: 1}
    inc = witness.inclusion[0]
    assert abs(inc[0, 0]) == 1


def test_minimal_subcomplex_is_chain_subcomplex(rp2_poset):
    cell = cellular_chain_complex(rp2_poset)
    witness = minimal_subcomplex(cell.complex)
    for p in witness.complex.degrees():
        if p - 1 not in witness.complex.ranks:
            continue
        left = cell.complex.boundary_or_empty(p) @ witness.inclusion[p]
        right = witness.inclusion[p - 1] @ witness.complex.boundary_or_empty(p)
        assert left == right


def test_minimal_subcomplex_simplicial_fixtures(tetra_boundary, rp2):
    from posetmorse import simplicial_chain_complex
    for complex in (tetra_boundary, rp2):
        chain = simplicial_chain_complex(complex)
        witness = minimal_subcomplex(chain)
        assert witness.quasi_isomorphism_verified
        summary = homology(chain)
        total = summary.total_betti() + 2 * summary.total_mu()
        assert sum(witness.rank_profile.values()) == total


def test_quasi_isomorphism_rejects_wrong_subcomplex(t3):
    cell = cellular_chain_complex(t3)
    from posetmorse.homology import ChainComplex
    # a single vertex is not quasi-isomorphic to the circle
    sub = ChainComplex({0: 1}, {})
    inclusion = {0: IntMatrix.from_rows([[1], [0], [0]])}
    assert not verify_quasi_isomorphism(sub, inclusion, cell.complex)


def test_flow_operator_t3_m1(t3, t3_m1):
    flow = flow_operator(t3, t3_m1)
    assert flow.invariant_ranks == {0: 1, 1: 1}
    assert flow.rank_matches_critical
    assert flow.quasi_isomorphism_verified
    assert homology(flow.invariant_complex) == poset_homology(t3)


def test_flow_operator_identity_on_empty_matching(t3, t3_empty_matching):
    flow = flow_operator(t3, t3_empty_matching)
    assert flow.invariant_ranks == {0: 3, 1: 3}
    for p, mat in flow.phi.items():
        assert mat == IntMatrix.identity(mat.rows)
    for p, mat in flow.V.items():
        assert mat.is_zero()
    assert flow.quasi_isomorphism_verified


def test_flow_operator_perturbed_orbit(t3, t3_m2):
    perturbed, _ = perturb_to_morse(t3, t3_m2)
    flow = flow_operator(t3, perturbed)
    assert flow.invariant_ranks == {0: 1, 1: 1}
    assert flow.rank_matches_critical
    assert flow.quasi_isomorphism_verified


def test_flow_operator_rejects_cyclic_matching(t3, t3_m2):
    with pytest.raises(NotMorseMatching):
        flow_operator(t3, t3_m2)


def test_flow_operator_gauge_invariant_ranks(t3, t3_m1):
    cell = cellular_chain_complex(t3)
    flipped = gauge_flip(cell, {"e12": -1, "v3": -1})
    flow = flow_operator(t3, t3_m1, flipped)
    assert flow.invariant_ranks == {0: 1, 1: 1}
    assert flow.quasi_isomorphism_verified


def test_flow_ranks_on_mobius(mobius_poset, mobius_ring_matching):
    perturbed, _ = perturb_to_morse(mobius_poset, mobius_ring_matching)
    flow = flow_operator(mobius_poset, perturbed)
    assert flow.rank_matches_critical
    assert flow.quasi_isomorphism_verified
    assert homology(flow.invariant_complex) == poset_homology(mobius_poset)


def test_ls_theorem_t3(t3, t3_m1, t3_m2):
    report2 = ls_theorem_check(t3, t3_m2)
    assert report2.hccat_value == 2
    assert report2.basic_set_bound == 2  # one orbit counts 2
    assert report2.holds and report2.intermediate_holds and report2.counts_match_formula
    assert report2.warnings == ()
    report1 = ls_theorem_check(t3, t3_m1)
    assert report1.basic_set_bound == 2  # two critical points
    assert report1.holds and report1.counts_match_formula


def test_ls_theorem_rp2_star(rp2_poset, rp2_star5_matching):
    report = ls_theorem_check(rp2_poset, rp2_star5_matching)
    assert report.hccat_value == 3
    assert report.basic_set_bound == 21 + 2
    assert report.holds and report.intermediate_holds and report.counts_match_formula
    assert report.warnings == ()


def test_ls_theorem_needs_morse_smale():
    complex = parse_simplicial_complex("1 2 3\n1 2 5\n1 3 5\n2 3 5\n3 4 5\n1 3 4\n")
    poset = face_poset(complex)
    matching = validate_matching(poset, [
        ("1|3", "1|2|3"), ("1|2", "1|2|5"), ("1|5", "1|3|5"),
        ("2|3", "2|3|5"), ("3|5", "3|4|5"), ("3|4", "1|3|4"),
    ])
    with pytest.raises(NotMorseSmale):
        ls_theorem_check(poset, matching)


def test_ls_corollary(t3, t3_m1, rp2_poset):
    f = integrate_matching(t3, t3_m1)
    result = ls_corollary_morse_function(t3, f.values)
    assert result == {"hccat": 2, "critical_count": 2, "holds": True,
                      "critical": ["v3", "e13"]}
    degree = {e: Fraction(t3.heights()[e]) for e in t3.elements}
    assert ls_corollary_morse_function(t3, degree)["critical_count"] == 6
    dim = {e: Fraction(rp2_poset.heights()[e]) for e in rp2_poset.elements}
    result = ls_corollary_morse_function(rp2_poset, dim)
    assert result["hccat"] == 3 and result["critical_count"] == 31 and result["holds"]


def test_ls_corollary_rejects_non_morse(t3, t3_m2):
    f = integrate_matching(t3, t3_m2)
    with pytest.raises(NotMorse):
        ls_corollary_morse_function(t3, f.values)


def test_face_poset_consistency(triangle_boundary, rp2, full_triangle):
    assert hccat_face_poset_consistency(triangle_boundary)
    assert hccat_face_poset_consistency(rp2)
    assert hccat_face_poset_consistency(full_triangle)


def test_chi_bounded_by_hccat_on_fixtures(t3, rp2_poset, tetra_boundary):
    from posetmorse import euler_characteristics
    for poset in (t3, rp2_poset, face_poset(tetra_boundary)):
        chi_g, chi = euler_characteristics(poset)
        assert chi <= hccat(poset)


def test_minimal_subcomplex_random_complexes():
    rng = XorShift64Star(909)
    from posetmorse import simplicial_chain_complex
    for _ in range(10):
        complex = random_simplicial_complex(rng, max_vertices=6, max_triangles=5)
        chain = simplicial_chain_complex(complex)
        witness = minimal_subcomplex(chain)
        assert witness.quasi_isomorphism_verified
        summary = homology(chain)
        for k, rank in witness.rank_profile.items():
            assert rank == summary.b(k) + summary.mu(k) + summary.mu(k - 1)


def test_flow_random_morse_matchings(t3):
    rng = XorShift64Star(606)
    from posetmorse import is_morse_matching
    done = 0
    while done < 10:
        matching = random_matching(rng, t3)
        if not is_morse_matching(t3, matching):
            continue
        flow = flow_operator(t3, matching)
        assert flow.rank_matches_critical
        assert flow.quasi_isomorphism_verified
        done += 1


def test_flow_random_face_posets():
    rng = XorShift64Star(607)
    from posetmorse import is_morse_matching
    done = 0
    while done < 8:
        complex = random_simplicial_complex(rng, max_vertices=5, max_triangles=3)
        poset = face_poset(complex)
        matching = random_matching(rng, poset)
        if not is_morse_matching(poset, matching):
            continue
        flow = flow_operator(poset, matching)
        assert flow.rank_matches_critical
        assert flow.quasi_isomorphism_verified
        assert homology(flow.invariant_complex) == poset_homology(poset)
        done += 1
