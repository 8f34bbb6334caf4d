import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pmhkit.counterexamples import (cylinder_matching, odd_cut_side, torus_general_matching,
                                    torus_q3_matching)
from pmhkit.errors import BudgetExceeded, InvalidCertificateError, InvalidParameterError
from pmhkit.extension import (EXTENDED, PH, PMH, REFUTED, CutCertificate, SearchOptions,
                              enumerate_extensions, extend_matching, grid_cuts,
                              is_hamiltonian_union, verify_odd_cut_certificate)
from pmhkit.graph import (build_complete, build_cycle, build_hypercube, cylinder, layer, torus)
from pmhkit.matchings import Matching, enumerate_pairings, enumerate_perfect_matchings

from conftest import corpus

RULE_SETS = [
    SearchOptions(cut_parity=False, forced_edges=False),
    SearchOptions(cut_parity=True, forced_edges=False),
    SearchOptions(cut_parity=False, forced_edges=True),
    SearchOptions(),
]


def check_sound(g, m, out, mode=PMH):
    if out.status == EXTENDED:
        assert is_hamiltonian_union(m, out.witness, g.n)
        assert all(g.has_edge(*e) for e in out.witness.pairs)
        assert not (out.witness.pairs & m.pairs)
        cyc = out.cycle
        assert sorted(cyc) == list(range(g.n))
        steps = [tuple(sorted((cyc[i], cyc[(i + 1) % g.n]))) for i in range(g.n)]
        assert set(steps) == m.pairs | out.witness.pairs


class TestExtend:
    def test_c6(self):
        m = Matching([(0, 1), (2, 3), (4, 5)], 6)
        out = extend_matching(build_cycle(6), m)
        assert out.status == EXTENDED
        assert out.witness.pairs == {(1, 2), (3, 4), (0, 5)}
        assert out.cycle == [0, 1, 2, 3, 4, 5]

    def test_cylinder_4_3(self):
        m, _ = cylinder_matching(4, 3)
        assert extend_matching(cylinder(4, 3), m).status == REFUTED

    def test_torus_q3(self):
        assert extend_matching(torus(6, 3), torus_q3_matching(6)).status == REFUTED

    def test_q3_antipodal_pairing(self):
        m = Matching([(0b000, 0b111), (0b001, 0b110), (0b010, 0b101), (0b011, 0b100)], 8)
        g = build_hypercube(3)
        out = extend_matching(g, m, PH)
        assert out.status == EXTENDED
        check_sound(g, m, out)

    def test_pmh_mode_rejects_non_edges(self):
        m = Matching([(0, 7), (1, 6), (2, 5), (3, 4)], 8)
        with pytest.raises(InvalidParameterError):
            extend_matching(build_hypercube(3), m, PMH)

    def test_rejects_imperfect(self):
        with pytest.raises(InvalidParameterError):
            extend_matching(build_cycle(6), Matching([(0, 1)], 6))
        with pytest.raises(InvalidParameterError):
            extend_matching(build_cycle(6), Matching([(0, 1), (2, 3), (4, 5)], 6), "other")

    def test_sound_on_corpus(self):
        for g in corpus():
            for m in itertools.islice(enumerate_perfect_matchings(g), 40):
                check_sound(g, m, extend_matching(g, m))

    def test_ph_mode_q3_matches_oracle(self):
        g = build_hypercube(3)
        for m in enumerate_pairings(8):
            out = extend_matching(g, m, PH)
            check_sound(g, m, out, PH)
            assert out.extended == any(True for _ in enumerate_extensions(g, m, PH))

    def test_explicit_cut(self):
        # the prism's rungs are an odd cut; registering it refutes at the root
        g = cylinder(3, 2)
        m = Matching([(0, 3), (1, 4), (2, 5)], 6)
        out = extend_matching(g, m, cuts=[[0, 1, 2]],
                              options=SearchOptions(auto_cuts=False))
        assert out.status == REFUTED
        assert out.nodes_explored == 1 and out.prunes["cut_parity"] == 1


class TestPruningNeutrality:
    def test_corpus(self):
        for g in corpus():
            for m in enumerate_perfect_matchings(g):
                outs = [extend_matching(g, m, options=o) for o in RULE_SETS]
                assert len({o.status for o in outs}) == 1, (g.label, m)
                assert len({o.witness for o in outs}) == 1, (g.label, m)

    def test_known_constructions(self):
        for g, m in [(torus(6, 5), torus_general_matching(6, 5)),
                     (torus(8, 3), torus_q3_matching(8)),
                     (cylinder(6, 4), cylinder_matching(6, 4)[0])]:
            assert {extend_matching(g, m, options=o).status for o in RULE_SETS} == {REFUTED}


class TestBudget:
    def test_node_budget(self):
        with pytest.raises(BudgetExceeded) as err:
            extend_matching(torus(8, 6), torus_general_matching(8, 6),
                            options=SearchOptions(node_budget=50))
        assert err.value.progress["nodes_explored"] == 51

    def test_time_budget(self):
        opts = SearchOptions(time_budget=1e-9, cut_parity=False, forced_edges=False)
        with pytest.raises(BudgetExceeded):
            extend_matching(torus(8, 6), torus_general_matching(8, 6), options=opts)

    def test_budget_not_hit(self):
        out = extend_matching(torus(6, 5), torus_general_matching(6, 5),
                              options=SearchOptions(node_budget=10 ** 6))
        assert out.status == REFUTED


class TestHamiltonianUnion:
    def test_examples(self):
        m = Matching([(0, 1), (2, 3)], 4)
        assert is_hamiltonian_union(m, Matching([(1, 2), (3, 0)], 4), 4)
        m8 = Matching([(0, 1), (2, 3), (4, 5), (6, 7)], 8)
        assert not is_hamiltonian_union(m8, Matching([(1, 2), (3, 0), (5, 6), (7, 4)], 8), 8)
        assert not is_hamiltonian_union(m, m, 4)

    def test_size_mismatch(self):
        with pytest.raises(InvalidParameterError):
            is_hamiltonian_union(Matching([(0, 1)], 2), Matching([(0, 1), (2, 3)], 4), 4)


class TestCertificates:
    def test_prism(self):
        g = cylinder(3, 2)
        m = Matching([(0, 3), (1, 4), (2, 5)], 6)
        cert = CutCertificate.from_side(g, layer(g.grid, 1))
        assert len(cert.crossing) == 3
        assert verify_odd_cut_certificate(g, m, cert)

    def test_cylinder_3_4(self):
        g = cylinder(3, 4)
        m, _ = cylinder_matching(3, 4)
        cert = CutCertificate.from_side(g, odd_cut_side(3, 4))
        assert verify_odd_cut_certificate(g, m, cert)

    def test_c6_false(self):
        g = build_cycle(6)
        m = Matching([(0, 1), (2, 3), (4, 5)], 6)
        assert not verify_odd_cut_certificate(g, m, CutCertificate.from_side(g, {0, 1}))

    def test_even_cut_false(self):
        g = build_cycle(6)
        m = Matching([(0, 1), (2, 3), (4, 5)], 6)
        cert = CutCertificate.from_side(g, {1, 2})
        assert sorted(cert.crossing) == [(0, 1), (2, 3)]
        assert not verify_odd_cut_certificate(g, m, cert)

    def test_inconsistent(self):
        g = build_cycle(6)
        m = Matching([(0, 1), (2, 3), (4, 5)], 6)
        with pytest.raises(InvalidCertificateError):
            verify_odd_cut_certificate(g, m, CutCertificate(frozenset({0, 1}),
                                                            frozenset({(1, 2)})))
        with pytest.raises(InvalidCertificateError):
            verify_odd_cut_certificate(g, m, CutCertificate.from_side(g, {0, 9}))

    def test_certified_implies_refuted(self):
        for g in corpus():
            if g.n > 12:
                continue
            for m in enumerate_perfect_matchings(g):
                for k in range(1, g.n // 2 + 1):
                    for side in itertools.combinations(range(g.n), k):
                        cert = CutCertificate.from_side(g, side)
                        if cert.crossing and verify_odd_cut_certificate(g, m, cert):
                            assert extend_matching(g, m).status == REFUTED
                            break
                    else:
                        continue
                    break


class TestEnumerateExtensions:
    def test_c6(self):
        m = Matching([(0, 1), (2, 3), (4, 5)], 6)
        assert len(list(enumerate_extensions(build_cycle(6), m))) == 1

    def test_k4(self):
        m = Matching([(0, 1), (2, 3)], 4)
        exts = {x.pairs for x in enumerate_extensions(build_complete(4), m)}
        assert exts == {frozenset({(1, 2), (0, 3)}), frozenset({(0, 2), (1, 3)})}

    def test_torus_q3_none(self):
        assert list(enumerate_extensions(torus(6, 3), torus_q3_matching(6))) == []

    def test_first_extension_is_solver_witness(self):
        # both walk completions in lowest-free-vertex order
        for g in corpus():
            if g.n > 12:
                continue
            for m in enumerate_perfect_matchings(g):
                first = next(enumerate_extensions(g, m), None)
                assert extend_matching(g, m).witness == first


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_status_matches_oracle_random(data):
    g = data.draw(st.sampled_from([g for g in corpus() if g.n <= 12 and g.n % 2 == 0]))
    ms = list(itertools.islice(enumerate_perfect_matchings(g), 200))
    if not ms:
        return
    m = data.draw(st.sampled_from(ms))
    out = extend_matching(g, m)
    assert out.extended == bool(next(enumerate_extensions(g, m), None))


def test_grid_cuts_registered():
    t = grid_cuts(torus(6, 5))
    assert len(t) == 5 + 6
    c = grid_cuts(cylinder(4, 4))
    # 4 layers + 4 fibres + prefixes of 2 and 3 layers
    assert len(c) == 4 + 4 + 2
    assert grid_cuts(build_hypercube(3)) == []
