import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import big_moduli, moduli, partitions
from corecrystal.abacus import is_core
from corecrystal.corebij import apply_si
from corecrystal.crystal import (
    CLASSICAL,
    LADDER,
    SignedWord,
    apply_power,
    classical_signature,
    e_hat,
    e_tilde,
    eps,
    f_hat,
    f_tilde,
    generate,
    ladder_of,
    ladder_signature,
    phi,
    reduce,
    reduce_by_rescanning,
    reduced_signs,
    weyl_si,
)
from corecrystal.errors import DomainError, ModulusTooSmall
from corecrystal.partition import Partition, enumerate_partitions, is_regular
from corecrystal.regular import deregularize
from corecrystal.rimhook import is_ell_partition, is_jm


def word(signs):
    return SignedWord((s, (j, 1)) for j, s in enumerate(signs))


class TestSignatures:
    def test_classical_examples(self):
        assert classical_signature((8, 5, 4, 1), 3, 1).signs == "+-+-"
        assert classical_signature((), 3, 0).signs == "+"
        assert classical_signature((6, 5, 3, 3, 2, 2, 1), 3, 2).signs == "+---"

    def test_reduction_examples(self):
        full = classical_signature((8, 5, 4, 1), 3, 1)
        reduced = reduce(full)
        assert reduced.signs == "+-"
        assert reduced[0] == full[0] and reduced[-1] == full[-1]
        assert reduce(word("++--")).signs == "++--"
        assert reduce(word("-+")).signs == ""

    @given(st.text(alphabet="+-", max_size=30))
    def test_stack_reduction_matches_rescanning(self, signs):
        w = word(signs)
        fast, slow = reduce(w), reduce_by_rescanning(w)
        assert fast == slow
        assert "-+" not in fast.signs

    def test_ladder_ids(self):
        assert ladder_of((1, 2), 3) == ladder_of((3, 1), 3) == 3
        assert all(ladder_of((k, 1), 4) == k for k in range(1, 9))
        assert ladder_of((2, 3), 3) == ladder_of((4, 2), 3) == ladder_of((6, 1), 3)

    def test_ladder_signature_example(self):
        sig = ladder_signature((5, 3, 1, 1, 1, 1, 1), 3, 2)
        assert sig.signs == "++++"
        assert [tuple(b) for _, b in sig] == [(3, 2), (2, 4), (8, 1), (1, 6)]
        assert ladder_signature((), 3, 0).signs == "+"

    def test_ladder_needs_modulus_three(self):
        with pytest.raises(ModulusTooSmall):
            ladder_signature((1,), 2, 0)

    def test_bad_residue(self):
        with pytest.raises(DomainError):
            f_tilde((1,), 3, 3)


class TestOperators:
    def test_classical_examples(self):
        lam = (8, 5, 4, 1)
        assert e_tilde(lam, 3, 1) == (7, 5, 4, 1)
        assert f_tilde(lam, 3, 1) == (8, 5, 4, 2)
        assert apply_power(e_tilde, lam, 3, 1, 2) is None
        assert phi((9, 4, 2, 1, 1), 3, 0) == 3

    def test_ladder_string_example(self):
        lam = (5, 3, 1, 1, 1, 1, 1)
        assert f_hat(lam, 3, 2) == (6, 3, 1, 1, 1, 1, 1)
        assert apply_power(f_hat, lam, 3, 2, 4) == (6, 4, 2, 1, 1, 1, 1, 1)
        assert apply_power(f_hat, lam, 3, 2, 5) is None
        assert f_hat((2, 1, 1, 1), 3, 2) == (2, 1, 1, 1, 1)

    @given(partitions(max_size=20), big_moduli, st.data())
    def test_ladder_e_inverts_f(self, lam, ell, data):
        i = data.draw(st.integers(min_value=0, max_value=ell - 1))
        up = f_hat(lam, ell, i)
        if up is not None:
            assert e_hat(up, ell, i) == Partition(lam)
        down = e_hat(lam, ell, i)
        if down is not None:
            assert f_hat(down, ell, i) == Partition(lam)

    @given(partitions(max_size=20), moduli, st.data())
    def test_classical_e_inverts_f(self, lam, ell, data):
        i = data.draw(st.integers(min_value=0, max_value=ell - 1))
        up = f_tilde(lam, ell, i)
        if up is not None:
            assert e_tilde(up, ell, i) == Partition(lam)
        assert phi(lam, ell, i) == sum(1 for k in range(1, 40) if apply_power(f_tilde, lam, ell, i, k) is not None)
        assert eps(lam, ell, i) == sum(1 for k in range(1, 40) if apply_power(e_tilde, lam, ell, i, k) is not None)


class TestReflections:
    def test_fixed_core_example(self):
        assert weyl_si((5, 2, 1, 1, 1), 4, 2) == (5, 2, 1, 1, 1)

    def test_emptying_a_string_keeps_cores(self):
        for ell in (3, 4, 5):
            for n in range(21):
                for lam in enumerate_partitions(n):
                    if not is_core(lam, ell):
                        continue
                    for i in range(ell):
                        e = eps(lam, ell, i)
                        if e:
                            assert is_core(apply_power(e_tilde, lam, ell, i, e), ell)
                        assert weyl_si(lam, ell, i) == apply_si(lam, ell, i)

    @given(partitions(max_size=16), moduli, st.data())
    def test_reflection_is_an_involution(self, lam, ell, data):
        i = data.draw(st.integers(min_value=0, max_value=ell - 1))
        if is_regular(lam, ell):
            assert weyl_si(weyl_si(lam, ell, i), ell, i) == Partition(lam)


class TestSignatureProperties:
    def test_ell_partitions_and_cores_have_reduced_signatures(self):
        for ell in (2, 3, 4, 5):
            for n in range(17):
                for lam in enumerate_partitions(n):
                    if is_ell_partition(lam, ell) or is_core(lam, ell):
                        for i in range(ell):
                            assert "-+" not in classical_signature(lam, ell, i).signs

    def test_regular_partitions_read_the_same_along_ladders(self):
        for ell in (3, 4, 5):
            for n in range(15):
                for lam in enumerate_partitions(n):
                    if not is_regular(lam, ell):
                        continue
                    for i in range(ell):
                        sig = classical_signature(lam, ell, i)
                        by_ladder = sorted(sig, key=lambda e: (ladder_of(e[1], ell), -e[1][0]))
                        assert "".join(s for s, _ in by_ladder) == sig.signs

    def test_jm_ladder_signatures_never_cancel(self):
        for ell in (3, 4):
            for n in range(15):
                for lam in enumerate_partitions(n):
                    if is_jm(lam, ell):
                        for i in range(ell):
                            sig = ladder_signature(lam, ell, i)
                            assert reduced_signs(lam, ell, i, LADDER) == sig.signs


class TestGeneration:
    def test_small_graphs(self):
        assert generate(CLASSICAL, 3, 3).levels[3] == [(2, 1), (3,)]
        assert generate(LADDER, 3, 0).nodes == [()]
        assert generate(CLASSICAL, 2, 0).edges == []

    def test_level_sizes(self):
        sizes = [len(level) for level in generate(CLASSICAL, 3, 6).levels]
        assert sizes == [1, 1, 2, 2, 4, 5, 7]

    def test_ladder_graph_is_the_set_of_class_minima(self):
        graph = generate(LADDER, 3, 6)
        for n, level in enumerate(graph.levels):
            minima = set()
            for lam in oracles.partitions_of(n):
                low, _ = oracles.dominance_extremes(oracles.class_by_ladder_content(lam, 3))
                minima.add(low)
            assert set(level) == minima

    def test_node_sets_are_images_of_regularization_maps(self):
        for ell in (3, 4):
            graph, classical = generate(LADDER, ell, 10), generate(CLASSICAL, ell, 10)
            for n in range(11):
                parts = list(enumerate_partitions(n))
                assert set(graph.levels[n]) == {deregularize(lam, ell) for lam in parts}
                assert set(classical.levels[n]) == {lam for lam in parts if is_regular(lam, ell)}

    def test_edges_are_operator_pairs(self):
        for variant, f, e in ((CLASSICAL, f_tilde, e_tilde), (LADDER, f_hat, e_hat)):
            graph = generate(variant, 4, 8)
            for src, dst, i in graph.edges:
                assert f(src, 4, i) == dst and e(dst, 4, i) == src
            nodes = set(graph.nodes)
            expected = {(lam, f(lam, 4, i), i) for lam in nodes if lam.size < 8 for i in range(4) if f(lam, 4, i)}
            assert set(graph.edges) == expected

    def test_ladder_variant_needs_three(self):
        with pytest.raises(ModulusTooSmall):
            generate(LADDER, 2, 3)
