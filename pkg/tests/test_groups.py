import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagrange import PermGroup, Permutation, contains, group_from_generators, identity, order
from lagrange.groups import action_stabilizer
from lagrange.verify import closure

from .conftest import P, group


@st.composite
def small_groups(draw):
    n = draw(st.integers(1, 6))
    k = draw(st.integers(0, 3))
    gens = [Permutation(draw(st.permutations(list(range(n))))) for _ in range(k)]
    return PermGroup(gens, n)


class TestOrder:
    def test_s3(self):
        assert order(group_from_generators([P("(1,2,3)", 3), P("(1,2)", 3)], 3)) == 6

    def test_empty_generators(self):
        G = group_from_generators([], 4)
        assert order(G) == 1 and G.is_trivial()

    def test_a4(self, A4):
        assert order(A4) == 12

    def test_generators_deduplicated(self):
        g = P("(1,2,3)", 3)
        G = PermGroup([g, g, identity(3)], 3)
        assert list(G.generators) == [g]

    def test_mixed_degree_rejected(self):
        with pytest.raises(ValueError):
            PermGroup([identity(3), identity(4)], 3)

    @settings(max_examples=60, deadline=None)
    @given(small_groups())
    def test_matches_closure_oracle(self, G):
        elements = closure(G.generators, G.degree)
        assert G.order() == len(elements)
        assert sorted(map(tuple, G.elements())) == sorted(elements)


class TestContains:
    def test_identity(self, A4):
        assert contains(A4, identity(4))

    def test_odd_excluded(self, A4):
        assert not contains(A4, P("(1,2)", 4))

    def test_double_transposition(self, A4):
        assert contains(A4, P("(1,2)(3,4)", 4))

    def test_degree_mismatch(self, A4):
        with pytest.raises(ValueError):
            A4.contains(identity(3))

    @settings(max_examples=40, deadline=None)
    @given(small_groups(), st.randoms(use_true_random=False))
    def test_matches_closure_oracle(self, G, rnd):
        elements = closure(G.generators, G.degree)
        for _ in range(10):
            p = list(range(G.degree))
            rnd.shuffle(p)
            assert contains(G, Permutation(p)) == (tuple(p) in elements)


class TestStructure:
    def test_orbits_and_stabilizer(self, A4):
        assert A4.orbit(0) == [0, 1, 2, 3]
        S = A4.stabilizer([0])
        assert S.order() == 3 and all(g[0] == 0 for g in S.elements())

    def test_witness(self, A4):
        for x in range(4):
            assert A4.witness(0, x)[0] == x

    def test_normality(self, A4, V4):
        C3 = A4.stabilizer([3])
        assert V4.is_normal_in(A4)
        assert not C3.is_normal_in(A4)
        assert C3.is_subgroup_of(A4) and not A4.is_subgroup_of(C3)

    @settings(max_examples=40, deadline=None)
    @given(small_groups())
    def test_base_ascending(self, G):
        base = G.stab_chain().base
        assert base == sorted(base)
        assert G.stab_chain().order == G.order()

    def test_random_element_in_group(self, A4):
        rng = random.Random(1)
        assert all(A4.random_element(rng) in A4 for _ in range(50))

    def test_action_stabilizer_kernel(self, S3):
        # S3 acting on itself by sign: the kernel is A3
        sign = {g: P("(1,2)", 2) if sum(1 for c in g.cycles() if len(c) % 2 == 0) % 2 else identity(2)
                for g in S3.generators}
        K = action_stabilizer(S3, sign, [0, 1])
        assert K.order() == 3


@pytest.mark.slow
def test_pocket_cube_order():
    from lagrange.cube import pocket_cube_group

    assert pocket_cube_group().order() == 88_179_840
