import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagrange import (
    CascadedState,
    DomainError,
    PermGroup,
    ResourceError,
    ValidationError,
    act,
    build_decomposition,
    component_actions,
    compose,
    decompose_transitive,
    faithful_component_of,
    flatten_state,
    identity,
    locate,
    make_chain,
    materialize_dependencies,
    raise_state,
    stabilizer_descent,
)
from lagrange.verify import closure

from .conftest import P, group


def reps(D, s):
    return [T.reps[x] for T, x in zip(D.transversals, s)]


class TestBuild:
    def test_chief(self, a4_chief):
        assert a4_chief.length == 2
        assert a4_chief.widths == [3, 4] and a4_chief.component_orders() == [3, 4]

    def test_composition(self, a4_composition):
        D = a4_composition
        assert D.length == 3 and D.widths == [3, 2, 2] and D.component_orders() == [3, 2, 2]

    def test_trivial_chain_is_regular(self, S3):
        D = build_decomposition(make_chain([S3, PermGroup.trivial(3)]))
        assert D.length == 1 and D.widths == [6]
        F = faithful_component_of(D, 0)
        assert F.image_group.order() == 6 and F.point_count == 6
        assert all(not F.image(g).is_identity() or g.is_identity() for g in S3.elements())

    def test_index_bound(self, A4):
        with pytest.raises(ResourceError):
            build_decomposition(make_chain([A4, PermGroup.trivial(4)]), max_index=5)

    def test_one_group_chain(self, S3):
        D = build_decomposition(make_chain([S3]))
        assert D.length == 0 and D.state_count == 1
        assert D.raise_state(P("(1,2)", 3)) == CascadedState(())


class TestRaiseFlatten:
    def test_identity(self, s3_chain):
        assert raise_state(s3_chain, identity(3)) == CascadedState((0, 0))

    def test_three_cycle(self, s3_chain):
        s = raise_state(s3_chain, P("(1,2,3)", 3))
        assert reps(s3_chain, s) == [identity(3), P("(1,2,3)", 3)]

    def test_transposition(self, s3_chain):
        s = raise_state(s3_chain, P("(2,3)", 3))
        assert reps(s3_chain, s) == [P("(1,2)", 3), P("(1,2,3)", 3)]
        assert s == CascadedState((1, 1))

    def test_flatten_examples(self, s3_chain):
        assert flatten_state(s3_chain, (0, 0)) == identity(3)
        assert flatten_state(s3_chain, (1, 1)) == P("(2,3)", 3)

    def test_flatten_out_of_range(self, s3_chain):
        with pytest.raises(DomainError):
            flatten_state(s3_chain, (2, 0))
        with pytest.raises(DomainError):
            flatten_state(s3_chain, (0,))

    def test_raise_non_member(self, a4_chief):
        with pytest.raises(DomainError):
            raise_state(a4_chief, P("(1,2)", 4))

    def test_round_trip_bijection(self, small_decomposition):
        D = small_decomposition
        if not D.chain.is_total:
            pytest.skip("stabilizer-terminated")
        elements = closure(D.top.generators, D.top.degree)
        states = {raise_state(D, g) for g in D.top.elements()}
        assert len(states) == len(elements) == D.state_count
        for s in D.states():
            assert raise_state(D, flatten_state(D, s)) == s

    def test_located_elements_in_levels(self, small_decomposition):
        D = small_decomposition
        rng = random.Random(3)
        for _ in range(40):
            g = D.top.random_element(rng)
            for Gi, gi in zip(D.chain, locate(D, g)):
                assert Gi.contains(gi)


class TestActions:
    def test_identity_acts_trivially(self, small_decomposition):
        D = small_decomposition
        e = D.top.identity
        for s in itertools.islice(D.states(), 50):
            assert act(D, s, e) == s
            assert all(ca.raw.is_identity() and ca.image.is_identity()
                       for ca in component_actions(D, e, s))

    def test_s3_component_actions(self, s3_chain):
        cas = component_actions(s3_chain, P("(1,2)", 3), raise_state(s3_chain, P("(1,2,3)", 3)))
        assert cas[0].raw == P("(1,2)", 3) and cas[1].raw.is_identity()

    def test_s3_act(self, s3_chain):
        s = raise_state(s3_chain, P("(1,2,3)", 3))
        assert act(s3_chain, s, P("(1,2)", 3)) == raise_state(s3_chain, P("(2,3)", 3))

    def test_homomorphism_exhaustive(self, small_decomposition):
        D = small_decomposition
        elements = list(D.top.elements())
        if len(elements) > 60:
            rng = random.Random(7)
            elements = rng.sample(elements, 60)
        for g in elements:
            rg = raise_state(D, g)
            for h in elements:
                assert act(D, rg, h) == raise_state(D, compose(g, h))

    def test_action_composition(self, small_decomposition):
        D = small_decomposition
        rng = random.Random(11)
        for _ in range(100):
            h, k = D.top.random_element(rng), D.top.random_element(rng)
            s = D.state([rng.randrange(w) for w in D.widths])
            assert act(D, act(D, s, h), k) == act(D, s, compose(h, k))

    def test_component_actions_in_levels(self, small_decomposition):
        D = small_decomposition
        rng = random.Random(5)
        for _ in range(40):
            h = D.top.random_element(rng)
            s = D.state([rng.randrange(w) for w in D.widths])
            for Gi, ca in zip(D.chain, component_actions(D, h, s)):
                assert Gi.contains(ca.raw)

    def test_identity_state_is_locator(self, small_decomposition):
        D = small_decomposition
        for h in itertools.islice(D.top.elements(), 60):
            raws = [ca.raw for ca in component_actions(D, h, D.identity_state())]
            assert raws == locate(D, h)
            assert D.cascaded(h)(D.identity_state()) == raise_state(D, h)

    def test_prefix_causality(self, small_decomposition):
        D = small_decomposition
        rng = random.Random(13)
        for _ in range(60):
            h = D.top.random_element(rng)
            s = [rng.randrange(w) for w in D.widths]
            base = component_actions(D, h, s)
            for i in range(D.length):
                t = s[:i] + [rng.randrange(w) for w in D.widths[i:]]
                assert component_actions(D, h, t)[i] == base[i]

    def test_cascaded_equality_is_extensional(self, a4_chief):
        D = a4_chief
        g = P("(1,2,3)", 4)
        assert D.cascaded(g) == D.cascaded(compose(g, identity(4)))
        assert D.cascaded(g) != D.cascaded(identity(4))


class TestTables:
    def test_identity_table(self, a4_composition):
        table = materialize_dependencies(a4_composition, identity(4))
        assert all(img.is_identity() for lvl in table.levels for img in lvl.values())
        assert [len(lvl) for lvl in table.levels] == [1, 3, 6]

    def test_s3_level_two_entries(self, s3_chain):
        table = materialize_dependencies(s3_chain, P("(1,2)", 3))
        assert len(table.levels[0]) == 1 and len(table.levels[1]) == 2
        assert len(table) == 3

    def test_a4_levels_two_three_independent(self, a4_composition):
        D = a4_composition
        for h in D.top.elements():
            lvl = materialize_dependencies(D, h).levels[2]
            for x1 in range(3):
                assert lvl[(x1, 0)] == lvl[(x1, 1)]

    def test_evaluation_matches_actions(self, small_decomposition):
        D = small_decomposition
        if D.length == 0:
            pytest.skip("no levels")
        rng = random.Random(17)
        for _ in range(10):
            h = D.top.random_element(rng)
            table = D.materialize(h)
            for s in itertools.islice(D.states(), 40):
                assert table.evaluate(s) == act(D, s, h)
                for i, ca in enumerate(component_actions(D, h, s)):
                    assert table.entry(i, s[:i]) == ca.image

    def test_threshold(self, a4_composition):
        with pytest.raises(ResourceError):
            materialize_dependencies(a4_composition, identity(4), max_table=5)


class TestTransitive:
    def test_a4_on_points(self, A4):
        TD = decompose_transitive(A4, base=0)
        D = TD.decomposition
        assert D.length == 1 and D.widths == [4]
        points = [TD.flatten_point(s) for s in D.states()]
        assert sorted(points) == [0, 1, 2, 3]
        for x in range(4):
            assert TD.flatten_point(TD.raise_point(x)) == x

    def test_s3_equivariance(self, S3):
        TD = decompose_transitive(S3, base=0)
        assert TD.decomposition.widths == [3]
        for gen in S3.generators:
            for x in range(3):
                assert TD.flatten_point(TD.act(TD.raise_point(x), gen)) == gen[x]

    def test_regular_reduces_to_total(self, A3):
        TD = decompose_transitive(A3, base=0)
        assert TD.decomposition.chain.is_total and TD.decomposition.widths == [3]

    def test_user_chain(self):
        S4 = group(4, "(1,2,3,4)", "(1,2)")
        A4 = group(4, "(1,2,3)", "(1,2)(3,4)")
        chain = [S4, A4, S4.stabilizer([0])]
        with pytest.raises(ValidationError):
            decompose_transitive(S4, base=0, chain=chain)
        chain = [S4, A4]
        with pytest.raises(ValidationError):
            decompose_transitive(S4, base=0, chain=chain)
        TD = decompose_transitive(S4, base=0, chain=stabilizer_descent(S4, [0]))
        assert TD.decomposition.widths == [4]

    def test_not_transitive(self):
        G = group(4, "(1,2)", "(3,4)")
        with pytest.raises(DomainError, match=r"\{1,2\}.*\{3,4\}"):
            decompose_transitive(G, base=0)

    def test_subset_of_points(self):
        G = group(5, "(1,2,3)")
        TD = decompose_transitive(G, points=[0, 1, 2], base=1)
        assert sorted(TD.flatten_point(s) for s in TD.decomposition.states()) == [0, 1, 2]
        with pytest.raises(DomainError):
            TD.raise_point(4)


class TestFaithfulComponent:
    def test_chief_levels(self, a4_chief):
        top, bottom = faithful_component_of(a4_chief, 0), faithful_component_of(a4_chief, 1)
        assert (top.point_count, top.image_group.order()) == (3, 3)
        assert (bottom.point_count, bottom.image_group.order()) == (4, 4)

    def test_out_of_range(self, a4_chief):
        with pytest.raises(DomainError):
            faithful_component_of(a4_chief, 2)


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(5))), st.lists(st.integers(0, 4), min_size=1, max_size=4, unique=True))
def test_random_stabilizer_chains_are_homomorphic(p, pts):
    from lagrange import Permutation

    G = PermGroup([Permutation(p), P("(1,2,3,4,5)", 5)], 5)
    D = build_decomposition(stabilizer_descent(G, pts))
    rng = random.Random(0)
    for _ in range(30):
        g, h = G.random_element(rng), G.random_element(rng)
        assert act(D, raise_state(D, g), h) == raise_state(D, compose(g, h))
