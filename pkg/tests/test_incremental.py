"""Incremental engine: partitions, divisor lookup, lowering criterion."""

import random

import pytest

from monideal import (GeneratorSet, INF, IncrementalState, OpCounter,
                      artinianize, build_degree_index, decompose_incremental,
                      decompose_oracle, dividing_generators, lowering_limits,
                      match_variables, partition_components)
from conftest import fourvar, random_ideal, showcase

PUBLISHED = {(4, 4, 2), (4, 2, 3), (3, 3, 3), (4, 1, INF), (2, 3, INF), (1, 4, INF)}

# the showcase generators with the third-variable power treated as infinite
INF_FLAVOR_START = {
    "components": [(4, 4, INF)],
    "generators": [(4, 0, 0), (0, 4, 0), (0, 0, INF)],
}


def inf_state():
    return IncrementalState(3, INF_FLAVOR_START["components"],
                            INF_FLAVOR_START["generators"])


class TestPartition:
    def test_first_step(self):
        t1, t2 = partition_components([(4, 4, INF)], (3, 2, 2))
        assert t1 == [] and t2 == [(4, 4, INF)]

    def test_second_step(self):
        comps = [(4, 4, 2), (4, 2, INF), (3, 4, INF)]
        t1, t2 = partition_components(comps, (1, 3, 2))
        assert set(t1) == {(4, 4, 2), (4, 2, INF)}
        assert t2 == [(3, 4, INF)]

    def test_generator_already_inside_means_empty_t2(self):
        # alpha dominated by the staircase: no component strictly above it
        comps = [(2, 2)]
        t1, t2 = partition_components(comps, (2, 0))
        assert t2 == []


class TestDividingGenerators:
    def test_pure_powers_only(self):
        state = inf_state()
        got = dividing_generators((4, 4, INF), state.index)
        assert set(got) == {(4, 0, 0), (0, 4, 0)}  # the infinite power divides nothing

    def test_after_first_generator(self):
        state = inf_state()
        state.add_generator((3, 2, 2))
        got = dividing_generators((3, 4, INF), state.index)
        assert set(got) == {(0, 4, 0), (3, 2, 2)}

    def test_third_step(self):
        state = inf_state()
        state.add_generator((3, 2, 2))
        state.add_generator((1, 3, 2))
        got = dividing_generators((3, 3, INF), state.index)
        assert set(got) == {(3, 2, 2), (1, 3, 2)}


class TestMatchVariables:
    def test_multi_match(self):
        assert match_variables((1, 1, 0), (1, 1, 2)) == (0, 1)

    def test_pure_power(self):
        assert match_variables((4, 0, 0), (4, 4, INF)) == (0,)

    def test_single_match(self):
        assert match_variables((3, 2, 2), (3, 3, INF)) == (0,)


class TestLoweringLimits:
    def test_two_pure_powers(self):
        limits = lowering_limits((4, 4, INF), [(4, 0, 0), (0, 4, 0)])
        assert limits == [0, 0, 0]

    def test_blocked_in_first_variable(self):
        limits = lowering_limits((4, 2, INF), [(4, 0, 0), (3, 2, 2)])
        assert limits == [3, 0, 2]

    def test_nongeneric_counterexample(self):
        beta = (2, 2, 2, 2)
        divisors = [(2, 1, 1, 0), (1, 2, 0, 1), (0, 0, 2, 0), (0, 0, 0, 2)]
        assert lowering_limits(beta, divisors) == [1, 1, 1, 1]

    def test_all_multimatch_is_internal_error(self):
        with pytest.raises(RuntimeError):
            lowering_limits((1, 1), [(1, 1)])


class TestAddGenerator:
    def test_showcase_step_one(self):
        state = inf_state()
        state.add_generator((3, 2, 2))
        assert set(state.components) == {(3, 4, INF), (4, 2, INF), (4, 4, 2)}

    def test_showcase_full_run(self):
        state = inf_state()
        for alpha in [(3, 2, 2), (1, 3, 2), (2, 1, 3)]:
            state.add_generator(alpha)
        assert set(state.components) == PUBLISHED

    def test_counterexample_shrinks(self):
        art = artinianize(fourvar())
        state = IncrementalState.start(art)
        for alpha in art.alphas():
            state.add_generator(alpha)
        before = set(state.components)
        assert len(before) == 6
        state.add_generator((1, 1, 1, 1))
        after = set(state.components)
        assert before - after == {(2, 2, 2, 2)}
        assert after < before
        assert len(after) == 5

    def test_rejects_comparable_generator(self):
        state = inf_state()
        with pytest.raises(ValueError):
            state.add_generator((4, 0, 0))
        with pytest.raises(ValueError):
            state.add_generator((5, 1, 0))

    def test_cross_check_agrees(self):
        rng = random.Random(41)
        for _ in range(50):
            g = random_ideal(rng)
            decompose_incremental(g, cross_check=True)

    def test_zero_exponent_candidates_never_kept(self):
        # adding a generator with a zero coordinate must not produce a
        # component with a zero coordinate
        g = GeneratorSet.from_vectors(3, [(2, 0, 0), (1, 1, 0)])
        comps = decompose_incremental(g)
        assert set(comps.comps) == {(1, INF, INF), (2, 1, INF)}


class TestDegreeIndex:
    def test_bucket_contents(self):
        index = build_degree_index(showcase())
        assert set(index.bucket(2, 2)) == {(3, 2, 2), (1, 3, 2)}

    def test_generic_buckets_are_singletons(self):
        rng = random.Random(43)
        for _ in range(50):
            g = random_ideal(rng, generic=True)
            index = build_degree_index(g)
            for (u, d), bucket in index.buckets().items():
                if d:
                    assert len(bucket) == 1

    def test_partition_property(self):
        g = showcase()
        index = build_degree_index(g)
        for u in range(g.n):
            found = []
            for (var, _), bucket in index.buckets().items():
                if var == u:
                    found.extend(bucket)
            assert sorted(found) == sorted(g.gens)

    def test_empty(self):
        index = build_degree_index(GeneratorSet.from_vectors(2, []))
        assert index.buckets() == {}


class TestDecompose:
    def test_showcase(self):
        assert set(decompose_incremental(showcase()).comps) == PUBLISHED

    def test_two_variables_irreducible(self):
        g = GeneratorSet.from_vectors(2, [(1, 0), (0, 1)])
        assert decompose_incremental(g).comps == ((1, 1),)

    def test_fourvar_published(self):
        got = decompose_incremental(fourvar())
        assert set(got.comps) == {(3, 3, 1, 1), (2, 3, 2, 1), (3, 2, 1, 2),
                                  (3, 1, 2, 2), (2, 2, 2, 2), (1, 3, 2, 2)}

    def test_unit_and_zero(self):
        assert decompose_incremental(GeneratorSet.from_vectors(2, [(0, 0)])).comps == ()
        assert decompose_incremental(GeneratorSet.from_vectors(2, [])).comps == \
            ((INF, INF),)

    def test_input_order_still_correct(self):
        rng = random.Random(47)
        for _ in range(50):
            g = random_ideal(rng)
            lex = decompose_incremental(g)
            inp = decompose_incremental(g, order="input")
            assert lex.comps == inp.comps

    def test_loop_invariant_matches_oracle(self):
        # after every step the components decompose the ideal absorbed so far;
        # that ideal contains every pure power, so the oracle output is finite
        # and directly comparable
        rng = random.Random(53)
        for _ in range(60):
            g = random_ideal(rng, max_p=6)
            if g.is_unit():
                continue
            art = artinianize(g)
            state = IncrementalState.start(art)
            for alpha in art.alphas():
                state.add_generator(alpha)
                sofar = GeneratorSet.from_vectors(g.n, state.generators)
                expected = decompose_oracle(sofar)
                assert set(state.components) == set(expected.comps)

    def test_sizes_and_trace_shapes(self):
        sizes, trace = [], []
        counter = OpCounter()
        comps = decompose_incremental(showcase(), counter=counter,
                                      trace=trace, t_sizes=sizes)
        assert sizes[0] == 1 and sizes[-1] == len(comps)
        assert len(trace) == 3
        for rec in trace:
            assert set(rec) == {"step", "alpha", "t1_size", "t2_size", "kept", "rejected"}
        assert counter.ops > 0
