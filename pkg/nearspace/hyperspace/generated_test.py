from ..proximity.kinds import CLOSURE_LODATO, INTERIOR_OVERLAP, INTERSECTION, MIXED
from .generated import Verdict, compare, is_open_in, minimal_neighbourhood
from .subbase import GeneratorFamily, HalfSpec, build_subbase, cl_points

HIT = HalfSpec(GeneratorFamily.HIT)
MISS = HalfSpec(GeneratorFamily.MISS)


def test_whole_and_empty_hyperspace_are_open(s3):
    """Tests that CL(X) and the empty set are open in any generated topology"""
    # Given
    subbase = build_subbase(s3, [HIT])

    # Then
    assert is_open_in(subbase, frozenset(cl_points(s3)))
    assert is_open_in(subbase, frozenset())


def test_singleton_hyperset_is_not_hit_open(d3):
    """Tests that {{a}} is not open when generated by hit({a}) and hit({b})"""
    # Given
    subbase = build_subbase(d3, [HIT], parameters=[0b001, 0b010])

    # When/Then
    assert minimal_neighbourhood(subbase, 0b001) == {0b001, 0b011, 0b101, 0b111}
    assert not is_open_in(subbase, frozenset({0b001}))


def test_every_generator_is_open_in_its_subbase(topologies_up_to_3):
    """Tests that each subbase member is open in the topology it generates"""
    for space in topologies_up_to_3:
        subbase = build_subbase(space, [HIT, MISS, HalfSpec(GeneratorFamily.STRONG_HIT, INTERIOR_OVERLAP)])
        assert all(is_open_in(subbase, hyper_set) for hyper_set in subbase.hyper_sets)


def test_hit_equals_strong_hit_for_ex1_and_ex3(topologies_up_to_4):
    """Tests that the usual hit topology is the strongly hit topology for ex1 and ex3"""
    for space in topologies_up_to_4:
        hit = build_subbase(space, [HIT])
        for kind in (INTERSECTION, MIXED):
            strong = build_subbase(space, [HalfSpec(GeneratorFamily.STRONG_HIT, kind)])
            assert compare(hit, strong).verdict == Verdict.EQUAL


def test_identical_subbases_are_equal(s3):
    """Tests compare(a, a) = equal"""
    # Given
    subbase = build_subbase(s3, [HIT, MISS])

    # When
    comparison = compare(subbase, subbase)

    # Then
    assert comparison.verdict == Verdict.EQUAL
    assert comparison.witnesses == []


def test_vietoris_is_finer_than_hit(d3):
    """Tests the finer/coarser verdicts in both directions with a witness"""
    # Given
    hit = build_subbase(d3, [HIT])
    vietoris = build_subbase(d3, [HIT, MISS])

    # When
    forward = compare(hit, vietoris)
    backward = compare(vietoris, hit)

    # Then
    assert forward.verdict == Verdict.RIGHT_FINER
    assert backward.verdict == Verdict.LEFT_FINER
    witness = backward.witnesses[0]
    assert witness.side == "left"
    assert witness.generator.half == MISS
    assert not is_open_in(hit, witness.hyper_set)
    assert witness.render(vietoris)["generator"].startswith("miss(")


def test_hit_and_far_miss_against_strong_hit_and_far_miss_on_discrete(d3):
    """Tests that on a finite T1 space the two hit-and-far-miss topologies coincide"""
    # Given
    far_miss = HalfSpec(GeneratorFamily.FAR_MISS, CLOSURE_LODATO)
    tau_delta = build_subbase(d3, [HIT, far_miss])
    tau_strong = build_subbase(d3, [HalfSpec(GeneratorFamily.STRONG_HIT, INTERIOR_OVERLAP), far_miss])

    # When/Then
    assert compare(tau_delta, tau_strong).verdict == Verdict.EQUAL


def test_hit_and_interior_overlap_parts_incomparable_on_s3(s3):
    """Tests that the hit and interior overlap strongly-hit parts are not comparable on S3"""
    # Given
    hit = build_subbase(s3, [HIT])
    strong = build_subbase(s3, [HalfSpec(GeneratorFamily.STRONG_HIT, INTERIOR_OVERLAP)])

    # When
    comparison = compare(hit, strong)

    # Then
    assert comparison.verdict == Verdict.INCOMPARABLE
    assert [witness.side for witness in comparison.witnesses] == ["left", "right"]
    assert [witness.point for witness in comparison.witnesses] == [0b110, 0b100]
