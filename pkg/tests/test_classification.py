import pytest

from insertion_complex.blocks import isomorphic, parse_block, vertices
from insertion_complex.classification import (
    CLASSES,
    UnsupportedDimension,
    blocks_with_max_word,
    classify,
    enumerate_valid_blocks,
    group_by_isomorphism,
)

P = parse_block


def test_classify_examples():
    assert classify(P("(a)(b)")).label == "dim2"
    assert classify(P("(a)(b)")).representative == P("(a)b(a)")
    assert classify(P("(a)(b)(c)")).representative == P("(a)b(a)b(a)")
    assert classify(P("(a)(b)(a)(b)")).label == "dim4.1"
    assert classify(P("abc")).label == "dim0"
    assert classify(P("x(y)z")).label == "dim1"


def test_classify_rejects_high_dimension_and_invalid_blocks():
    with pytest.raises(UnsupportedDimension):
        classify(P("(a)(b)(a)(b)(a)"))
    with pytest.raises(ValueError):
        classify(P("(a)(a)"))


def test_representatives_are_pairwise_non_isomorphic():
    for m, classes in CLASSES.items():
        for i, c in enumerate(classes):
            assert c.representative.dim == m
            for d in classes[i + 1:]:
                assert isomorphic(c.representative, d.representative) is None


def test_blocks_with_max_word_are_distinct_and_topped_by_w():
    w = "aabab"
    blocks = list(blocks_with_max_word(w))
    # one block per subset of the four runs
    assert len(blocks) == 2 ** 4
    assert len({vertices(b) for b in blocks}) == len(blocks)
    assert all(b.max_word == w for b in blocks)


def test_grouping_by_pattern_agrees_with_pairwise_isomorphism():
    blocks = list(enumerate_valid_blocks("ab", 6, dims=(2, 3, 4)))
    groups = group_by_isomorphism(blocks)
    reps = [g[0] for g in groups.values()]
    for i, r in enumerate(reps):
        for s in reps[i + 1:]:
            assert isomorphic(r, s) is None
    for g in groups.values():
        assert all(isomorphic(g[0], b) is not None for b in g)


def test_every_block_classifies_into_exactly_one_class():
    # classify() itself raises unless exactly one stored class matches
    counts = {}
    for sigma in enumerate_valid_blocks("ab", 7, dims=(2, 3, 4)):
        label = classify(sigma).label
        counts[label] = counts.get(label, 0) + 1
    assert set(counts) == {c.label for m in (2, 3, 4) for c in CLASSES[m]}
