import pytest

from wdom.domination import (Labeling, LabelingError, WeightVector, defender_set, format_labeling,
                             is_secure_w_dominating, is_w_dominating, move_labeling, neighborhood_sum,
                             parse_labeling, parse_weight_vector)
from wdom.graph import cycle, path, star


def test_weight_vector_validation():
    assert WeightVector((2, 2, 1)).l == 2
    assert WeightVector((2, 1, 0)).monotone
    assert not WeightVector((1, 2)).monotone
    for bad in ((1,), (0, 1), (1, -1)):
        with pytest.raises(LabelingError):
            WeightVector(bad)


def test_labeling_alphabet():
    with pytest.raises(LabelingError):
        Labeling((0, 3), (1, 0, 0))
    f = Labeling((0, 2, 0), (1, 0, 0))
    assert f.weight == 4 - 2 and f.level_set(0) == [0, 2]


def test_open_neighborhood_rule():
    # labeled vertices are checked against w_{f(v)} on the open neighbourhood
    g = path(3)
    w = WeightVector((2, 2, 2))
    assert not is_w_dominating(g, w, Labeling((0, 2, 0), w))
    assert is_w_dominating(g, w, Labeling((1, 2, 1), w))
    assert neighborhood_sum(g, Labeling((1, 2, 1), w), 1) == 2


def test_move_and_defenders():
    g = star(4)
    w = WeightVector((1, 0, 0))
    f = Labeling((2, 0, 0, 0), w)
    moved = move_labeling(g, f, 0, 1)
    assert moved.values == (1, 1, 0, 0)
    assert defender_set(g, w, f, 2) == {0}
    with pytest.raises(LabelingError):
        move_labeling(g, f, 1, 2)
    with pytest.raises(LabelingError):
        move_labeling(g, f, 1, 0)


def test_secure_certificate():
    g = cycle(4)
    w = WeightVector((1, 0))
    ok, cert = is_secure_w_dominating(g, w, Labeling((1, 0, 1, 0), w))
    assert ok and cert.complete and set(cert.defenders) == {1, 3}
    ok, cert = is_secure_w_dominating(g, w, Labeling((1, 0, 0, 0), w))
    assert not ok


def test_mismatched_vector_rejected():
    with pytest.raises(LabelingError):
        is_w_dominating(path(2), WeightVector((1, 0)), Labeling((1, 1), (1, 1)))
    with pytest.raises(LabelingError):
        is_w_dominating(path(3), WeightVector((1, 0)), Labeling((1, 1), (1, 0)))


def test_parsing_round_trip():
    w = parse_weight_vector("(2,2,1)")
    assert w.entries == (2, 2, 1)
    f = parse_labeling("0,1,2", w)
    assert format_labeling(f) == "0,1,2"
    with pytest.raises(LabelingError):
        parse_weight_vector("2,,1")
