import pytest
from hypothesis import given

from kdistant.charlier import (CharlierDiagram, InvalidDiagramError, Step, all_diagrams,
                               diagram_crossing_witness, from_charlier, from_json,
                               parse_diagram, to_charlier, to_json)
from kdistant.counting import bell
from kdistant.partition import (dcr, enumerate_matchings, enumerate_partitions, make_partition,
                                parse_partition)

from conftest import PI1, partitions

EXAMPLE = "U U H0 H1 D2 U U H0 D3 H1 D1 D1"


def test_example_diagram(pi1):
    assert str(to_charlier(pi1)) == EXAMPLE
    assert from_charlier(parse_diagram(EXAMPLE)) == pi1


def test_small():
    assert str(to_charlier(make_partition([], 0))) == ""
    assert str(to_charlier(make_partition([[1, 2]], 2))) == "U D1"
    assert from_charlier(parse_diagram("H0")) == make_partition([[1]], 1)


@pytest.mark.parametrize("text,index", [("U D2", 2), ("D1", 1), ("U", 1), ("H1", 1),
                                        ("U X1", 2), ("U H2 D1", 2)])
def test_invalid(text, index):
    with pytest.raises(InvalidDiagramError) as info:
        parse_diagram(text)
    assert info.value.index == index


def test_raw_steps_validated():
    with pytest.raises(InvalidDiagramError):
        from_charlier([Step("U"), Step("D", 2)])


def test_witness(pi1):
    assert diagram_crossing_witness(to_charlier(pi1)) == 3
    assert dcr(pi1, 2) == 2
    assert diagram_crossing_witness(parse_diagram("U D1")) is None


def test_witness_absent_for_noncrossing_matchings():
    for n in range(0, 11, 2):
        for pi in enumerate_matchings(n):
            if dcr(pi, 1) == 0:
                d = to_charlier(pi)
                assert diagram_crossing_witness(d) is None
                assert {str(s) for s in d.steps} <= {"U", "D1"}


@given(partitions(max_n=12))
def test_round_trip(pi):
    d = to_charlier(pi)
    assert from_charlier(d) == pi
    assert from_json(to_json(d)) == d
    assert parse_diagram(str(d)) == d
    assert pi.is_matching == all(s.t != "H" for s in d.steps)
    ell = diagram_crossing_witness(d)
    if ell is not None:
        assert dcr(pi, ell - 1) >= 1


@pytest.mark.parametrize("n", range(8))
def test_diagrams_biject(n):
    ds = list(all_diagrams(n))
    assert len(ds) == len(set(ds)) == bell(n)
    assert {from_charlier(d) for d in ds} == set(enumerate_partitions(n))


def test_json_form():
    d = parse_diagram("U H1 D1")
    assert to_json(d) == '{"steps":[{"t":"U"},{"t":"H","e":1},{"t":"D","e":1}]}'
