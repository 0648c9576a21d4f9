import json
import math

import pytest

from kdistant import counting
from kdistant.counting import (bell, build_table, catalan, count_brute, count_fast,
                               crossing_distance_histogram, double_factorial_odd, emit_table,
                               joint_histogram, little_schroeder, motzkin, refined_counts,
                               to_grid)
from kdistant.partition import dcr, dne, enumerate_matchings, enumerate_partitions, max_crossing

# reference sequences typed in from standard tables
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
LITTLE_SCHROEDER = [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049]
ODD_DF = [1, 1, 3, 15, 105, 945, 10395, 135135]


def test_sequences():
    assert [catalan(n) for n in range(11)] == CATALAN
    assert [motzkin(n) for n in range(11)] == MOTZKIN
    assert [bell(n) for n in range(11)] == BELL
    assert [little_schroeder(n) for n in range(10)] == LITTLE_SCHROEDER
    assert [double_factorial_odd(n) for n in range(8)] == ODD_DF


def oracle(family, n, k):
    objs = enumerate_matchings(n) if family == "matchings" else enumerate_partitions(n)
    return sum(1 for pi in objs if dcr(pi, k) == 0)


@pytest.mark.parametrize("family,max_n", [("partitions", 8), ("matchings", 10)])
def test_fast_and_brute_against_oracle(family, max_n):
    for n in range(max_n + 1):
        for k in range(n + 2):
            want = oracle(family, n, k)
            assert count_fast(family, n, k) == want
            assert count_brute(family, n, k) == want


def test_classical_columns():
    # k=1 gives noncrossing objects, k=0 also forbids a shared endpoint
    for n in range(12):
        assert count_fast("partitions", n, 1) == catalan(n)
        assert count_fast("partitions", n, 0) == motzkin(n)
    for n in range(9):
        assert count_fast("matchings", 2 * n, 1) == catalan(n)
        assert count_fast("matchings", 2 * n, 0) == catalan(n)
        assert count_fast("matchings", 2 * n, 2) == little_schroeder(n)


def test_odd_matchings_and_infinity():
    assert count_fast("matchings", 7, 2) == 0
    assert count_fast("matchings", 8, None) == 105
    assert count_fast("partitions", 6, math.inf) == 203
    assert count_brute("partitions", 6, None) == 203


def test_large_k_reaches_total():
    for n in range(1, 14):
        assert count_fast("partitions", n, max(n - 2, 0)) == bell(n)
        if n > 3:
            assert count_fast("partitions", n, n - 3) < bell(n)


def test_histogram_parallel_matches_serial():
    serial = crossing_distance_histogram("partitions", 8, 1)
    assert crossing_distance_histogram("partitions", 8, 2) == serial
    assert sum(serial.values()) == bell(8)


def test_histogram_no_crossing_bucket():
    for n in range(9):
        h = crossing_distance_histogram("partitions", n)
        # distance -1 means no crossing at all, i.e. the 0-distant count
        assert h.get(-1, 0) == count_fast("partitions", n, 0)


def test_validation():
    with pytest.raises(ValueError):
        count_fast("trees", 4, 1)
    with pytest.raises(ValueError):
        count_brute("partitions", 4, -1)
    with pytest.raises(ValueError):
        crossing_distance_histogram("partitions", 30)


def test_joint_histogram_symmetric():
    for n in range(8):
        for k in range(4):
            h = joint_histogram(n, k)
            assert sum(h.values()) == bell(n)
            assert all(h.get((b, a)) == c for (a, b), c in h.items())


def test_refined_counts_symmetric_and_total():
    rc = refined_counts(6, 1)
    assert sum(rc.values()) == bell(6)
    assert all(rc.get((o, c, b, a)) == v for (o, c, a, b), v in rc.items())
    assert refined_counts(0, 1) == {}
    with pytest.raises(ValueError):
        refined_counts(9, 1)


def test_refined_counts_keys_agree_with_direct():
    for pi in enumerate_partitions(5):
        cls = pi.classification
        key = (tuple(sorted(cls.openers)), tuple(sorted(cls.closers)), max_crossing(pi, 1))
        assert any(k[:3] == key for k in refined_counts(5, 1))


class TestTables:
    def test_paper_layout_blanks(self):
        t = build_table("partitions", 6, 4, paper_layout=True)
        grid = to_grid(t)
        assert grid[0] == ["k\\n", "1", "2", "3", "4", "5", "6"]
        # first row is k=0, the Motzkin numbers
        assert grid[1][1:] == [str(motzkin(n)) for n in range(1, 7)]
        col3 = [row[3] for row in grid[1:]]
        assert col3 == ["4", "5", "", "", "", "5"]
        assert grid[-1][0] == "∞"

    def test_matching_layout_starts_at_one(self):
        t = build_table("matchings", 8, 6, paper_layout=True)
        assert t.ks[0] == 1
        assert t.ns == [2, 4, 6, 8]
        assert build_table("matchings", 8, 6).ks[0] == 0

    def test_full_layout_has_every_cell(self):
        t = build_table("partitions", 5, 4)
        assert len(t.rows) == 5 * 5 + 5

    def test_csv(self):
        out = emit_table("partitions", 3, 1, "csv")
        lines = out.splitlines()
        assert lines[0] == "k,n,count"
        assert "inf,3,5" in lines
        assert "0,3,4" in lines

    def test_json(self):
        data = json.loads(emit_table("matchings", 4, 1, "json"))
        assert data["family"] == "matchings"
        assert {"k": "inf", "n": 4, "count": "3"} in data["rows"]

    def test_text(self):
        out = emit_table("partitions", 4, 2, "text", paper_layout=True)
        assert out.splitlines()[0].split() == ["k\\n", "1", "2", "3", "4"]
        assert out.endswith("\n")

    def test_bad_format(self):
        with pytest.raises(ValueError):
            emit_table("partitions", 3, 1, "xml")
