"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is printed
at the end of the session (and when run as a script)."""
import contextlib
import os
import sys

import pytest

from kdistant import counting, kernels, orthopoly, verify
from kdistant.counting import build_table, count_brute, count_fast, to_grid

RESULTS: dict[str, tuple[bool, str]] = {}


@contextlib.contextmanager
def criterion(label):
    try:
        yield
    except Exception as exc:
        RESULTS[label] = (False, str(exc).splitlines()[0] if str(exc) else type(exc).__name__)
        print(f"FAIL  {label}")
        raise
    RESULTS[label] = (True, "")
    print(f"PASS  {label}")


def parse_printed(text):
    """Grid of cells from a whitespace table, '.' marking a blank cell."""
    rows = [line.split() for line in text.strip().splitlines()]
    return [[("" if c == "." else c) for c in row] for row in rows]


MATCHING_TABLE = parse_printed("""
k\\n 2 4 6 8 10 12 14 16 18 20
1 1 2 5 14 42 132 429 1430 4862 16796
2 . 3 11 45 197 903 4279 20793 103049 518859
3 . . 14 71 387 2210 13053 79081 488728 3069007
4 . . 15 91 581 3906 27189 194240 1416168 10494328
5 . . . 102 753 5752 45636 372360 3101523 26266917
6 . . . 105 873 7541 66690 607128 5657520 53631564
7 . . . . 930 8985 88450 885394 9067611 94719138
8 . . . . 945 9885 107847 1187376 13233511 150234570
9 . . . . . 10290 122115 1476948 17933348 219754737
10 . . . . . 10395 130515 1715475 22701570 300724081
11 . . . . . . 134190 1881495 26969370 386669322
12 . . . . . . 135135 1975995 30306045 468680940
13 . . . . . . . 2016630 32546745 538581120
14 . . . . . . . 2027025 33794145 591287445
15 . . . . . . . . 34324290 625810185
16 . . . . . . . . 34459425 652702050
17 . . . . . . . . . 644729085
18 . . . . . . . . . 654729075
∞ 1 3 15 105 945 10395 135135 2027025 34459425 654729075
""")

PARTITION_TABLE = parse_printed("""
k\\n 1 2 3 4 5 6 7 8 9 10 11 12
0 1 2 4 9 21 51 127 323 835 2188 5798 15511
1 . . 5 14 42 132 429 1430 4862 16796 58786 208012
2 . . . 15 51 188 731 2950 12235 51822 223191 974427
3 . . . . 52 201 841 3726 17213 82047 400600 1993377
4 . . . . . 203 872 4037 19796 101437 537691 2926663
5 . . . . . . 877 4125 20802 110950 618777 3575688
6 . . . . . . . 4140 21095 114663 657698 3943294
7 . . . . . . . . 21147 115772 673019 4118232
8 . . . . . . . . . 115975 677693 4187838
9 . . . . . . . . . . 678570 4209457
10 . . . . . . . . . . . 4213597
∞ 1 2 5 15 52 203 877 4140 21147 115975 678570 4213597
""")


def grid_mismatches(printed, computed):
    out = []
    if len(printed) != len(computed):
        out.append(f"{len(computed)} rows computed, {len(printed)} printed")
    for prow, crow in zip(printed, computed):
        for col, (p, c) in enumerate(zip(prow, crow)):
            if p != c:
                out.append(f"k={prow[0]} n={printed[0][col]}: printed {p or 'blank'}, "
                           f"computed {c or 'blank'}")
    return out


def test_criterion_1a_matching_table():
    with criterion("1a  matching table, every printed cell and blank"):
        grid = to_grid(build_table("matchings", 20, 18, paper_layout=True))
        bad = grid_mismatches(MATCHING_TABLE, grid)
        assert not bad, "; ".join(bad)


def test_criterion_1b_partition_table():
    with criterion("1b  partition table, every printed cell and blank"):
        grid = to_grid(build_table("partitions", 12, 10, paper_layout=True))
        bad = grid_mismatches(PARTITION_TABLE, grid)
        assert not bad, "; ".join(bad)


def test_criterion_1c_spot_anchors():
    with criterion("1c  spot anchors NCM_4(10), NCM_10(20), NCP_7(12)"):
        assert count_fast("matchings", 10, 4) == 581
        assert count_fast("matchings", 20, 10) == 300724081
        assert count_fast("partitions", 12, 7) == 4118232


def test_criterion_2_brute_equals_fast():
    with criterion("2   count_brute == count_fast, matchings n<=14, partitions n<=11, all k"):
        for family, top, step in (("matchings", 14, 2), ("partitions", 11, 1)):
            for n in range(0, top + 1, step):
                for k in range(n + 2):
                    b, f = count_brute(family, n, k), count_fast(family, n, k)
                    assert b == f, f"{family} n={n} k={k}: brute {b}, fast {f}"
                assert count_brute(family, n, None) == count_fast(family, n, None)


def run_suite(name, *args):
    report = verify.SUITES[name](*args)
    d = report.to_dict()
    assert report.status == "pass", f"{name}: {d['failures'][:3]}"
    assert d["result"] == "verified to bound"
    return d


def test_criterion_3_involution():
    with criterion("3   involution suite, n<=9, k<=5, worked examples"):
        d = run_suite("involution", 9, 5)
        assert d["parameters"] == {"n": 9, "k": 5}
        assert d["checks"] > 0


def test_criterion_4_symmetry():
    with criterion("4   joint histogram symmetry n<=9 k<=5; refined symmetry n<=8 k<=3"):
        run_suite("symmetry", 9, 5)
        run_suite("refined", 8, 3)


def test_criterion_5_charlier():
    with criterion("5   Charlier round trips, example diagram, crossing observation on Pi_9"):
        d = run_suite("charlier", 10, 8)
        assert d["parameters"] == {"n": 10, "diagram_length": 8}


def test_criterion_6_generating_functions():
    with criterion("6   generating functions: prefixes, routes agree to order 20, table ranges"):
        run_suite("gf", 20, None)
        ncm3 = counting_series("ncm3", 11)
        assert ncm3 == [count_fast("matchings", 2 * n, 3) for n in range(11)]
        ncp2 = counting_series("ncp2", 13)
        assert ncp2 == [count_fast("partitions", n, 2) for n in range(13)]


def counting_series(name, order):
    from kdistant.series import GENERATING_FUNCTIONS
    return [int(c) for c in GENERATING_FUNCTIONS[name](order).coeffs]


def test_criterion_7_orthopoly():
    with criterion("7   recurrence recovery, classical cases, doubling bijection, conjecture"):
        run_suite("orthopoly", 12, None)
        run_suite("conjecture", 12, None)
        for check in (orthopoly.conjecture_check_ncp2, orthopoly.conjecture_check_ncp3):
            rep = check(12)
            assert rep.status == "verified to depth 12 (not a proof)", rep.status


def test_criterion_8_labels():
    with criterion("8   results labeled 'verified to bound' / 'not a proof', never 'proved'"):
        texts = [str(verify.SUITES[name](None, None).to_dict())
                 for name in ("refined", "gf", "conjecture")]
        texts.append(str(orthopoly.conjecture_check_ncp2(6).to_dict()))
        for t in texts:
            assert "proved" not in t.lower().replace("not a proof", "")
        assert all("verified to bound" in t for t in texts[:3])
        assert "not a proof" in texts[3]


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("KDISTANT_SLOW"), reason="set KDISTANT_SLOW=1; ~10 min")
def test_matchings_of_20_by_enumeration():
    """Brute-force the n=20 matching column for the three largest finite k."""
    from collections import Counter
    from kdistant.counting import _prefixes
    hist = Counter()
    for p in _prefixes(20, True, 4):
        hist.update(kernels.crossing_distance_histogram(20, True, p))
    got = {k: sum(c for d, c in hist.items() if d < k) for k in (16, 17, 18)}
    assert got == {k: count_fast("matchings", 20, k) for k in (16, 17, 18)}


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
