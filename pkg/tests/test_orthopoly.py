import random
from fractions import Fraction

import pytest

from kdistant import orthopoly as op
from kdistant.counting import catalan, motzkin
from kdistant.orthopoly import (LatticePath, NotQuasiDefiniteError, RecurrenceCoefficients,
                                check_orthogonality, moments_from_recurrence,
                                recurrence_from_moments)


def motzkin_path_moments(b, lam, count):
    """Weighted Motzkin paths by a direct height DP: level steps at height h weigh b[h],
    down steps from height h weigh lam[h-1]."""
    out = []
    for n in range(count):
        row = {0: Fraction(1)}
        for step in range(n):
            nxt = {}
            for h, w in row.items():
                if h + 1 <= n - step - 1:
                    nxt[h + 1] = nxt.get(h + 1, 0) + w
                nxt[h] = nxt.get(h, 0) + w * b[h]
                if h:
                    nxt[h - 1] = nxt.get(h - 1, 0) + w * lam[h - 1]
            row = nxt
        out.append(row.get(0, Fraction(0)))
    return out


def random_recurrence(rng, depth):
    b = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(depth)]
    lam = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 3))
           for _ in range(depth - 1)]
    return RecurrenceCoefficients(tuple(b), tuple(lam))


@pytest.mark.parametrize("seed", range(20))
def test_random_round_trip(seed):
    rng = random.Random(seed)
    c = random_recurrence(rng, 8)
    mu = moments_from_recurrence(c, 15)
    assert mu == motzkin_path_moments(list(c.b) + [0] * 8, list(c.lam) + [0] * 8, 16)
    assert recurrence_from_moments(mu, 8) == c
    assert check_orthogonality(mu, c, 7).passed


def test_perturbed_moment_fails_orthogonality():
    c = RecurrenceCoefficients.from_functions(lambda n: 1, lambda n: 1, 6)
    mu = moments_from_recurrence(c, 11)
    mu[7] += 1
    rep = check_orthogonality(mu, c, 5)
    assert not rep.passed
    assert rep.failures[0]["n"] >= 3


def test_zero_odd_moments_give_zero_b():
    for name in ("catalan", "odd-double-factorial", "ncm2", "ncm3"):
        assert all(v == 0 for v in recurrence_from_moments(op.moment_source(name, 16), 8).b)


def test_classical():
    cat = recurrence_from_moments(op.moment_source("catalan", 20), 10)
    assert set(cat.b) == {0} and set(cat.lam) == {1}
    mot = recurrence_from_moments([motzkin(n) for n in range(20)], 10)
    assert set(mot.b) == {1} and set(mot.lam) == {1}
    bell = recurrence_from_moments(op.moment_source("bell", 20), 10)
    assert list(bell.b) == list(range(1, 11)) and list(bell.lam) == list(range(1, 10))
    hermite = recurrence_from_moments(op.moment_source("odd-double-factorial", 20), 10)
    assert list(hermite.lam) == list(range(1, 10))


def test_not_quasi_definite():
    with pytest.raises(NotQuasiDefiniteError) as info:
        recurrence_from_moments([1, 1, 1, 1, 1, 1], 3)
    assert info.value.depth == 1


def test_needs_enough_moments():
    with pytest.raises(ValueError):
        recurrence_from_moments([1, 0, 1], 2)


def test_eval_polynomials():
    c = RecurrenceCoefficients.from_functions(lambda n: 0, lambda n: 1, 4)
    p = op.eval_polynomials(c, 3)
    # monic Chebyshev of the second kind, U_n(x/2)
    assert p[2] == [-1, 0, 1]
    assert p[3] == [0, -2, 0, 1]


def test_lambda_flags():
    c = RecurrenceCoefficients((Fraction(0),) * 3, (Fraction(2), Fraction(-1, 3)))
    flags = op.lambda_flags(c)
    assert flags[1] == {"index": 2, "value": "-1/3", "negative": True, "nonintegral": True}
    assert not flags[0]["negative"]


def test_fibonacci():
    assert [op.fibonacci(n) for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert op.fibonacci(0) == 0
    assert op.fibonacci(-1) == 1 and op.fibonacci(-2) == -1


def test_expected_forms():
    e = op.ncp2_expected(6)
    assert e.b[:4] == (1, 2, Fraction(5, 2), Fraction(29, 10))
    assert e.lam[:3] == (1, 2, Fraction(5, 4))
    t = op.ncp3_expected(5)
    assert t.b == (1, 2, 3, 3, 3) and t.lam == (1, 2, 2, 2)


@pytest.mark.parametrize("check", [op.conjecture_check_ncp2, op.conjecture_check_ncp3])
def test_conjecture_reports(check):
    rep = check(8)
    assert rep.all_match
    assert rep.status == "verified to depth 8 (not a proof)"
    assert rep.to_dict()["verified_depth"] == 8


def test_mismatch_report():
    a = op.ncp3_expected(4)
    b = RecurrenceCoefficients(a.b[:-1] + (Fraction(7),), a.lam)
    rep = op.compare_recurrences("x", b, a)
    assert not rep.all_match
    assert rep.status.startswith("mismatch within depth 3")


def test_moment_source_unknown():
    with pytest.raises(ValueError):
        op.moment_source("hermite", 4)
    assert op.interleave([1, 1, 2], 5) == [1, 0, 1, 0, 2]


class TestPaths:
    def test_validation(self):
        with pytest.raises(ValueError):
            LatticePath("D")
        with pytest.raises(ValueError):
            LatticePath("UX")
        with pytest.raises(ValueError):
            LatticePath("UU")

    def test_motzkin_count(self):
        for n in range(10):
            assert sum(1 for _ in op.motzkin_paths(n)) == motzkin(n)

    def test_doubling(self):
        p = LatticePath("UHD")
        assert op.motzkin_to_dyck(p, ["DU"]).steps == "UUDUDD"
        assert op.motzkin_to_dyck(p, ["UD"]).steps == "UUUDDD"
        with pytest.raises(ValueError):
            op.motzkin_to_dyck(LatticePath("H"), ["DU"])
        with pytest.raises(ValueError):
            op.motzkin_to_dyck(p, [])

    @pytest.mark.parametrize("n", range(9))
    def test_doubling_is_a_bijection(self, n):
        images = list(op.doubling_images(n))
        dyck = set()

        def rec(s, h):
            if len(s) == 2 * n:
                if h == 0:
                    dyck.add(s)
                return
            rec(s + "U", h + 1)
            if h:
                rec(s + "D", h - 1)

        rec("", 0)
        assert len(images) == catalan(n)
        assert {p.steps for p in images} == dyck
