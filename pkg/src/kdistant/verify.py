"""Exhaustive verification suites.

Every suite checks a finite range only; reports say "verified to bound" and
record the bound.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from kdistant import counting, orthopoly, series
from kdistant.charlier import (all_diagrams, diagram_crossing_witness, from_charlier,
                               parse_diagram, to_charlier)
from kdistant.involution import phi
from kdistant.partition import dcr, dne, enumerate_partitions, parse_partition


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    checks: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def check(self, case: str, expected, actual) -> bool:
        self.checks += 1
        if expected != actual:
            self.failures.append({"case": case, "expected": str(expected), "actual": str(actual)})
            return False
        return True

    def to_dict(self) -> dict:
        verdict = "verified to bound" if not self.failures else "counterexample within bound"
        return {"suite": self.suite, "parameters": self.parameters, "status": self.status,
                "result": verdict, "checks": self.checks, "failures": self.failures}


EXAMPLE_PARTITION = "{1,5}{2,4,9}{3}{6,12}{7,10,11}{8}"
EXAMPLE_DIAGRAM = "U U H0 H1 D2 U U H0 D3 H1 D1 D1"
CONSTRUCTION_PARTITION = "{1,6}{2,4,5}{3}"
CONSTRUCTION_IMAGES = {0: "{1,3,4,6}{2,5}", 2: "{1,4,5}{2,6}{3}"}


def involution_suite(n: int = 9, k: int = 5) -> VerificationReport:
    rep = VerificationReport("involution", {"n": n, "k": k})
    pi2 = parse_partition(CONSTRUCTION_PARTITION)
    for kk, image in CONSTRUCTION_IMAGES.items():
        rep.check(f"phi({pi2}, {kk})", image, str(phi(pi2, kk)))
    for m in range(n + 1):
        for pi in enumerate_partitions(m):
            cls = pi.classification
            cr = [dcr(pi, kk) for kk in range(k + 1)]
            ne = [dne(pi, kk) for kk in range(k + 1)]
            for kk in range(k + 1):
                img = phi(pi, kk)
                tag = f"{pi} k={kk}"
                rep.check(f"involution {tag}", pi, phi(img, kk))
                rep.check(f"dcr swap {tag}", ne[kk], dcr(img, kk))
                rep.check(f"dne swap {tag}", cr[kk], dne(img, kk))
                if kk >= 1:
                    rep.check(f"type {tag}", cls.type(), img.classification.type())
                else:
                    rep.check(f"type' {tag}", cls.type_prime(), img.classification.type_prime())
    return rep


def symmetry_suite(n: int = 9, k: int = 5) -> VerificationReport:
    rep = VerificationReport("symmetry", {"n": n, "k": k})
    for m in range(n + 1):
        for kk in range(k + 1):
            h = counting.joint_histogram(m, kk)
            rep.check(f"mass n={m} k={kk}", counting.bell(m), sum(h.values()))
            rep.check(f"joint histogram n={m} k={kk}", h, {(b, a): c for (a, b), c in h.items()})
    return rep


def refined_suite(n: int = 8, k: int = 3) -> VerificationReport:
    rep = VerificationReport("refined", {"n": n, "k": k})
    for m in range(n + 1):
        for kk in range(k + 1):
            table = counting.refined_counts(m, kk)
            for (s, t, i, j), c in sorted(table.items()):
                rep.check(f"f n={m} S={s} T={t} k={kk} ({i},{j})", c, table.get((s, t, j, i), 0))
    return rep


def charlier_suite(n: int = 10, k: int = 8) -> VerificationReport:
    """Round trips on partitions of [m], m <= n, and diagrams of length <= k."""
    rep = VerificationReport("charlier", {"n": n, "diagram_length": k})
    example = parse_partition(EXAMPLE_PARTITION)
    rep.check("example diagram", EXAMPLE_DIAGRAM, str(to_charlier(example)))
    rep.check("example decode", example, from_charlier(parse_diagram(EXAMPLE_DIAGRAM)))
    for m in range(n + 1):
        for pi in enumerate_partitions(m):
            d = to_charlier(pi)
            rep.check(f"round trip {pi}", pi, from_charlier(d))
            cls = pi.classification
            steps = Counter(s.t for s in d.steps)
            rep.check(f"step counts {pi}",
                      (len(cls.openers), len(cls.closers), len(cls.singletons | cls.transients)),
                      (steps["U"], steps["D"], steps["H"]))
            rep.check(f"matching iff no H {pi}", pi.is_matching, steps["H"] == 0)
            ell = diagram_crossing_witness(d)
            if ell is not None and m <= 9:
                rep.check(f"observation {pi} l={ell}", True, dcr(pi, ell - 1) >= 1)
    for m in range(k + 1):
        for d in all_diagrams(m):
            rep.check(f"diagram round trip {d}", d, to_charlier(from_charlier(d)))
    return rep


GF_PREFIXES = {
    "ncm3": [1, 1, 3, 14, 71, 387, 2210, 13053],
    "ncp2": [1, 1, 2, 5, 15, 51, 188, 731, 2950],
}


def gf_suite(order: int = 20) -> VerificationReport:
    rep = VerificationReport("gf", {"order": order})
    g_routes = {"fixed_point": series.g_fixed_point(order),
                "closed_form": series.g_closed_form(order)}
    rep.check("G routes", g_routes["fixed_point"], g_routes["closed_form"])
    g = g_routes["fixed_point"]
    pieces = series.g_first_return_terms(g)
    rep.check("G first-return decomposition", g,
              1 + sum(pieces.values(), series.PowerSeries.const(0, order)))

    ncm3 = {"functional": series.ncm3_functional(order),
            "closed_form": series.ncm3_closed_form(order)}
    rep.check("ncm3 routes", ncm3["functional"], ncm3["closed_form"])
    ncp2 = {"system": series.ncp2_system(order)["F"],
            "closed_form": series.ncp2_closed_form(order),
            "closed_form_ratio": series.ncp2_closed_form_ratio(order)}
    rep.check("ncp2 routes (closed form)", ncp2["system"], ncp2["closed_form"])
    rep.check("ncp2 routes (ratio form)", ncp2["system"], ncp2["closed_form_ratio"])
    sch = {"system": series.schroeder_weighted_system(order + 2)["A"],
           "closed_form": series.schroeder_weighted_closed_form(order + 2)}
    rep.check("schroeder routes", sch["system"], sch["closed_form"])

    for name, s in (("ncm3", ncm3["functional"]), ("ncp2", ncp2["system"])):
        want = GF_PREFIXES[name]
        rep.check(f"{name} displayed coefficients", want, [int(c) for c in s.coeffs[:len(want)]])
    for i in range(min(order, 11)):
        rep.check(f"ncm3 x^{i} vs NCM_3({2 * i})", counting.count_fast("matchings", 2 * i, 3),
                  ncm3["functional"][i])
    for i in range(min(order, 13)):
        rep.check(f"ncp2 x^{i} vs NCP_2({i})", counting.count_fast("partitions", i, 2),
                  ncp2["system"][i])
    a = sch["system"]
    for i in range(min(order // 2 + 1, 11)):
        rep.check(f"schroeder x^{2 * i} vs s_{i}", counting.little_schroeder(i), a[2 * i])
        rep.check(f"schroeder x^{2 * i} vs NCM_2({2 * i})",
                  counting.count_fast("matchings", 2 * i, 2), a[2 * i])
        rep.check(f"schroeder x^{2 * i + 1}", 0, a[2 * i + 1])
    return rep


# values displayed for the NCP_2 recurrence, b_0..b_6 and lambda_1..lambda_7
NCP2_B = [Fraction(1), 3 - Fraction(1), 3 - Fraction(1, 2), 3 - Fraction(1, 10),
          3 - Fraction(1, 65), 3 - Fraction(1, 442), 3 - Fraction(1, 3026)]
NCP2_LAMBDA = [Fraction(1), 1 + Fraction(1), 1 + Fraction(1, 4), 1 + Fraction(1, 25),
               1 + Fraction(1, 169), 1 + Fraction(1, 1156), 1 + Fraction(1, 7921)]
NCM3_LAMBDA = [Fraction(1), Fraction(2), Fraction(5, 2), Fraction(3, 10), Fraction(76, 5),
               Fraction(-680, 57), Fraction(-2311, 7752), Fraction(1246001, 314296),
               Fraction(114710016, 151553069)]

CLASSICAL = {
    "catalan": (lambda n: 0, lambda n: 1),
    "odd-double-factorial": (lambda n: 0, lambda n: n),
    "motzkin": (lambda n: 1, lambda n: 1),
    "bell": (lambda n: n + 1, lambda n: n),
    "ncp1": (lambda n: 1 if n == 0 else 2, lambda n: 1),
}


def orthopoly_suite(depth: int = 12) -> VerificationReport:
    rep = VerificationReport("orthopoly", {"depth": depth})
    d = depth + 1
    for name, (bf, lf) in CLASSICAL.items():
        expected = orthopoly.RecurrenceCoefficients.from_functions(bf, lf, d)
        mu = orthopoly.moment_source(name, 2 * d)
        got = orthopoly.recurrence_from_moments(mu, d)
        rep.check(f"{name} recurrence", expected, got)
        rep.check(f"{name} moments", [Fraction(m) for m in mu],
                  orthopoly.moments_from_recurrence(expected, 2 * d - 1))
        orth = orthopoly.check_orthogonality(mu, got, d - 1)
        rep.check(f"{name} orthogonality", [], orth.failures)

    ncm3 = orthopoly.recurrence_from_moments(orthopoly.moment_source("ncm3", 20), 10)
    rep.check("ncm3 lambdas", NCM3_LAMBDA, list(ncm3.lam))
    rep.check("ncm3 b", [0] * 10, list(ncm3.b))
    flagged = [f["index"] for f in orthopoly.lambda_flags(ncm3) if f["negative"]]
    rep.check("ncm3 negative lambdas", [6, 7], flagged)

    ncp2 = orthopoly.recurrence_from_moments(orthopoly.moment_source("ncp2", 16), 8)
    rep.check("ncp2 b", NCP2_B, list(ncp2.b[:7]))
    rep.check("ncp2 lambda", NCP2_LAMBDA, list(ncp2.lam[:7]))

    ncp3 = orthopoly.recurrence_from_moments(orthopoly.moment_source("ncp3", 2 * d), d)
    rep.check("ncp3", orthopoly.ncp3_expected(d), ncp3)

    alt = orthopoly.RecurrenceCoefficients.from_functions(
        lambda n: 0, lambda n: 1 if n % 2 else 2, 12)
    mu = orthopoly.moments_from_recurrence(alt, 20)
    for n in range(11):
        rep.check(f"alternating lambdas mu_{2 * n}", counting.little_schroeder(n), mu[2 * n])

    for n in range(11):
        images = list(orthopoly.doubling_images(n))
        rep.check(f"doubling count n={n}", counting.catalan(n), len(images))
        rep.check(f"doubling injective n={n}", len(images), len(set(images)))
        rep.check(f"doubling lands in Dyck paths n={n}", True,
                  all(p.is_dyck and len(p.steps) == 2 * n for p in images))
    return rep


def conjecture_suite(depth: int = 12) -> VerificationReport:
    rep = VerificationReport("conjecture", {"depth": depth})
    for report in (orthopoly.conjecture_check_ncp2(depth), orthopoly.conjecture_check_ncp3(depth)):
        for e in report.entries:
            rep.check(f"{report.name} {e['coefficient']}_{e['index']}", e["expected"], e["actual"])
    return rep


SUITES = {
    "involution": lambda n, k: involution_suite(n if n is not None else 9, k if k is not None else 5),
    "symmetry": lambda n, k: symmetry_suite(n if n is not None else 9, k if k is not None else 5),
    "refined": lambda n, k: refined_suite(n if n is not None else 8, k if k is not None else 3),
    "charlier": lambda n, k: charlier_suite(n if n is not None else 10, k if k is not None else 8),
    "gf": lambda n, k: gf_suite(n if n is not None else 20),
    "orthopoly": lambda n, k: orthopoly_suite(n if n is not None else 12),
    "conjecture": lambda n, k: conjecture_suite(n if n is not None else 12),
}
