"""Moment sequences, three-term recurrences and their orthogonal polynomials.

Polynomials are lists of rational coefficients, lowest degree first.  The
moment functional is ``L(x^i) = mu[i]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, Sequence

Poly = list[Fraction]


class NotQuasiDefiniteError(ArithmeticError):
    def __init__(self, depth: int):
        super().__init__(f"moment sequence not quasi-definite at depth {depth}")
        self.depth = depth


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """``P_{n+1} = (x - b_n) P_n - lambda_n P_{n-1}``; ``lam[0]`` is lambda_1."""
    b: tuple[Fraction, ...]
    lam: tuple[Fraction, ...]

    @classmethod
    def from_functions(cls, b: Callable[[int], Fraction], lam: Callable[[int], Fraction],
                       depth: int) -> "RecurrenceCoefficients":
        return cls(tuple(Fraction(b(n)) for n in range(depth)),
                   tuple(Fraction(lam(n)) for n in range(1, depth)))

    def lambda_(self, n: int) -> Fraction:
        return self.lam[n - 1]

    @property
    def depth(self) -> int:
        return len(self.b)


# -- polynomial helpers ----------------------------------------------------------------

def _mul(p: Poly, q: Poly) -> Poly:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, c in enumerate(q):
                out[i + j] += a * c
    return out


def _functional(p: Poly, mu: Sequence[Fraction]) -> Fraction:
    if len(p) > len(mu):
        raise ValueError(f"need {len(p)} moments, have {len(mu)}")
    return sum((c * mu[i] for i, c in enumerate(p) if c), Fraction(0))


def _next_poly(p: Poly, prev: Poly, b: Fraction, lam: Fraction) -> Poly:
    out = [Fraction(0)] + list(p)           # x * P_n
    for i, c in enumerate(p):
        out[i] -= b * c
    for i, c in enumerate(prev):
        out[i] -= lam * c
    return out


# -- moments <-> recurrence --------------------------------------------------------------

def moments_from_recurrence(c: RecurrenceCoefficients, n_max: int) -> list[Fraction]:
    """mu_0..mu_{n_max} as weighted Motzkin path counts.

    Up steps weigh 1, a level step at height h weighs b_h, a down step from
    height h weighs lambda_h.
    """
    need = n_max // 2
    if (n_max >= 1 and len(c.b) < (n_max + 1) // 2) or len(c.lam) < need:
        raise ValueError(f"{n_max} moments need b_0..b_{(n_max - 1) // 2} "
                         f"and lambda_1..lambda_{need}")
    mu = [Fraction(1)]
    weights = [Fraction(1)]  # weights[h]: paths of the current length ending at height h
    for t in range(1, n_max + 1):
        top = min(t, n_max - t)
        nxt = [Fraction(0)] * (top + 1)
        for h, w in enumerate(weights):
            if not w:
                continue
            if h + 1 <= top:
                nxt[h + 1] += w
            if h <= top and c.b[h]:
                nxt[h] += w * c.b[h]
            if h >= 1 and h - 1 <= top:
                nxt[h - 1] += w * c.lam[h - 1]
        weights = nxt
        mu.append(weights[0])
    return mu


def recurrence_from_moments(mu: Sequence, depth: int) -> RecurrenceCoefficients:
    """b_0..b_{depth-1} and lambda_1..lambda_{depth-1} by Gram-Schmidt on L.

    Needs mu_0..mu_{2 depth - 1}.
    """
    mu = [Fraction(m) for m in mu]
    if len(mu) < 2 * depth:
        raise ValueError(f"depth {depth} needs {2 * depth} moments, have {len(mu)}")
    b: list[Fraction] = []
    lam: list[Fraction] = []
    prev: Poly = []
    cur: Poly = [Fraction(1)]
    prev_norm = None
    for n in range(depth):
        sq = _mul(cur, cur)
        norm = _functional(sq, mu)
        if norm == 0:
            raise NotQuasiDefiniteError(n)
        b.append(_functional([Fraction(0)] + sq, mu) / norm)
        if n:
            lam.append(norm / prev_norm)
        if n + 1 < depth:
            cur, prev = _next_poly(cur, prev, b[-1], lam[-1] if n else Fraction(0)), cur
        prev_norm = norm
    return RecurrenceCoefficients(tuple(b), tuple(lam))


def eval_polynomials(c: RecurrenceCoefficients, n_max: int) -> list[Poly]:
    """Coefficient lists of P_0..P_{n_max}."""
    if n_max > c.depth:
        raise ValueError(f"P_{n_max} needs b_0..b_{n_max - 1}")
    polys: list[Poly] = [[Fraction(1)]]
    prev: Poly = []
    for n in range(n_max):
        lam = c.lambda_(n) if n else Fraction(0)
        polys.append(_next_poly(polys[-1], prev, c.b[n], lam))
        prev = polys[-2]
    return polys


@dataclass
class OrthogonalityReport:
    n_max: int
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_orthogonality(mu: Sequence, c: RecurrenceCoefficients, n_max: int) -> OrthogonalityReport:
    """L(P_n P_m) = 0 for m < n <= n_max and L(P_n^2) = lambda_1 ... lambda_n."""
    mu = [Fraction(m) for m in mu]
    if len(mu) < 2 * n_max + 1:
        raise ValueError(f"need mu_0..mu_{2 * n_max}")
    polys = eval_polynomials(c, n_max)
    report = OrthogonalityReport(n_max)
    norm = Fraction(mu[0])
    for n in range(n_max + 1):
        if n:
            norm *= c.lambda_(n)
        for m in range(n):
            v = _functional(_mul(polys[n], polys[m]), mu)
            if v:
                report.failures.append({"n": n, "m": m, "expected": "0", "actual": str(v)})
        v = _functional(_mul(polys[n], polys[n]), mu)
        if v != norm:
            report.failures.append({"n": n, "m": n, "expected": str(norm), "actual": str(v)})
    return report


def lambda_flags(c: RecurrenceCoefficients) -> list[dict]:
    """Each lambda_n with flags for negative and non-integral values."""
    return [{"index": n, "value": str(v), "negative": v < 0, "nonintegral": v.denominator != 1}
            for n, v in enumerate(c.lam, start=1)]


# -- conjecture reporters ---------------------------------------------------------------------

def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1, extended to negative n by F_{n+1} = F_n + F_{n-1}."""
    a, b = 0, 1  # F_0, F_1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a
    return a


def ncp2_expected(depth: int) -> RecurrenceCoefficients:
    """b_0 = lambda_1 = 1, b_1 = 2, then the Fibonacci closed forms for n >= 2."""
    def b(n):
        if n == 0:
            return Fraction(1)
        if n == 1:
            return Fraction(2)
        return 3 - Fraction(1, fibonacci(2 * n - 1) * fibonacci(2 * n - 3))

    def lam(n):
        return Fraction(1) if n == 1 else 1 + Fraction(1, fibonacci(2 * n - 3) ** 2)

    return RecurrenceCoefficients.from_functions(b, lam, depth)


def ncp3_expected(depth: int) -> RecurrenceCoefficients:
    return RecurrenceCoefficients.from_functions(
        lambda n: min(n + 1, 3), lambda n: 1 if n == 1 else 2, depth)


@dataclass
class ConjectureReport:
    name: str
    depth: int
    entries: list[dict]

    @property
    def all_match(self) -> bool:
        return all(e["match"] for e in self.entries)

    @property
    def status(self) -> str:
        word = "verified to depth" if self.all_match else "mismatch within depth"
        return f"{word} {self.depth - 1} (not a proof)"

    def to_dict(self) -> dict:
        return {"name": self.name, "verified_depth": self.depth - 1, "status": self.status,
                "entries": self.entries}


def compare_recurrences(name: str, actual: RecurrenceCoefficients,
                        expected: RecurrenceCoefficients) -> ConjectureReport:
    entries = []
    for n, (e, a) in enumerate(zip(expected.b, actual.b)):
        entries.append({"index": n, "coefficient": "b", "expected": str(e),
                        "actual": str(a), "match": e == a})
    for n, (e, a) in enumerate(zip(expected.lam, actual.lam), start=1):
        entries.append({"index": n, "coefficient": "lambda", "expected": str(e),
                        "actual": str(a), "match": e == a})
    return ConjectureReport(name, min(actual.depth, expected.depth), entries)


def _partition_moments(k: int, count: int) -> list[int]:
    from kdistant.counting import count_fast
    return [count_fast("partitions", n, k) for n in range(count)]


def conjecture_check_ncp2(depth: int = 12) -> ConjectureReport:
    """Compare the recurrence of NCP_2 moments with the Fibonacci forms, indices 0..depth."""
    mu = _partition_moments(2, 2 * depth + 2)
    return compare_recurrences("ncp2", recurrence_from_moments(mu, depth + 1),
                               ncp2_expected(depth + 1))


def conjecture_check_ncp3(depth: int = 12) -> ConjectureReport:
    mu = _partition_moments(3, 2 * depth + 2)
    return compare_recurrences("ncp3", recurrence_from_moments(mu, depth + 1),
                               ncp3_expected(depth + 1))


# -- moment sources ---------------------------------------------------------------------------

def interleave(even_terms: Sequence[int], count: int) -> list[int]:
    """mu_{2n} = even_terms[n], odd moments zero; ``count`` terms."""
    return [even_terms[i // 2] if i % 2 == 0 else 0 for i in range(count)]


def moment_source(name: str, count: int) -> list[int]:
    """First ``count`` moments of a named sequence."""
    from kdistant import counting as C
    half = (count + 1) // 2
    sources = {
        "catalan": lambda: interleave([C.catalan(n) for n in range(half)], count),
        "odd-double-factorial": lambda: interleave(
            [C.double_factorial_odd(n) for n in range(half)], count),
        "motzkin": lambda: [C.motzkin(n) for n in range(count)],
        "bell": lambda: [C.bell(n) for n in range(count)],
        "ncp1": lambda: [C.catalan(n) for n in range(count)],
        "ncp2": lambda: _partition_moments(2, count),
        "ncp3": lambda: _partition_moments(3, count),
        "ncm2": lambda: interleave([C.count_fast("matchings", 2 * n, 2) for n in range(half)], count),
        "ncm3": lambda: interleave([C.count_fast("matchings", 2 * n, 3) for n in range(half)], count),
    }
    if name not in sources:
        raise ValueError(f"unknown moment source {name!r}; choose from {sorted(sources)}")
    return sources[name]()


MOMENT_SOURCES = ("catalan", "odd-double-factorial", "motzkin", "bell",
                  "ncp1", "ncp2", "ncp3", "ncm2", "ncm3")


# -- lattice paths and the Motzkin-to-Dyck doubling --------------------------------------------

_DELTA = {"U": 1, "D": -1, "H": 0}


@dataclass(frozen=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        h = 0
        for idx, s in enumerate(self.steps, start=1):
            if s not in _DELTA:
                raise ValueError(f"step {idx}: unknown step {s!r}")
            h += _DELTA[s]
            if h < 0:
                raise ValueError(f"step {idx}: path goes below the axis")
        if h:
            raise ValueError(f"path ends at height {h}")

    def step_heights(self) -> list[int]:
        """Height of the starting point of each step."""
        out, h = [], 0
        for s in self.steps:
            out.append(h)
            h += _DELTA[s]
        return out

    @property
    def is_dyck(self) -> bool:
        return "H" not in self.steps


def motzkin_paths(n: int) -> Iterator[LatticePath]:
    def rec(prefix: str, h: int):
        left = n - len(prefix)
        if left == 0:
            if h == 0:
                yield LatticePath(prefix)
            return
        if h + 1 <= left - 1:
            yield from rec(prefix + "U", h + 1)
        if h <= left - 1:
            yield from rec(prefix + "H", h)
        if h >= 1:
            yield from rec(prefix + "D", h - 1)

    yield from rec("", 0)


def motzkin_to_dyck(path: LatticePath, choices: Sequence[str]) -> LatticePath:
    """Double a Motzkin path: U -> UU, D -> DD, each H -> the chosen UD or DU.

    ``choices`` has one entry per H step; an H at height 0 only admits UD.
    """
    hs = [h for s, h in zip(path.steps, path.step_heights()) if s == "H"]
    if len(choices) != len(hs):
        raise ValueError(f"need {len(hs)} choices, got {len(choices)}")
    it = iter(zip(choices, hs))
    out = []
    for s in path.steps:
        if s != "H":
            out.append(s + s)
            continue
        choice, h = next(it)
        if choice not in ("UD", "DU"):
            raise ValueError(f"choice must be 'UD' or 'DU', got {choice!r}")
        if h == 0 and choice == "DU":
            raise ValueError("a level step at height 0 only doubles to UD")
        out.append(choice)
    return LatticePath("".join(out))


def doubling_images(n: int) -> Iterator[LatticePath]:
    """Images of every (Motzkin path, choices) pair of length n."""
    for p in motzkin_paths(n):
        hs = [h for s, h in zip(p.steps, p.step_heights()) if s == "H"]
        options = [("UD",) if h == 0 else ("UD", "DU") for h in hs]
        for choice in product(*options):
            yield motzkin_to_dyck(p, choice)
