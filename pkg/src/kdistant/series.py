"""Truncated power series over the rationals, and the generating functions built on them.

Each generating function below is computed two ways, from its functional
equation by fixed-point iteration and from its radical closed form, and the
two must agree.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class SeriesMismatchError(ArithmeticError):
    """Two computation routes for the same series disagree."""


class PowerSeries:
    """c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * order)[:order]
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    @classmethod
    def const(cls, c: Scalar, order: int) -> "PowerSeries":
        return cls([c], order)

    @classmethod
    def geometric(cls, order: int) -> "PowerSeries":
        """1/(1-x)."""
        return cls([1] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries([other], self.order)
        return NotImplemented

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return PowerSeries(self.coeffs[:order])

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return PowerSeries(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i]:
                ai = a[i]
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(c / other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        out = PowerSeries.const(1, self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def reciprocal(self) -> "PowerSeries":
        a = self.coeffs
        if not a or a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = len(a)
        inv0 = 1 / a[0]
        out = [inv0] + [Fraction(0)] * (n - 1)
        for m in range(1, n):
            s = sum((a[i] * out[m - i] for i in range(1, m + 1) if a[i]), Fraction(0))
            out[m] = -s * inv0
        return PowerSeries(out)

    def shift(self, m: int) -> "PowerSeries":
        """Multiply by x^m, keeping the order."""
        return PowerSeries([0] * m + list(self.coeffs), self.order)

    def div_x(self, m: int = 1) -> "PowerSeries":
        """Divide by x^m; the first m coefficients must vanish, and m orders are lost."""
        if any(self.coeffs[:m]):
            raise ZeroDivisionError(f"series is not divisible by x^{m}")
        return PowerSeries(self.coeffs[m:])

    def sqrt(self) -> "PowerSeries":
        """The square root with constant term 1, by Newton iteration."""
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("sqrt requires constant term 1")
        n = self.order
        r = PowerSeries([1])
        prec = 1
        while prec < n:
            prec = min(2 * prec, n)
            r = PowerSeries(r.coeffs, prec)
            r = (r + self.truncate(prec) / r) / 2
        return r.truncate(n) if r.order >= n else PowerSeries(r.coeffs, n)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def poly(coeffs: Sequence[Scalar], order: int) -> PowerSeries:
    return PowerSeries(coeffs, order)


def fixed_point(step, start, max_iter: int):
    """Iterate ``step`` until its value repeats; at most ``max_iter`` rounds."""
    cur = start
    for _ in range(max_iter):
        nxt = step(cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise ArithmeticError(f"fixed-point iteration did not stabilize in {max_iter} rounds")


def agree(routes: dict[str, PowerSeries]) -> PowerSeries:
    """Return the common series, raising if any two routes differ."""
    items = list(routes.items())
    name0, s0 = items[0]
    for name, s in items[1:]:
        if s != s0:
            first = next(i for i, (a, b) in enumerate(zip(s0.coeffs, s.coeffs)) if a != b)
            raise SeriesMismatchError(
                f"{name0} and {name} differ at x^{first}: {s0[first]} vs {s[first]}")
    return s0


# -- paths with the six blocks U, D1, UD2, UUD3, UD2D2, UUD3D2 ------------------------------

def _g_radicand(order: int) -> PowerSeries:
    return poly([1, -6, -9, -2, 1], order)


def g_fixed_point(order: int) -> PowerSeries:
    """G = 1 + (x + x^2) G + x (1 + x)^2 G^2."""
    lin = poly([0, 1, 1], order)
    quad = poly([0, 1, 2, 1], order)
    return fixed_point(lambda g: 1 + lin * g + quad * g * g,
                       PowerSeries.const(1, order), order + 2)


def g_closed_form(order: int) -> PowerSeries:
    """(1 - x - x^2 - sqrt(1 - 6x - 9x^2 - 2x^3 + x^4)) / (2x (1 + x)^2)."""
    n = order + 1
    numer = poly([1, -1, -1], n) - _g_radicand(n).sqrt()
    g = numer.div_x(1) / poly([2, 4, 2], order)
    assert g[0] == 1, "wrong branch of the square root"
    return g


def g_first_return_terms(g: PowerSeries) -> dict[str, PowerSeries]:
    """The six first-return pieces of a nonempty path, with their weights."""
    x = PowerSeries.x(g.order)
    g2 = g * g
    return {
        "UD2 path": x * g,
        "UUD3D2 path": x ** 2 * g,
        "U path D1 path": x * g2,
        "UUD3 path D1 path": x ** 2 * g2,
        "U path UD2D2 path": x ** 2 * g2,
        "UUD3 path UD2D2 path": x ** 3 * g2,
    }


def gf_G(order: int) -> PowerSeries:
    return agree({"fixed_point": g_fixed_point(order), "closed_form": g_closed_form(order)})


# -- 3-distant noncrossing matchings, sum NCM_3(2n) x^n ------------------------------------

def ncm3_functional(order: int) -> PowerSeries:
    """F = 1 + x G F, i.e. F = 1 / (1 - x G)."""
    g = g_fixed_point(order)
    return (1 - PowerSeries.x(order) * g).reciprocal()


def ncm3_closed_form(order: int) -> PowerSeries:
    """2 (1 + x)^2 / (1 + 5x + 3x^2 + sqrt(1 - 6x - 9x^2 - 2x^3 + x^4))."""
    f = poly([2, 4, 2], order) / (poly([1, 5, 3], order) + _g_radicand(order).sqrt())
    assert f[0] == 1, "wrong branch of the square root"
    return f


def gf_ncm3(order: int) -> PowerSeries:
    return agree({"functional": ncm3_functional(order), "closed_form": ncm3_closed_form(order)})


# -- 2-distant noncrossing partitions, sum NCP_2(n) x^n -------------------------------------

def ncp2_system(order: int) -> dict[str, PowerSeries]:
    """Solve the coupled equations for A, B and F by simultaneous iteration."""
    x = PowerSeries.x(order)
    geo = PowerSeries.geometric(order)
    x_geo = x * geo                      # x / (1 - x)
    x2_geo = x * x_geo                   # x^2 / (1 - x)
    a_lin = x + x_geo + x2_geo
    pair = x_geo * (x + x2_geo)
    b_lin = 2 * x + x2_geo
    one = PowerSeries.const(1, order)

    def step(state):
        a, b, f = state
        return (1 + a_lin * a + pair * a * a,
                1 + b_lin * b + pair * a * b,
                1 + x * f + x * x * b * f)

    a, b, f = fixed_point(step, (one, one, one), 3 * order + 3)
    return {"A": a, "B": b, "F": f}


def ncp2_closed_form(order: int) -> PowerSeries:
    """(3 - 3x - sqrt(1 - 6x + 5x^2)) / (2 (1 - x))."""
    f = (poly([3, -3], order) - poly([1, -6, 5], order).sqrt()) / poly([2, -2], order)
    assert f[0] == 1, "wrong branch of the square root"
    return f


def ncp2_closed_form_ratio(order: int) -> PowerSeries:
    """3/2 - (1/2) sqrt((1 - 5x) / (1 - x))."""
    ratio = poly([1, -5], order) / poly([1, -1], order)
    f = Fraction(3, 2) - ratio.sqrt() / 2
    assert f[0] == 1, "wrong branch of the square root"
    return f


def gf_ncp2(order: int) -> PowerSeries:
    return agree({"system": ncp2_system(order)["F"],
                  "closed_form": ncp2_closed_form(order),
                  "closed_form_ratio": ncp2_closed_form_ratio(order)})


# -- Dyck paths with down-step weights alternating 1, 2 ----------------------------------

def schroeder_weighted_system(order: int) -> dict[str, PowerSeries]:
    """A = 1/(1 - x^2 B), B = 1/(1 - 2 x^2 A)."""
    x2 = poly([0, 0, 1], order)
    one = PowerSeries.const(1, order)

    def step(state):
        a, b = state
        return (1 - x2 * b).reciprocal(), (1 - 2 * x2 * a).reciprocal()

    a, b = fixed_point(step, (one, one), order + 2)
    return {"A": a, "B": b}


def schroeder_weighted_closed_form(order: int) -> PowerSeries:
    """(1 + x^2 - sqrt(x^4 - 6x^2 + 1)) / (4x^2)."""
    n = order + 2
    a = (poly([1, 0, 1], n) - poly([1, 0, -6, 0, 1], n).sqrt()).div_x(2) / 4
    assert a[0] == 1, "wrong branch of the square root"
    return a


def gf_schroeder_weighted(order: int) -> PowerSeries:
    return agree({"system": schroeder_weighted_system(order)["A"],
                  "closed_form": schroeder_weighted_closed_form(order)})


GENERATING_FUNCTIONS = {
    "G": gf_G,
    "ncm3": gf_ncm3,
    "ncp2": gf_ncp2,
    "schroeder": gf_schroeder_weighted,
}
