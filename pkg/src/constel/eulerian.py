"""The fully solvable p = 3 case with one active face weight.

Everything specializes to series in the single variable x.  The limit
weight V satisfies V = 1 + 2xV^2; the substitution variable y, defined
through y + 1/y + 2 = 1/(xV), turns each level weight into an explicit
ratio of the form V (1-y^i)(1-y^{i+4}) / ((1-y^{i+1})(1-y^{i+3})).  The
banded determinants, rescaled by explicit powers of V, then march along
a three-term recurrence shared with a Fibonacci-style polynomial family,
which is what ``verify_det3`` checks end to end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import XSeries, det_elements
from .paths import count_closed3
from .hankel import qr
from .solver import SolverConfig, solve_v, solve_vi


class UniPoly:
    """Dense univariate polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def variable(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = UniPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = UniPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by the k-th power of the variable."""
        if not self.coeffs:
            return self
        return UniPoly((0,) * k + self.coeffs)

    def eval_series(self, s: XSeries) -> XSeries:
        out = XSeries.zero(s.order)
        for c in reversed(self.coeffs):
            out = out * s + c
        return out

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"


@lru_cache(maxsize=None)
def fib_poly(n: int) -> UniPoly:
    """The Fibonacci-style family: f_0 = 0, f_1 = 1, f_{n+2} = f_{n+1} - z f_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return UniPoly(())
    if n == 1:
        return UniPoly((1,))
    return fib_poly(n - 1) - fib_poly(n - 2).shift(1)


def fib_chebyshev_check(n: int) -> bool:
    """Denominator-cleared substitution identity for fib_poly.

    Substituting z = y/(1+y)^2 and clearing (1+y) powers must give
    (1-y) * (1+y)^(n-1) * f_n = 1 - y^n exactly as polynomials in y.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    phi = fib_poly(n)
    one_plus = UniPoly((1, 1))
    cleared = UniPoly(())
    # sum_j c_j y^j (1+y)^(n-1-2j); the exponent stays >= 0 by the degree bound
    for j, c in enumerate(phi.coeffs):
        if c:
            cleared = cleared + c * (one_plus ** (n - 1 - 2 * j)).shift(j)
    lhs = UniPoly((1, -1)) * cleared
    rhs = UniPoly((1,)) - UniPoly((1,)).shift(n)
    return lhs == rhs


@dataclass(frozen=True)
class EulerContext:
    """Shared series data at one truncation order: V, y, and xV."""

    order: int
    V: XSeries
    y: XSeries
    xV: XSeries


def _cfg(order: int, imax: int = 1) -> SolverConfig:
    return SolverConfig(p=3, deg=order, kmax=1, imax=imax)


def make_context(order: int) -> EulerContext:
    """Solve V = 1 + 2xV^2 and the substitution variable y at the order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    v = solve_v(_cfg(order))
    xv = XSeries.var(1, order) * v
    y = XSeries.zero(order)
    one = XSeries.const(1, order)
    for _ in range(order):
        y = xv * (one + y).pow(2)
    # cleared form of y + 1/y + 2 = 1/(xV); certifies the fixed point
    if xv * (y * y + one) != y * (one - 2 * xv):
        raise ArithmeticError("substitution variable failed its defining identity")
    return EulerContext(order, v, y, xv)


def v_series(i: int, order: int) -> XSeries:
    """Level weight V_i solved order-by-order from the weight recursion."""
    if i < 0:
        raise ValueError("i must be >= 0")
    if i == 0:
        return XSeries.zero(order)  # boundary convention of the recursion
    return solve_vi(_cfg(order, imax=i))[i]


def v_closed(i: int, order: int) -> XSeries:
    """Level weight V_i from the explicit y-ratio form."""
    if i < 0:
        raise ValueError("i must be >= 0")
    ctx = make_context(order)
    one = XSeries.const(1, order)

    def ypow(e):
        return ctx.y.pow(e)

    num = ctx.V * (one - ypow(i)) * (one - ypow(i + 4))
    den = (one - ypow(i + 1)) * (one - ypow(i + 3))
    return num * den.inv()


def f_closed(n: int, ctx: EulerContext) -> XSeries:
    """Excursion series F_n in terms of V and xV alone."""
    if n < 0:
        raise ValueError("n must be >= 0")
    one = XSeries.const(1, ctx.order)
    bracket = count_closed3(n, 0) * (one - ctx.xV) \
        - count_closed3(n, 1) * ctx.xV
    return bracket * ctx.V.pow(2 * n + 1)


def f1_closed(n: int, ctx: EulerContext) -> XSeries:
    """One-level-up series in terms of V and xV alone."""
    if n < 0:
        raise ValueError("n must be >= 0")
    one = XSeries.const(1, ctx.order)
    bracket = count_closed3(n, 1) * (one - ctx.xV).pow(2) \
        - count_closed3(n + 1, 0) * ctx.xV
    return bracket * ctx.V.pow(2 * n + 2)


def t_n(n: int, ctx: EulerContext) -> XSeries:
    """Rescaled determinant number T_n.

    The size-k banded determinant with entries from f_closed/f1_closed is
    divided by an explicit power of V (and, on the third branch, carries
    the extra factor 1 - xV).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k, s = divmod(n - 1, 3)
    one = XSeries.const(1, ctx.order)
    if k == 0:
        det = one
    else:
        rows = []
        for i in range(k):
            q, r = qr(i + s, 3)
            row = [f_closed(q + j, ctx) if r == 0 else f1_closed(q + j, ctx)
                   for j in range(k)]
            rows.append(row)
        det = det_elements(rows, one)
    if s == 0:
        exponent = k * (3 * k - 1) // 2
    elif s == 1:
        exponent = k * (3 * k + 1) // 2
    else:
        exponent = k * (3 * k + 3) // 2
        det = det * (one - ctx.xV)
    return det * ctx.V.pow(-exponent)


def verify_det3(kmax: int, order: int) -> bool:
    """Check T_n == fib_poly(n)(xV) and the three-term recurrence.

    Runs n through 3*kmax + 3 for the closed form and through the same
    bound for recurrence instances T_{n+3} = (1-xV) T_{n+1} - xV T_n.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    ctx = make_context(order)
    top = 3 * kmax + 3
    one = XSeries.const(1, ctx.order)
    ts = {n: t_n(n, ctx) for n in range(1, top + 4)}
    for n in range(1, top + 1):
        if ts[n] != fib_poly(n).eval_series(ctx.xV):
            return False
    for n in range(1, top + 1):
        if ts[n + 3] != (one - ctx.xV) * ts[n + 1] - ctx.xV * ts[n]:
            return False
    return True
