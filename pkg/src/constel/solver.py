"""Fixed-point solvers for the weight family as series in the x family.

With every white face of degree np carrying the weight x_n, each fall
weight V_i satisfies

    V_i = 1 + V_i * sum_n x_n * (mid-path polynomial at level i)

and the level-free limit V obeys the closed scalar equation with the
binomial count of the mid paths.  Both are solved by iterating from the
all-ones family; one sweep fixes one more total degree in x, so deg
sweeps are exact.  Weight indices beyond ``index_cap`` are pinned to the
limit series; the cap is generous enough that the pinning cannot reach
back into the reported indices at the requested degree, and doubling it
is the standard stability certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb

from .algebra import XSeries
from .paths import f_mid, f_poly


@dataclass(frozen=True)
class SolverConfig:
    """Problem size: step p, x-degree deg, active x_1..x_kmax, V_1..V_imax."""

    p: int
    deg: int
    kmax: int
    imax: int
    index_cap: int | None = None

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be >= 2")
        if self.deg < 0:
            raise ValueError("deg must be >= 0")
        if self.kmax < 0:
            raise ValueError("kmax must be >= 0")
        if self.imax < 1:
            raise ValueError("imax must be >= 1")
        if self.index_cap is not None and self.index_cap < self.floor_cap:
            raise ValueError(f"index_cap must be >= {self.floor_cap}")

    @property
    def floor_cap(self) -> int:
        return self.imax + (self.p - 1) * self.p * self.deg

    @property
    def cap(self) -> int:
        if self.index_cap is not None:
            return self.index_cap
        # one degree of x_n can pull in indices (p-1)*n away, n <= kmax
        return self.imax + (self.p - 1) * max(self.p, self.kmax) * self.deg


def v_update(cfg: SolverConfig, v: XSeries) -> XSeries:
    """One sweep of the scalar fixed point for the level-free limit."""
    out = XSeries.const(1, cfg.deg)
    for n in range(1, cfg.kmax + 1):
        term = XSeries.var(n, cfg.deg) * v.pow(n * (cfg.p - 1))
        out = out + comb(n * cfg.p - 1, n) * term
    return out


@lru_cache(maxsize=None)
def solve_v(cfg: SolverConfig) -> XSeries:
    """The level-free limit weight as a series in x_1..x_kmax."""
    v = XSeries.const(1, cfg.deg)
    for _ in range(cfg.deg):
        v = v_update(cfg, v)
    return v


def vi_update(cfg: SolverConfig, family: dict[int, XSeries]) -> dict[int, XSeries]:
    """One parallel sweep of the per-level fixed point over 1..cap."""
    tail = solve_v(cfg)
    one = XSeries.const(1, cfg.deg)
    new = {}
    for i in range(1, cfg.cap + 1):
        total = XSeries.zero(cfg.deg)
        for n in range(1, cfg.kmax + 1):
            mid = f_mid(cfg.p, n, i)
            assign = {j: family.get(j, tail) for j in mid.v_indices()}
            total = total + XSeries.var(n, cfg.deg) * \
                mid.substitute(assign, order=cfg.deg)
        new[i] = one + family[i] * total
    return new


@lru_cache(maxsize=None)
def _solve_family(cfg: SolverConfig) -> dict[int, XSeries]:
    family = {i: XSeries.const(1, cfg.deg) for i in range(1, cfg.cap + 1)}
    for _ in range(cfg.deg):
        family = vi_update(cfg, family)
    return family


def solve_vi(cfg: SolverConfig) -> dict[int, XSeries]:
    """Per-level weights V_1..V_imax as series in x_1..x_kmax."""
    family = _solve_family(cfg)
    return {i: family[i] for i in range(1, cfg.imax + 1)}


def family_view(cfg: SolverConfig) -> dict[int, XSeries]:
    """The full solved family through the cap (indices 1..cap)."""
    return dict(_solve_family(cfg))


def f_from_v(cfg: SolverConfig, n: int) -> XSeries:
    """Excursion series of index n written in the limit weight alone.

    The closed form trades the per-level family for powers of the limit
    series; the bracket coefficients are exact integers even though the
    intermediate fractions are not.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    p = cfg.p
    v = solve_v(cfg)
    lead_num = comb(n * p + 1, n)
    lead, rem = divmod(lead_num, n * p + 1)
    if rem:
        raise ArithmeticError("excursion count is not integral")
    out = lead * v.pow(n * (p - 1) + 1)
    for k in range(1, cfg.kmax + 1):
        bracket = Fraction(0)
        for j in range(0, min(n, k * (p - 1) - 1) + 1):
            bracket += Fraction(j * p + 1, n * p + 1) \
                * comb(n * p + 1, n - j) * comb(k * p - 1, k + j)
        if bracket.denominator != 1:
            raise ArithmeticError("bracket coefficient is not integral")
        term = XSeries.var(k, cfg.deg) * v.pow((k + n) * (p - 1))
        out = out - int(bracket) * term
    return out


def f1_tutte_check(cfg: SolverConfig, n: int) -> bool:
    """Check the one-level-up splitting against the excursion series.

    The series of paths started one level up equals the face-marked sum
    of deeper excursions plus the convolution of excursion series.  Only
    meaningful for p = 3, where one rise spans exactly two levels.
    """
    if cfg.p != 3:
        raise ValueError("the splitting identity is specific to p = 3")
    if n < 0:
        raise ValueError("n must be >= 0")
    need = 2 * (n + cfg.kmax) + 1
    big = cfg if cfg.imax >= need else \
        SolverConfig(cfg.p, cfg.deg, cfg.kmax, need)
    family = family_view(big)

    def sub(poly):
        if poly.is_zero():
            return XSeries.zero(cfg.deg)
        return poly.substitute(family, order=cfg.deg)

    lhs = sub(f_poly(3, n, 1))
    rhs = XSeries.zero(cfg.deg)
    for l in range(1, cfg.kmax + 1):
        rhs = rhs + XSeries.var(l, cfg.deg) * sub(f_poly(3, n + l, 0))
    for i in range(n + 1):
        rhs = rhs + sub(f_poly(3, i, 0)) * sub(f_poly(3, n - i, 0))
    return lhs == rhs
