"""Lattice paths with tall rises, unit falls, and height-indexed weights.

A p-path moves by rises (1, p-1) and falls (1, -1) and never leaves the
upper half plane.  Column plus height is constant mod p along a path, so
endpoints fix the step counts.  A fall that starts at height h carries
the weight V_h; the weight of a path is the product over its falls, and
the polynomials aggregated over fixed endpoints are the raw material for
the nested fraction expansion and the determinant identities.

``enumerate_paths`` materializes paths for desk-scale oracles; ``f_poly``
and ``f_mid`` aggregate weights during the walk and never build a list.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .algebra import Monomial, MultiPoly

RISE = "R"
FALL = "F"


@dataclass(frozen=True)
class PPath:
    """One concrete path: step size p, a start point, and the step word."""

    p: int
    start: tuple[int, int]
    steps: tuple[str, ...]

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be >= 2")
        if self.start[1] < 0:
            raise ValueError("start height must be >= 0")
        h = self.start[1]
        for s in self.steps:
            if s == RISE:
                h += self.p - 1
            elif s == FALL:
                h -= 1
                if h < 0:
                    raise ValueError("path dips below height 0")
            else:
                raise ValueError(f"unknown step {s!r}")

    def heights(self) -> list[int]:
        out = [self.start[1]]
        for s in self.steps:
            out.append(out[-1] + (self.p - 1 if s == RISE else -1))
        return out

    def points(self) -> list[tuple[int, int]]:
        col = self.start[0]
        return [(col + i, h) for i, h in enumerate(self.heights())]

    @property
    def end(self) -> tuple[int, int]:
        return self.points()[-1]

    def fall_heights(self) -> tuple[int, ...]:
        """Sorted multiset of starting heights of the falls."""
        hs = self.heights()
        return tuple(sorted(hs[i] for i, s in enumerate(self.steps)
                            if s == FALL))


def path_weight(path: PPath) -> MultiPoly:
    """Product of V_h over the falls of the path (a single monomial)."""
    exps = Counter(path.fall_heights())
    return MultiPoly({Monomial.make(exps): 1})


def _step_counts(p, start, end):
    # rises a and falls b from the endpoint displacement, or None
    dcol = end[0] - start[0]
    dh = end[1] - start[1]
    if dcol < 0:
        return None
    a, rem = divmod(dcol + dh, p)
    if rem or a < 0 or dcol - a < 0:
        return None
    return a, dcol - a


def enumerate_paths(p: int, start: tuple[int, int],
                    end: tuple[int, int]) -> list[PPath]:
    """All p-paths between two points, in rise-before-fall DFS order."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if start[1] < 0 or end[1] < 0:
        raise ValueError("heights must be >= 0")
    counts = _step_counts(p, start, end)
    if counts is None:
        return []
    out: list[PPath] = []
    word: list[str] = []

    def walk(h, rises, falls):
        if rises == 0 and falls == 0:
            out.append(PPath(p, tuple(start), tuple(word)))
            return
        if rises:
            word.append(RISE)
            walk(h + p - 1, rises - 1, falls)
            word.pop()
        if falls and h >= 1:
            word.append(FALL)
            walk(h - 1, rises, falls - 1)
            word.pop()

    walk(start[1], counts[0], counts[1])
    return out


def _weight_dp(p: int, nsteps: int, h_start: int, h_end: int) -> MultiPoly:
    # weight sums by backward sweep; cur[h] covers suffixes of length done
    if nsteps == 0:
        return MultiPoly.one() if h_start == h_end else MultiPoly.zero()
    v_cache: dict[int, MultiPoly] = {}

    def v(h):
        poly = v_cache.get(h)
        if poly is None:
            poly = v_cache[h] = MultiPoly.v_var(h)
        return poly

    cur: dict[int, MultiPoly] = {h_end: MultiPoly.one()}
    for done in range(1, nsteps + 1):
        from_start = nsteps - done
        hi = h_start + (p - 1) * from_start
        lo = max(0, h_start - from_start)
        nxt: dict[int, MultiPoly] = {}
        for h2, poly in cur.items():
            h = h2 - (p - 1)  # a rise enters h2
            if lo <= h <= hi:
                prev = nxt.get(h)
                nxt[h] = poly if prev is None else prev + poly
            h = h2 + 1  # a fall from h lands at h2, weight V_h
            if lo <= h <= hi:
                piece = v(h) * poly
                prev = nxt.get(h)
                nxt[h] = piece if prev is None else prev + piece
        cur = nxt
    return cur.get(h_start, MultiPoly.zero())


@lru_cache(maxsize=None)
def f_poly(p: int, n: int, r: int) -> MultiPoly:
    """Weight polynomial of the p-paths from (-r, r) to (np, 0)."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 0 <= r <= p - 1:
        raise ValueError("r must lie in [0, p-1]")
    return _weight_dp(p, n * p + r, r, 0)


@lru_cache(maxsize=None)
def f_mid(p: int, n: int, i: int) -> MultiPoly:
    """Weight polynomial of the p-paths from (0, i-1) to (np-1, i).

    These are the path sums sitting inside the weight-family fixed point:
    one such path per white face of degree np attached at level i.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    if i < 1:
        raise ValueError("i must be >= 1")
    return _weight_dp(p, n * p - 1, i - 1, i)


@lru_cache(maxsize=None)
def count_paths(p: int, n: int, r: int) -> int:
    """Number of p-paths from (-r, r) to (np, 0); r may reach p."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 0 <= r <= p:
        raise ValueError("r must lie in [0, p]")
    nsteps = n * p + r
    if nsteps == 0:
        return 1 if r == 0 else 0
    cur = {0: 1}
    for done in range(1, nsteps + 1):
        from_start = nsteps - done
        hi = r + (p - 1) * from_start
        lo = max(0, r - from_start)
        nxt: dict[int, int] = {}
        for h2, cnt in cur.items():
            h = h2 - (p - 1)
            if lo <= h <= hi:
                nxt[h] = nxt.get(h, 0) + cnt
            h = h2 + 1
            if lo <= h <= hi:
                nxt[h] = nxt.get(h, 0) + cnt
        cur = nxt
    return cur.get(r, 0)


def count_closed3(n: int, r: int) -> int:
    """Closed form for count_paths(3, n, r); zero when n < 0."""
    if n < 0:
        return 0
    num = (r + 1) * comb(3 * n + r + 1, n)
    den = 3 * n + r + 1
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("ballot quotient is not integral")
    return q
