"""Series in t whose coefficients are the path weight polynomials.

Two independent constructions of the same object.  ``expand_f`` runs the
splitting recursion: an excursion is empty or one rise followed by a
maximal-start descent, and a descent splits at its first return to the
next level down, which costs one fall weight and one shifted excursion
factor.  ``expand_fraction`` instead expands the nested fraction

    1 / (1 - t * prod_i V_{s+i} * [same shape at shift s+i])

with the tail below the requested depth replaced by 1.  Matching the two
against the direct path aggregation is the core cross-check.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import MultiPoly, NonUnitConstant


class TSeries:
    """Polynomial-coefficient series in t, exact through t^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a TSeries needs at least the t^0 coefficient")
        self.order = len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls([MultiPoly.one()] + [MultiPoly.zero()] * order)

    def coeff(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def mul(self, other: "TSeries", order: int) -> "TSeries":
        out = [MultiPoly.zero()] * (order + 1)
        for i, a in enumerate(self.coeffs):
            if i > order or a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > order:
                    break
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TSeries(out)

    def scale(self, poly: MultiPoly) -> "TSeries":
        return TSeries([poly * c for c in self.coeffs])

    def inv_unit(self) -> "TSeries":
        """Inverse of a series with constant coefficient exactly 1."""
        if self.coeffs[0] != MultiPoly.one():
            raise NonUnitConstant("t-series constant coefficient is not 1")
        out = [MultiPoly.one()]
        for n in range(1, self.order + 1):
            acc = MultiPoly.zero()
            for k in range(1, n + 1):
                if k < len(self.coeffs) and not self.coeffs[k].is_zero():
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(-acc)
        return TSeries(out)

    def __eq__(self, other):
        return isinstance(other, TSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"TSeries([{inner}])"

    def to_json(self) -> dict:
        return {"order": self.order,
                "coeffs": [c.to_json() for c in self.coeffs]}


def _prepend_one(tail: TSeries) -> TSeries:
    # 1 + t * tail
    return TSeries((MultiPoly.one(),) + tail.coeffs)


@lru_cache(maxsize=None)
def _expand_f(p: int, r: int, shift: int, order: int) -> TSeries:
    if r == 0:
        if order == 0:
            return TSeries.one(0)
        return _prepend_one(_expand_f(p, p - 1, shift, order - 1))
    top = _expand_f(p, 0, shift + r, order)
    rest = _expand_f(p, r - 1, shift, order)
    return top.mul(rest, order).scale(MultiPoly.v_var(shift + r))


def expand_f(p: int, r: int, shift: int = 0, order: int = 0) -> TSeries:
    """Series over t of the (-r, r) to (np, 0) weight polynomials.

    All fall-weight indices are offset by ``shift``.  Coefficient n of the
    r = 0 series is the weight polynomial of the length-np excursions.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    if not 0 <= r <= p - 1:
        raise ValueError("r must lie in [0, p-1]")
    if shift < 0:
        raise ValueError("shift must be >= 0")
    if order < 0:
        raise ValueError("order must be >= 0")
    return _expand_f(p, r, shift, order)


@lru_cache(maxsize=None)
def _fraction(p: int, shift: int, depth: int, order: int) -> TSeries:
    if depth == 0:
        return TSeries.one(order)
    prod = None
    for i in range(1, p):
        factor = _fraction(p, shift + i, depth - 1, order) \
            .scale(MultiPoly.v_var(shift + i))
        prod = factor if prod is None else prod.mul(factor, order)
    denom = [MultiPoly.one()]
    denom.extend(-c for c in prod.coeffs[:order])
    return TSeries(denom).inv_unit()


def expand_fraction(p: int, order: int, depth: int | None = None) -> TSeries:
    """Expansion of the nested fraction, exact through t^order.

    The tail below level ``depth`` (default: order, which is already
    enough) is replaced by 1; deeper nesting cannot change coefficients
    0..order because every level contributes at least one power of t.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    if order < 0:
        raise ValueError("order must be >= 0")
    if depth is None:
        depth = order
    if depth < order:
        raise ValueError("depth below order loses exactness")
    return _fraction(p, 0, depth, order)
