"""Signed generating functions over permutations and derangements.

Everything here is about the signed joint distribution of excedances and
depth, weighted by (-1)^inv:

* over all of S_n the distribution collapses:
  sum (-1)^inv s^exc t^depth = (1 - st)^(n-1) for n >= 1;
* over derangements it stays rich; ``derangement_signed_gf`` computes it by
  enumeration while ``derangement_series_rhs`` assembles the closed series

      sum_{k>=1} (-1)^k ( sum_{i=0}^{k-1} C(k-1,i) s^(1+i) (1+s)^(k-1-i)
      z^(k+1+i) ) t^k

  whose z^n coefficients must agree with it.  ``derangement_table_report``
  compares the t-layer decomposition of the enumerated polynomials against
  a frozen table of anchor cells, each of the factored form c * s^a * (1+s)^b.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import MultiPoly, S, T, binomial
from .errors import SizeLimitError
from .jfraction import SeriesTable
from .permutations import image_stats, iter_derangements, iter_group

#: Signed sums over all of S_n are refused beyond this size.
SIGNED_GF_LIMIT = 9

#: Signed sums over derangements are refused beyond this size.
DERANGEMENT_GF_LIMIT = 10

#: Series assembly is refused beyond this order.
SERIES_ORDER_LIMIT = 30

#: Rows covered by the anchor table.
TABLE_RANGE = range(2, 10)

# Anchor cells (n, t_power) -> (c, a, b) meaning c * s^a * (1+s)^b.  Each is
# cross-checked in the tests against both the enumerated polynomials and the
# closed series.
_ANCHOR_CELLS: dict[tuple[int, int], tuple[int, int, int]] = {
    (2, 1): (-1, 1, 0),
    (3, 2): (1, 1, 1),
    (4, 2): (1, 2, 0),
    (4, 3): (-1, 1, 2),
    (5, 3): (-2, 2, 1),
    (5, 4): (1, 1, 3),
    (6, 3): (-1, 3, 0),
    (6, 4): (3, 2, 2),
    (6, 5): (-1, 1, 4),
    (7, 4): (3, 3, 1),
    (7, 5): (-4, 2, 3),
    (7, 6): (1, 1, 5),
    (8, 4): (1, 4, 0),
    (8, 5): (-6, 3, 2),
    (8, 6): (5, 2, 4),
    (8, 7): (-1, 1, 6),
    (9, 5): (-4, 4, 1),
    (9, 6): (10, 3, 3),
    (9, 7): (-6, 2, 5),
    (9, 8): (1, 1, 7),
}


def signed_gf_permutations(n: int) -> MultiPoly:
    """sum over S_n of (-1)^inv s^exc t^depth; equals (1 - st)^(n-1)."""
    if n < 1:
        raise ValueError(f"defined for n >= 1, got {n}")
    if n > SIGNED_GF_LIMIT:
        raise SizeLimitError(f"signed sum is limited to n <= {SIGNED_GF_LIMIT}")
    acc: dict[tuple[int, int, int, int], int] = {}
    for perm in iter_group(n):
        inv, _, exc, dep = image_stats(perm.images)
        key = (0, 0, exc, dep)
        acc[key] = acc.get(key, 0) + (-1 if inv & 1 else 1)
    return MultiPoly(acc)


def derangement_signed_gf(n: int) -> MultiPoly:
    """sum over fixed-point-free sigma of (-1)^inv s^exc t^depth."""
    if n < 1:
        raise ValueError(f"defined for n >= 1, got {n}")
    if n > DERANGEMENT_GF_LIMIT:
        raise SizeLimitError(f"signed sum is limited to n <= {DERANGEMENT_GF_LIMIT}")
    acc: dict[tuple[int, int, int, int], int] = {}
    for perm in iter_derangements(n):
        inv, _, exc, dep = image_stats(perm.images)
        key = (0, 0, exc, dep)
        acc[key] = acc.get(key, 0) + (-1 if inv & 1 else 1)
    return MultiPoly(acc)


def derangement_series_rhs(order: int) -> SeriesTable:
    """z^n coefficients of the closed signed derangement series, n <= order.

    Only the pairs (k, i) with k + 1 + i = n and 0 <= i <= k - 1 contribute
    to the coefficient of z^n, so each entry is a finite exact sum.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if order > SERIES_ORDER_LIMIT:
        raise SizeLimitError(f"series assembly is limited to order <= {SERIES_ORDER_LIMIT}")
    coeffs = []
    for n in range(order + 1):
        total = MultiPoly.zero()
        for k in range(1, n):
            i = n - 1 - k
            if 0 <= i <= k - 1:
                sign = -1 if k & 1 else 1
                total = total + (
                    sign * binomial(k - 1, i) * S ** (1 + i) * (1 + S) ** (k - 1 - i) * T**k
                )
        coeffs.append(total)
    return SeriesTable(tuple(coeffs))


def anchor_cell(n: int, t_power: int) -> MultiPoly:
    """The anchor cell for (n, t_power), expanded; zero for blank cells."""
    entry = _ANCHOR_CELLS.get((n, t_power))
    if entry is None:
        return MultiPoly.zero()
    c, a, b = entry
    return c * S**a * (1 + S) ** b


def anchor_cell_text(n: int, t_power: int) -> str:
    """The anchor cell in its factored form, e.g. ``-4*s^4*(1+s)``."""
    entry = _ANCHOR_CELLS.get((n, t_power))
    if entry is None:
        return "0"
    c, a, b = entry
    parts = []
    if c == -1:
        head = "-"
    elif c == 1:
        head = ""
    else:
        head = str(c) + "*"
    parts.append(f"s^{a}" if a > 1 else "s")
    if b == 1:
        parts.append("(1+s)")
    elif b > 1:
        parts.append(f"(1+s)^{b}")
    return head + "*".join(parts)


@dataclass(frozen=True)
class TableCell:
    n: int
    t_power: int
    expected: MultiPoly
    computed: MultiPoly

    @property
    def matches(self) -> bool:
        return self.expected == self.computed


def derangement_table_report() -> list[TableCell]:
    """Compare the enumerated t-layers of the signed derangement polynomials
    against the anchor table, cell for cell, for n in 2..9."""
    cells: list[TableCell] = []
    for n in TABLE_RANGE:
        layers = derangement_signed_gf(n).split_by_exponent("t")
        powers = sorted(set(layers) | {k for (m, k) in _ANCHOR_CELLS if m == n})
        for k in powers:
            cells.append(
                TableCell(
                    n=n,
                    t_power=k,
                    expected=anchor_cell(n, k),
                    computed=layers.get(k, MultiPoly.zero()),
                )
            )
    return cells
