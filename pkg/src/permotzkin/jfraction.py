"""Jacobi-type continued fractions expanded as exact power series in z.

A coefficient pair (gamma_h)_{h>=0}, (lambda_h)_{h>=1} defines the continued
fraction

    1 / (1 - gamma_0 z - lambda_1 z^2 / (1 - gamma_1 z - lambda_2 z^2 / ...))

whose z^n coefficient is the sum, over plain Motzkin paths of length n, of
the product of gamma_h per horizontal step at height h and lambda_h per
down step from height h.  ``expand`` computes the truncation by dynamic
programming over (length, running height) with exact polynomial arithmetic;
steps above height floor(order / 2) cannot return in time and are skipped.

Two coefficient presets are built in:

* ``preset_depth``:    gamma_h = (2h+1) t^h,           lambda_h = h^2 t^(2h-1)
  generating sum_{sigma in S_n} t^depth(sigma);
* ``preset_refined``:  gamma_h = ((1+s)[h]_q + p q^h) (qt)^h,
                       lambda_h = s [h]_q^2 (qt)^(2h-1)
  generating sum_{sigma in S_n} q^inv p^fix s^exc t^depth, i.e. the total
  weight of the weighted 3-colored Motzkin paths of length n.

``brute_force_gf`` recomputes the refined series coefficient by direct
summation over S_n and serves as the independent oracle in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .algebra import MultiPoly, P, Q, S, T, q_integer
from .errors import SizeLimitError
from .permutations import image_stats

#: Series expansion is refused beyond this order.
EXPANSION_ORDER_LIMIT = 30

#: Direct summation over S_n is refused beyond this size.
BRUTE_FORCE_LIMIT = 9

#: The depth-only direct summation is cheaper and allowed slightly further.
DEPTH_BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class JFractionSpec:
    """Coefficient sequences, supplied as closed-form generators."""

    gamma: Callable[[int], MultiPoly]
    lam: Callable[[int], MultiPoly]


@dataclass(frozen=True)
class SeriesTable:
    """Entry n is the exact coefficient of z^n."""

    coeffs: tuple[MultiPoly, ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]


def expand(spec: JFractionSpec, order: int) -> SeriesTable:
    """Series coefficients of the continued fraction through z^order."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if order > EXPANSION_ORDER_LIMIT:
        raise SizeLimitError(f"expansion is limited to order <= {EXPANSION_ORDER_LIMIT}")
    max_height = order // 2
    gamma = [spec.gamma(h) for h in range(max_height + 1)]
    lam = [MultiPoly.zero()] + [spec.lam(h) for h in range(1, max_height + 1)]

    coeffs = [MultiPoly.one()]
    state = {0: MultiPoly.one()}  # running height -> sum of prefix products
    for _ in range(order):
        nxt: dict[int, MultiPoly] = {}
        for height, poly in state.items():
            stay = poly * gamma[height]
            if stay:
                nxt[height] = nxt.get(height, MultiPoly.zero()) + stay
            if height + 1 <= max_height:
                nxt[height + 1] = nxt.get(height + 1, MultiPoly.zero()) + poly
            if height >= 1:
                down = poly * lam[height]
                if down:
                    nxt[height - 1] = nxt.get(height - 1, MultiPoly.zero()) + down
        state = {h: poly for h, poly in nxt.items() if poly}
        coeffs.append(state.get(0, MultiPoly.zero()))
    assert coeffs[0] == MultiPoly.one()
    return SeriesTable(tuple(coeffs))


def preset_depth() -> JFractionSpec:
    """Coefficients generating the depth distribution over S_n."""
    return JFractionSpec(
        gamma=lambda h: MultiPoly.constant(2 * h + 1) * T**h,
        lam=lambda h: MultiPoly.constant(h * h) * T ** (2 * h - 1),
    )


def preset_refined() -> JFractionSpec:
    """Coefficients generating the joint (inv, fix, exc, depth) distribution."""
    qt = Q * T
    return JFractionSpec(
        gamma=lambda h: ((1 + S) * q_integer(h) + P * Q**h) * qt**h,
        lam=lambda h: S * q_integer(h) ** 2 * qt ** (2 * h - 1),
    )


def brute_force_gf(n: int) -> MultiPoly:
    """sum over S_n of q^inv p^fix s^exc t^depth, by direct enumeration."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"brute force is limited to n <= {BRUTE_FORCE_LIMIT}")
    acc: dict[tuple[int, int, int, int], int] = {}
    for images in itertools.permutations(range(1, n + 1)):
        key = image_stats(images)
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly(acc)


def brute_force_depth_gf(n: int) -> MultiPoly:
    """sum over S_n of t^depth, by direct enumeration."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > DEPTH_BRUTE_FORCE_LIMIT:
        raise SizeLimitError(
            f"depth brute force is limited to n <= {DEPTH_BRUTE_FORCE_LIMIT}"
        )
    acc: dict[int, int] = {}
    for images in itertools.permutations(range(1, n + 1)):
        dep = 0
        for i, v in enumerate(images, start=1):
            if v > i:
                dep += v - i
        acc[dep] = acc.get(dep, 0) + 1
    return MultiPoly({(0, 0, 0, d): c for d, c in acc.items()})
