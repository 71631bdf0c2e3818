"""Weighted 3-colored Motzkin paths.

A path of length n runs from (0, 0) to (n, 0) using up steps ``U``, down
steps ``D`` and horizontal steps in three colors ``H1``/``H2``/``H3``,
never dipping below the x-axis.  The height of a step is the larger of its
two endpoint heights.  Each step carries a choice index ``d`` selecting one
monomial from its weight menu:

    ============  =================  ============
    step          weight             choice range
    ============  =================  ============
    U  height h   s * t^(2h-1) * q^d    0 .. h-1
    D  height h   q^(2h-1+d)            0 .. h-1
    H1 height h   s * t^h * q^(h+d)     0 .. h-1   (h >= 1 only)
    H2 height h   t^h * q^(h+d)         0 .. h-1   (h >= 1 only)
    H3 height h   p * t^h * q^(2h)      d = 0      (h >= 0)
    ============  =================  ============

so the only ground-level horizontal step is ``H3`` with weight p.  The path
weight is the product of its step weights; there are exactly n! weighted
paths of length n.

Text format: steps separated by spaces, each as ``KIND(height,choice)``,
e.g. ``U(1,0) H3(1,0) D(1,0)``.  A JSON array of records with fields
``kind``/``height``/``choice`` is accepted and produced as well.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator

from .algebra import Monomial, MultiPoly
from .errors import InvalidPathError, ParseError, SizeLimitError

#: Exhaustive path enumeration is refused beyond this length.
PATH_ENUMERATION_LIMIT = 10


class StepKind(enum.Enum):
    U = "U"
    D = "D"
    H1 = "H1"
    H2 = "H2"
    H3 = "H3"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class WeightedStep:
    kind: StepKind
    height: int
    choice: int


@dataclass(frozen=True)
class WeightedMotzkinPath:
    steps: tuple[WeightedStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @classmethod
    def from_text(cls, text: str) -> "WeightedMotzkinPath":
        steps = []
        for index, token in enumerate(text.split(), start=1):
            match = re.fullmatch(r"(U|D|H1|H2|H3)\((\d+),(\d+)\)", token)
            if match is None:
                raise ParseError(f"step {index}: cannot parse {token!r}")
            steps.append(
                WeightedStep(StepKind(match.group(1)), int(match.group(2)), int(match.group(3)))
            )
        return cls(tuple(steps))

    def to_text(self) -> str:
        return " ".join(
            f"{step.kind.value}({step.height},{step.choice})" for step in self.steps
        )

    @classmethod
    def from_records(cls, records: list[dict]) -> "WeightedMotzkinPath":
        steps = []
        for index, record in enumerate(records, start=1):
            try:
                kind = StepKind(record["kind"])
                steps.append(WeightedStep(kind, int(record["height"]), int(record["choice"])))
            except (KeyError, ValueError, TypeError):
                raise ParseError(f"step {index}: bad record {record!r}") from None
        return cls(tuple(steps))

    def to_records(self) -> list[dict]:
        return [
            {"kind": step.kind.value, "height": step.height, "choice": step.choice}
            for step in self.steps
        ]


def _step_bounds(step: WeightedStep, running: int) -> tuple[str, int]:
    """Return ("", new_height) or a diagnostic for a step at running height."""
    kind, h, choice = step.kind, step.height, step.choice
    if kind is StepKind.U:
        if h != running + 1:
            return f"U height {h} does not match running height {running}", running
        new = running + 1
    elif kind is StepKind.D:
        if running <= 0:
            return "D step below the x-axis", running
        if h != running:
            return f"D height {h} does not match running height {running}", running
        new = running - 1
    else:
        if h != running:
            return (
                f"{kind.value} height {h} does not match running height {running}",
                running,
            )
        new = running
    if kind is StepKind.H3:
        if choice != 0:
            return f"H3 choice must be 0, got {choice}", new
    else:
        if kind in (StepKind.H1, StepKind.H2) and h < 1:
            return f"{kind.value} is not allowed at height 0", new
        if not 0 <= choice <= h - 1:
            return f"{kind.value} choice {choice} out of range 0..{h - 1}", new
    return "", new


def validate(path: WeightedMotzkinPath) -> tuple[bool, str]:
    """Check all invariants; the diagnostic names the first bad step (1-based)."""
    running = 0
    for index, step in enumerate(path.steps, start=1):
        problem, running = _step_bounds(step, running)
        if problem:
            return False, f"step {index}: {problem}"
    if running != 0:
        return False, f"path ends at height {running}, not 0"
    return True, "valid"


def ensure_valid(path: WeightedMotzkinPath) -> None:
    ok, diagnostic = validate(path)
    if not ok:
        raise InvalidPathError(diagnostic)


def step_exponents(step: WeightedStep) -> Monomial:
    """Exponents (eq, ep, es, et) of the step's weight monomial."""
    kind, h, d = step.kind, step.height, step.choice
    if kind is StepKind.U:
        return (d, 0, 1, 2 * h - 1)
    if kind is StepKind.D:
        return (2 * h - 1 + d, 0, 0, 0)
    if kind is StepKind.H1:
        return (h + d, 0, 1, h)
    if kind is StepKind.H2:
        return (h + d, 0, 0, h)
    return (2 * h, 1, 0, h)


def step_weight(step: WeightedStep) -> MultiPoly:
    """The weight monomial of a single step (see the menu in the module doc)."""
    if step.kind in (StepKind.U, StepKind.D):
        if step.height < 1:
            raise InvalidPathError(f"{step.kind.value} height must be >= 1")
        if not 0 <= step.choice <= step.height - 1:
            raise InvalidPathError(
                f"{step.kind.value} choice {step.choice} out of range 0..{step.height - 1}"
            )
    elif step.kind in (StepKind.H1, StepKind.H2):
        if step.height < 1:
            raise InvalidPathError(f"{step.kind.value} is not allowed at height 0")
        if not 0 <= step.choice <= step.height - 1:
            raise InvalidPathError(
                f"{step.kind.value} choice {step.choice} out of range 0..{step.height - 1}"
            )
    else:
        if step.height < 0 or step.choice != 0:
            raise InvalidPathError(f"bad H3 step {step}")
    return MultiPoly.monomial(step_exponents(step))


def path_weight(path: WeightedMotzkinPath) -> MultiPoly:
    """Product of the step weights, always a single monomial."""
    ensure_valid(path)
    eq = ep = es = et = 0
    for step in path.steps:
        a, b, c, d = step_exponents(step)
        eq += a
        ep += b
        es += c
        et += d
    return MultiPoly.monomial((eq, ep, es, et))


def area(path: WeightedMotzkinPath) -> int:
    """Area between the path and the x-axis, as an exact integer.

    Each step is a trapezoid of area (height_before + height_after) / 2; the
    doubled sum is always even for a closed path.
    """
    ensure_valid(path)
    doubled = 0
    for step in path.steps:
        if step.kind in (StepKind.U, StepKind.D):
            doubled += 2 * step.height - 1
        else:
            doubled += 2 * step.height
    if doubled % 2:  # unreachable for a validated closed path
        raise InvalidPathError("doubled area is odd")
    return doubled // 2


def enumerate_weighted(n: int) -> Iterator[WeightedMotzkinPath]:
    """Every weighted path of length n exactly once (n! of them).

    Deterministic order: depth-first by position, trying U, D, H1, H2, H3
    with ascending choice indices.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > PATH_ENUMERATION_LIMIT:
        raise SizeLimitError(f"path enumeration is limited to n <= {PATH_ENUMERATION_LIMIT}")

    prefix: list[WeightedStep] = []

    def extend(remaining: int, height: int) -> Iterator[WeightedMotzkinPath]:
        if remaining == 0:
            if height == 0:
                yield WeightedMotzkinPath(tuple(prefix))
            return
        if height > remaining:
            return
        # U
        if height + 1 <= remaining - 1:
            for choice in range(height + 1):
                prefix.append(WeightedStep(StepKind.U, height + 1, choice))
                yield from extend(remaining - 1, height + 1)
                prefix.pop()
        # D
        if height >= 1:
            for choice in range(height):
                prefix.append(WeightedStep(StepKind.D, height, choice))
                yield from extend(remaining - 1, height - 1)
                prefix.pop()
        # H1, H2 (height >= 1 only)
        if height >= 1 and height <= remaining - 1:
            for kind in (StepKind.H1, StepKind.H2):
                for choice in range(height):
                    prefix.append(WeightedStep(kind, height, choice))
                    yield from extend(remaining - 1, height)
                    prefix.pop()
        # H3 (any height)
        if height <= remaining - 1:
            prefix.append(WeightedStep(StepKind.H3, height, 0))
            yield from extend(remaining - 1, height)
            prefix.pop()

    yield from extend(n, 0)
