"""Encoding permutations as weighted 3-colored Motzkin paths, and back.

Position i of sigma becomes a step by comparing sigma(i) and sigma^-1(i)
with i:

* both larger   -> U   (cycle valley: the position opens an out-arc i -> sigma(i)
                        and an in-arc that a later position will close);
* both smaller  -> D   (cycle peak: closes one out-arc and one in-arc);
* sigma^-1(i) < i < sigma(i) -> H1 (double ascent: closes an out-arc, opens one);
* sigma(i) < i < sigma^-1(i) -> H2 (double descent: closes an in-arc, opens one);
* sigma(i) = i  -> H3.

Heights then match the number of arcs open over each gap, so the step kinds
and heights are forced; the information content of sigma sits in which open
arc each closing step picks.  Choice indices record those picks as nesting
ranks:

* a step closing an out-arc (D or H1) at position m stores the rank of the
  arc's opener among all out-arc openers still open at m;
* a step closing an in-arc (D or H2) at position m stores the rank of the
  in-arc's endpoint among all in-arc endpoints still open at m; for a D step
  this second rank is carried by the matching U step (U and D steps pair up
  like parentheses level by level), which keeps every choice index inside
  the menu range 0..height-1.

Under this labeling the path weight multiplies out to exactly
q^inv * p^fix * s^exc * t^depth; the test suite checks bijectivity and
weight preservation exhaustively through n = 8.
"""

from __future__ import annotations

from bisect import insort

from .errors import InvalidPathError
from .motzkin import StepKind, WeightedMotzkinPath, WeightedStep, ensure_valid
from .permutations import Permutation


def encode(perm: Permutation) -> WeightedMotzkinPath:
    """Map a permutation to its weighted Motzkin path."""
    images = perm.images
    n = len(images)
    inverse = [0] * (n + 1)
    for i, v in enumerate(images, start=1):
        inverse[v] = i

    kinds: list[StepKind] = []
    heights: list[int] = []
    running = 0
    for i in range(1, n + 1):
        v = images[i - 1]
        w = inverse[i]
        if v == i:
            kinds.append(StepKind.H3)
            heights.append(running)
        elif v > i and w > i:
            running += 1
            kinds.append(StepKind.U)
            heights.append(running)
        elif v < i and w < i:
            kinds.append(StepKind.D)
            heights.append(running)
            running -= 1
        elif v > i:  # w < i
            kinds.append(StepKind.H1)
            heights.append(running)
        else:  # v < i < w
            kinds.append(StepKind.H2)
            heights.append(running)

    choices = [0] * n
    stack: list[int] = []  # open U positions, for level pairing
    for m in range(1, n + 1):
        kind = kinds[m - 1]
        if kind is StepKind.U:
            stack.append(m)
            continue
        if kind in (StepKind.D, StepKind.H1):
            opener = inverse[m]
            choices[m - 1] = sum(
                1 for k in range(1, opener) if images[k - 1] > m
            )
        if kind in (StepKind.D, StepKind.H2):
            endpoint = images[m - 1]
            in_rank = sum(
                1 for c in range(1, endpoint) if inverse[c] > m
            )
            if kind is StepKind.D:
                choices[stack.pop() - 1] = in_rank
            else:
                choices[m - 1] = in_rank

    steps = tuple(
        WeightedStep(kinds[i], heights[i], choices[i]) for i in range(n)
    )
    return WeightedMotzkinPath(steps)


def decode(path: WeightedMotzkinPath) -> Permutation:
    """Invert :func:`encode`; rejects invalid paths."""
    ensure_valid(path)
    steps = path.steps
    n = len(steps)

    # Pair each D with its U; the U's choice is the D's in-arc rank.
    in_rank = [0] * (n + 1)
    stack: list[int] = []
    for m, step in enumerate(steps, start=1):
        if step.kind is StepKind.U:
            stack.append(m)
        elif step.kind is StepKind.D:
            if not stack:  # unreachable after validation
                raise InvalidPathError(f"step {m}: unmatched D")
            in_rank[m] = steps[stack.pop() - 1].choice

    images = [0] * (n + 1)
    open_out: list[int] = []  # positions awaiting their image
    open_in: list[int] = []  # positions awaiting their preimage
    for m, step in enumerate(steps, start=1):
        kind = step.kind
        if kind is StepKind.U:
            insort(open_out, m)
            insort(open_in, m)
        elif kind is StepKind.H3:
            images[m] = m
        elif kind is StepKind.H1:
            opener = open_out.pop(step.choice)
            images[opener] = m
            insort(open_out, m)
        elif kind is StepKind.H2:
            endpoint = open_in.pop(step.choice)
            images[m] = endpoint
            insort(open_in, m)
        else:  # D
            opener = open_out.pop(step.choice)
            images[opener] = m
            endpoint = open_in.pop(in_rank[m])
            images[m] = endpoint

    return Permutation(tuple(images[1:]))
