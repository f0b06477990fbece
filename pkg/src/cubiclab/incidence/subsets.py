"""Seven-point subsets: exhaustive enumeration or seeded sampling."""

from collections.abc import Sequence
from enum import Enum
from itertools import combinations
from math import comb
from typing import NamedTuple

import numpy as np

from cubiclab.errors import InvalidInputError

SUBSET_SIZE = 7


class SubsetMode(Enum):
    """How the 7-subsets of a run were produced."""

    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class SubsetPlan(NamedTuple):
    """The 7-subsets to examine, as sorted tuples of point indices."""

    mode: SubsetMode
    subsets: list[tuple[int, ...]]


def sample_uniform(n_points: int, samples: int, rng: np.random.Generator) -> list[tuple[int, ...]]:
    """Uniform 7-subsets of range(n_points)."""
    if n_points < SUBSET_SIZE:
        return []
    return [
        tuple(sorted(int(i) for i in rng.choice(n_points, size=SUBSET_SIZE, replace=False)))
        for _ in range(samples)
    ]


def sample_anchored(
    anchors: Sequence[Sequence[int]], samples: int, rng: np.random.Generator
) -> list[tuple[int, ...]]:
    """Pick a uniform anchor set, then a uniform 7-subset of it.

    Anchors are the point-index sets of the rich curves, so every sampled S
    lies on at least one curve.
    """
    usable = [list(anchor) for anchor in anchors if len(anchor) >= SUBSET_SIZE]
    if not usable:
        return []

    subsets = []
    for _ in range(samples):
        anchor = usable[int(rng.integers(0, len(usable)))]
        chosen = rng.choice(len(anchor), size=SUBSET_SIZE, replace=False)
        subsets.append(tuple(sorted(anchor[int(i)] for i in chosen)))
    return subsets


def seven_subsets(
    n_points: int,
    anchors: Sequence[Sequence[int]],
    samples: int,
    rng: np.random.Generator,
    enumeration_limit: int,
) -> SubsetPlan:
    """Choose the 7-subsets S worth examining.

    When C(|P|, 7) is at most the enumeration limit, every S contained in some
    anchor set is listed (any other S has an empty C_{k,S}). Otherwise
    `samples` uniform subsets of P and `samples` anchored subsets are drawn,
    duplicates removed in draw order.

    Args:
        n_points: |P|
        anchors: Point-index sets of the curves in C_k
        samples: Draws per sampling mode
        rng: Seeded generator
        enumeration_limit: Largest C(|P|, 7) enumerated exhaustively

    Raises:
        InvalidInputError: If samples is negative
    """
    if samples < 0:
        raise InvalidInputError(f"subset samples must be nonnegative, got {samples}")

    if comb(n_points, SUBSET_SIZE) <= enumeration_limit:
        seen: set[tuple[int, ...]] = set()
        for anchor in anchors:
            seen.update(combinations(sorted(anchor), SUBSET_SIZE))
        return SubsetPlan(SubsetMode.EXHAUSTIVE, sorted(seen))

    drawn = sample_uniform(n_points, samples, rng) + sample_anchored(anchors, samples, rng)
    return SubsetPlan(SubsetMode.SAMPLED, list(dict.fromkeys(drawn)))
