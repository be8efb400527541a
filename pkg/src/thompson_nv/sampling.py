"""Random patterns, elements, tree pairs and points for sweeps and tests.

Every helper takes a ``random.Random``; :func:`make_rng` seeds one from
``THOMPSON_NV_SEED`` when no seed is given.
"""

from __future__ import annotations

import os
import random
from typing import List, Optional

from .baker import TwoSidedPoint
from .cantor import InfiniteWord, NumberedPattern, Point, split_brick, trivial_brick
from .dynamics import TreePair, from_leaves
from .elements import Element
from .monoid import MonoidLetter
from .sigma import SigmaLetter

SEED_ENV = "THOMPSON_NV_SEED"
DEFAULT_SEED = 20240601


def make_rng(seed: Optional[int] = None) -> random.Random:
    if seed is None:
        seed = int(os.environ.get(SEED_ENV, DEFAULT_SEED))
    return random.Random(seed)


def random_word(rng: random.Random, max_len: int, min_len: int = 0) -> str:
    n = rng.randint(min_len, max_len)
    return "".join(rng.choice("01") for _ in range(n))


def random_pattern(rng: random.Random, dim: int, splits: int) -> NumberedPattern:
    """A pattern from ``splits`` half-splits of random bricks, randomly numbered."""
    bricks = [trivial_brick(dim)]
    for _ in range(splits):
        k = rng.randrange(len(bricks))
        bricks[k:k + 1] = split_brick(bricks[k], rng.randrange(dim))
    rng.shuffle(bricks)
    return NumberedPattern(tuple(bricks))


def random_element(rng: random.Random, dim: int = 2, max_splits: int = 10) -> Element:
    k = rng.randint(0, max_splits)
    return Element(random_pattern(rng, dim, k), random_pattern(rng, dim, k))


def random_tree_leaves(rng: random.Random, carets: int) -> List[str]:
    leaves = [""]
    for _ in range(carets):
        w = leaves.pop(rng.randrange(len(leaves)))
        leaves += [w + "0", w + "1"]
    return leaves


def random_tree_pair(rng: random.Random, max_splits: int = 8, min_splits: int = 0) -> TreePair:
    k = rng.randint(min_splits, max_splits)
    d = random_tree_leaves(rng, k)
    r = random_tree_leaves(rng, k)
    rng.shuffle(r)
    return from_leaves(sorted(d), r)


def random_point(rng: random.Random, dim: int, max_pre: int = 6, max_period: int = 6) -> Point:
    return Point(tuple(InfiniteWord(random_word(rng, max_pre),
                                    random_word(rng, max_period, 1)) for _ in range(dim)))


def random_sigma_word(rng: random.Random, max_len: int = 12, max_index: int = 3) -> List[SigmaLetter]:
    n = rng.randint(0, max_len)
    return [SigmaLetter(rng.choice("ABCpq"), rng.randint(0, max_index), rng.choice((1, -1)))
            for _ in range(n)]


def random_monoid_word(rng: random.Random, max_len: int = 10, max_index: int = 4) -> List[MonoidLetter]:
    n = rng.randint(0, max_len)
    return [MonoidLetter(rng.choice("vhs"), rng.randint(0, max_index)) for _ in range(n)]


def random_two_sided(rng: random.Random, max_len: int = 6) -> TwoSidedPoint:
    return TwoSidedPoint(random_word(rng, max_len, 1), random_word(rng, max_len),
                         random_word(rng, max_len), random_word(rng, max_len, 1))
