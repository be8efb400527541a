"""Exact computations in the higher-dimensional Thompson groups nV and 2V."""

from .cantor import (InfiniteWord, NumberedPattern, ParseError, Point,
                     guillotine_decompose, split_brick, validate_partition)
from .elements import (Element, apply, compose, equals, identity, invert,
                       is_identity, make_element, reduce, transitivity_map)
from .monoid import PatternSequence, eval_word, multiply, rewrite_to_pq
from .sigma import baker_map, decompose, eval_sigma
from .dynamics import TreePair, dynamics_report, reveal
from .baker import TwoSidedPoint, enumerate_periodic_orbits, shift

__version__ = "0.1.0"
