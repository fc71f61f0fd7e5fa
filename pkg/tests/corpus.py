"""Shared fixture pairs used across the test modules.

Five small pairs that separate the three relations from one another:
REFINED/SPLIT agree on reduction direction but not embedding; HALVES and
UNEVEN reduce to each other both ways, embed only one way.
"""

from simpair import validate_pair

# one singleton + one 2-class + a 3-class spanning its own coarse class
REFINED = validate_pair(6, [[0], [1, 2], [3, 4, 5]], [[0, 1, 2], [3, 4, 5]])

# same coarse classes, fine classes of sizes 1,1,1 / 2,1
SPLIT = validate_pair(6, [[0], [1], [2], [3, 4], [5]], [[0, 1, 2], [3, 4, 5]])

# a single coarse class with fine classes of sizes 1 and 2
SMALL = validate_pair(3, [[0], [1, 2]], [[0, 1, 2]])

# two coarse classes, each with fine classes of sizes 2,1
HALVES = validate_pair(6, [[0, 1], [2], [3, 4], [5]], [[0, 1, 2], [3, 4, 5]])

# coarse classes of sizes 2 and 3; only the second matches HALVES locally
UNEVEN = validate_pair(5, [[0], [1], [2, 3], [4]], [[0, 1], [2, 3, 4]])

ALL_PAIRS = (REFINED, SPLIT, SMALL, HALVES, UNEVEN)
