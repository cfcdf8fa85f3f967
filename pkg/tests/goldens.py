"""Frozen reference constants shared across the test suite.

Fixed input/output words for the constructions plus frozen counting
results.  Byte drift against these tuples is a regression even when the
drifted word still verifies, so regenerate them only on purpose.
"""

# 3-multiset ucycle over [4]; the seed of the inductive chain.
BASE_WORD_4 = (
    1, 1, 1, 4, 4, 4, 2, 2, 2, 3, 3, 3, 1, 2, 1, 2, 4, 3, 4, 3,
)

# extension block over [7]: BASE_WORD_4 + EXTENSION_7 is the 84-letter
# 3-multiset ucycle over [7].
EXTENSION_7 = (
    1, 1, 5, 2, 2, 6, 3, 3, 7, 4, 4, 5, 1, 6, 6, 2, 7, 7, 3, 2,
    5, 7, 3, 6, 6, 7, 7, 1, 3, 5, 3, 4, 6, 4, 1, 7, 1, 5, 5, 5,
    3, 6, 1, 2, 7, 2, 4, 5, 5, 6, 6, 6, 4, 7, 7, 7, 5, 5, 2, 6,
    4, 5, 7, 6,
)

# the same block relabeled for the step to [10].
EXTENSION_10 = (
    1, 1, 8, 2, 2, 9, 3, 3, 10, 4, 4, 8, 1, 9, 9, 2, 10, 10, 3, 2,
    8, 10, 3, 9, 9, 10, 10, 1, 3, 8, 3, 4, 9, 4, 1, 10, 1, 8, 8, 8,
    3, 9, 1, 2, 10, 2, 4, 8, 8, 9, 9, 9, 4, 10, 10, 10, 8, 8, 2, 9,
    4, 8, 10, 9,
)

# connector (29 letters) and filler (43) completing the n=10 assembly.
CONNECTOR_10 = (
    5, 5, 10, 10, 7, 5, 9, 9, 6, 6, 8, 9, 7, 9, 7, 6, 8, 8, 7, 7,
    10, 6, 5, 8, 5, 8, 10, 6, 10,
)

FILLER_10 = (
    6, 9, 4, 5, 10, 3, 6, 9, 2, 5, 10, 1, 6, 9, 5, 8, 4, 7, 9, 3,
    5, 8, 2, 7, 9, 1, 5, 8, 7, 10, 4, 6, 8, 3, 7, 10, 2, 6, 8, 1,
    7, 10, 9,
)

ASSEMBLY_10 = BASE_WORD_4 + EXTENSION_7 + EXTENSION_10 + CONNECTOR_10 + FILLER_10

# 3-subset ucycle over [8]; input of the pair-doubling walkthrough.
SUBSET3_WORD_8 = (
    1, 2, 3, 5, 7, 8, 3, 6, 7, 8, 2, 4, 5, 8, 3, 4, 5, 7, 1, 2,
    5, 8, 1, 2, 4, 6, 7, 2, 5, 6, 7, 1, 3, 4, 7, 2, 3, 4, 6, 8,
    1, 4, 7, 8, 1, 3, 5, 6, 1, 4, 5, 6, 8, 2, 3, 6,
)

MISSING_PAIRS_8 = frozenset({(1, 5), (2, 6), (3, 7), (4, 8)})
ANCHOR_ORDER_8 = (1, 5, 3, 7, 4, 8, 2, 6)

# pair-doubled intermediate (96) and finished 3-multiset ucycle (120).
DOUBLED_WORD_8 = (
    1, 2, 1, 2, 3, 2, 3, 5, 7, 5, 7, 8, 7, 8, 3, 8, 3, 6, 3, 6,
    7, 6, 7, 8, 2, 4, 2, 4, 5, 4, 5, 8, 5, 8, 3, 4, 3, 4, 5, 7,
    1, 7, 1, 2, 5, 2, 5, 8, 1, 8, 1, 2, 4, 6, 4, 6, 7, 2, 7, 2,
    5, 6, 5, 6, 7, 1, 3, 1, 3, 4, 7, 2, 3, 4, 6, 8, 6, 8, 1, 4,
    1, 4, 7, 8, 1, 3, 5, 6, 1, 4, 5, 6, 8, 2, 3, 6,
)

MULTISET3_WORD_8 = (
    1, 2, 1, 2, 3, 2, 3, 5, 7, 5, 7, 8, 7, 8, 3, 8, 3, 6, 3, 6,
    7, 6, 7, 8, 2, 4, 2, 4, 5, 4, 5, 8, 5, 8, 3, 4, 3, 4, 5, 7,
    1, 7, 1, 2, 5, 2, 5, 8, 1, 8, 1, 2, 4, 6, 4, 6, 7, 2, 7, 2,
    5, 6, 5, 6, 7, 1, 3, 1, 3, 4, 7, 2, 3, 4, 6, 8, 6, 8, 1, 4,
    1, 4, 7, 8, 1, 3, 5, 6, 1, 4, 5, 6, 8, 2, 3, 6, 1, 1, 1, 5,
    5, 5, 3, 3, 3, 7, 7, 7, 4, 4, 4, 8, 8, 8, 2, 2, 2, 6, 6, 6,
)

# 2-subset warm-up over [5] and its letter-doubled 2-multiset companion.
SUBSET2_WORD_5 = (1, 2, 3, 4, 5, 1, 3, 5, 2, 4)
MULTISET2_WORD_5 = (1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 1, 3, 5, 2, 4)

# distinct-class counts, frozen from exhaustive runs (an independently
# written backtracker reproduces both).
DISTINCT_CLASSES_4_3 = 2
DISTINCT_CLASSES_3_2 = 1
