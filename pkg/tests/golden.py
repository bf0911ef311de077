"""Reference data shared by the unit and acceptance tests.

Fifteen worked cases with their expected multiplier (T1) and rotation
partner (T2) sets, two fully expanded sweep tables, and the seven jump
sets of the order-1715 family.  T1 rows are re-checkable by unit
multiplication, T2 rows by the rotation map plus brute-force isomorphism
search at small orders.
"""

# label -> (n, m, base jumps, expected T1 members, expected T2 members)
#
# Case h's expected T2 listing contains (4, 11, 13) even though that set
# equals 11 * (1, 4, 23) and therefore carries a multiplier witness; under
# the strict partner definition used by t2_set (no multiplier witness
# allowed) the computed T2 set is the singleton.  The acceptance suite
# asserts the listing as given and documents the resulting failure.
WORKED_CASES = {
    "a": (16, 2, (1, 2, 7),
          {(1, 2, 7), (3, 5, 6)},
          {(1, 2, 7), (2, 3, 5)}),
    "b": (16, 2, (1, 2, 4, 6, 7),
          {(1, 2, 4, 6, 7), (2, 3, 4, 5, 6)},
          {(1, 2, 4, 6, 7)}),
    "c": (16, 2, (1, 2, 4, 7, 8),
          {(1, 2, 4, 7, 8), (3, 4, 5, 6, 8)},
          {(1, 2, 4, 7, 8), (2, 3, 4, 5, 8)}),
    "d": (24, 2, (1, 2, 8, 11),
          {(1, 2, 8, 11), (5, 7, 8, 10)},
          {(1, 2, 8, 11), (2, 5, 7, 8)}),
    "e": (24, 2, (1, 2, 10, 11),
          {(1, 2, 10, 11), (2, 5, 7, 10)},
          {(1, 2, 10, 11)}),
    "f": (27, 3, (1, 3, 8, 10),
          {(1, 3, 8, 10), (2, 6, 7, 11), (4, 5, 12, 13)},
          {(1, 3, 8, 10), (3, 4, 5, 13), (2, 3, 7, 11)}),
    "g": (48, 2, (1, 2, 23),
          {(1, 2, 23), (5, 10, 19), (7, 14, 17), (11, 13, 22)},
          {(1, 2, 23), (2, 11, 13)}),
    "h": (48, 2, (1, 4, 23),
          {(1, 4, 23), (4, 11, 13), (5, 19, 20), (7, 17, 20)},
          {(1, 4, 23), (4, 11, 13)}),
    "i": (48, 2, (1, 6, 23),
          {(1, 6, 23), (5, 18, 19), (6, 7, 17), (11, 13, 18)},
          {(1, 6, 23), (6, 11, 13)}),
    "j": (54, 3, (1, 3, 17, 19),
          {(1, 3, 17, 19), (5, 13, 15, 23), (7, 11, 21, 25)},
          {(1, 3, 17, 19), (3, 7, 11, 25), (3, 5, 13, 23)}),
    "k": (54, 3, (1, 6, 17, 19),
          {(1, 6, 17, 19), (5, 13, 23, 24), (7, 11, 12, 25)},
          {(1, 6, 17, 19), (6, 7, 11, 25), (5, 6, 13, 23)}),
    "l": (54, 3, (1, 17, 18, 19),
          {(1, 17, 18, 19), (5, 13, 18, 23), (7, 11, 18, 25)},
          {(1, 17, 18, 19)}),
    "m": (108, 3, (3, 5, 31, 41),
          {(3, 5, 31, 41), (11, 15, 25, 47), (1, 21, 35, 37),
           (17, 19, 33, 53), (7, 29, 39, 43), (13, 23, 49, 51)},
          {(3, 5, 31, 41), (3, 7, 29, 43), (3, 17, 19, 53)}),
    "n": (108, 3, (5, 12, 31, 41),
          {(5, 12, 31, 41), (11, 25, 47, 48), (1, 24, 35, 37),
           (17, 19, 24, 53), (7, 29, 43, 48), (12, 13, 23, 49)},
          {(5, 12, 31, 41), (7, 12, 29, 43), (12, 17, 19, 53)}),
    "o": (108, 3, (5, 18, 31, 41),
          {(5, 18, 31, 41), (11, 18, 25, 47), (1, 18, 35, 37),
           (17, 18, 19, 53), (7, 18, 29, 43), (13, 18, 23, 49)},
          {(5, 18, 31, 41)}),
}

# cases whose expected T2 listing is a singleton
SINGLETON_T2 = ("b", "e", "l", "o")

# order-54 sweep of (2, 3, 16, 20) with m = 3: columns are the sorted
# symmetric closure, one row per step t with the transformed values and
# the rendered verdict
SWEEP_54_COLUMNS = (2, 3, 16, 20, 34, 38, 51, 52)
SWEEP_54_ROWS = (
    (0, (2, 3, 16, 20, 34, 38, 51, 52), "Yes (Identity)"),
    (1, (8, 3, 19, 26, 37, 44, 51, 1), "NS"),
    (2, (14, 3, 22, 32, 40, 50, 51, 4), "Yes (Type-2)"),
    (3, (20, 3, 25, 38, 43, 2, 51, 7), "NS"),
    (4, (26, 3, 28, 44, 46, 8, 51, 10), "Yes (Type-2)"),
    (5, (32, 3, 31, 50, 49, 14, 51, 13), "NS"),
    (6, (38, 3, 34, 2, 52, 20, 51, 16), "Yes (Identity)"),
)
SWEEP_54_IMAGES = {2: (3, 4, 14, 22), 4: (3, 8, 10, 26)}

# order-81 sweep of (3, 7, 20, 34) with m = 3
SWEEP_81_COLUMNS = (3, 7, 20, 34, 47, 61, 74, 78)
SWEEP_81_ROWS = (
    (0, (3, 7, 20, 34, 47, 61, 74, 78), "Yes (Identity)"),
    (1, (3, 10, 26, 37, 53, 64, 80, 78), "NS"),
    (2, (3, 13, 32, 40, 59, 67, 5, 78), "NS"),
    (3, (3, 16, 38, 43, 65, 70, 11, 78), "Yes (Type-2)"),
    (4, (3, 19, 44, 46, 71, 73, 17, 78), "NS"),
    (5, (3, 22, 50, 49, 77, 76, 23, 78), "NS"),
    (6, (3, 25, 56, 52, 2, 79, 29, 78), "Yes (Type-2)"),
    (7, (3, 28, 62, 55, 8, 1, 35, 78), "NS"),
    (8, (3, 31, 68, 58, 14, 4, 41, 78), "NS"),
)
SWEEP_81_IMAGES = {3: (3, 11, 16, 38), 6: (2, 3, 25, 29)}

# the seven jump sets of the order-1715 family (p = 7, n = 5, x = 3, y = 2)
SEVEN_SETS = (
    (7, 17, 228, 262, 473, 507, 718, 752),
    (7, 122, 123, 367, 368, 612, 613, 857),
    (7, 18, 227, 263, 472, 508, 717, 753),
    (7, 87, 158, 332, 403, 577, 648, 822),
    (7, 53, 192, 298, 437, 543, 682, 788),
    (7, 52, 193, 297, 438, 542, 683, 787),
    (7, 88, 157, 333, 402, 578, 647, 823),
)
