from __future__ import annotations

# weights used throughout; kept small so brute force stays cheap
BATTERY = [
    ("A1", (1,)), ("A1", (2,)), ("A1", (3,)),
    ("A2", (1, 0)), ("A2", (2, 0)), ("A2", (1, 1)),
    ("B2", (1, 0)), ("B2", (0, 1)), ("B2", (1, 1)),
    ("C2", (1, 0)), ("C2", (0, 1)), ("C2", (1, 1)),
    ("G2", (1, 0)),
    ("A3", (0, 1, 0)),
]

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"]

