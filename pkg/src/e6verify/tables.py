"""Reference data transcribed from the printed tables.

Nothing here is used as an input to a computation.  The values are the
"expected" side of comparisons, kept verbatim (including entries that turn
out to disagree with the group) so that reports can show both sides.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def partition(text: str) -> tuple[int, ...]:
    """Parse ``"6^2 3^2 2^4 1"`` into a non-increasing tuple of parts."""
    parts: list[int] = []
    for chunk in text.replace(",", " ").split():
        if "^" in chunk:
            base, exp = chunk.split("^")
            parts += [int(base)] * int(exp)
        else:
            parts.append(int(chunk))
    return tuple(sorted(parts, reverse=True))


def partition_str(parts: tuple[int, ...]) -> str:
    """Inverse of :func:`partition`: ``(6, 6, 3)`` -> ``"6^2 3"``."""
    out = []
    seen: list[int] = []
    for p in parts:
        if p not in seen:
            seen.append(p)
    for p in seen:
        k = parts.count(p)
        out.append(f"{p}^{k}" if k > 1 else f"{p}")
    return " ".join(out)


@dataclass(frozen=True)
class Table1Row:
    counts: tuple[int, ...]
    partition: tuple[int, ...]
    name: str
    printed_inv_mu: Fraction


_T1 = [
    ((0, 2, 4, 6), "1^27", "1a", "27"),
    ((1, 3, 5), "2^6 1^15", "2c", "18"),
    ((2, 4, 6), "2^10 1^7", "2b", "12"),
    ((2, 4, 6), "3^6 1^9", "3b", "11"),
    ((3, 5), "2^12 1^3", "2d", "9"),
    ((3, 5), "4^5 2 1^5", "4d", "27/4"),
    ((3, 5), "6 3^4 2^3 1^3", "6e", "6"),
    ((4, 6), "2^12 1^3", "2a", "9"),
    ((4, 6), "3^9", "3c", "3"),
    ((4, 6), "4^6 1^3", "4a", "9/2"),
    ((4, 6), "4^5 2^3 1", "4b", "15/4"),
    ((4, 6), "5^5 1^2", "5a", "3"),
    ((4, 6), "6^3 2^3 1^3", "6b", "5"),
    ((4, 6), "6^2 3^2 2^4 1", "6d", "4"),
    ((5,), "4^5 2^3 1", "4c", "15/4"),
    ((5,), "6^2 3^5", "6f", "2"),
    ((5,), "6^4 3", "6g", "1"),
    ((5,), "8^3 2 1", "8a", "7/8"),
    ((5,), "10 5^3 2", "10a", "58/5"),
    ((5,), "12 6 4^2 1", "12b", "7/4"),
    ((6,), "3^9", "3a", "1/3"),
    ((6,), "6^4 3", "6a", "11/3"),
    ((6,), "6^3 2^3 1^3", "6c", "5"),
    ((6,), "9^3", "9a", "1/3"),
    ((6,), "12^2 3", "12a", "19/6"),
]

TABLE1: tuple[Table1Row, ...] = tuple(
    Table1Row(c, partition(p), n, Fraction(v)) for c, p, n, v in _T1
)

# Rows whose printed 1/mu is known in advance to disagree with the printed
# partition.  Any other disagreement is reported as an additional finding.
TABLE1_FLAGGED_INV_MU = {"10a": Fraction(6, 5), "6a": Fraction(1)}

TABLE2: dict[str, int] = {
    "1a": 6, "2a": 2, "2b": 4, "3a": 0, "3b": 4, "3c": 2, "4a": 2, "4b": 2,
    "5a": 2, "6a": 0, "6b": 2, "6c": 0, "6d": 2, "9a": 0, "12a": 0,
    "2c": 5, "2d": 3, "4c": 1, "4d": 3, "6e": 3, "6f": 1, "6g": 1, "8a": 1,
    "10a": 1, "12b": 1,
}

# Class names in the order used for reports: even classes, then odd ones,
# each sorted by element order as in the usual character-table layout.
CLASS_ORDER: tuple[str, ...] = (
    "1a", "2a", "2b", "3a", "3b", "3c", "4a", "4b", "5a", "6a", "6b", "6c", "6d", "9a", "12a",
    "2c", "2d", "4c", "4d", "6e", "6f", "6g", "8a", "10a", "12b",
)


def class_order_of(name: str) -> int:
    return int(name[:-1])


@dataclass(frozen=True)
class Table3Row:
    lattice: str
    roots: tuple[int, ...]
    orbits: tuple[frozenset[str], ...]
    degrees: tuple[int, ...]
    flagged: bool = False


def _c(i: int, j: int) -> str:
    i, j = min(i, j), max(i, j)
    return f"c{i}{j}"


def _set(*labels: str) -> frozenset[str]:
    return frozenset(labels)


def _cij(rng_i, rng_j, distinct: bool = True) -> list[str]:
    return sorted({_c(i, j) for i in rng_i for j in rng_j if not distinct or i != j})


def _build_table3() -> tuple[Table3Row, ...]:
    R = range
    rows: list[Table3Row] = []

    def add(name, roots, orbits, degrees, flagged=False):
        rows.append(Table3Row(name, tuple(roots), tuple(frozenset(o) for o in orbits), tuple(degrees), flagged))

    all27 = [f"a{i}" for i in R(1, 7)] + [f"b{i}" for i in R(1, 7)] + _cij(R(1, 7), R(1, 7))
    add("E6", [1, 2, 3, 4, 5, 6], [all27], [27])
    add("A5A1", [0, 2, 3, 4, 5, 6],
        [[f"a{i}" for i in R(1, 7)] + [f"b{i}" for i in R(1, 7)], _cij(R(1, 7), R(1, 7))], [15, 12])
    add("A2^3", [0, 1, 2, 3, 5, 6],
        [[f"a{i}" for i in R(1, 4)] + [f"b{i}" for i in R(1, 4)] + _cij(R(1, 4), R(1, 4)),
         [f"a{i}" for i in R(4, 7)] + [f"b{i}" for i in R(4, 7)] + _cij(R(4, 7), R(4, 7)),
         _cij(R(1, 4), R(4, 7))], [9, 9, 9])
    add("D5", [1, 2, 3, 4, 5],
        [["a6"], [f"a{i}" for i in R(1, 6)] + ["b6"] + _cij(R(1, 6), R(1, 6)),
         [f"b{i}" for i in R(1, 6)] + [_c(i, 6) for i in R(1, 6)]], [1, 10, 16])
    add("A5", [2, 3, 4, 5, 6],
        [[f"a{i}" for i in R(1, 7)], [f"b{i}" for i in R(1, 7)], _cij(R(1, 7), R(1, 7))], [6, 6, 15])
    add("A4A1", [0, 2, 3, 4, 5],
        [[f"a{i}" for i in R(1, 5)] + _cij(R(1, 5), R(1, 5)),
         [f"b{i}" for i in R(1, 5)] + ["c56"],
         ["a5", "a6"],
         ["b5", "b6"] + _cij(R(1, 5), R(5, 7))], [2, 5, 10, 10])
    add("A3A1^2", [0, 2, 3, 4, 6],
        [["a1"] + [f"b{i}" for i in R(2, 5)] + _cij(R(2, 5), R(2, 5)) + ["c56"],
         ["b1"],
         [f"a{i}" for i in R(2, 5)] + _cij(R(2, 5), R(2, 5)),
         ["a5", "a6", "c15", "c16"],
         ["b5", "b6"] + _cij(R(2, 5), R(5, 7))], [8, 8, 6, 4, 1], flagged=True)
    add("A2^2A1", [1, 2, 3, 5, 6],
        [[f"a{i}" for i in R(1, 4)] + _cij(R(1, 4), R(1, 4)),
         [f"b{i}" for i in R(4, 7)] + _cij(R(4, 7), R(4, 7)),
         ["a4", "a5", "a6"], ["b1", "b2", "b3"], _cij(R(1, 4), R(4, 7))], [9, 6, 6, 3, 3])
    add("A4", [2, 3, 4, 5],
        [[f"a{i}" for i in R(1, 5)] + _cij(R(1, 5), R(1, 5)),
         [f"b{i}" for i in R(1, 5)] + ["c56"], ["a5"], ["a6"],
         ["b5"] + [_c(i, 6) for i in R(1, 5)], ["b6"] + [_c(i, 5) for i in R(1, 5)]],
        [10, 5, 5, 5, 1, 1])
    add("D4", [1, 3, 4, 5],
        [["a1", "b6"] + _cij(R(2, 6), R(2, 6)),
         [f"a{i}" for i in R(2, 6)] + [_c(1, i) for i in R(2, 6)], ["a6"],
         ["b1"], [f"b{i}" for i in R(2, 6)] + [_c(i, 6) for i in R(2, 6)], ["c16"]],
        [8, 8, 8, 1, 1, 1])
    add("A2^2", [2, 3, 5, 6],
        [["a1", "a2", "a3"], ["b1", "b2", "b3"], ["a4", "a5", "a6"], ["b4", "b5", "b6"],
         ["c12", "c13", "c23"], ["c45", "c46", "c56"], _cij(R(1, 4), R(4, 7))],
        [9, 3, 3, 3, 3, 3, 3])
    add("A3A1", [2, 3, 4, 6],
        [["c56"], ["a5", "a6"], ["b5", "b6"], ["a1", "a2", "a3", "a4"], ["b1", "b2", "b3", "b4"],
         _cij(R(1, 5), R(1, 5)), _cij(R(1, 5), R(5, 7))], [8, 6, 4, 4, 2, 2, 1])
    add("A2A1^2", [1, 2, 3, 5],
        [["a6"], ["b6", "c45"], ["b1", "b2", "b3"], ["c16", "c26", "c36"], ["b5", "b6", "c46", "c56"],
         ["a4", "a5"], [f"a{i}" for i in R(1, 4)] + _cij(R(1, 4), R(1, 4)), _cij(R(1, 4), R(4, 6))],
        [6, 6, 4, 3, 3, 2, 2, 1], flagged=True)
    add("A1^4", [0, 2, 4, 6],
        [["a6"], ["b1"], ["a1", "b6", "c23", "c45"], ["a2", "a3", "c12", "c13"], ["a4", "a5", "c14", "c15"],
         ["b2", "b3", "c26", "c36"], ["b4", "b5", "c46", "c56"], ["c24", "c34", "c25", "c35"], ["c16"]],
        [4, 4, 4, 4, 4, 4, 1, 1, 1])
    add("A3", [2, 3, 4],
        [_cij(R(1, 5), R(1, 5)), [_c(i, 5) for i in R(1, 5)], [_c(i, 6) for i in R(1, 5)],
         ["a1", "a2", "a3", "a4"], ["b1", "b2", "b3", "b4"], ["a5"], ["a6"], ["b5"], ["b6"], ["c56"]],
        [6, 4, 4, 4, 4, 1, 1, 1, 1, 1])
    add("A2A1", [1, 2, 3],
        [["b1", "b2", "b3"], ["c14", "c24", "c34"], ["c15", "c25", "c35"],
         ["a1", "a2", "a3", "c12", "c13", "c23"], ["c16", "c26", "c36"],
         ["b4", "c56"], ["b5", "c46"], ["b6", "c45"], ["a4"], ["a5"], ["a6"]],
        [6, 3, 3, 3, 3, 2, 2, 2, 1, 1, 1])
    add("A1^3", [2, 4, 5],
        [["c13", "c14", "c23", "c24"], ["c15", "c16", "c25", "c26"], ["c35", "c36", "c45", "c46"],
         ["a1", "a2"], ["b1", "b2"], ["c12"], ["a3", "a4"], ["b3", "b4"], ["c34"],
         ["a5", "a6"], ["b5", "b6"], ["c56"]],
        [4, 4, 4, 2, 2, 2, 2, 2, 2, 1, 1, 1])
    add("A2", [2, 3],
        [["a1", "a2", "a3"], ["b1", "b2", "b3"], ["c12", "c13", "c23"], ["c14", "c24", "c34"],
         ["c15", "c25", "c35"], ["c16", "c26", "c36"],
         ["a4"], ["a5"], ["a6"], ["b4"], ["b5"], ["b6"], ["c45"], ["c46"], ["c56"]],
        [3, 3, 3, 3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1])
    add("A1^2", [2, 4],
        [["c13", "c23", "c14", "c24"], ["c56"],
         ["a1", "a2"], ["b1", "b2"], ["c15", "c25"], ["c16", "c26"], ["c12"],
         ["a3", "a4"], ["b3", "b4"], ["c35", "c45"], ["c36", "c46"], ["c34"],
         ["a5"], ["a6"], ["b5"], ["b6"]],
        [4, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1])
    add("A1", [0],
        [[f"a{i}", f"b{i}"] for i in R(1, 7)] + [[c] for c in _cij(R(1, 7), R(1, 7))],
        [2] * 6 + [1] * 15)
    return tuple(rows)


TABLE3: tuple[Table3Row, ...] = _build_table3()

# Lattices of rank >= 5 that occur as E_L boundary divisors.
E_L_LATTICES: tuple[str, ...] = ("E6", "A5A1", "A2^3", "A5", "D5", "A4A1", "A3A1^2", "A2^2A1")

# The complete list of root sublattices of E6 (Dynkin types, normalized).
SUBLATTICE_TYPES: frozenset[str] = frozenset(
    {
        "E6", "A5A1", "A2^3", "D5", "A5", "A4A1", "A3A1^2", "A2^2A1", "D4", "A4", "A2^2",
        "A3A1", "A2A1^2", "A1^4", "A3", "A2A1", "A1^3", "A2", "A1^2", "A1",
    }
)
