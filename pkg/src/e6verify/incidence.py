"""The incidence correspondence on the 27 lines.

``D'[s][t] = 1`` exactly when the lines ``s`` and ``t`` meet, i.e. when
``(l_s, l_t) = 1``.  Each line meets ten others, and on the degree-zero part
of Q^27 the matrix satisfies ``(D' - 1)(D' + 5) = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .lattice import LatticeVector, enumerate_lines, line_labels, pairing
from .linalg import integerize_row, matmul, nullspace, primitive_row, rank

N = 27


@dataclass(frozen=True)
class IncidenceMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, st: tuple[int, int]) -> int:
        s, t = st
        return self.entries[s][t]

    @property
    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def is_symmetric(self) -> bool:
        E = self.entries
        return all(E[s][t] == E[t][s] for s in range(N) for t in range(N))

    def diagonal_is_zero(self) -> bool:
        return all(self.entries[s][s] == 0 for s in range(N))

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.entries]

    def neighbours(self, s: int | str) -> list[str]:
        labels = line_labels()
        if isinstance(s, str):
            s = labels.index(s)
        return [labels[t] for t in range(N) if self.entries[s][t]]

    def apply(self, v: Sequence) -> list:
        return [sum(d * x for d, x in zip(row, v)) for row in self.entries]

    def quadratic_relation(self) -> list[list[int]]:
        """``(D' + 5)(D' - 1)``; equals ``5 J`` for the incidence matrix."""
        D = self.rows
        A = [[D[i][j] + 5 * (i == j) for j in range(N)] for i in range(N)]
        B = [[D[i][j] - (i == j) for j in range(N)] for i in range(N)]
        return matmul(A, B)

    def quadratic_relation_holds(self) -> bool:
        return all(x == 5 for row in self.quadratic_relation() for x in row)

    def commutes_with(self, perm: bytes) -> bool:
        """``P D' = D' P`` for the permutation matrix of ``perm``."""
        E = self.entries
        return all(E[perm[s]][perm[t]] == E[s][t] for s in range(N) for t in range(N))

    def to_csv(self) -> str:
        labels = line_labels()
        out = ["," + ",".join(labels)]
        for lab, row in zip(labels, self.entries):
            out.append(lab + "," + ",".join(str(x) for x in row))
        return "\n".join(out) + "\n"


@lru_cache(maxsize=None)
def build_incidence() -> IncidenceMatrix:
    lines = enumerate_lines()
    return IncidenceMatrix(
        tuple(tuple(int(pairing(a.vec, b.vec) == 1) for b in lines) for a in lines)
    )


@dataclass(frozen=True)
class Eigenspaces:
    """Eigenspaces of ``D'`` on the kernel of the degree map, with integer bases."""

    dim_plus: int
    dim_minus: int
    basis_plus: tuple[tuple[int, ...], ...]
    basis_minus: tuple[tuple[int, ...], ...]


def _integer_basis(vectors: list[list[Fraction]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(primitive_row(integerize_row(v))) for v in vectors)


def eigenspace(eigenvalue: int, degree_zero: bool = True, D: IncidenceMatrix | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : D' v = eigenvalue v}``, optionally inside ``sum(v) = 0``."""
    D = D or build_incidence()
    rows = [[D.entries[i][j] - eigenvalue * (i == j) for j in range(N)] for i in range(N)]
    if degree_zero:
        rows.append([1] * N)
    return nullspace(rows, N)


@lru_cache(maxsize=None)
def eigenspaces_on_ker_deg() -> Eigenspaces:
    plus = eigenspace(1)
    minus = eigenspace(-5)
    return Eigenspaces(len(plus), len(minus), _integer_basis(plus), _integer_basis(minus))


def full_spectrum() -> dict[int, int]:
    """Eigenvalue multiplicities of ``D'`` on all of Q^27."""
    D = build_incidence()
    out = {}
    for ev in (10, 1, -5):
        rows = [[D.entries[i][j] - ev * (i == j) for j in range(N)] for i in range(N)]
        out[ev] = N - rank(rows)
    return out


def minimal_polynomial_on_ker_deg_is_quadratic() -> bool:
    """``(x - 1)(x + 5)`` kills ker(deg) while neither linear factor does."""
    e = eigenspaces_on_ker_deg()
    return e.dim_plus + e.dim_minus == N - 1 and e.dim_plus > 0 and e.dim_minus > 0


def minus5_vector(x: LatticeVector) -> list[int]:
    """The (-5)-eigenvector ``s -> (x, l_s)`` attached to ``x`` in E6."""
    return [pairing(x, l.vec) for l in enumerate_lines()]
