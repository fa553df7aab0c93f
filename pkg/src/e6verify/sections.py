"""Sections of line bundles on the 72-nodal degenerate E6 cover.

Twelve roots ``r_i`` and twelve points ``q_i`` on the base line determine a
nodal curve with 27 rational components ``X_s`` (one per line).  Over each
``q_i`` the six pairs ``(a_ij, b_ij)`` of the double-six of ``r_i`` are glued
into nodes.  Spaces of sections are computed as exact kernels of residue
matching conditions.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from .degeneration import elementary_divisors, kernel_basis
from .errors import DegenerateInput, GenerationError
from .lattice import Root, double_six, line_labels
from .linalg import nullspace, rank

N_LINES = 27
N_ROOTS = 12


class FewNodesWarning(UserWarning):
    """Some component carries fewer than four nodes."""


@dataclass(frozen=True)
class Node:
    i: int  # root index 0..11
    j: int  # pair index 0..5
    a: int  # line with <r_i, l> = +1
    b: int  # line a + r_i


@dataclass(frozen=True)
class NodalCurveModel:
    roots: tuple[Root, ...]
    points: tuple[Fraction, ...]
    nodes: tuple[Node, ...]

    @cached_property
    def component_nodes(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per component: ``(root index, sign)`` of each node, sorted by root index.

        The sign is ``<r_i, l_s>``, +1 on the a-side and -1 on the b-side.
        """
        per: list[list[tuple[int, int]]] = [[] for _ in range(N_LINES)]
        for nd in self.nodes:
            per[nd.a].append((nd.i, 1))
            per[nd.b].append((nd.i, -1))
        return tuple(tuple(sorted(p)) for p in per)

    @property
    def n(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.component_nodes)

    @property
    def genus(self) -> int:
        return len(self.nodes) - N_LINES + 1

    def is_connected(self) -> bool:
        parent = list(range(N_LINES))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for nd in self.nodes:
            parent[find(nd.a)] = find(nd.b)
        return len({find(s) for s in range(N_LINES)}) == 1

    def to_json(self) -> dict:
        labels = line_labels()
        return {
            "roots": [r.token for r in self.roots],
            "points": [str(q) for q in self.points],
            "n": dict(zip(labels, self.n)),
            "genus": self.genus,
        }


def build_curve(roots: Sequence[Root], points: Sequence[Fraction | int | str]) -> NodalCurveModel:
    """The degenerate cover for twelve roots generating E6 and twelve points."""
    if len(roots) != N_ROOTS:
        raise ValueError(f"expected {N_ROOTS} roots, got {len(roots)}")
    if len(points) != N_ROOTS:
        raise DegenerateInput(f"expected {N_ROOTS} points, got {len(points)}")
    d = elementary_divisors(roots)
    if d != [1] * 6:
        raise GenerationError(f"roots do not generate E6 over Z; elementary divisors {d}", d)
    qs = tuple(Fraction(q) for q in points)
    if any(q == 0 for q in qs):
        raise DegenerateInput("points must avoid 0")
    if len(set(qs)) != len(qs):
        raise DegenerateInput("points must be distinct")
    nodes = tuple(
        Node(i, j, a, b) for i, r in enumerate(roots) for j, (a, b) in enumerate(double_six(r))
    )
    return NodalCurveModel(tuple(roots), qs, nodes)


@dataclass
class SectionSpace:
    """Kernel of an exact linear system.  ``basis`` is computed on first access."""

    name: str
    ambient_dim: int
    equations: list[list[Fraction]] = field(repr=False)
    warnings: list[str] = field(default_factory=list)

    @cached_property
    def constraint_rank(self) -> int:
        return rank(self.equations) if self.equations and self.ambient_dim else 0

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.constraint_rank

    @cached_property
    def basis(self) -> list[list[Fraction]]:
        if self.ambient_dim == 0:
            return []
        return nullspace(self.equations, self.ambient_dim)

    def satisfies(self, v: Sequence[Fraction]) -> bool:
        return all(sum(c * x for c, x in zip(row, v)) == 0 for row in self.equations)

    def to_json(self, with_basis: bool = False) -> dict:
        out = {
            "space": self.name,
            "unknowns": self.ambient_dim,
            "equations": len(self.equations),
            "rank": self.constraint_rank,
            "dim": self.dim,
        }
        if self.warnings:
            out["warnings"] = list(self.warnings)
        if with_basis:
            out["basis"] = [[str(x) for x in v] for v in self.basis]
        return out


# ------------------------------------------------ polynomial formulation


def _residue_system(
    curve: NodalCurveModel,
    n_coeffs: Callable[[int], int],
    power: int,
    combine: int,
    name: str,
) -> SectionSpace:
    """Unknowns are coefficients of ``P_s``; one equation per node.

    The residue on ``X_s`` at ``q_j`` is ``P_s(q_j) / prod_{i != j}(q_j - q_i)^power``
    over the nodes of ``X_s``; equations are ``Res_a + combine * Res_b = 0``.
    """
    q = curve.points
    offsets = []
    total = 0
    for s in range(N_LINES):
        offsets.append(total)
        total += max(0, n_coeffs(curve.n[s]))

    def residue_row(s: int, i: int) -> dict[int, Fraction]:
        k = max(0, n_coeffs(curve.n[s]))
        denom = Fraction(1)
        for i2, _ in curve.component_nodes[s]:
            if i2 != i:
                denom *= (q[i] - q[i2]) ** power
        return {offsets[s] + e: q[i] ** e / denom for e in range(k)}

    eqs = []
    for nd in curve.nodes:
        row = [Fraction(0)] * total
        for col, val in residue_row(nd.a, nd.i).items():
            row[col] += val
        for col, val in residue_row(nd.b, nd.i).items():
            row[col] += combine * val
        eqs.append(row)
    return SectionSpace(name, total, eqs)


def h0_omega(curve: NodalCurveModel) -> SectionSpace:
    """Canonical sections: ``deg P_s = n_s - 2``, residues at each node sum to zero."""
    return _residue_system(curve, lambda n: n - 1, 1, 1, "omega")


def h0_omega_sq(curve: NodalCurveModel) -> SectionSpace:
    """Quadratic differentials: ``deg P_s = 2(n_s - 2)``, residues at each node agree."""
    return _residue_system(curve, lambda n: 2 * n - 3, 2, -1, "omega^2")


def h0_2omega_minus_5L(curve: NodalCurveModel) -> SectionSpace:
    """Quadratic differentials vanishing to order 5 at the fibre over infinity."""
    space = _residue_system(curve, lambda n: 2 * n - 8, 2, -1, "2omega-5L")
    few = [line_labels()[s] for s, n in enumerate(curve.n) if n < 4]
    if few:
        msg = f"components with fewer than 4 nodes: {', '.join(few)}"
        space.warnings.append(msg)
        warnings.warn(msg, FewNodesWarning, stacklevel=2)
    return space


def h0_L(curve: NodalCurveModel) -> SectionSpace:
    """Sections of the pullback of O(1): a linear polynomial per component,
    with equal values on the two branches of every node."""
    eqs = []
    for nd in curve.nodes:
        row = [Fraction(0)] * (2 * N_LINES)
        qi = curve.points[nd.i]
        row[2 * nd.a], row[2 * nd.a + 1] = Fraction(1), qi
        row[2 * nd.b], row[2 * nd.b + 1] = Fraction(-1), -qi
        eqs.append(row)
    return SectionSpace("L", 2 * N_LINES, eqs)


def node_equation_sum(curve: NodalCurveModel) -> list[Fraction]:
    """Sum of all 72 canonical node equations; identically zero because the
    residues of a form on each component add up to zero."""
    space = h0_omega(curve)
    return [sum(col) for col in zip(*space.equations)]


# --------------------------------------------------- residue variables


def _var(nd: Node) -> int:
    return 6 * nd.i + nd.j


def _component_rows(curve: NodalCurveModel, weight: Callable[[Fraction], Fraction]) -> list[list[Fraction]]:
    """``sum_i <r_i, l_s> x_ij * weight(q_i) = 0`` for every component ``s``."""
    rows = [[Fraction(0)] * 72 for _ in range(N_LINES)]
    for nd in curve.nodes:
        w = weight(curve.points[nd.i])
        rows[nd.a][_var(nd)] += w
        rows[nd.b][_var(nd)] -= w
    return rows


def h0_omega_residues(curve: NodalCurveModel) -> SectionSpace:
    """Canonical sections in the 72 residue variables ``x_ij``: 27 equations of rank 26."""
    return SectionSpace("omega (residues)", 72, _component_rows(curve, lambda q: Fraction(1)))


@dataclass
class PetriResult:
    subspaces: dict[str, SectionSpace]
    h0_omega: int
    span_dim: int
    h0_L: int

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(sp.dim for sp in self.subspaces.values())

    @property
    def generates(self) -> bool:
        return self.span_dim == self.h0_omega

    @property
    def ok(self) -> bool:
        return self.h0_L == 2 and self.generates

    def to_json(self) -> dict:
        return {
            "h0_L": self.h0_L,
            "h0_omega": self.h0_omega,
            "subspace_dims": {k: v.dim for k, v in self.subspaces.items()},
            "span_dim": self.span_dim,
            "direct_sum": sum(self.dims) == self.span_dim,
            "petri": self.ok,
        }


def petri_subspaces(curve: NodalCurveModel) -> dict[str, SectionSpace]:
    base = _component_rows(curve, lambda q: Fraction(1))
    x0 = base + _component_rows(curve, lambda q: q)
    x1 = base + _component_rows(curve, lambda q: 1 / q)
    eig = list(base)
    for i in range(N_ROOTS):
        for j in range(1, 6):
            row = [Fraction(0)] * 72
            row[6 * i] = Fraction(1)
            row[6 * i + j] = Fraction(-1)
            eig.append(row)
    return {
        "omega(-L) x0": SectionSpace("omega(-L) x0", 72, x0),
        "omega(-L) x1": SectionSpace("omega(-L) x1", 72, x1),
        "omega^(-5)": SectionSpace("omega^(-5)", 72, eig),
    }


def petri_check(curve: NodalCurveModel) -> PetriResult:
    """Whether the two twisted subspaces and the (-5)-part span all of ``H^0(omega)``."""
    subs = petri_subspaces(curve)
    span = [v for sp in subs.values() for v in sp.basis]
    return PetriResult(
        subs,
        h0_omega_residues(curve).dim,
        rank(span) if span else 0,
        h0_L(curve).dim,
    )


def minus5_subspace_matches_kernel(curve: NodalCurveModel) -> bool:
    """The (-5)-part, read off as ``(y_i)`` with ``x_ij = y_i``, is ``Ker(phi) ⊗ Q``."""
    sub = petri_subspaces(curve)["omega^(-5)"]
    ys = [[v[6 * i] for i in range(N_ROOTS)] for v in sub.basis]
    K = [list(r) for r in kernel_basis(list(curve.roots)).basis]
    return rank(ys) == rank(K) == rank(ys + K)


def scaled(curve: NodalCurveModel, c: Fraction | int) -> NodalCurveModel:
    """The same roots with every point multiplied by ``c``."""
    c = Fraction(c)
    if c == 0:
        raise DegenerateInput("scale factor must be nonzero")
    return build_curve(list(curve.roots), [c * q for q in curve.points])


MODES: dict[str, Callable[[NodalCurveModel], SectionSpace]] = {
    "omega": h0_omega,
    "omega2": h0_omega_sq,
    "2k5l": h0_2omega_minus_5L,
    "L": h0_L,
}
