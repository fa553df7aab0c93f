"""Orbits, root sublattices and toric ranks at the boundary.

A boundary point of the Hurwitz space splits the 24 branch points into two
groups.  The reflections on each side generate subgroups whose orbits on
the 27 lines are the components over the two sides; the resulting bipartite
graph ``Γ(u, A, B)`` has one edge per cycle of the gluing element ``u``.
The toric rank of the limiting Prym-Tyurin variety is the dimension of the
(-5)-part of its first homology.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernels
from .errors import PartitionError
from .incidence import eigenspace
from .lattice import (
    LatticeVector,
    Root,
    as_root,
    dynkin_root,
    e6_coordinates,
    enumerate_roots,
    line_labels,
    pairing,
)
from .linalg import rank
from .tables import SUBLATTICE_TYPES, TABLE2, TABLE3, E_L_LATTICES, Table3Row
from .weyl import WeylElement, conjugacy_classes, reflection

N = 27


@dataclass(frozen=True)
class OrbitPartition:
    """A set partition of the 27 line indices, blocks sorted by smallest element."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        flat = sorted(i for b in self.blocks for i in b)
        if flat != list(range(N)):
            raise PartitionError("blocks must partition the 27 lines")
        object.__setattr__(self, "blocks", tuple(sorted(tuple(sorted(b)) for b in self.blocks)))

    @classmethod
    def single_block(cls) -> "OrbitPartition":
        return cls((tuple(range(N)),))

    @classmethod
    def discrete(cls) -> "OrbitPartition":
        return cls(tuple((i,) for i in range(N)))

    @classmethod
    def from_labels(cls, blocks: Iterable[Iterable[str]]) -> "OrbitPartition":
        labels = line_labels()
        return cls(tuple(tuple(labels.index(x) for x in b) for b in blocks))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    @property
    def label_sets(self) -> list[frozenset[str]]:
        labels = line_labels()
        return [frozenset(labels[i] for i in b) for b in self.blocks]

    def block_of(self) -> list[int]:
        out = [0] * N
        for k, b in enumerate(self.blocks):
            for i in b:
                out[i] = k
        return out

    def is_invariant_under(self, w: WeylElement) -> bool:
        where = self.block_of()
        return all(where[w.perm[i]] == where[i] for i in range(N))

    def refines(self, other: "OrbitPartition") -> bool:
        where = other.block_of()
        return all(len({where[i] for i in b}) == 1 for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def orbits(gens: Sequence[Root]) -> OrbitPartition:
    """Orbits on the lines of the group generated by the reflections in ``gens``."""
    if not gens:
        return OrbitPartition.discrete()
    perms = [reflection(r).perm for r in gens]
    return OrbitPartition(tuple(kernels.orbits(perms, N)))


# ------------------------------------------------------------ sublattices


def root_closure(gens: Sequence[Root]) -> list[Root]:
    """The root subsystem generated by ``gens``: all images of the generators
    under the group generated by their reflections, with both signs."""
    found: dict[tuple[int, ...], LatticeVector] = {}
    todo = []
    for r in gens:
        for v in (r.vec, -r.vec):
            if v.coords not in found:
                found[v.coords] = v
                todo.append(v)
    gvecs = [r.vec for r in gens]
    while todo:
        v = todo.pop()
        for g in gvecs:
            w = v + pairing(v, g) * g
            if w.coords not in found:
                found[w.coords] = w
                todo.append(w)
    order = {r.vec.coords: n for n, r in enumerate(enumerate_roots())}
    return [as_root(found[c]) for c in sorted(found, key=order.__getitem__)]


def _height(r: Root) -> int:
    return sum(e6_coordinates(r))


def simple_system(roots: Sequence[Root]) -> list[Root]:
    """Simple roots of a closed subsystem, for the positivity given by height."""
    pos = [r for r in roots if _height(r) > 0]
    sums = {(a.vec + b.vec).coords for a in pos for b in pos}
    return [r for r in pos if r.vec.coords not in sums]


def cartan_matrix(simple: Sequence[Root]) -> list[list[int]]:
    """``A_ij = -(a_i, a_j)``; 2 on the diagonal since roots have square -2."""
    return [[-pairing(a.vec, b.vec) for b in simple] for a in simple]


def _component_type(nodes: list[int], adj: dict[int, set[int]]) -> tuple[str, int]:
    n = len(nodes)
    branch = [v for v in nodes if len(adj[v]) == 3]
    if not branch:
        if any(len(adj[v]) > 2 for v in nodes):
            raise RuntimeError("unexpected Dynkin diagram")
        return "A", n
    if len(branch) != 1:
        raise RuntimeError("unexpected Dynkin diagram")
    c = branch[0]
    legs = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[:2] == [1, 1]:
        return "D", n
    if legs == [1, 2, 2]:
        return "E", n
    raise RuntimeError(f"unexpected Dynkin diagram with legs {legs}")


@dataclass(frozen=True)
class SublatticeType:
    dynkin: str
    components: tuple[tuple[str, int], ...]
    rank: int

    def __str__(self) -> str:
        return self.dynkin


def dynkin_name(components: Sequence[tuple[str, int]]) -> str:
    """Normalized name: components by decreasing rank, equal ones as powers."""
    letter_order = {"E": 0, "D": 1, "A": 2}
    comps = sorted(components, key=lambda c: (-c[1], letter_order[c[0]]))
    out = []
    i = 0
    while i < len(comps):
        j = i
        while j < len(comps) and comps[j] == comps[i]:
            j += 1
        name = f"{comps[i][0]}{comps[i][1]}"
        out.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "".join(out)


def sublattice_type(gens: Sequence[Root]) -> SublatticeType:
    """Dynkin type of the root subsystem generated by ``gens``."""
    if not gens:
        return SublatticeType("0", (), 0)
    simple = simple_system(root_closure(gens))
    A = cartan_matrix(simple)
    n = len(simple)
    adj = {i: {j for j in range(n) if j != i and A[i][j] != 0} for i in range(n)}
    seen: set[int] = set()
    comps = []
    for i in range(n):
        if i in seen:
            continue
        stack, comp = [i], []
        seen.add(i)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(_component_type(sorted(comp), adj))
    name = dynkin_name(comps)
    if name not in SUBLATTICE_TYPES:
        raise RuntimeError(f"computed type {name} is not a root sublattice of E6")
    return SublatticeType(name, tuple(sorted(comps)), n)


# ----------------------------------------------------------- toric rank


@dataclass(frozen=True)
class BipartiteCoverGraph:
    """``Γ(u, A, B)``: vertices are the blocks of A and of B, edges the cycles of u."""

    u: WeylElement
    A: OrbitPartition
    B: OrbitPartition

    def __post_init__(self) -> None:
        for name, P in (("A", self.A), ("B", self.B)):
            if not P.is_invariant_under(self.u):
                raise PartitionError(f"partition {name} is not invariant under u")

    @property
    def edges(self) -> list[tuple[int, int, tuple[int, ...]]]:
        wa, wb = self.A.block_of(), self.B.block_of()
        return [(wa[c[0]], wb[c[0]], c) for c in self.u.cycles]

    def betti_number(self) -> int:
        """First Betti number ``|E| - |V| + #components``."""
        edges = self.edges
        nA = len(self.A)
        parent = list(range(nA + len(self.B)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, _ in edges:
            ra, rb = find(a), find(nA + b)
            if ra != rb:
                parent[ra] = rb
        comps = len({find(x) for x in range(len(parent))})
        return len(edges) - len(parent) + comps


@lru_cache(maxsize=None)
def _minus5_basis() -> tuple[tuple, ...]:
    """Basis of the (-5)-eigenspace of D' on Q^27 (six vectors)."""
    return tuple(tuple(v) for v in eigenspace(-5, degree_zero=False))


def toric_rank(u: WeylElement, A: OrbitPartition, B: OrbitPartition) -> int:
    """``dim H_1(Γ(u, A, B), Q)^(-5)``.

    Computed inside the (-5)-eigenspace of ``D'`` on Q^27 as the vectors
    that are constant on the cycles of ``u`` (u-invariance) and whose sums
    over every block of ``A`` and of ``B`` vanish (the cycle condition at each
    vertex of the graph).
    """
    graph = BipartiteCoverGraph(u, A, B)
    basis = _minus5_basis()
    m = len(basis)
    equations: list[list] = []

    def functional(coeffs: dict[int, int]) -> list:
        return [sum(c * basis[k][s] for s, c in coeffs.items()) for k in range(m)]

    for cyc in graph.u.cycles:
        for s in cyc[1:]:
            equations.append(functional({cyc[0]: 1, s: -1}))
    for P in (A, B):
        for block in P.blocks:
            equations.append(functional({s: 1 for s in block}))
    return m - rank(equations) if equations else m


def trivial_toric_rank(u: WeylElement) -> int:
    """Toric rank with one block on each side; equals ``dim (E6 ⊗ Q)^u``."""
    return toric_rank(u, OrbitPartition.single_block(), OrbitPartition.single_block())


def invariant_dim_table(fast: bool = False) -> dict[str, int]:
    return {c.name: c.inv_dim for c in conjugacy_classes(fast)}


# ------------------------------------------------ boundary configurations


def table3_roots(row: Table3Row) -> list[Root]:
    return [dynkin_root(i) for i in row.roots]


def generates_weyl_group(gens: Sequence[Root]) -> bool:
    """True iff the reflections in ``gens`` generate all of W(E6)."""
    return len(root_closure(gens)) == 72


def complementary_roots(L: Sequence[Root]) -> list[Root]:
    """Roots ``r`` (one per ± pair) with W(L ∪ {r}) = W(E6).

    For a proper sublattice these avoid the roots of L; for L = E6 every
    root qualifies.
    """
    closure = {r.vec.coords for r in root_closure(L)} if L else set()
    out = []
    for r in enumerate_roots():
        if r.sign < 0:
            continue
        if len(closure) < 72 and r.vec.coords in closure:
            continue
        if generates_weyl_group(list(L) + [r]):
            out.append(r)
    return out


def default_complement(L: Sequence[Root]) -> Root:
    """``r0`` when it works, otherwise the first valid root in canonical order."""
    r0 = dynkin_root(0)
    cands = complementary_roots(L)
    for r in cands:
        if r.vec == r0.vec or r.vec == -r0.vec:
            return r0
    if not cands:
        raise ValueError("no complementary root completes L to E6")
    return cands[0]


@dataclass(frozen=True)
class BoundaryConfiguration:
    lattice: str
    L: tuple[Root, ...]
    complement: Root
    u: WeylElement
    A: OrbitPartition
    B: OrbitPartition

    def toric_rank(self) -> int:
        return toric_rank(self.u, self.A, self.B)


def boundary_configuration(L: Sequence[Root], complement: Root | None = None,
                           u: WeylElement | None = None) -> BoundaryConfiguration:
    """The E_L-type configuration: A = orbits of W(L), B = orbits of one reflection.

    ``u`` defaults to the identity, the case where the two coalescing
    branch points carry the same reflection.
    """
    r = complement or default_complement(L)
    u = u or WeylElement.identity()
    return BoundaryConfiguration(
        sublattice_type(L).dynkin, tuple(L), r, u, orbits(L), orbits([r])
    )


def e_l_configurations() -> dict[str, BoundaryConfiguration | None]:
    """The eight E_L divisors with rank L >= 5, roots as in the sublattice table.

    A lattice maps to ``None`` when no single extra reflection completes
    W(L) to W(E6); the divisor then has no admissible cover with full
    monodromy and identity gluing.
    """
    rows = {row.lattice: row for row in TABLE3}
    out: dict[str, BoundaryConfiguration | None] = {}
    for name in E_L_LATTICES:
        L = table3_roots(rows[name])
        out[name] = boundary_configuration(L) if complementary_roots(L) else None
    return out


def e_l_toric_ranks() -> dict[str, set[int] | None]:
    """Toric ranks over every admissible complementary reflection.

    The rank depends only on whether the reflection lies in ``L ⊗ Q``, so
    each set has a single element; the full scan makes that visible.
    """
    rows = {row.lattice: row for row in TABLE3}
    out: dict[str, set[int] | None] = {}
    for name in E_L_LATTICES:
        L = table3_roots(rows[name])
        comps = complementary_roots(L)
        out[name] = {boundary_configuration(L, r).toric_rank() for r in comps} or None
    return out


def d5_configuration() -> BoundaryConfiguration:
    """W(D5) on one side (orbits F0, F1, F2) against the reflection in r0."""
    return boundary_configuration([dynkin_root(i) for i in range(1, 6)], dynkin_root(0))


# ------------------------------------------------------------ Table 3


@dataclass
class Table3Comparison:
    row: Table3Row
    computed_type: str
    computed: OrbitPartition
    degrees_match: bool
    contents_match: bool
    missing: list[frozenset[str]]
    unexpected: list[frozenset[str]]

    def to_json(self) -> dict:
        def fmt(s: frozenset[str]) -> list[str]:
            labels = line_labels()
            return sorted(s, key=labels.index)

        return {
            "lattice": self.row.lattice,
            "roots": [f"r{i}" for i in self.row.roots],
            "computed_type": self.computed_type,
            "computed_degrees": list(self.computed.degrees),
            "printed_degrees": list(self.row.degrees),
            "degrees_match": self.degrees_match,
            "contents_match": self.contents_match,
            "flagged_row": self.row.flagged,
            "printed_orbits_not_computed": [fmt(s) for s in self.missing],
            "computed_orbits_not_printed": [fmt(s) for s in self.unexpected],
        }


def compare_table3() -> list[Table3Comparison]:
    out = []
    for row in TABLE3:
        roots = table3_roots(row)
        P = orbits(roots)
        computed_sets = P.label_sets
        missing = [s for s in row.orbits if s not in computed_sets]
        unexpected = [s for s in computed_sets if s not in row.orbits]
        out.append(
            Table3Comparison(
                row,
                sublattice_type(roots).dynkin,
                P,
                tuple(sorted(row.degrees, reverse=True)) == P.degrees,
                not missing and not unexpected,
                missing,
                unexpected,
            )
        )
    return out


def table2_comparison(fast: bool = False) -> list[dict]:
    """Per class: printed inv_dim, computed inv_dim, toric rank with trivial partitions."""
    rows = []
    for c in conjugacy_classes(fast):
        rows.append({
            "class": c.name,
            "printed": TABLE2[c.name],
            "inv_dim": c.inv_dim,
            "toric_rank_trivial": trivial_toric_rank(c.representative),
        })
    return rows
