"""Degeneration of E6-covers over a maximally degenerate target curve.

The target is a tree ``T`` of 22 rational components: 12 outer vertices,
each carrying the two branch points of one root ``r_k``, joined through 10
inner trivalent vertices by 21 internal edges.  The cover's dual graph has
27 copies of ``T``; its (-5)-part of homology is ``Ker(phi)`` with
``phi: Z^12 -> E6, R_k -> r_k``.  Each internal edge ``e_i`` yields the
quadratic form ``M_i = sum_s ((e_i^s)^*)^2`` on ``Ker(phi)``, and the 21
forms being linearly independent certifies that the period map has full
rank.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import GenerationError, ShapeError
from .incidence import build_incidence
from .lattice import Root, double_six, e6_coordinates, enumerate_lines, pairing
from .linalg import determinant, integer_kernel, matmul, nullspace, smith_normal_form, transpose

N_ROOTS = 12
N_INNER = 10
N_EDGES = 21


# ------------------------------------------------------------------ tree


@dataclass(frozen=True)
class CoverTree:
    """The trivalent tree ``T`` with oriented, indexed internal edges.

    Vertex names are ``o1..o12`` (outer; ``ok`` carries the two ends of
    ``r_k``) and ``i0..i9`` (inner).  ``edges[i] = (tail, head)``.
    """

    edges: tuple[tuple[str, str], ...]
    base: str = "i0"
    shape: str = "custom"

    @property
    def vertices(self) -> list[str]:
        return [f"o{k}" for k in range(1, N_ROOTS + 1)] + [f"i{j}" for j in range(N_INNER)]

    @property
    def n_ends(self) -> int:
        return 2 * N_ROOTS

    def degree(self, v: str) -> int:
        return sum(v in e for e in self.edges)

    def path(self, start: str, end: str) -> dict[int, int]:
        """Oriented path as ``{edge index: +1 or -1}`` (+1 when traversed tail to head)."""
        adj: dict[str, list[tuple[str, int, int]]] = {v: [] for v in self.vertices}
        for i, (a, b) in enumerate(self.edges):
            adj[a].append((b, i, 1))
            adj[b].append((a, i, -1))
        prev: dict[str, tuple[str, int, int] | None] = {start: None}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, i, sgn in adj[v]:
                if w not in prev:
                    prev[w] = (v, i, sgn)
                    queue.append(w)
        if end not in prev:
            raise ShapeError(f"no path from {start} to {end}")
        out: dict[int, int] = {}
        v = end
        while prev[v] is not None:
            u, i, sgn = prev[v]
            out[i] = sgn
            v = u
        return out

    def path_matrix(self, base: str | None = None) -> list[list[int]]:
        """``P[k][i] = <p(R_k), e_i^*>`` for the path from the base to ``o(k+1)``."""
        base = base or self.base
        P = []
        for k in range(1, N_ROOTS + 1):
            p = self.path(base, f"o{k}")
            P.append([p.get(i, 0) for i in range(N_EDGES)])
        return P

    def with_base(self, base: str) -> "CoverTree":
        if base not in self.vertices:
            raise ShapeError(f"unknown vertex {base!r}")
        return CoverTree(self.edges, base, self.shape)

    def to_json(self) -> dict:
        return {"shape": self.shape, "base": self.base, "edges": [list(e) for e in self.edges]}


def _validate(edges: Sequence[tuple[str, str]], base: str) -> None:
    names = {f"o{k}" for k in range(1, N_ROOTS + 1)} | {f"i{j}" for j in range(N_INNER)}
    if len(edges) != N_EDGES:
        raise ShapeError(f"a tree for 12 roots needs {N_EDGES} internal edges, got {len(edges)}")
    deg = {v: 0 for v in names}
    for e in edges:
        if len(e) != 2 or e[0] == e[1]:
            raise ShapeError(f"malformed edge {e!r}")
        for v in e:
            if v not in deg:
                raise ShapeError(f"unknown vertex {v!r}")
            deg[v] += 1
    for v, d in deg.items():
        want = 1 if v.startswith("o") else 3
        if d != want:
            raise ShapeError(f"vertex {v} has degree {d}, expected {want}")
    if base not in names:
        raise ShapeError(f"unknown base vertex {base!r}")
    # connected + 21 edges on 22 vertices => tree
    adj: dict[str, list[str]] = {v: [] for v in names}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {base}
    stack = [base]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(names):
        raise ShapeError("tree is not connected")


def caterpillar_edges() -> list[tuple[str, str]]:
    """Inner vertices in a path; ``o1, o2`` on ``i0``, ``o(k)`` on ``i(k-2)`` for
    ``k = 3..10``, and ``o11, o12`` on ``i9``."""
    edges = [("i0", "o1"), ("i0", "o2")]
    edges += [(f"i{k - 2}", f"o{k}") for k in range(3, 11)]
    edges += [("i9", "o11"), ("i9", "o12")]
    edges += [(f"i{j}", f"i{j + 1}") for j in range(N_INNER - 1)]
    return edges


def cherry_path_edges() -> list[tuple[str, str]]:
    """Cherries ``(o1, o2), ..., (o11, o12)`` on ``i0..i5``, joined by a path
    through ``i6..i9``."""
    edges = []
    for j in range(6):
        edges += [(f"i{j}", f"o{2 * j + 1}"), (f"i{j}", f"o{2 * j + 2}")]
    edges += [("i6", "i0"), ("i6", "i1"), ("i6", "i7"), ("i7", "i2"), ("i7", "i8"),
              ("i8", "i3"), ("i8", "i9"), ("i9", "i4"), ("i9", "i5")]
    return edges


def cherries_edges() -> list[tuple[str, str]]:
    """Cherries ``(o1, o2), ..., (o11, o12)`` on ``i1..i6``; ``i7, i8, i9`` each
    join two consecutive cherries and meet at the central vertex ``i0``."""
    edges = []
    for j in range(1, 7):
        edges += [(f"i{j}", f"o{2 * j - 1}"), (f"i{j}", f"o{2 * j}")]
    edges += [("i7", "i1"), ("i7", "i2"), ("i8", "i3"), ("i8", "i4"), ("i9", "i5"), ("i9", "i6")]
    edges += [("i0", "i7"), ("i0", "i8"), ("i0", "i9")]
    return edges


SHAPES = {
    "cherries": cherries_edges,
    "cherry-path": cherry_path_edges,
    "caterpillar": caterpillar_edges,
}
DEFAULT_SHAPE = "cherries"


def build_tree(shape: str | dict = DEFAULT_SHAPE, base: str | None = None) -> CoverTree:
    """A tree from a named shape or a ``{"edges": [[u, v], ...], "base": ...}`` dict.

    The default ``"cherries"`` shape puts the outer vertices of ``r_(2j-1)``
    and ``r_(2j)`` on a common inner vertex.  Consecutive roots of a usable
    input are chosen non-orthogonal with this pairing in mind; on the
    ``"caterpillar"`` shape, where ``r3..r10`` hang off a path one at a time,
    the 21 forms of the dominance preset span only a 19-dimensional space.
    """
    if isinstance(shape, str):
        if shape not in SHAPES:
            raise ShapeError(f"unknown tree shape {shape!r}; choose from {sorted(SHAPES)}")
        edges = SHAPES[shape]()
        name = shape
        base = base or "i0"
    elif isinstance(shape, dict):
        try:
            edges = [tuple(e) for e in shape["edges"]]
        except (KeyError, TypeError):
            raise ShapeError("tree description needs an 'edges' list") from None
        name = str(shape.get("shape", "custom"))
        base = base or shape.get("base", "i0")
    else:
        raise ShapeError("tree shape must be a name or a dict")
    _validate(edges, base)
    return CoverTree(tuple((str(a), str(b)) for a, b in edges), base, name)


def load_tree(path: str | Path) -> CoverTree:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ShapeError(f"tree file is not valid JSON: {exc}") from None
    return build_tree(data)


# ------------------------------------------------------------ Ker(phi)


@dataclass(frozen=True)
class KernelBasis:
    """Rows form a Z-basis of ``Ker(phi) ⊂ Z^12`` (Hermite normal form)."""

    basis: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    elementary_divisors: tuple[int, ...] = ()

    def transformed(self, g: Sequence[Sequence[int]]) -> "KernelBasis":
        """The basis ``g @ basis`` for an integer matrix ``g`` (meant unimodular)."""
        new = matmul(g, [list(r) for r in self.basis])
        return KernelBasis(tuple(tuple(r) for r in new), self.roots, self.elementary_divisors)


def phi_matrix(roots: Sequence[Root]) -> list[list[int]]:
    """6 x n matrix whose columns are the roots in the basis r1..r6."""
    cols = [e6_coordinates(r) for r in roots]
    return transpose(cols)


def elementary_divisors(roots: Sequence[Root]) -> list[int]:
    return smith_normal_form(phi_matrix(roots))


def generates_e6(roots: Sequence[Root]) -> bool:
    return elementary_divisors(roots) == [1] * 6


def kernel_basis(roots: Sequence[Root]) -> KernelBasis:
    if len(roots) != N_ROOTS:
        raise ValueError(f"expected {N_ROOTS} roots, got {len(roots)}")
    d = elementary_divisors(roots)
    if d != [1] * 6:
        raise GenerationError(f"roots do not generate E6 over Z; elementary divisors {d}", d)
    K = integer_kernel(phi_matrix(roots))
    return KernelBasis(tuple(tuple(r) for r in K), tuple(roots), tuple(d))


# --------------------------------------------------------- functionals


def pairing_matrix(roots: Sequence[Root]) -> list[list[int]]:
    """``A[k][s] = <r_k, l_s>``."""
    lines = enumerate_lines()
    return [[pairing(r.vec, l.vec) for l in lines] for r in roots]


def edge_functionals(tree: CoverTree, kb: KernelBasis, base: str | None = None) -> list[list[tuple[int, ...]]]:
    """``F[i][s]`` is the functional ``(e_i^s)^*`` on Ker(phi) in the kernel basis.

    Its value on a kernel vector ``n`` is
    ``sum_k n_k <r_k, l_s> <p(R_k), e_i^*>``.
    """
    P = tree.path_matrix(base)
    A = pairing_matrix(kb.roots)
    out = []
    for i in range(N_EDGES):
        per_sheet = []
        for s in range(27):
            per_sheet.append(tuple(
                sum(n[k] * A[k][s] * P[k][i] for k in range(N_ROOTS) if n[k])
                for n in kb.basis
            ))
        out.append(per_sheet)
    return out


def monodromy_matrices(funcs: list[list[tuple[int, ...]]]) -> list[list[list[int]]]:
    """``M_i = sum_s f f^T`` for the functionals ``f`` over edge ``i``."""
    Ms = []
    for per_sheet in funcs:
        n = len(per_sheet[0])
        M = [[0] * n for _ in range(n)]
        for f in per_sheet:
            if not any(f):
                continue
            for a in range(n):
                if f[a]:
                    for b in range(n):
                        M[a][b] += f[a] * f[b]
        Ms.append(M)
    return Ms


def normalize(Ms: list[list[list[int]]], factor: int = 6) -> list[list[list[int]]]:
    """Divide every form by ``factor``; a remainder is an internal error."""
    out = []
    for i, M in enumerate(Ms):
        if any(x % factor for row in M for x in row):
            raise ArithmeticError(f"M_{i} is not divisible by {factor}")
        out.append([[x // factor for x in row] for row in M])
    return out


def sym2_coordinates(M: Sequence[Sequence[int]]) -> list[int]:
    """``(m11, ..., m66, m12, m13, ..., m56)``: diagonal first, then ``i < j`` once."""
    n = len(M)
    return [M[i][i] for i in range(n)] + [M[i][j] for i in range(n) for j in range(i + 1, n)]


def independence_determinant(Ms: list[list[list[int]]]) -> int:
    return int(determinant([sym2_coordinates(M) for M in Ms]))


# ---------------------------------------------------------- the graph


@dataclass(frozen=True)
class DualGraph:
    """The graph Γ': 27 vertices (lines) and 6 edges per root, directed from
    the line with pairing +1 to the line with pairing -1."""

    edges: tuple[tuple[int, int, int], ...]  # (root index, tail, head)

    @property
    def n_vertices(self) -> int:
        return 27

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        adj: dict[int, list[int]] = {v: [] for v in range(27)}
        for _, a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == 27

    def genus(self) -> int:
        components = 1 if self.is_connected() else None
        if components is None:
            raise ValueError("graph is disconnected")
        return self.n_edges - self.n_vertices + components


def dual_graph(roots: Sequence[Root]) -> DualGraph:
    edges = []
    for k, r in enumerate(roots):
        for a, b in double_six(r):
            edges.append((k, a, b))
    return DualGraph(tuple(edges))


def root_block(r: Root) -> list[list[Fraction]]:
    """Matrix of the induced correspondence on the six edges over ``r``.

    Column ``j`` expresses ``D'(b_j - a_j)`` in terms of the boundaries
    ``b_k - a_k`` of the six edges; it is solved for, not assumed.
    """
    D = build_incidence()
    pairs = double_six(r)
    bnd = []
    for a, b in pairs:
        v = [0] * 27
        v[b] += 1
        v[a] -= 1
        bnd.append(v)
    cols = []
    for v in bnd:
        target = D.apply(v)
        # solve sum_k x_k bnd[k] = target
        rows = [[bnd[k][s] for k in range(6)] + [-target[s]] for s in range(27)]
        sol = nullspace(rows, 7)
        sol = [x for x in sol if x[6] != 0]
        if len(sol) != 1:
            raise ArithmeticError("D' does not preserve the edges over a root")
        x = sol[0]
        cols.append([x[k] / x[6] for k in range(6)])
    return [[cols[j][i] for j in range(6)] for i in range(6)]


def block_relation_holds(N: Sequence[Sequence[Fraction]]) -> bool:
    """``(N - 1)(N + 5) = 0``."""
    n = len(N)
    A = [[N[i][j] - (i == j) for j in range(n)] for i in range(n)]
    B = [[N[i][j] + 5 * (i == j) for j in range(n)] for i in range(n)]
    return all(x == 0 for row in matmul(A, B) for x in row)


# ------------------------------------------------------------- pipeline


@dataclass
class MonodromyResult:
    roots: tuple[Root, ...]
    tree: CoverTree
    kernel: KernelBasis
    functionals: list[list[tuple[int, ...]]] = field(repr=False)
    matrices: list[list[list[int]]] = field(repr=False)
    normalized: list[list[list[int]]] = field(repr=False)
    determinant: int
    divisible_by_6: bool

    @property
    def dominant(self) -> bool:
        return self.determinant != 0

    def to_json(self) -> dict:
        return {
            "roots": [r.token for r in self.roots],
            "tree": self.tree.to_json(),
            "kernel_basis": [list(r) for r in self.kernel.basis],
            "normalized_forms": self.normalized,
            "divisible_by_6": self.divisible_by_6,
            "determinant": self.determinant,
            "abs_determinant": abs(self.determinant),
            "certificate": "PASS" if self.dominant else "FAIL",
        }


def monodromy(roots: Sequence[Root], tree: CoverTree | None = None,
              kernel: KernelBasis | None = None) -> MonodromyResult:
    """Run the whole computation for 12 roots."""
    tree = tree or build_tree()
    kb = kernel or kernel_basis(roots)
    funcs = edge_functionals(tree, kb)
    Ms = monodromy_matrices(funcs)
    divisible = all(x % 6 == 0 for M in Ms for row in M for x in row)
    normalized = normalize(Ms) if divisible else Ms
    det = independence_determinant(normalized) if divisible else 0
    return MonodromyResult(tuple(roots), tree, kb, funcs, Ms, normalized, det, divisible)
