"""W(E6) as a permutation group on the 27 lines.

Elements are stored as 27-byte permutations of the canonical line order.
The group is enumerated by breadth-first closure over the 36 reflections;
conjugacy classes are found by closing each element under conjugation by the
reflections, and are then named by matching invariants against the printed
tables.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import NotARootError
from .lattice import (
    F,
    LatticeVector,
    Root,
    SIMPLE_ROOTS,
    as_root,
    e6_coordinates,
    enumerate_lines,
    is_root,
    line_index,
    line_labels,
    pairing,
    positive_roots,
)
from .linalg import rank
from .tables import CLASS_ORDER, TABLE1, TABLE2, class_order_of, partition_str

N_LINES = 27


@dataclass(frozen=True)
class WeylElement:
    """A permutation of the 27 lines induced by an element of W(E6).

    ``perm[s]`` is the index of the image of line ``s``.
    """

    perm: bytes

    def __post_init__(self) -> None:
        if len(self.perm) != N_LINES:
            raise ValueError("a Weyl element permutes exactly 27 lines")

    @classmethod
    def identity(cls) -> "WeylElement":
        return cls(kernels.identity(N_LINES))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """``(self * other)`` applies ``other`` first."""
        return WeylElement(kernels.compose(self.perm, other.perm))

    def inverse(self) -> "WeylElement":
        return WeylElement(kernels.inverse(self.perm))

    def __pow__(self, k: int) -> "WeylElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = WeylElement.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "WeylElement") -> "WeylElement":
        """``g self g^-1``."""
        return g * self * g.inverse()

    @cached_property
    def cycle_type(self) -> tuple[int, ...]:
        return kernels.cycle_type(self.perm)

    @property
    def cycles(self) -> list[tuple[int, ...]]:
        return kernels.cycles(self.perm)

    @property
    def order(self) -> int:
        return lcm(*self.cycle_type)

    def is_identity(self) -> bool:
        return self.perm == kernels.identity(N_LINES)

    def act(self, v: LatticeVector) -> LatticeVector:
        """Image of a lattice vector.

        The lines a1..a6 and c12 span I^{1,6} (``f0 = c12 + a1 + a2``), so
        the permutation determines the linear action.
        """
        lines = enumerate_lines()
        p = self.perm
        img_f = [lines[p[line_index("c12")]].vec + lines[p[0]].vec + lines[p[1]].vec]
        img_f += [lines[p[i]].vec for i in range(6)]
        out = LatticeVector((0,) * 7)
        for c, w in zip(v.coords, img_f):
            if c:
                out = out + c * w
        return out

    @cached_property
    def matrix6(self) -> tuple[tuple[int, ...], ...]:
        """6x6 integer matrix on E6 in the basis r1..r6 (columns are images)."""
        cols = [e6_coordinates(self.act(s.vec)) for s in SIMPLE_ROOTS]
        return tuple(tuple(cols[j][i] for j in range(6)) for i in range(6))

    @cached_property
    def inv_dim(self) -> int:
        """dim (E6 (x) Q)^w, by rank-nullity on ``matrix6 - I``."""
        M = self.matrix6
        return 6 - rank([[M[i][j] - (i == j) for j in range(6)] for i in range(6)])

    @property
    def det(self) -> int:
        """Determinant on E6: +1 for even words in reflections, -1 for odd."""
        from .linalg import determinant

        return int(determinant(self.matrix6))

    def permutation_matrix(self) -> list[list[int]]:
        """``P`` with ``P[perm[s]][s] = 1``, i.e. ``P e_s = e_{perm(s)}``."""
        P = [[0] * N_LINES for _ in range(N_LINES)]
        for s, t in enumerate(self.perm):
            P[t][s] = 1
        return P

    def cycle_notation(self) -> str:
        labels = line_labels()
        parts = [c for c in self.cycles if len(c) > 1]
        if not parts:
            return "()"
        return "".join("(" + " ".join(labels[i] for i in c) + ")" for c in parts)

    def __repr__(self) -> str:
        return f"WeylElement({self.cycle_notation()})"


def invariant_dim(w: WeylElement) -> int:
    return w.inv_dim


def reflection(r: Root | LatticeVector) -> WeylElement:
    """The reflection ``v -> v + (v, r) r`` as a permutation of the lines."""
    v = r.vec if isinstance(r, Root) else r
    if not is_root(v):
        raise NotARootError(f"{v} is not a root of E6")
    lines = enumerate_lines()
    return WeylElement(bytes(line_index(l.vec + pairing(l.vec, v) * v) for l in lines))


def word(roots: Iterable[Root]) -> WeylElement:
    """Product ``w_{r1} w_{r2} ... w_{rk}`` (rightmost applied first)."""
    out = WeylElement.identity()
    for r in roots:
        out = out * reflection(r)
    return out


@lru_cache(maxsize=None)
def all_reflections() -> tuple[WeylElement, ...]:
    """The 36 reflections, one per pair of opposite roots."""
    return tuple(reflection(r) for r in positive_roots())


class Group:
    """A finite permutation group stored as the full list of its elements."""

    def __init__(self, elements: list[bytes], generators: list[bytes]):
        self._elements = elements
        self.generators = generators
        self._index: dict[bytes, int] | None = None

    def __len__(self) -> int:
        return len(self._elements)

    @property
    def order(self) -> int:
        return len(self._elements)

    @property
    def raw(self) -> list[bytes]:
        return self._elements

    @property
    def index(self) -> dict[bytes, int]:
        if self._index is None:
            self._index = {x: i for i, x in enumerate(self._elements)}
        return self._index

    def __contains__(self, w: WeylElement | bytes) -> bool:
        key = w.perm if isinstance(w, WeylElement) else w
        return key in self.index

    def __iter__(self) -> Iterator[WeylElement]:
        return (WeylElement(x) for x in self._elements)

    def __getitem__(self, i: int) -> WeylElement:
        return WeylElement(self._elements[i])


def generate_group(gens: Sequence[WeylElement]) -> Group:
    """Closure of ``gens`` under composition."""
    if not gens:
        raise ValueError("generate_group needs at least one generator")
    raw = [g.perm for g in gens]
    return Group(kernels.closure(raw), raw)


@lru_cache(maxsize=1)
def full_group() -> Group:
    """W(E6), generated by the 36 reflections (51840 elements)."""
    return generate_group(all_reflections())


# ------------------------------------------------------------ conjugacy


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class of W(E6) with its invariants."""

    name: str
    order: int
    cycle_type: tuple[int, ...]
    inv_dim: int
    size: int
    representative: WeylElement = field(compare=False, repr=False)
    det: int = 1

    @property
    def partition(self) -> str:
        return partition_str(self.cycle_type)

    @property
    def lcm(self) -> int:
        return lcm(*self.cycle_type)

    @property
    def inv_mu(self) -> Fraction:
        return sum((Fraction(1, m) for m in self.cycle_type), Fraction(0))

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "cycle_type": self.partition,
            "inv_dim": self.inv_dim,
            "size": self.size,
            "det": self.det,
            "representative": self.representative.cycle_notation(),
        }


def class_key(w: WeylElement) -> tuple:
    """Invariants that separate all 25 classes.

    Cycle type and invariant dimension alone do not: two classes share
    cycle type 6^4 3 with no invariant vector.  Their squares lie in
    different classes of elements of order 3, so the invariant dimensions of
    ``w^2`` and ``w^3`` are added.
    """
    return (w.cycle_type, w.inv_dim, (w ** 2).inv_dim, (w ** 3).inv_dim)


@dataclass(frozen=True)
class LabelNote:
    name: str
    message: str


@dataclass
class ClassTable:
    """The 25 classes with the notes produced while naming them."""

    classes: list[ConjClass]
    notes: list[LabelNote]

    @cached_property
    def _by_key(self) -> dict[tuple, ConjClass]:
        return {class_key(c.representative): c for c in self.classes}

    def lookup(self, w: WeylElement) -> ConjClass:
        try:
            return self._by_key[class_key(w)]
        except KeyError:
            raise LookupError("element does not belong to W(E6)") from None

    def by_name(self, name: str) -> ConjClass:
        for c in self.classes:
            if c.name == name:
                return c
        raise KeyError(name)

    def __iter__(self) -> Iterator[ConjClass]:
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def _table_parities() -> dict[str, int]:
    """+1 for classes reached by an even number of reflections, else -1."""
    return {row.name: (1 if row.counts[0] % 2 == 0 else -1) for row in TABLE1}


def _name_classes(raw: list[tuple[WeylElement, int]]) -> tuple[list[ConjClass], list[LabelNote]]:
    """Attach table names to computed classes ``(representative, size)``.

    Pass 1 matches (order, cycle type, invariant dimension) against the
    printed partitions and Table 2.  Classes left over (because a printed
    partition is wrong, or because two classes share the key) are matched
    within the same (order, invariant dimension, parity) by increasing class
    size, the usual character-table convention for ordering classes of equal
    element order.
    """
    parity = _table_parities()
    printed = {row.name: row.partition for row in TABLE1}
    expected = {name: (class_order_of(name), printed[name], TABLE2[name]) for name in CLASS_ORDER}
    computed = []
    for rep, size in raw:
        computed.append((rep, size, (rep.order, rep.cycle_type, rep.inv_dim), rep.det))

    notes: list[LabelNote] = []
    assigned: dict[int, str] = {}
    free_names = set(CLASS_ORDER)
    for k, (rep, size, key, det) in enumerate(computed):
        names = [n for n in free_names if expected[n] == key and parity[n] == det]
        others = [j for j, c in enumerate(computed) if c[2] == key and c[3] == det]
        if len(names) == 1 and len(others) == 1:
            assigned[k] = names[0]
            free_names.discard(names[0])

    leftovers = [k for k in range(len(computed)) if k not in assigned]
    groups: dict[tuple, list[int]] = {}
    for k in leftovers:
        rep, size, key, det = computed[k]
        groups.setdefault((key[0], key[2], det), []).append(k)
    for (order, inv, det), ks in sorted(groups.items()):
        names = sorted(
            (n for n in free_names if class_order_of(n) == order and TABLE2[n] == inv and parity[n] == det),
            key=CLASS_ORDER.index,
        )
        if len(names) != len(ks):
            raise RuntimeError(f"cannot name classes of order {order} with inv_dim {inv}")
        ks = sorted(ks, key=lambda k: (computed[k][1], computed[k][0].perm))
        for k, n in zip(ks, names):
            assigned[k] = n
            free_names.discard(n)
            rep = computed[k][0]
            if printed[n] != rep.cycle_type:
                notes.append(
                    LabelNote(n, f"printed partition {partition_str(printed[n])} but the class has "
                                 f"cycle type {partition_str(rep.cycle_type)}")
                )
            else:
                notes.append(LabelNote(n, "named by class size among classes with equal "
                                          "(order, cycle type, inv_dim)"))

    classes = [
        ConjClass(assigned[k], rep.order, rep.cycle_type, rep.inv_dim, size, rep, det)
        for k, (rep, size, key, det) in enumerate(computed)
    ]
    classes.sort(key=lambda c: CLASS_ORDER.index(c.name))
    return classes, notes


@lru_cache(maxsize=2)
def conjugacy_classes(fast: bool = False) -> ClassTable:
    """The 25 conjugacy classes of W(E6).

    Full mode partitions all 51840 elements; representatives are the
    lexicographically smallest permutation in each class.  Fast mode walks
    products of reflections and identifies classes by :func:`class_key`,
    taking sizes from the orbit of one representative under conjugation.
    """
    if fast:
        raw = _classes_fast()
    else:
        G = full_group()
        labels = kernels.conjugacy_partition(G.raw, G.generators)
        members: dict[int, list[bytes]] = {}
        for x, c in zip(G.raw, labels):
            members.setdefault(c, []).append(x)
        raw = [(WeylElement(min(xs)), len(xs)) for xs in members.values()]
    classes, notes = _name_classes(raw)
    return ClassTable(classes, notes)


def _conjugacy_orbit(x: bytes) -> set[bytes]:
    gens = [g.perm for g in all_reflections()]
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for g in gens:
            z = kernels.compose(g, kernels.compose(y, g))  # reflections are involutions
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return seen


def _classes_fast() -> list[tuple[WeylElement, int]]:
    refl = all_reflections()
    found: dict[tuple, WeylElement] = {}
    frontier = [WeylElement.identity()]
    found[class_key(frontier[0])] = frontier[0]
    for _ in range(6):
        nxt = []
        for x in frontier:
            for r in refl:
                y = x * r
                key = class_key(y)
                if key not in found:
                    found[key] = y
                    nxt.append(y)
        frontier = nxt
    out = []
    for rep in found.values():
        orbit = _conjugacy_orbit(rep.perm)
        out.append((WeylElement(min(orbit)), len(orbit)))
    return out


def classify(w: WeylElement, table: ClassTable | None = None) -> ConjClass:
    """Conjugacy class of an arbitrary element, by invariant lookup."""
    table = table or conjugacy_classes()
    return table.lookup(w)


def reflection_products_table(table: ClassTable | None = None, max_count: int = 6) -> dict[int, set[str]]:
    """Classes containing a product of exactly ``i`` reflections, ``i = 0..max_count``.

    Class-level breadth-first search: because the reflections form a union
    of conjugacy classes, one representative per class multiplied by all 36
    reflections reaches every class of products of one more reflection.
    """
    table = table or conjugacy_classes()
    refl = all_reflections()
    current = {table.by_name("1a").name: table.by_name("1a").representative}
    result = {0: set(current)}
    for i in range(1, max_count + 1):
        nxt: dict[str, WeylElement] = {}
        for rep in current.values():
            for r in refl:
                c = classify(rep * r, table)
                nxt.setdefault(c.name, c.representative)
        result[i] = set(nxt)
        current = nxt
    return result


def relation(r: Root, s: Root) -> str:
    """``"syzygetic"`` if ``(r, s) = 0``, ``"azygetic"`` if ``(r, s) = +-1``,
    ``"equal"`` if ``s = +-r``."""
    r, s = as_root(r.vec if isinstance(r, Root) else r), as_root(s.vec if isinstance(s, Root) else s)
    p = pairing(r.vec, s.vec)
    if p == 0:
        return "syzygetic"
    if abs(p) == 1:
        return "azygetic"
    return "equal"


is_syzygetic = relation


def incidence_preserved(w: WeylElement) -> bool:
    """True iff ``(l_s, l_t) = (l_w(s), l_w(t))`` for all pairs of lines."""
    lines = enumerate_lines()
    p = w.perm
    for s in range(N_LINES):
        for t in range(s, N_LINES):
            if pairing(lines[s].vec, lines[t].vec) != pairing(lines[p[s]].vec, lines[p[t]].vec):
                return False
    return True


def gram_preserved(w: WeylElement) -> bool:
    from .lattice import e6_gram

    M = w.matrix6
    G = e6_gram()
    for i in range(6):
        for j in range(6):
            v = sum(M[a][i] * G[a][b] * M[b][j] for a in range(6) for b in range(6))
            if v != G[i][j]:
                return False
    return True


def cycle_type_counter(w: WeylElement) -> Counter:
    return Counter(w.cycle_type)
