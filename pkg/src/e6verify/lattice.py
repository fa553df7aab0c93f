"""The odd unimodular lattice I^{1,6}, its E6 sublattice, roots and lines.

Vectors are written in the basis f0, f1, ..., f6 with the Lorentzian form
``(u, v) = u0*v0 - sum(ui*vi)``.  The canonical class is
``k = -3 f0 + f1 + ... + f6`` and E6 is its orthogonal complement.

Two finite sets matter: the 72 roots (square -2, orthogonal to k) and the 27
exceptional vectors ("lines", square -1 and ``(l, k) = -1``).  Both are
enumerated once in a fixed order and cached.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import NotARootError, ParseError

RANK = 7


@dataclass(frozen=True, slots=True)
class LatticeVector:
    """An element of I^{1,6} as seven integers in the basis f0..f6."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != RANK:
            raise ValueError(f"expected {RANK} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def of(cls, *coords: int) -> "LatticeVector":
        return cls(tuple(coords))

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.coords))

    def __mul__(self, c: int) -> "LatticeVector":
        return LatticeVector(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other: "LatticeVector") -> int:
        return pairing(self, other)

    def square(self) -> int:
        return pairing(self, self)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def pairing(u: LatticeVector, v: LatticeVector) -> int:
    """Lorentzian pairing ``u0 v0 - u1 v1 - ... - u6 v6``."""
    a, b = u.coords, v.coords
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3] - a[4] * b[4] - a[5] * b[5] - a[6] * b[6]


def basis_vector(i: int) -> LatticeVector:
    return LatticeVector(tuple(int(j == i) for j in range(RANK)))


F = tuple(basis_vector(i) for i in range(RANK))
K = LatticeVector((-3, 1, 1, 1, 1, 1, 1))


def _alpha_ij(i: int, j: int) -> LatticeVector:
    return F[i] - F[j]


def _alpha_ijk(i: int, j: int, k: int) -> LatticeVector:
    return F[0] - F[i] - F[j] - F[k]


ALPHA_MAX = LatticeVector((2, -1, -1, -1, -1, -1, -1))


@dataclass(frozen=True, slots=True)
class Root:
    """A root of E6 together with its label.

    ``kind`` is ``"ij"``, ``"ijk"`` or ``"max"``; ``indices`` holds the sorted
    subscripts and ``sign`` is +1 or -1.  The vector is authoritative; the
    label only drives printing.
    """

    vec: LatticeVector
    kind: str = field(compare=False)
    indices: tuple[int, ...] = field(compare=False)
    sign: int = field(default=1, compare=False)

    @property
    def name(self) -> str:
        body = "max" if self.kind == "max" else "".join(str(i) for i in self.indices)
        return ("-" if self.sign < 0 else "") + "α" + body

    @property
    def token(self) -> str:
        if self.kind == "max":
            body = "max"
        elif self.kind == "ij":
            body = "a:" + ",".join(str(i) for i in self.indices)
        else:
            body = "b:" + ",".join(str(i) for i in self.indices)
        return ("-" if self.sign < 0 else "") + body

    def __neg__(self) -> "Root":
        return Root(-self.vec, self.kind, self.indices, -self.sign)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Root({self.name})"


@dataclass(frozen=True, slots=True)
class Line:
    """One of the 27 exceptional vectors with its Schläfli label and index."""

    vec: LatticeVector
    label: str
    index: int

    def __str__(self) -> str:
        return self.label


@lru_cache(maxsize=None)
def enumerate_roots() -> tuple[Root, ...]:
    """All 72 roots, each label followed by its negative."""
    roots: list[Root] = []
    for i, j in combinations(range(1, 7), 2):
        r = Root(_alpha_ij(i, j), "ij", (i, j))
        roots += [r, -r]
    for i, j, k in combinations(range(1, 7), 3):
        r = Root(_alpha_ijk(i, j, k), "ijk", (i, j, k))
        roots += [r, -r]
    r = Root(ALPHA_MAX, "max", ())
    roots += [r, -r]
    return tuple(roots)


@lru_cache(maxsize=None)
def positive_roots() -> tuple[Root, ...]:
    return tuple(r for r in enumerate_roots() if r.sign > 0)


@lru_cache(maxsize=None)
def _root_lookup() -> dict[tuple[int, ...], Root]:
    return {r.vec.coords: r for r in enumerate_roots()}


@lru_cache(maxsize=None)
def root_index() -> dict[tuple[int, ...], int]:
    """Map from root coordinates to the position in :func:`enumerate_roots`."""
    return {r.vec.coords: n for n, r in enumerate(enumerate_roots())}


def is_root(v: LatticeVector) -> bool:
    return pairing(v, v) == -2 and pairing(v, K) == 0


def as_root(v: LatticeVector | Root) -> Root:
    """Return the labelled root equal to ``v``; raise if ``v`` is not a root."""
    if isinstance(v, Root):
        return v
    found = _root_lookup().get(v.coords)
    if found is None:
        raise NotARootError(f"{v} is not a root of E6")
    return found


@lru_cache(maxsize=None)
def enumerate_lines() -> tuple[Line, ...]:
    """The 27 lines in the order a1..a6, b1..b6, c12, c13, ..., c56."""
    total = sum(F[1:], LatticeVector((0,) * RANK))
    lines: list[Line] = []
    for i in range(1, 7):
        lines.append(Line(F[i], f"a{i}", len(lines)))
    for i in range(1, 7):
        lines.append(Line(2 * F[0] - total + F[i], f"b{i}", len(lines)))
    for i, j in combinations(range(1, 7), 2):
        lines.append(Line(F[0] - F[i] - F[j], f"c{i}{j}", len(lines)))
    return tuple(lines)


@lru_cache(maxsize=None)
def line_labels() -> tuple[str, ...]:
    return tuple(l.label for l in enumerate_lines())


@lru_cache(maxsize=None)
def _line_lookup() -> dict[tuple[int, ...], int]:
    return {l.vec.coords: l.index for l in enumerate_lines()}


def line_index(v: LatticeVector | str) -> int:
    """Index of a line given either its vector or its label."""
    if isinstance(v, str):
        try:
            return line_labels().index(v)
        except ValueError:
            raise KeyError(f"unknown line label {v!r}") from None
    return _line_lookup()[v.coords]


def root_line_pairings(r: Root | LatticeVector) -> tuple[int, ...]:
    """The 27 values ``(r, l_s)`` in canonical line order."""
    v = r.vec if isinstance(r, Root) else r
    return tuple(pairing(v, l.vec) for l in enumerate_lines())


def double_six(r: Root | LatticeVector) -> list[tuple[int, int]]:
    """The double-six of a root as six index pairs ``(a', b')``.

    ``a'`` runs over the lines with ``(r, a') = 1`` in canonical order and
    ``b' = a' + r`` is the partner with pairing -1.
    """
    v = r.vec if isinstance(r, Root) else r
    if not is_root(v):
        raise NotARootError(f"{v} is not a root of E6")
    lookup = _line_lookup()
    pairs = []
    for l in enumerate_lines():
        if pairing(v, l.vec) == 1:
            pairs.append((l.index, lookup[(l.vec + v).coords]))
    return pairs


# Simple roots r1..r6 and the extended root r0 = -alpha_max.  With these the
# Dynkin diagram has r4 at the branch point, r1, r3, r5 adjacent to it, and
# r0, r2, r6 at the ends of the three legs.
SIMPLE_ROOTS: tuple[Root, ...] = (
    Root(_alpha_ijk(1, 2, 3), "ijk", (1, 2, 3)),
    Root(_alpha_ij(1, 2), "ij", (1, 2)),
    Root(_alpha_ij(2, 3), "ij", (2, 3)),
    Root(_alpha_ij(3, 4), "ij", (3, 4)),
    Root(_alpha_ij(4, 5), "ij", (4, 5)),
    Root(_alpha_ij(5, 6), "ij", (5, 6)),
)
EXTENDED_ROOT: Root = -Root(ALPHA_MAX, "max", ())


def dynkin_root(i: int) -> Root:
    """``r0`` (the extended root) for ``i = 0``, otherwise the simple root ``r_i``."""
    if i == 0:
        return EXTENDED_ROOT
    if 1 <= i <= 6:
        return SIMPLE_ROOTS[i - 1]
    raise IndexError(f"no root r{i}")


@lru_cache(maxsize=None)
def e6_gram() -> tuple[tuple[int, ...], ...]:
    """Gram matrix of the simple roots (negative definite, -2 on the diagonal)."""
    return tuple(tuple(pairing(a.vec, b.vec) for b in SIMPLE_ROOTS) for a in SIMPLE_ROOTS)


@lru_cache(maxsize=None)
def _gram_inverse() -> tuple[int, tuple[tuple[int, ...], ...]]:
    """``(d, A)`` with ``A / d`` the inverse Gram matrix and ``A`` integral."""
    from .linalg import rref

    n = 6
    G = e6_gram()
    aug = [list(G[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    R, _ = rref(aug)
    inv = [row[n:] for row in R]
    d = 1
    for row in inv:
        for x in row:
            d = d * x.denominator // gcd(d, x.denominator)
    return d, tuple(tuple(int(x * d) for x in row) for row in inv)


def e6_coordinates(v: LatticeVector | Root) -> tuple[int, ...]:
    """Coordinates of a vector of E6 in the basis r1..r6.

    Raises ``ValueError`` when ``v`` is not in E6 (not orthogonal to k).
    """
    vec = v.vec if isinstance(v, Root) else v
    if pairing(vec, K) != 0:
        raise ValueError(f"{vec} is not orthogonal to k")
    rhs = [pairing(vec, s.vec) for s in SIMPLE_ROOTS]
    d, A = _gram_inverse()
    out = []
    for row in A:
        c, rem = divmod(sum(a * b for a, b in zip(row, rhs)), d)
        if rem:
            raise ValueError(f"{vec} is not in the E6 lattice")
        out.append(c)
    return tuple(out)


def from_e6_coordinates(c: Sequence[int]) -> LatticeVector:
    total = LatticeVector((0,) * RANK)
    for ci, s in zip(c, SIMPLE_ROOTS):
        total = total + ci * s.vec
    return total


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"^(?P<neg>-)?(?:(?P<kind>[ab]):(?P<idx>[0-9,\s]+)|(?P<max>max))$")
_TUPLE = re.compile(r"^\(\s*(-?\d+\s*(?:,\s*-?\d+\s*){6})\)$")


def parse_root(token: str, line: int | None = None, column: int | None = None) -> Root:
    """Parse one root token.

    Accepted forms: ``a:i,j`` (alpha_ij), ``b:i,j,k`` (alpha_ijk), ``max``,
    each with an optional leading ``-``, or a raw tuple ``(x0,...,x6)``.
    ``a:j,i`` with ``j > i`` is read as ``-alpha_ij``.
    """
    tok = token.strip()
    m = _TUPLE.match(tok)
    if m:
        coords = tuple(int(x) for x in m.group(1).split(","))
        try:
            return as_root(LatticeVector(coords))
        except NotARootError as exc:
            raise ParseError(str(exc), line, column) from None
    m = _TOKEN.match(tok)
    if not m:
        raise ParseError(f"malformed root token {token!r}", line, column)
    sign = -1 if m.group("neg") else 1
    if m.group("max"):
        r = Root(ALPHA_MAX, "max", ())
        return -r if sign < 0 else r
    try:
        idx = [int(x) for x in m.group("idx").split(",")]
    except ValueError:
        raise ParseError(f"malformed index list in {token!r}", line, column) from None
    if any(not 1 <= i <= 6 for i in idx):
        raise ParseError(f"indices must lie in 1..6 in {token!r}", line, column)
    if len(set(idx)) != len(idx):
        raise ParseError(f"repeated index in {token!r}", line, column)
    if m.group("kind") == "a":
        if len(idx) != 2:
            raise ParseError(f"'a:' needs exactly two indices in {token!r}", line, column)
        i, j = idx
        if i > j:
            i, j = j, i
            sign = -sign
        r = Root(_alpha_ij(i, j), "ij", (i, j))
    else:
        if len(idx) != 3:
            raise ParseError(f"'b:' needs exactly three indices in {token!r}", line, column)
        i, j, k = sorted(idx)
        r = Root(_alpha_ijk(i, j, k), "ijk", (i, j, k))
    return -r if sign < 0 else r


def parse_roots(text: str) -> list[Root]:
    """Parse whitespace/semicolon separated root tokens.

    ``#`` starts a comment.  Raw tuples may contain commas, so tokens are
    split on whitespace and ``;`` outside parentheses.
    """
    roots: list[Root] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        depth = 0
        start = None
        for col, ch in enumerate(body + " ", start=1):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    raise ParseError("unbalanced ')'", lineno, col)
            sep = depth == 0 and (ch.isspace() or ch == ";")
            if start is None and not sep:
                start = col
            elif start is not None and sep:
                roots.append(parse_root(body[start - 1 : col - 1], lineno, start))
                start = None
        if depth != 0:
            raise ParseError("unbalanced '('", lineno, None)
    return roots


def format_roots(roots: Iterable[Root]) -> str:
    return " ".join(r.token for r in roots)
