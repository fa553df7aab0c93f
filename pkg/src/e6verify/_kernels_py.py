"""Pure-Python permutation kernels.

Permutations of ``{0, ..., n-1}`` are stored as ``bytes`` of length ``n``
(``n <= 256``), with ``p[i]`` the image of ``i``.  Composition reads right to
left: ``compose(p, q)[i] == p[q[i]]``.  This module is the reference
implementation; the compiled ``_kernels`` extension must agree with it
element for element.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

IMPLEMENTATION = "python"


def _table(p: bytes) -> bytes:
    return p + bytes(range(len(p), 256))


def compose(p: bytes, q: bytes) -> bytes:
    """Return ``p o q`` (apply ``q`` first)."""
    return q.translate(_table(p))


def inverse(p: bytes) -> bytes:
    out = bytearray(len(p))
    for i, j in enumerate(p):
        out[j] = i
    return bytes(out)


def identity(n: int) -> bytes:
    return bytes(range(n))


def closure(gens: Sequence[bytes]) -> list[bytes]:
    """All elements of the group generated by ``gens``, in BFS order.

    The identity comes first; each later element is ``g o x`` for a
    generator ``g`` and an earlier element ``x``.
    """
    if not gens:
        raise ValueError("closure needs at least one generator")
    n = len(gens[0])
    tables = [_table(g) for g in gens]
    e = identity(n)
    seen = {e}
    order = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for t in tables:
            y = x.translate(t)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def conjugacy_partition(elements: Sequence[bytes], gens: Sequence[bytes]) -> list[int]:
    """Class id for every element, classes numbered by first appearance.

    Two elements are conjugate iff they are linked by a chain of
    conjugations ``x -> g x g^-1`` with ``g`` among the generators, which
    holds whenever ``gens`` generates the group containing ``elements``.
    """
    index = {x: i for i, x in enumerate(elements)}
    pairs = [(_table(g), inverse(g)) for g in gens]
    label = [-1] * len(elements)
    current = 0
    for start in range(len(elements)):
        if label[start] >= 0:
            continue
        label[start] = current
        stack = [elements[start]]
        while stack:
            x = stack.pop()
            for t, ginv in pairs:
                # g x g^-1: apply g^-1, then x, then g
                y = ginv.translate(_table(x)).translate(t)
                k = index[y]
                if label[k] < 0:
                    label[k] = current
                    stack.append(y)
        current += 1
    return label


def cycle_type(p: bytes) -> tuple[int, ...]:
    """Cycle lengths (fixed points included) in non-increasing order."""
    n = len(p)
    seen = bytearray(n)
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def cycles(p: bytes) -> list[tuple[int, ...]]:
    """The cycles of ``p`` (fixed points included), each starting at its minimum."""
    n = len(p)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = 1
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def orbits(gens: Sequence[bytes], n: int) -> list[tuple[int, ...]]:
    """Orbits of the group generated by ``gens`` on ``{0..n-1}``, sorted."""
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for i in range(n):
            a, b = find(i), find(g[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    return sorted(tuple(b) for b in blocks.values())
