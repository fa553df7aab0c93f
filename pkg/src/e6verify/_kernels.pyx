# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled permutation kernels.

Same contract as ``_kernels_py``: permutations are ``bytes`` with
``p[i]`` the image of ``i`` and ``compose(p, q)[i] == p[q[i]]``.
"""
from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"


cdef inline bytes _compose(const unsigned char* p, const unsigned char* q, Py_ssize_t n):
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* o = <unsigned char*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = p[q[i]]
    return out


def compose(bytes p, bytes q):
    """Return ``p o q`` (apply ``q`` first)."""
    if len(p) != len(q):
        raise ValueError("permutations of different degree")
    return _compose(<const unsigned char*> PyBytes_AS_STRING(p),
                    <const unsigned char*> PyBytes_AS_STRING(q), len(p))


def inverse(bytes p):
    cdef Py_ssize_t n = len(p), i
    cdef const unsigned char* s = <const unsigned char*> PyBytes_AS_STRING(p)
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* o = <unsigned char*> PyBytes_AS_STRING(out)
    for i in range(n):
        o[s[i]] = <unsigned char> i
    return out


def identity(Py_ssize_t n):
    return bytes(range(n))


def closure(gens):
    """All elements of the group generated by ``gens``, in BFS order."""
    if not gens:
        raise ValueError("closure needs at least one generator")
    cdef Py_ssize_t n = len(gens[0])
    cdef Py_ssize_t ng = len(gens), k, head = 0
    cdef list glist = [bytes(g) for g in gens]
    cdef bytes e = bytes(range(n))
    cdef set seen = {e}
    cdef list order = [e]
    cdef bytes x, y
    while head < len(order):
        x = <bytes> order[head]
        head += 1
        for k in range(ng):
            y = _compose(<const unsigned char*> PyBytes_AS_STRING(<bytes> glist[k]),
                         <const unsigned char*> PyBytes_AS_STRING(x), n)
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


def conjugacy_partition(elements, gens):
    """Class id for every element, classes numbered by first appearance."""
    cdef Py_ssize_t m = len(elements), ng = len(gens), start, k, idx
    cdef dict index = {x: i for i, x in enumerate(elements)}
    cdef list gl = [bytes(g) for g in gens]
    cdef list gi = [inverse(bytes(g)) for g in gens]
    cdef list label = [-1] * m
    cdef list stack
    cdef Py_ssize_t current = 0
    cdef bytes x, t, y
    cdef Py_ssize_t n = len(elements[0]) if m else 0
    for start in range(m):
        if label[start] >= 0:
            continue
        label[start] = current
        stack = [elements[start]]
        while stack:
            x = <bytes> stack.pop()
            for k in range(ng):
                t = _compose(<const unsigned char*> PyBytes_AS_STRING(x),
                             <const unsigned char*> PyBytes_AS_STRING(<bytes> gi[k]), n)
                y = _compose(<const unsigned char*> PyBytes_AS_STRING(<bytes> gl[k]),
                             <const unsigned char*> PyBytes_AS_STRING(t), n)
                idx = index[y]
                if label[idx] < 0:
                    label[idx] = current
                    stack.append(y)
        current += 1
    return label


def cycle_type(bytes p):
    """Cycle lengths (fixed points included) in non-increasing order."""
    cdef Py_ssize_t n = len(p), i, j, length
    cdef const unsigned char* s = <const unsigned char*> PyBytes_AS_STRING(p)
    cdef unsigned char* seen = <unsigned char*> malloc(n if n else 1)
    cdef list lengths = []
    if seen == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            seen[i] = 0
        for i in range(n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = 1
                j = s[j]
                length += 1
            lengths.append(length)
    finally:
        free(seen)
    lengths.sort(reverse=True)
    return tuple(lengths)


def cycles(bytes p):
    cdef Py_ssize_t n = len(p), i, j
    cdef const unsigned char* s = <const unsigned char*> PyBytes_AS_STRING(p)
    cdef bytearray seen = bytearray(n)
    cdef list out = []
    cdef list cyc
    for i in range(n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = 1
            cyc.append(j)
            j = s[j]
        out.append(tuple(cyc))
    return out


def orbits(gens, Py_ssize_t n):
    """Orbits of the group generated by ``gens`` on ``{0..n-1}``, sorted."""
    cdef list parent = list(range(n))
    cdef Py_ssize_t i, a, b
    cdef bytes g

    def find(Py_ssize_t a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for i in range(n):
            a = find(i)
            b = find(g[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    cdef dict blocks = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    return sorted(tuple(bl) for bl in blocks.values())
