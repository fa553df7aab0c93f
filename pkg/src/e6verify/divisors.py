"""Exact Q-linear divisor class arithmetic for the E6 Hurwitz spaces.

Classes are sparse maps from symbol names to fractions.  Three bases are in
use and are kept apart by name:

* on the labelled Hurwitz space: ``E_0``, ``E_syz``, ``E_azy`` and
  ``E_{i:c}`` (``i`` branch points on one side, monodromy class ``c``);
* on the unlabelled space: the matching ``D_`` symbols;
* on the partial compactification ``G``: ``lambda``, ``lambda_m5`` (the
  (-5) Hodge eigenclass), ``lambda_p1``, ``gamma``, ``kappa1``, ``A``, ``B``,
  ``c1V``, ``n``, ``D_E6``, ``D_syz``, ``D_azy``.

Every identity in :func:`identity_ledger` is derived from a small set of
inputs (Table 1 data, the genus zero relations, GRR, the base point
relation) and compared with the stated class coefficient by coefficient.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .tables import TABLE1, TABLE1_FLAGGED_INV_MU, partition_str

Scalar = Union[int, Fraction]
G_HUR = 46  # genus of the E6 curves
N_BRANCH = 24


class CyclicRulesError(ValueError):
    """A substitution rule set refers back to itself."""


class DivisorClass(Mapping[str, Fraction]):
    """An element of a Q-vector space with named basis symbols."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[str, Scalar] | Iterable[tuple[str, Scalar]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[str, Fraction] = {}
        for k, v in items:
            c[k] = c.get(k, Fraction(0)) + Fraction(v)
        self._c = {k: v for k, v in c.items() if v != 0}
        self._hash: int | None = None

    @classmethod
    def symbol(cls, name: str) -> "DivisorClass":
        return cls({name: 1})

    @classmethod
    def zero(cls) -> "DivisorClass":
        return cls()

    # Mapping protocol
    def __getitem__(self, key: str) -> Fraction:
        return self._c[key]

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._c, key=_symbol_sort_key))

    def __len__(self) -> int:
        return len(self._c)

    def coeff(self, key: str) -> Fraction:
        return self._c.get(key, Fraction(0))

    # vector space
    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(list(self._c.items()) + list(other._c.items()))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass({k: -v for k, v in self._c.items()})

    def __mul__(self, s: Scalar) -> "DivisorClass":
        if not isinstance(s, (int, Fraction)):
            return NotImplemented
        return DivisorClass({k: v * s for k, v in self._c.items()})

    __rmul__ = __mul__

    def __truediv__(self, s: Scalar) -> "DivisorClass":
        return self * (1 / Fraction(s))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DivisorClass):
            return self._c == other._c
        if isinstance(other, int) and other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self._c

    def restrict(self, symbols: Iterable[str]) -> "DivisorClass":
        keep = set(symbols)
        return DivisorClass({k: v for k, v in self._c.items() if k in keep})

    def drop(self, symbols: Iterable[str]) -> "DivisorClass":
        gone = set(symbols)
        return DivisorClass({k: v for k, v in self._c.items() if k not in gone})

    def map_symbols(self, f) -> "DivisorClass":
        return DivisorClass([(f(k), v) for k, v in self._c.items()])

    def substitute(self, rules: Sequence[tuple[str, "DivisorClass"]]) -> "DivisorClass":
        return substitute(self, rules)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in self:
            v = self._c[k]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            coef = "" if a == 1 else f"{a} "
            parts.append(f"{sign} {coef}{k}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"DivisorClass({self})"

    def to_json(self) -> dict[str, str]:
        return {k: str(self._c[k]) for k in self}


_ORDER = ["lambda", "lambda_p1", "lambda_m5", "gamma", "kappa1", "A", "B", "c1V",
          "D_E6", "D_0", "D_syz", "D_azy", "E_0", "E_syz", "E_azy", "n"]


def _symbol_sort_key(s: str) -> tuple:
    if s in _ORDER:
        return (0, _ORDER.index(s), "")
    m = re.match(r"([A-Za-z]+)_\{(\d+):(\w+)\}", s)
    if m:
        return (1, m.group(1), int(m.group(2)), m.group(3))
    return (2, s, "")


def S(name: str) -> DivisorClass:
    """Shorthand for a single basis symbol."""
    return DivisorClass.symbol(name)


def substitute(target: DivisorClass, rules: Sequence[tuple[str, DivisorClass]]) -> DivisorClass:
    """Eliminate every rule symbol from ``target``.

    Rules are applied in the given order, repeatedly, until no left-hand side
    remains.  A rule set where a symbol can reach itself raises
    :class:`CyclicRulesError`; a rule ``x -> x`` is a no-op and allowed.
    """
    rules = [(k, v) for k, v in rules if not (len(v) == 1 and v.coeff(k) == 1)]
    lhs = {k for k, _ in rules}
    graph = {k: {s for s in v if s in lhs} for k, v in rules}
    state: dict[str, int] = {}

    def visit(k: str) -> None:
        if state.get(k) == 1:
            raise CyclicRulesError(f"substitution rules are cyclic through {k}")
        if state.get(k) == 2:
            return
        state[k] = 1
        for s in graph[k]:
            visit(s)
        state[k] = 2

    for k in graph:
        visit(k)
    cur = target
    while any(s in lhs for s in cur):
        for k, v in rules:
            c = cur.coeff(k)
            if c:
                cur = cur.drop([k]) + v * c
    return cur


def solve(equations: Sequence[DivisorClass], unknowns: Sequence[str]) -> dict[str, DivisorClass]:
    """Solve ``eq == 0`` for the given symbols in terms of all other symbols.

    Raises ``ValueError`` if the system does not determine every unknown.
    """
    rows = [dict(eq.items()) for eq in equations]
    pivots: dict[str, dict[str, Fraction]] = {}
    for u in unknowns:
        idx = next((i for i, r in enumerate(rows) if r.get(u)), None)
        if idx is None:
            raise ValueError(f"system does not determine {u}")
        r = rows.pop(idx)
        c = r[u]
        r = {k: v / c for k, v in r.items()}
        for other in rows + list(pivots.values()):
            f = other.get(u)
            if f:
                for k, v in r.items():
                    other[k] = other.get(k, Fraction(0)) - f * v
                    if other[k] == 0:
                        del other[k]
        pivots[u] = r
    return {u: -DivisorClass({k: v for k, v in r.items() if k != u}) for u, r in pivots.items()}


# ------------------------------------------------------------ Table 1


@dataclass(frozen=True)
class BoundaryIndex:
    """A boundary divisor ``E_{i:mu}``: ``i`` branch points on one side, monodromy class ``cls``."""

    i: int
    mu: tuple[int, ...]
    cls: str
    printed_inv_mu: Fraction

    @property
    def lcm(self) -> int:
        return lcm(*self.mu)

    @property
    def inv_mu(self) -> Fraction:
        return sum((Fraction(1, m) for m in self.mu), Fraction(0))

    @property
    def inv_mu_matches_print(self) -> bool:
        return self.inv_mu == self.printed_inv_mu

    @property
    def e_symbol(self) -> str:
        if self.i == 2:
            return {"1a": "E_0", "2b": "E_syz", "3b": "E_azy"}[self.cls]
        return f"E_{{{self.i}:{self.cls}}}"

    @property
    def d_symbol(self) -> str:
        return "D" + self.e_symbol[1:]

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "class": self.cls,
            "mu": partition_str(self.mu),
            "lcm": self.lcm,
            "inv_mu": str(self.inv_mu),
            "printed_inv_mu": str(self.printed_inv_mu),
        }


def _reflection_counts(counts: tuple[int, ...], i: int) -> bool:
    # Products of more than six reflections reach the same classes as the
    # last listed count of the same parity.
    return i in counts or (i > max(counts) and (i - max(counts)) % 2 == 0)


@lru_cache(maxsize=None)
def table1() -> tuple[BoundaryIndex, ...]:
    """All ``(i, mu)`` with ``2 <= i <= 12``, with ``lcm`` and ``1/mu`` recomputed."""
    out = []
    for i in range(2, 13):
        for row in TABLE1:
            if _reflection_counts(row.counts, i):
                out.append(BoundaryIndex(i, row.partition, row.name, row.printed_inv_mu))
    return tuple(out)


def inv_mu_discrepancies() -> dict[str, tuple[Fraction, Fraction]]:
    """Per class: (printed, recomputed) where they differ."""
    out = {}
    for row in TABLE1:
        calc = sum((Fraction(1, m) for m in row.partition), Fraction(0))
        if calc != row.printed_inv_mu:
            out[row.name] = (row.printed_inv_mu, calc)
    return out


def flagged_inv_mu_ok() -> bool:
    """The two pre-flagged rows recompute to the expected corrected values."""
    d = inv_mu_discrepancies()
    return all(name in d and d[name][1] == v for name, v in TABLE1_FLAGGED_INV_MU.items())


# ------------------------------------------------- genus zero inputs


def _w(i: int) -> Fraction:
    return Fraction(i * (N_BRANCH - i), N_BRANCH - 1)


def m024_psi_sum() -> DivisorClass:
    """``sum psi_j = sum_i i(24-i)/23 B_i`` on the moduli of 24-pointed rational curves."""
    return DivisorClass({f"B_{i}": _w(i) for i in range(2, 13)})


def m024_kappa1() -> DivisorClass:
    """``kappa_1 = sum_i (i-1)(23-i)/23 B_i``."""
    return DivisorClass({f"B_{i}": Fraction((i - 1) * (23 - i), 23) for i in range(2, 13)})


def m024_canonical() -> DivisorClass:
    """``K = sum_i (i(24-i)/23 - 2) B_i``."""
    return DivisorClass({f"B_{i}": _w(i) - 2 for i in range(2, 13)})


def pullback_b(cls: DivisorClass) -> DivisorClass:
    """Pull back along the branch morphism: ``B_i -> sum_mu lcm(mu) E_{i:mu}``."""
    out = DivisorClass()
    for sym, c in cls.items():
        m = re.fullmatch(r"B_(\d+)", sym)
        if not m:
            raise ValueError(f"{sym} is not a genus zero boundary symbol")
        i = int(m.group(1))
        out = out + DivisorClass({b.e_symbol: b.lcm for b in table1() if b.i == i}) * c
    return out


def ramification_b() -> DivisorClass:
    return DivisorClass({b.e_symbol: b.lcm - 1 for b in table1()})


def sum_all_e() -> DivisorClass:
    return DivisorClass({b.e_symbol: 1 for b in table1()})


# ---------------------------------------------- labelled Hurwitz space


def pb_b2() -> DivisorClass:
    """Pullback of ``B_2``."""
    return pullback_b(S("B_2"))


def mumford_kappa() -> DivisorClass:
    """``v_* c_1(omega)^2``: the square of ``f~*c_1(omega_pi) + R`` pushed forward.

    ``27(kappa_1 - sum psi) + 2*6*sum psi - 3*sum psi`` on the base, pulled back.
    """
    base = (m024_kappa1() - m024_psi_sum()) * 27 + m024_psi_sum() * 12 - m024_psi_sum() * 3
    return pullback_b(base)


def hodge_class() -> DivisorClass:
    """``12 lambda = v_* c_1(omega)^2 + sum lcm(mu) (1/mu) E_{i:mu}``."""
    corr = DivisorClass({b.e_symbol: b.lcm * b.inv_mu for b in table1()})
    return (mumford_kappa() + corr) / 12


def hodge_class_formula() -> DivisorClass:
    """The closed formula ``(1/12) lcm (9 i(24-i)/23 - 27 + 1/mu)`` per divisor."""
    return DivisorClass({
        b.e_symbol: Fraction(b.lcm, 12) * (9 * _w(b.i) - 27 + b.inv_mu) for b in table1()
    })


def canonical_H() -> DivisorClass:
    """Hurwitz formula for the branch morphism."""
    return pullback_b(m024_canonical()) + ramification_b()


def generic_K_coefficient(b: BoundaryIndex) -> Fraction:
    return b.lcm * (_w(b.i) - 1) - 1


def q_pullback_multiplicity(e_symbol: str) -> int:
    """``q^* D = 2E`` for ``E_0`` and ``E_azy``, ``E`` otherwise."""
    return 2 if e_symbol in ("E_0", "E_azy") else 1


def descend_to_hur(cls: DivisorClass) -> DivisorClass:
    """Rewrite a pulled-back class in the ``D`` symbols: ``q^* D = m E`` turns
    ``c E`` into ``(c/m) D``."""
    return DivisorClass({("D" + k[1:]): v / q_pullback_multiplicity(k) for k, v in cls.items()})


def canonical_Hur() -> DivisorClass:
    """``q^* K = K_H - E_0 - E_azy``, rewritten in the ``D`` symbols."""
    return descend_to_hur(canonical_H() - S("E_0") - S("E_azy"))


def hodge_class_hur() -> DivisorClass:
    return descend_to_hur(hodge_class())


def to_G(cls: DivisorClass) -> DivisorClass:
    """Pass to ``G``: ``D_0`` becomes ``D_E6``, the ``D_syz`` coefficient is halved
    (its general point loses its involution) and the contracted divisors are dropped."""
    out = {}
    for k, v in cls.items():
        if k == "D_0":
            out["D_E6"] = out.get("D_E6", 0) + v
        elif k == "D_syz":
            out[k] = out.get(k, 0) + v / 2
        elif k in ("D_azy",) or not k.startswith("D_"):
            out[k] = out.get(k, 0) + v
    return DivisorClass(out)


# ------------------------------------------------------ classes on G


LAM, L5, LP1 = S("lambda"), S("lambda_m5"), S("lambda_p1")
GAMMA, KAPPA, A_, B_, C1V, N_ = S("gamma"), S("kappa1"), S("A"), S("B"), S("c1V"), S("n")
DE6, DSYZ, DAZY = S("D_E6"), S("D_syz"), S("D_azy")

EFFECTIVE = {"D_E6", "D_syz", "D_azy", "n", "E_0", "E_syz", "E_azy"}


def hodge_class_G() -> DivisorClass:
    return to_G(hodge_class_hur())


def canonical_G_boundary() -> DivisorClass:
    return to_G(canonical_Hur())


def kappa_G() -> DivisorClass:
    """``kappa_1 = 12 lambda - delta``; on ``G`` the stable models carry six nodes
    over ``D_E6`` and one over ``D_syz``."""
    return LAM * 12 - DE6 * 6 - DSYZ


def che_plus() -> DivisorClass:
    """Stated: ``lambda^(+1) = 2 lambda - gamma + n``."""
    return LAM * 2 - GAMMA + N_


def che_minus() -> DivisorClass:
    """Stated: ``lambda^(-5) = -lambda + gamma - n``."""
    return -LAM + GAMMA - N_


def gamma_rule() -> DivisorClass:
    """``gamma`` from the (-5) relation: ``lambda + lambda^(-5) + n``."""
    return solve([L5 - che_minus()], ["gamma"])["gamma"]


def grr_c1(a: int, b: int) -> DivisorClass:
    """``c_1 f_!(omega^a ⊗ L^b) = lambda + C(a,2) kappa + b^2/2 A + (ab - b/2) B``."""
    return LAM + KAPPA * comb(a, 2) + A_ * Fraction(b * b, 2) + B_ * (a * b - Fraction(b, 2))


def azy_jet_class() -> DivisorClass:
    """``f_* c_2(J^2(L) / f^*V)`` for ``d = 27``, ``g = 46``."""
    return A_ * 3 + B_ * 6 - C1V * (3 * (27 + 2 * G_HUR - 2)) + KAPPA * 2


def basepoint_rule() -> tuple[str, DivisorClass]:
    """``A = 27 c_1(V)``, used to eliminate ``c1V``."""
    return ("c1V", A_ / 27)


def b_rule() -> tuple[str, DivisorClass]:
    """``gamma = B - 5/3 A``, used to eliminate ``B``."""
    return ("B", GAMMA + A_ * Fraction(5, 3))


def azy3_derived() -> DivisorClass:
    """``6 D_azy = f_*c_2(...) - 6 D_E6 - 3 D_syz``, then ``kappa`` and ``gamma`` eliminated."""
    six = azy_jet_class() - DE6 * 6 - DSYZ * 3
    six = substitute(six, [basepoint_rule(), b_rule()])
    six = substitute(six, [("kappa1", kappa_G()), ("gamma", gamma_rule())])
    return six / 6


def azy3_stated() -> DivisorClass:
    return LAM * 5 + L5 - DE6 * 3 - DSYZ * Fraction(5, 6) + N_


def syzazy_derived() -> dict[str, DivisorClass]:
    """Solve the azygetic relation together with the boundary form of ``lambda``."""
    eqs = [DAZY - azy3_stated(), LAM - hodge_class_G()]
    return solve(eqs, ["D_azy", "D_syz"])


def syzazy_stated() -> dict[str, DivisorClass]:
    return {
        "D_azy": LAM * Fraction(25, 16) + L5 * Fraction(51, 16) + DE6 * Fraction(3, 4) + N_ * Fraction(51, 16),
        "D_syz": LAM * Fraction(33, 8) - L5 * Fraction(21, 8) - DE6 * Fraction(9, 2) - N_ * Fraction(21, 8),
    }


def canonical_G_derived() -> DivisorClass:
    return substitute(canonical_G_boundary(), list(syzazy_derived().items()))


def canonical_G_stated() -> DivisorClass:
    return LAM * Fraction(73, 32) + L5 * Fraction(3, 32) - DE6 * Fraction(17, 8) + N_ * Fraction(3, 32)


def ram_PT_derived() -> DivisorClass:
    """``Ram(PT) = K_G - PT^*(7 lambda_1 - D_6) = K_G - 7 lambda^(-5) + D_E6``."""
    return canonical_G_derived() - L5 * 7 + DE6


def ram_PT_stated() -> DivisorClass:
    return LAM * Fraction(73, 32) - L5 * Fraction(221, 32) - DE6 * Fraction(9, 8) + N_ * Fraction(3, 32)


def dn_stated(n: int) -> DivisorClass:
    if n < 0:
        raise ValueError("n must be non-negative")
    return -LAM - KAPPA * comb(3 * n + 2, 2) + GAMMA * (Fraction(15, 2) * (2 * n + 1) ** 2)


dn_class = dn_stated


def dn_derived(n: int) -> DivisorClass:
    """Degeneracy class of ``V ⊗ E_1 -> E_2`` (ranks 2*27 and 54) from GRR."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a = 3 * n + 2
    e1 = grr_c1(a, -(10 * n + 4))
    e2 = grr_c1(a, -(10 * n + 3))
    cls = e2 - (e1 * 2 + C1V * 27)
    return substitute(cls, [basepoint_rule(), b_rule()])


def dn_on_G(n: int) -> DivisorClass:
    """``D_n`` in the ``lambda, lambda^(-5), D_E6, D_syz, n`` basis."""
    return substitute(dn_stated(n), [("kappa1", kappa_G()), ("gamma", gamma_rule())])


def dn_bound_stated(n: int) -> tuple[DivisorClass, DivisorClass]:
    """``(48n^2+48n+11) lambda <= 15(2n+1)^2 lambda^(-5) + 6P D_E6 + P D_syz``, ``P=(3n+1)(3n+2)``."""
    P = (3 * n + 1) * (3 * n + 2)
    return LAM * (48 * n * n + 48 * n + 11), L5 * (15 * (2 * n + 1) ** 2) + DE6 * (6 * P) + DSYZ * P


def dn_bound_second_stated(n: int) -> DivisorClass:
    """The upper bound for ``lambda`` after eliminating ``D_syz``."""
    den = 87 * n * n + 87 * n + 22
    return (L5 * Fraction(3 * (97 * n * n + 97 * n + 26), den)
            + DE6 * Fraction(3 * (36 * n * n + 36 * n + 8), den))


def lower_stated() -> DivisorClass:
    return L5 * Fraction(39, 11) + DE6 * Fraction(12, 11) + N_ * Fraction(39, 11) - LAM


def lower_derived() -> DivisorClass:
    """``D_0`` on ``G`` with ``D_syz`` eliminated, normalized to ``lambda`` coefficient -1."""
    c = substitute(dn_on_G(0), [("D_syz", syzazy_derived()["D_syz"])])
    return c / (-c.coeff("lambda"))


def bigness_derived() -> tuple[DivisorClass, DivisorClass]:
    """``K_G`` in boundary form, and the bound after using ``D_azy`` and dropping
    effective terms.  Returns ``(K_G with D_azy substituted, bound)``."""
    K = canonical_G_boundary()
    full = substitute(K, [("D_azy", syzazy_derived()["D_azy"])])
    bound = full.drop(["D_syz", "n"])
    return full, bound


def bigness_stated() -> DivisorClass:
    return L5 * Fraction(867, 736) + LAM * Fraction(425, 736) - DE6 * Fraction(49, 184)


# ---------------------------------------------------------- scaling


def moriwaki_class(g: int = G_HUR) -> DivisorClass:
    """``(8g+4) lambda - g delta_0 - sum_{i<=g/2} 4i(g-i) delta_i``."""
    out = {"lambda_Mg": 8 * g + 4, "delta_0": -g}
    for i in range(1, g // 2 + 1):
        out[f"delta_{i}"] = -4 * i * (g - i)
    return DivisorClass(out)


def scaling_derived() -> DivisorClass:
    """``(1/210) phi^* mo`` bounded above: drop ``delta_i`` (i >= 1), use
    ``phi^* delta_0 >= 12 E_0 + 2 E_syz``, expand ``lambda``."""
    mo = moriwaki_class().restrict(["lambda_Mg", "delta_0"])
    cls = substitute(mo, [("lambda_Mg", hodge_class()), ("delta_0", S("E_0") * 12 + S("E_syz") * 2)])
    return cls / 210


def scaling_stated() -> DivisorClass:
    out = {"E_0": Fraction(-2, 23), "E_syz": Fraction(523, 2415), "E_azy": Fraction(62, 115)}
    for b in table1():
        if b.i >= 3:
            out[b.e_symbol] = Fraction(93, 1610) * b.i * (24 - b.i) * b.lcm
    return DivisorClass(out)


def scaling_upper_bound() -> DivisorClass:
    """``scaling_derived`` with ``1/mu`` replaced by its maximum 27 for ``i >= 3``."""
    out = dict(scaling_derived().items())
    for b in table1():
        if b.i >= 3:
            out[b.e_symbol] = Fraction(372, 210) * Fraction(b.lcm, 12) * (9 * _w(b.i) - 27 + 27)
    return DivisorClass(out)


# ------------------------------------------------------- the ledger


@dataclass
class Identity:
    """A derived class compared with a stated one.

    ``kind`` is ``"equal"`` (coefficient-wise equality) or ``"geq"`` (the
    difference ``derived - stated`` must be a non-negative combination of
    effective symbols).  ``compare_on`` restricts the comparison to the given
    symbols; anything outside it is reported in ``note``.
    """

    name: str
    derived: DivisorClass
    stated: DivisorClass
    kind: str = "equal"
    compare_on: tuple[str, ...] | None = None
    note: str = ""

    @property
    def difference(self) -> DivisorClass:
        d = self.derived - self.stated
        return d.restrict(self.compare_on) if self.compare_on else d

    @property
    def holds(self) -> bool:
        d = self.difference
        if self.kind == "equal":
            return d.is_zero()
        return all(v > 0 and (k in EFFECTIVE or k.startswith("E_")) for k, v in d.items())

    def to_json(self) -> dict:
        out = {
            "identity": self.name,
            "kind": self.kind,
            "status": "PASS" if self.holds else "FAIL",
            "derived": str(self.derived),
            "stated": str(self.stated),
        }
        if not self.difference.is_zero():
            out["difference"] = str(self.difference)
        if self.note:
            out["note"] = self.note
        return out


def _boundary(c: DivisorClass, i_min: int) -> DivisorClass:
    keep = [b.e_symbol for b in table1() if b.i >= i_min]
    return c.restrict(keep)


def identity_ledger() -> list[Identity]:
    ids: list[Identity] = []
    ids.append(Identity("pullback of B_2", pb_b2(), S("E_0") + S("E_syz") * 2 + S("E_azy") * 3))
    ids.append(Identity("Hodge class from the genus zero relations", hodge_class(), hodge_class_formula()))
    ids.append(Identity(
        "Hodge class, i = 2 coefficients", hodge_class().restrict(["E_0", "E_syz", "E_azy"]),
        S("E_0") * Fraction(33, 23) + S("E_syz") * Fraction(17, 46) + S("E_azy") * Fraction(7, 23)))
    ids.append(Identity(
        "Hodge class on the unlabelled space", hodge_class_hur().restrict(["D_0", "D_syz", "D_azy"]),
        S("D_0") * Fraction(33, 46) + S("D_azy") * Fraction(7, 46) + S("D_syz") * Fraction(17, 46)))
    ids.append(Identity(
        "Hodge class on G", hodge_class_G(),
        DE6 * Fraction(33, 46) + DAZY * Fraction(7, 46) + DSYZ * Fraction(17, 92)))
    kh = canonical_H()
    ids.append(Identity(
        "canonical class of the labelled space, i = 2", kh.restrict(["E_0", "E_syz", "E_azy"]),
        S("E_0") * Fraction(-2, 23) + S("E_syz") * Fraction(19, 23) + S("E_azy") * Fraction(40, 23)))
    ids.append(Identity(
        "canonical class of the labelled space, i >= 3", _boundary(kh, 3),
        DivisorClass({b.e_symbol: generic_K_coefficient(b) for b in table1() if b.i >= 3})))
    ids.append(Identity("canonical class is b^*kappa_1 minus all boundary",
                        kh, pullback_b(m024_kappa1()) - sum_all_e()))
    khur = canonical_Hur()
    stated_hur = DivisorClass({"D_0": Fraction(-25, 46), "D_syz": Fraction(19, 23), "D_azy": Fraction(17, 46)})
    stated_hur = stated_hur + DivisorClass({b.d_symbol: generic_K_coefficient(b) for b in table1() if b.i >= 3})
    ids.append(Identity("canonical class of the unlabelled space", khur, stated_hur))
    ids.append(Identity("eigenclasses add up to lambda", che_plus() + che_minus(), LAM))
    ids.append(Identity("azygetic divisor", azy3_derived(), azy3_stated()))
    sd, ss = syzazy_derived(), syzazy_stated()
    ids.append(Identity("azygetic divisor in Hodge eigenclasses", sd["D_azy"], ss["D_azy"]))
    ids.append(Identity("syzygetic divisor in Hodge eigenclasses", sd["D_syz"], ss["D_syz"]))
    ids.append(Identity("canonical class of G", canonical_G_derived(), canonical_G_stated()))
    ids.append(Identity("ramification of the Prym-Tyurin map", ram_PT_derived(), ram_PT_stated()))
    for n in (0, 1, 2, 3):
        ids.append(Identity(f"virtual class of D_{n} (GRR)", dn_derived(n), dn_stated(n)))
    for n in (0, 1, 2):
        lhs, rhs = dn_bound_stated(n)
        derived = dn_on_G(n) * 2 + lhs
        ids.append(Identity(
            f"lambda bound from D_{n}", derived, rhs,
            compare_on=("lambda", "lambda_m5", "D_E6", "D_syz"),
            note=f"the derived right side also carries {derived.coeff('n')} n"))
        # L lambda <= R with R containing k lambda after D_syz is eliminated:
        # lambda <= (R - k lambda) / (L - k).
        right = substitute(derived, [("D_syz", sd["D_syz"])])
        k, L = right.coeff("lambda"), lhs.coeff("lambda")
        ids.append(Identity(
            f"lambda bound from D_{n} without D_syz", (right - LAM * k) / (L - k),
            dn_bound_second_stated(n), compare_on=("lambda_m5", "D_E6"),
            note="compared on lambda^(-5) and D_E6 after normalizing the lambda coefficient"))
    ids.append(Identity("upper bound for lambda at n = 0", lower_derived(), lower_stated()))
    full, bound = bigness_derived()
    ids.append(Identity("canonical class of G bounded below", full, bigness_stated(), kind="geq"))
    ids.append(Identity("canonical class of G, bound after dropping effective terms", bound, bigness_stated()))
    ids.append(Identity("scaled Moriwaki pullback, i = 2", scaling_derived().restrict(["E_0", "E_syz", "E_azy"]),
                        scaling_stated().restrict(["E_0", "E_syz", "E_azy"])))
    ids.append(Identity("scaled Moriwaki pullback with 1/mu at its maximum", scaling_upper_bound(), scaling_stated()))
    ids.append(Identity("scaled Moriwaki pullback is dominated", scaling_stated(),
                        scaling_derived(), kind="geq"))
    return ids


def positive_generic_coefficients() -> bool:
    """``lcm(mu)(i(24-i)/23 - 1) - 1 > 0`` for every ``i >= 3`` row."""
    return all(generic_K_coefficient(b) > 0 for b in table1() if b.i >= 3)


# ------------------------------------------------------------ parsing


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?([A-Za-z][A-Za-z0-9_]*(?:\{[^}]*\})?)?\s*"
)


def parse_class(text: str) -> DivisorClass:
    """Parse ``"2 lambda - 3/2*D_E6 + n"``; a bare number is an error."""
    from .errors import ParseError

    text = text.strip()
    if not text:
        raise ParseError("empty expression")
    pos = 0
    out = DivisorClass()
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse expression at {text[pos:]!r}", column=pos + 1)
        sign, coef, sym = m.groups()
        if sign is None and not first:
            raise ParseError(f"missing operator before {text[pos:m.end()].strip()!r}", column=pos + 1)
        if sym is None:
            raise ParseError(f"term without a symbol near column {pos + 1}", column=pos + 1)
        c = Fraction(coef) if coef else Fraction(1)
        out = out + S(sym) * (-c if sign == "-" else c)
        pos = m.end()
        first = False
    return out


def builtin_rules() -> list[tuple[str, DivisorClass]]:
    """Rules rewriting into the ``lambda, lambda^(-5), D_E6, n`` basis on ``G``."""
    sd = syzazy_derived()
    return [
        ("lambda_p1", LAM - L5),
        ("kappa1", kappa_G()),
        ("gamma", gamma_rule()),
        ("D_azy", sd["D_azy"]),
        ("D_syz", sd["D_syz"]),
    ]


def evaluate(text: str) -> DivisorClass:
    return substitute(parse_class(text), builtin_rules())
