"""Named input configurations for the concrete computations."""
from __future__ import annotations

from fractions import Fraction

from .lattice import Root, parse_roots

_COMMON = "b:1,3,5 a:1,2 a:2,3 a:3,4 a:4,5 a:5,6"

ROOT_PRESETS: dict[str, str] = {
    "thm-dominance": _COMMON + " b:4,5,6 a:2,6 b:1,2,3 b:1,2,5 b:2,5,6 a:1,5",
    "thm-2k5": _COMMON + " a:1,6 b:4,5,6 b:1,2,3 b:3,4,6 b:2,3,4 b:1,5,6",
    "thm-petri": _COMMON + " max b:1,2,4 b:2,3,4 a:3,5 a:1,3 a:3,6",
}


def preset_roots(name: str) -> list[Root]:
    try:
        return parse_roots(ROOT_PRESETS[name])
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(ROOT_PRESETS)}") from None


def preset_points(name: str) -> list[Fraction]:
    """Branch points ``q_i = i`` used by every preset."""
    preset_roots(name)
    return [Fraction(i) for i in range(1, 13)]
