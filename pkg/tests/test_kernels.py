from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e6verify import kernels
from e6verify.weyl import all_reflections

py = kernels.python_impl
cc = kernels.compiled_impl
needs_compiled = pytest.mark.skipif(cc is None, reason="compiled kernels not built")

perms = st.permutations(list(range(27))).map(bytes)


@needs_compiled
@given(perms, perms)
def test_compose_agrees(p, q):
    assert cc.compose(p, q) == py.compose(p, q)


@needs_compiled
@given(perms)
def test_inverse_cycle_type_and_cycles_agree(p):
    assert cc.inverse(p) == py.inverse(p)
    assert cc.cycle_type(p) == py.cycle_type(p)
    assert cc.cycles(p) == py.cycles(p)


@needs_compiled
def test_orbits_and_closure_agree_on_reflection_subgroups():
    rng = random.Random(7)
    refl = [r.perm for r in all_reflections()]
    for _ in range(10):
        gens = rng.sample(refl, 3)
        assert cc.orbits(gens, 27) == py.orbits(gens, 27)
        assert sorted(cc.closure(gens)) == sorted(py.closure(gens))


@needs_compiled
def test_conjugacy_partition_agrees_on_a_subgroup():
    refl = [r.perm for r in all_reflections()]
    gens = refl[:4]
    G = py.closure(gens)
    a = py.conjugacy_partition(G, gens)
    b = cc.conjugacy_partition(G, gens)
    # same set partition, labels may differ
    assert {frozenset(i for i, x in enumerate(a) if x == c) for c in set(a)} == \
        {frozenset(i for i, x in enumerate(b) if x == c) for c in set(b)}


@given(perms)
def test_inverse_composes_to_identity(p):
    assert py.compose(p, py.inverse(p)) == py.identity(27)


@given(perms)
def test_cycle_type_is_a_partition_of_27(p):
    assert sum(py.cycle_type(p)) == 27
    assert sorted(len(c) for c in py.cycles(p) if len(c) > 0) == sorted(py.cycle_type(p))


def test_implementation_is_reported():
    assert kernels.IMPLEMENTATION in {"cython", "python"}


def test_environment_variable_forces_the_fallback():
    env = dict(os.environ, E6VERIFY_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from e6verify import kernels; print(kernels.IMPLEMENTATION)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_benchmark_script_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    mspec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(mspec)
    mspec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1", "--json"]) == 0
    assert "python" in capsys.readouterr().out
