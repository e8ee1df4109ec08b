"""The compiled and pure-Python F_p[T] kernels must agree on every input."""

import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zpspec import _fpx_py, fpx

try:
    from zpspec import _fpx as _fpx_c
except ImportError:  # extension not built
    _fpx_c = None

needs_c = pytest.mark.skipif(_fpx_c is None, reason="compiled kernel not built")

primes = st.sampled_from([2, 3, 5, 7, 101, 65537, 2147483647])


@st.composite
def poly_pair(draw, nonzero_b=False):
    p = draw(primes)
    a = _fpx_py.trim([draw(st.integers(0, p - 1)) for _ in range(draw(st.integers(0, 9)))])
    b = _fpx_py.trim([draw(st.integers(0, p - 1)) for _ in range(draw(st.integers(1, 6)))])
    if nonzero_b and not b:
        b = [1]
    return p, a, b


@needs_c
@given(poly_pair())
def test_mul(args):
    p, a, b = args
    assert _fpx_c.mul(list(a), list(b), p) == _fpx_py.mul(list(a), list(b), p)


@needs_c
@given(poly_pair(nonzero_b=True))
def test_divmod(args):
    p, a, b = args
    assert list(_fpx_c.divmod_(list(a), list(b), p)) == list(_fpx_py.divmod_(list(a), list(b), p))


@needs_c
@given(poly_pair(nonzero_b=True), st.integers(0, 10**6))
def test_powmod(args, e):
    p, a, m = args
    assert _fpx_c.powmod(list(a), e, list(m), p) == _fpx_py.powmod(list(a), e, list(m), p)


@needs_c
@given(poly_pair())
def test_gcd_and_monic(args):
    p, a, b = args
    assert _fpx_c.gcd(list(a), list(b), p) == _fpx_py.gcd(list(a), list(b), p)
    assert _fpx_c.monic(list(a), p) == _fpx_py.monic(list(a), p)


@needs_c
@given(st.sampled_from([2, 3, 5, 7, 11, 101]), st.lists(st.integers(0, 100), max_size=7))
def test_roots(p, coeffs):
    a = _fpx_py.trim([c % p for c in coeffs])
    assert _fpx_c.roots(list(a), p) == _fpx_py.roots(list(a), p)


def test_large_primes_use_python_kernel():
    assert fpx.kernel(2**61 - 1) is _fpx_py


def test_environment_forces_fallback():
    code = "import zpspec.fpx as f; print(f.BACKEND)"
    env = dict(os.environ, ZPSPEC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_zero_division():
    for mod in filter(None, (_fpx_py, _fpx_c)):
        with pytest.raises(ZeroDivisionError):
            mod.divmod_([1, 2], [], 5)
    assert importlib.import_module("zpspec.fpx").BACKEND in ("cython", "python")
