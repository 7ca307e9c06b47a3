import os
import subprocess
import sys

import pytest

from chiralmap import _accel, _kernels_py
from chiralmap.constructions import build, dispatch, table1_lookup

try:
    from chiralmap import _kernels
except ImportError:
    _kernels = None

needs_cython = pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")


def cases():
    for g in (table1_lookup((4, 5)), table1_lookup((4, 7)), build(dispatch((6, 8)))):
        yield [g.s.images, g.t.images], [(~g.s).images, g.t.images], g.degree


def test_backend_name():
    assert _accel.BACKEND in ("python", "cython")


@needs_cython
def test_cython_selected_by_default():
    assert _accel.BACKEND == "cython"


@needs_cython
@pytest.mark.parametrize("bound", [10, 1000, 10**6])
def test_cayley_agrees(bound):
    for gens, _, k in cases():
        assert _kernels.cayley_enumerate(gens, k, bound) == _kernels_py.cayley_enumerate(gens, k, bound)


@needs_cython
def test_extension_agrees():
    for gens, images, k in cases():
        a = _kernels.extend_homomorphism(gens, images, k, 10**6)
        b = _kernels_py.extend_homomorphism(gens, images, k, 10**6)
        assert a == b


def test_a6_counts():
    gens, images, k = next(cases())
    assert _kernels_py.cayley_enumerate(gens, k, 10**6) == 360
    # the A6 row is reflexible: inverting s and fixing t extends
    assert _kernels_py.extend_homomorphism(gens, images, k, 10**6)[0] == 1


def test_pure_python_env():
    env = dict(os.environ, CHIRALMAP_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from chiralmap import _accel; print(_accel.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
