import random
import subprocess
import sys

import pytest

from k3invol import _scan_py, kernel

try:
    from k3invol import _speedups
except ImportError:
    _speedups = None

needs_compiled = pytest.mark.skipif(
    _speedups is None, reason="compiled kernel not built"
)


def test_backend_reported():
    assert kernel.BACKEND in ("compiled", "python")


def test_fits_compiled_threshold():
    assert kernel.fits_compiled(1000)
    assert kernel.fits_compiled(10_000)
    assert not kernel.fits_compiled(10**6)


@needs_compiled
def test_backends_agree_randomized_cases():
    rng = random.Random(11)
    for _ in range(4000):
        n = rng.randint(2, 150)
        rho = rng.choice([-1, 0, rng.randint(1, max(1, (n - 1) // 4))])
        alpha = rng.randint(1, max(1, n - 1))
        for full in (True, False):
            assert _scan_py.case_interior_solutions(
                n, rho, alpha, full
            ) == _speedups.case_interior_solutions(n, rho, alpha, full)


@needs_compiled
def test_backends_agree_full_case_lists():
    for n in (2, 3, 4, 7, 13, 50, 101, 211):
        for full, appendix in ((True, False), (False, True), (True, True)):
            assert _scan_py.interior_solutions(
                n, full, appendix
            ) == _speedups.interior_solutions(n, full, appendix)


def test_numpy_and_loop_paths_agree():
    # force both code paths across the vectorization threshold
    for n in (40, 97, 160):
        for rho, alpha in _scan_py.case_pairs(n, False):
            a_val = alpha * alpha - 4 * rho * (n - 1)
            if a_val <= 0:
                continue
            m = 2 * (n - 1)
            d = 4 * (4 * n - 3) * (n - 1)
            import math

            ymax = math.isqrt(4 * a_val - 1)
            if ymax < 1:
                continue
            assert _scan_py._case_loop(a_val, d, m, alpha, ymax) == (
                _scan_py._case_numpy(a_val, d, m, alpha, ymax)
            )


def test_python_backend_forced_by_env():
    out = subprocess.run(
        [sys.executable, "-c", "import k3invol; print(k3invol.BACKEND)"],
        env={"K3INVOL_BACKEND": "python", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_bad_backend_env_rejected():
    out = subprocess.run(
        [sys.executable, "-c", "import k3invol"],
        env={"K3INVOL_BACKEND": "fortran", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
    )
    assert out.returncode != 0
