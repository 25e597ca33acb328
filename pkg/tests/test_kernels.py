import os
import subprocess
import sys

import numpy as np
import pytest

from topoarith import kernels
from topoarith.orders import OrderKind, compare

BACKENDS = kernels.backends()
KINDS = [(kernels.FD, OrderKind.FINAL_DIGITS), (kernels.VARIANT, OrderKind.VARIANT), (kernels.SIGNED, OrderKind.SIGNED)]


@pytest.fixture(params=sorted(BACKENDS))
def impl(request):
    return BACKENDS[request.param]


def _values(code, n=300, seed=0):
    rng = np.random.default_rng(seed)
    lo = -(1 << 40) if code == kernels.SIGNED else 0
    v = rng.integers(lo, 1 << 40, size=n, dtype=np.int64)
    small = np.arange(-20 if code == kernels.SIGNED else 0, 40, dtype=np.int64)
    return np.concatenate([small, v])


@pytest.mark.parametrize("code, kind", KINDS)
def test_cmp_pairs_matches_scalar(impl, code, kind):
    a = _values(code, seed=1)
    b = _values(code, seed=2)
    got = impl.cmp_pairs(code, a, b)
    want = [int(compare(kind, int(x), int(y))) for x, y in zip(a, b)]
    assert got.tolist() == want


@pytest.mark.parametrize("code, kind", KINDS)
def test_cmp_many_matches_scalar(impl, code, kind):
    a = _values(code)
    got = impl.cmp_many(code, a, 6)
    assert got.tolist() == [int(compare(kind, int(x), 6)) for x in a]


@pytest.mark.parametrize("code, kind", KINDS)
def test_order_checks_are_clean(impl, code, kind):
    vals = np.arange(-64 if code == kernels.SIGNED else 0, 64, dtype=np.int64)
    assert impl.antisymmetry_failures(code, vals)[0] == 0
    rng = np.random.default_rng(3)
    triples = rng.integers(-64 if code == kernels.SIGNED else 0, 64, size=(5000, 3), dtype=np.int64)
    assert impl.transitivity_failures(code, triples)[0] == 0


def test_oracle_disagreements_detect_a_bad_key(impl):
    vals = np.arange(16, dtype=np.int64)
    keys = vals.copy()  # magnitude order is not the fd order
    assert impl.oracle_disagreements(kernels.FD, vals, keys)[0] > 0
    ordered = impl.sort_values(kernels.FD, vals)
    ranks = np.empty(16, dtype=np.int64)
    ranks[ordered] = np.arange(16)
    assert impl.oracle_disagreements(kernels.FD, vals, ranks) == (0, -1, -1)


def test_sort_values_is_fd_order(impl):
    out = impl.sort_values(kernels.FD, np.arange(64, dtype=np.int64)).tolist()
    assert sorted(out) == list(range(64))
    assert all(compare(OrderKind.FINAL_DIGITS, x, y) < 0 for x, y in zip(out, out[1:]))


def test_scan_between(impl):
    assert impl.scan_between(kernels.FD, 0, 1, True, True, 0, 100) == 5
    assert impl.scan_between(kernels.FD, 0, 2, True, True, 0, 1000) == -1
    # signed candidates run 0, 1, -1, 2, -2, ...
    assert impl.candidate(kernels.SIGNED, 3) == 2 and impl.candidate(kernels.SIGNED, 4) == -2


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")
def test_backends_agree():
    c, p = BACKENDS["cython"], BACKENDS["python"]
    for code, _ in KINDS:
        a, b = _values(code, seed=4), _values(code, seed=5)
        assert np.array_equal(c.cmp_pairs(code, a, b), p.cmp_pairs(code, a, b))
        assert np.array_equal(c.sort_values(code, a), p.sort_values(code, a))
    assert c.scan_between(kernels.FD, 486838, 28086, True, True, 0, 1 << 21) == p.scan_between(
        kernels.FD, 486838, 28086, True, True, 0, 1 << 21
    )


def test_pure_environment_variable_forces_fallback():
    env = dict(os.environ, TOPOARITH_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import topoarith; print(topoarith.IMPLEMENTATION)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_fits():
    assert kernels.fits(0, -5, (1 << 63) - 1)
    assert not kernels.fits(1 << 63)
