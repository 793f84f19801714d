import importlib
import sys

import pytest

from flexcurves import _gauss_py, _kernels


def test_fallback_selected_without_extension(monkeypatch):
    monkeypatch.setitem(sys.modules, "flexcurves._gauss", None)
    reloaded = importlib.reload(_kernels)
    try:
        assert reloaded.BACKEND == "python"
        assert reloaded.residue_counts is _gauss_py.residue_counts
    finally:
        monkeypatch.undo()
        importlib.reload(_kernels)


def test_counts_sum_to_group_order():
    for b in range(0, 11):
        rows = [(1 << j) for j in range(b)]
        assert sum(_kernels.residue_counts(rows, [1] * b)) == 1 << b


def test_rank_zero():
    assert _kernels.residue_counts([], []) == (1, 0, 0, 0)
    assert _gauss_py.residue_counts([], []) == (1, 0, 0, 0)


def test_compiled_kernel_when_available():
    _gauss = pytest.importorskip("flexcurves._gauss")
    rows = [0b011, 0b110, 0b100]
    assert _gauss.residue_counts(rows, [1, 3, 0]) == _gauss_py.residue_counts(rows, [1, 3, 0])
