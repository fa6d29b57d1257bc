import importlib

import pytest

from diffseq import _pykernels


def _backends():
    mods = [pytest.param(_pykernels, id="python")]
    try:
        mods.append(pytest.param(importlib.import_module("diffseq._kernels"), id="cython"))
    except ImportError:
        pass
    return mods


@pytest.fixture(params=_backends())
def backend(request):
    """Each available kernel implementation in turn."""
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
