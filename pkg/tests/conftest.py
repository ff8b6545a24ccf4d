import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from antiforce import _pykernels, kernels  # noqa: E402

BACKENDS = ["python"] + (["cython"] if kernels._ckernels is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    if request.param == "python":
        monkeypatch.setattr(kernels, "_ckernels", None)
    return request.param


@pytest.fixture
def pure():
    return _pykernels
