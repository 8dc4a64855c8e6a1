import pytest

from fpdiv import _backends


@pytest.fixture(params=_backends.available_backends())
def backend(request):
    """Run the test once per installed backend, switched in as active."""
    prev = _backends.active_backend().NAME
    _backends.set_backend(request.param)
    yield _backends.get_backend(request.param)
    _backends.set_backend(prev)


@pytest.fixture
def both_backends():
    return [_backends.get_backend(n) for n in _backends.available_backends()]
