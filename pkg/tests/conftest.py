from itertools import product

import pytest

from privword import _pycore

try:
    from privword import _ccore
except ImportError:
    _ccore = None

KERNELS = [_pycore] + ([_ccore] if _ccore is not None else [])


@pytest.fixture(params=KERNELS, ids=lambda m: m.BACKEND)
def kernel(request):
    return request.param


def binary_words(max_len, min_len=0, alphabet="01"):
    for n in range(min_len, max_len + 1):
        for t in product(alphabet, repeat=n):
            yield "".join(t)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.REPORT:
            terminalreporter.write_line(line)
