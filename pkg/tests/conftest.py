import pytest

from quadric_k0.fields import QQ, PrimeField

ACCEPTANCE_LOG = []


@pytest.fixture(params=[5, 7, 13])
def prime_field(request):
    return PrimeField(request.param)


@pytest.fixture(params=["Q", 5, 7], ids=lambda x: str(x))
def any_field(request):
    return QQ if request.param == "Q" else PrimeField(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LOG:
        terminalreporter.write_line(line)
