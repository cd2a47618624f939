import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))

import pytest  # noqa: E402

from iterder.constructor import ChoiceSpec, construct  # noqa: E402

# filled by test_acceptance; printed once at the end of the session
ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def hd8():
    return construct(8, ChoiceSpec.sample())


@pytest.fixture(scope="session")
def hd16():
    return construct(16, ChoiceSpec.parse(["s", "0", "0", "0", "0"]))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
