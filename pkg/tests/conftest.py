import random

import pytest

from braidauth.braid import BraidWord, GeneratorLetter

# filled by test_acceptance.py; replayed after the run so the one-line-per-
# criterion report shows even without -s
ACCEPTANCE_LINES: "list[str]" = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_braid_word(rng: random.Random, n: int, length: int) -> BraidWord:
    """Uniform letters, no free-reduction guarantee; test-local randomness so
    the suite does not depend on the package's own sampler."""
    letters = tuple(
        GeneratorLetter(rng.randrange(1, n), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(n, letters)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xBA1D)
