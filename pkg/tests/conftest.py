import pytest

from noisyins import Word, build_codebook, scan_best_params

ACCEPTANCE_LINES: list[str] = []


def W(text: str, q: int = 4) -> Word:
    return Word.parse(text, q)


@pytest.fixture(scope="session")
def best_books():
    """Best-scan final codebooks at q=4 keyed by n."""
    out = {}
    for n in (6, 8):
        params, _ = scan_best_params(4, n)
        out[n] = build_codebook(params)
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
