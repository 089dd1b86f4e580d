import re

from noisydup.words import parse_word

ACCEPTANCE_LINES: list[str] = []


def expand_runs(text: str) -> str:
    """Expand single-digit run notation: '0^310' -> '00010'."""
    return re.sub(r"(\d)\^(\d)", lambda m: m.group(1) * int(m.group(2)), text)


def w(text: str, q: int = 3):
    return parse_word(expand_runs(text), q)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
