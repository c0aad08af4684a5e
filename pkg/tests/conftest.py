import numpy as np
import pytest

from nonwordgen.lexicon import parse_lexicon
from nonwordgen.synthetic import synthetic_lexicon

FIX3_TEXT = "toto\t2\tto-to\ntota\t1\tto-ta\ntato\t1\tta-to\n"

_ACCEPTANCE = []


def record_criterion(number, title, ok, detail=""):
    _ACCEPTANCE.append((number, title, ok, detail))


@pytest.fixture
def fix3():
    return parse_lexicon(FIX3_TEXT)


@pytest.fixture(scope="session")
def toy_lexicon():
    # 16 syllables; with d=3 the space has exactly 4096 points
    return synthetic_lexicon(n_words=80, n_syllables=16, seed=3, length_probs=(0.2, 0.4, 0.3, 0.1))


@pytest.fixture(scope="session")
def medium_lexicon():
    return synthetic_lexicon(n_words=2000, n_syllables=200, seed=0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {number}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
