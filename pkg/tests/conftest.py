from pathlib import Path

import pytest

from gcsl.textio import parse_system

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    return parse_system((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture
def fg2():
    return load("fg2.nca")


@pytest.fixture
def anbn_grammar():
    return load("anbn.gcsg")


@pytest.fixture
def anbn_nca():
    return load("anbn.nca")


@pytest.fixture
def xanchor():
    return load("xanchor.nca")
