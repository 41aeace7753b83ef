from pathlib import Path

import pytest

from foodframe.extract import load_anchor_sets, load_dish_names
from foodframe.lexicons import load_lexicons
from foodframe.parses import read_conllu

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = FIXTURES / "golden"


@pytest.fixture(scope="session")
def anchors():
    return load_anchor_sets()


@pytest.fixture(scope="session")
def lexicons():
    return load_lexicons()


@pytest.fixture(scope="session")
def dish_names():
    return load_dish_names()


@pytest.fixture(scope="session")
def golden_reviews():
    return list(
        read_conllu(GOLDEN / "golden.conllu", GOLDEN / "golden_coref.jsonl")
    )
