import pytest

from fmcert.rankfacts import load_paper_fixture


@pytest.fixture(scope="session")
def paper():
    return load_paper_fixture()


@pytest.fixture(scope="session")
def facts(paper):
    return paper.facts
