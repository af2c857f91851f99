from collections.abc import Callable

import pytest

from gaussrs.models.function import RealFunction
from gaussrs.models.interval import Interval
from gaussrs.repositories.corpus import CorpusRepository
from gaussrs.schemas.corpus import CorpusPair


@pytest.fixture
def fn() -> Callable[[str], RealFunction]:
    """由表达式文本构造 RealFunction。"""
    return RealFunction.from_text


@pytest.fixture
def canonical() -> Interval:
    return Interval.canonical()


@pytest.fixture(scope="session")
def corpus_repo() -> CorpusRepository:
    return CorpusRepository()


@pytest.fixture(scope="session")
def corpus_pairs(corpus_repo: CorpusRepository) -> list[CorpusPair]:
    return corpus_repo.list_pairs()


@pytest.fixture(scope="session")
def corpus_expressions(corpus_repo: CorpusRepository) -> list[str]:
    return corpus_repo.list_expressions()
