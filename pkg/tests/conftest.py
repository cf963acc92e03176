import pytest

from hybridsumm.config import MODELS, PipelineConfig
from hybridsumm.datasets import mini_corpus
from hybridsumm.lexicon import load_lexicon
from hybridsumm.pipeline import Pipeline, Resources


@pytest.fixture(scope="session")
def mini():
    return mini_corpus()


@pytest.fixture(scope="session")
def mini_texts(mini):
    return mini.read()[0]


@pytest.fixture(scope="session")
def mini_gold(mini):
    return mini.read()[1]


@pytest.fixture(scope="session")
def toy_lexicon(mini):
    return load_lexicon(mini.toy_taxonomy)


@pytest.fixture(scope="session")
def mini_lexicon(mini):
    return load_lexicon(mini.lexicon)


@pytest.fixture(scope="session")
def full_config(mini):
    return PipelineConfig(models=MODELS, lexicon=mini.lexicon, vectors=mini.vectors, embeddings=mini.embeddings)


@pytest.fixture(scope="session")
def full_resources(full_config):
    return Resources.load(full_config)


@pytest.fixture(scope="session")
def full_pipeline(full_config, full_resources, mini_texts):
    pipe = Pipeline(full_config, full_resources)
    pipe.add_documents(mini_texts)
    return pipe


@pytest.fixture(scope="session")
def mini_docs(full_pipeline):
    return list(full_pipeline.corpus)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(results, key=lambda r: r[0]):
        terminalreporter.write_line(line)
