import os

import pytest

from textlevel import corpus, resources, synthgen
from textlevel.tagging import PerceptronTagger, default_tagger_path

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def resources_dir():
    return resources.default_resources_dir()


@pytest.fixture(scope="session")
def bundle(resources_dir):
    return resources.load_resources(resources_dir)


@pytest.fixture(scope="session")
def tagger():
    return PerceptronTagger.load(default_tagger_path())


@pytest.fixture(scope="session")
def small_corpus(tmp_path_factory):
    """12 documents per level, fixed seed; reused across test modules."""
    root = tmp_path_factory.mktemp("corpus")
    synthgen.write_corpus(str(root), seed=90125, per_level=12)
    return str(root)


@pytest.fixture(scope="session")
def small_matrix(tmp_path_factory, small_corpus, resources_dir):
    """Extracted matrix CSV (with sidecar) for the small corpus."""
    out = tmp_path_factory.mktemp("matrix") / "small.csv"
    entries = corpus.scan_corpus(small_corpus)
    result = corpus.extract_matrix(entries, resources_dir)
    assert not result.failures
    corpus.write_matrix(str(out), result)
    return str(out)


@pytest.fixture(scope="session")
def small_data(small_matrix):
    return corpus.read_matrix(small_matrix)
