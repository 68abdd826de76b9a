from __future__ import annotations

import pytest

from adverbia import load_extended_lexicon, load_sample_lexicon, serialize_lexicon


@pytest.fixture(scope="session")
def sample():
    return load_sample_lexicon()


@pytest.fixture(scope="session")
def extended():
    return load_extended_lexicon()


@pytest.fixture
def sample_path(tmp_path, sample):
    path = tmp_path / "sample.tsv"
    path.write_text(serialize_lexicon(sample), encoding="utf-8")
    return str(path)


@pytest.fixture
def extended_path(tmp_path, extended):
    path = tmp_path / "extended.tsv"
    path.write_text(serialize_lexicon(extended), encoding="utf-8")
    return str(path)
