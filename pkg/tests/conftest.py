import json
from pathlib import Path

import pytest

from newsattrib.cli import load_lexicons
from newsattrib.corpus_io import read_documents

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "newsattrib" / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def mini_corpus_path() -> Path:
    return DATA_DIR / "minicorpus.jsonl"


@pytest.fixture(scope="session")
def mini_docs(mini_corpus_path):
    return list(read_documents(mini_corpus_path))


@pytest.fixture(scope="session")
def mini_oracle():
    with open(DATA_DIR / "minicorpus_oracle.json", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def lexicons():
    """(speaking verbs, signifiers, patterns) from the bundled data."""
    return load_lexicons(DATA_DIR)


def pytest_terminal_summary(terminalreporter):
    """One ACCEPTANCE verdict line per release criterion after the run."""
    try:
        from test_acceptance import CRITERIA
    except ImportError:
        return
    verdicts = {}
    for outcome, verdict in (("passed", "PASS"), ("failed", "FAIL"), ("skipped", "SKIPPED")):
        for rep in terminalreporter.stats.get(outcome, []):
            name = rep.nodeid.split("::")[-1]
            if name in CRITERIA and getattr(rep, "when", "call") in ("call", "setup"):
                verdicts.setdefault(name, verdict)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in verdicts:
            terminalreporter.write_line(f"ACCEPTANCE {label}: {verdicts[name]}")
