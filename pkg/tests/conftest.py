import json
import pathlib

import pytest

from reesval import MonomialIdeal, RingContext, normalize

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent
CORPUS_PATH = REPO_ROOT / "corpus" / "standard.jsonl"


@pytest.fixture(scope="session")
def corpus_entries() -> list[dict]:
    lines = CORPUS_PATH.read_text(encoding="utf-8").splitlines()
    return [json.loads(line) for line in lines if line.strip()]


@pytest.fixture(scope="session")
def corpus_ideals(corpus_entries) -> list[tuple[dict, MonomialIdeal]]:
    out = []
    for entry in corpus_entries:
        ring = RingContext(tuple(entry["ring"]))
        out.append((entry, normalize([tuple(g) for g in entry["gens"]], ring)))
    return out
