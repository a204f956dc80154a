"""Keep the workbench's recorded service responses in sync with the live
service, so 'every displayed digit comes from the service' stays true
against the real backend and not just the recording."""

import json
import os

import pytest

from ndagg.mcgdm import load_fixture
from ndagg.service import App

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "frontend", "test", "fixtures")

pytestmark = pytest.mark.skipif(not os.path.isdir(FIXTURE_DIR),
                                reason="workbench fixtures not present")


def read(name):
    with open(os.path.join(FIXTURE_DIR, name), encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="module")
def app(tmp_path_factory):
    return App(str(tmp_path_factory.mktemp("store")))


def test_preset_matches_the_bundled_example():
    assert read("problem_preset.json") == load_fixture("paper_example.json")


def test_rank_fixtures_match_the_service(app):
    problem = read("problem_preset.json")
    assert app.rank(problem) == read("rank_baseline.json")
    edited = json.loads(json.dumps(problem))
    edited["evaluations"][1][3][2] = 0.1
    assert app.rank(edited) == read("rank_edited.json")


def test_sensitivity_fixture_matches_the_service(app):
    payload = {"problem": read("problem_preset.json"),
               "edits": [{"kind": "cell", "expert": 2, "alt": 4, "crit": 3, "value": 0.1}]}
    assert app.sensitivity(payload) == read("sensitivity_edit.json")


def test_collective_and_catalog_fixtures_match(app):
    assert app.collective(read("problem_preset.json")) == read("collective.json")
    assert app.catalog() == read("catalog.json")
