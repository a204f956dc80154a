import os
import sys

import pytest

# fallback so the suite runs from a checkout without installing the package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from ndagg.mcgdm import DecisionProblem, load_fixture  # noqa: E402


@pytest.fixture(scope="session")
def paper_problem() -> DecisionProblem:
    return DecisionProblem.from_json(load_fixture("paper_example.json"))
