import pathlib

import pytest

from k3seg.report import analyze
from k3seg.symalg import parse_family

REPO = pathlib.Path(__file__).resolve().parent.parent
FAMILY_DIR = REPO / "families"

NAMED = ("ds_split", "ds_circle", "tent", "d_mixed", "d_constant")


def family_path(name: str) -> str:
    return str(FAMILY_DIR / (name + ".family"))


def family_text(name: str) -> str:
    return (FAMILY_DIR / (name + ".family")).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def named():
    """The checked-in families, parsed once per test run."""
    return {name: parse_family(family_text(name)) for name in NAMED}


@pytest.fixture(scope="session")
def named_reports(named):
    """Full analysis of every checked-in family, computed once."""
    return {name: analyze(pair) for name, pair in named.items()}
