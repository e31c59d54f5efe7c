import pytest

from goalselect import build_all, load_fixture, select
from goalselect.arguments import build_all as _build_all
from goalselect.randkb import random_kb

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def cleaner():
    return load_fixture("cleaner")


@pytest.fixture(scope="session")
def cleaner_args(cleaner):
    return build_all(cleaner)


@pytest.fixture(scope="session")
def by_letter(cleaner_args):
    return {a.id: a for a in cleaner_args}


@pytest.fixture(scope="session")
def cleaner_report(cleaner):
    return select(cleaner)


def small_instances(n, max_args=12, start=0):
    """First ``n`` random knowledge bases (by seed) with at most ``max_args`` arguments."""
    out = []
    seed = start
    while len(out) < n:
        kb = random_kb(seed)
        args = _build_all(kb)
        if len(args) <= max_args:
            out.append((seed, kb, args))
        seed += 1
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def kb_of(beliefs=(), actions=(), goals=(), resources=(), rules=()):
    """Compact knowledge-base builder: facts as (literal, l, u), rules as dicts."""
    from goalselect import load_spec
    doc = {
        "beliefs": [{"lit": x, "l": l, "u": u} for x, l, u in beliefs],
        "actions": [{"lit": x, "l": l, "u": u} for x, l, u in actions],
        "goals": [g if isinstance(g, dict) else {"name": g} for g in goals],
        "resources": [{"name": n, "amount": a} for n, a in resources],
        "rules": [dict({"l": 1.0, "u": 1.0}, **r) for r in rules],
    }
    return load_spec(doc)
