"""Bundled agent specs: the cleaner world and a three-rule cleaning plan set."""

from __future__ import annotations

from importlib import resources

from .kb import KnowledgeBase, loads

NAMES = ("cleaner", "example1", "empty")


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("data", f"{name}.json").read_text(encoding="utf-8")


def load_fixture(name: str) -> KnowledgeBase:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {NAMES}")
    return loads(fixture_text(name))
