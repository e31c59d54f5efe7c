import pytest
from hypothesis import given, settings, strategies as st

from goalselect.arguments import ArgumentLimitError, build_all
from goalselect.attacks import (Attack, AttackType, all_attacks, merge, resource_attacks,
                                superfluous_attacks, terminal_attacks)
from goalselect.randkb import random_kb

import oracles
from conftest import kb_of

T, R, S = AttackType.TERMINAL, AttackType.RESOURCE, AttackType.SUPERFLUOUS

SUPPORT_REBUTTALS = {("A", "D"), ("D", "A"), ("A", "E"), ("E", "A"), ("B", "D"), ("D", "B"),
                     ("B", "E"), ("E", "B"), ("C", "D"), ("D", "C"), ("C", "E"), ("E", "C")}


def ids(args, *claims):
    return [args.for_claim(c)[0].id for c in claims]


def test_cleaner_support_rebuttals(cleaner_args):
    assert terminal_attacks(cleaner_args) == SUPPORT_REBUTTALS


def test_cleaner_has_no_other_attacks(cleaner, cleaner_args):
    assert resource_attacks(cleaner_args, cleaner) == set()
    assert superfluous_attacks(cleaner_args) == set()
    assert {a.pair for a in all_attacks(cleaner_args, cleaner)} == SUPPORT_REBUTTALS


def _two_plans(n1, n2, available, same_head=False):
    return kb_of(beliefs=[("b", 1, 1), ("c", 1, 1)], goals=["g", "h"],
                 resources=[("battery", available)],
                 rules=[{"id": "r1", "head": "g", "beliefs": ["b"], "needs": {"battery": n1}},
                        {"id": "r2", "head": "g" if same_head else "h", "beliefs": ["c"],
                         "needs": {"battery": n2}}])


class TestResource:
    def test_oversubscribed(self):
        kb = _two_plans(60, 50, 100)
        assert resource_attacks(build_all(kb), kb) == {("A", "B"), ("B", "A")}

    def test_exactly_enough_is_fine(self):
        kb = _two_plans(50, 50, 100)
        assert resource_attacks(build_all(kb), kb) == set()

    def test_same_claim_never_competes_for_resources(self):
        kb = _two_plans(60, 60, 100, same_head=True)
        args = build_all(kb)
        assert resource_attacks(args, kb) == set()
        assert superfluous_attacks(args) == {("A", "B"), ("B", "A")}

    def test_zero_need_does_not_compete(self):
        kb = _two_plans(0, 150, 100)
        assert resource_attacks(build_all(kb), kb) == set()


class TestTerminal:
    def test_same_claim_never_rebuts(self):
        kb = kb_of(beliefs=[("b", 1, 1), ("~b", 1, 1)], goals=["g"],
                   rules=[{"id": "r1", "head": "g", "beliefs": ["b"]},
                          {"id": "r2", "head": "g", "beliefs": ["~b"]}])
        assert terminal_attacks(build_all(kb)) == set()

    def test_disjoint_vocabularies(self):
        kb = kb_of(beliefs=[("b", 1, 1), ("c", 1, 1)], goals=["g", "h"],
                   rules=[{"id": "r1", "head": "g", "beliefs": ["b"]},
                          {"id": "r2", "head": "h", "beliefs": ["c"]}])
        assert terminal_attacks(build_all(kb)) == set()

    def test_claim_against_support(self):
        # h's plan relies on ~g while another argument claims g
        kb = kb_of(beliefs=[("b", 1, 1), ("c", 1, 1)], goals=["g", "h"],
                   rules=[{"id": "g1", "head": "g", "beliefs": ["b"]},
                          {"id": "ng", "head": "~g", "beliefs": ["c"]},
                          {"id": "h1", "head": "h", "goals": ["~g"]}])
        args = build_all(kb)
        g, h, ng = ids(args, "g", "h", "~g")
        assert {(g, h), (h, g), (g, ng), (ng, g)} <= terminal_attacks(args)


class TestSuperfluous:
    def test_alternative_plans_for_one_end(self):
        kb = kb_of(beliefs=[("dirt", 0.9, 1)], actions=[("sweep", 1, 1), ("mop", 0.8, 1)],
                   goals=["clean_4_5"],
                   rules=[{"id": "by_sweeping", "head": "clean_4_5", "beliefs": ["dirt"],
                           "actions": ["sweep"]},
                          {"id": "by_mopping", "head": "clean_4_5", "beliefs": ["dirt"],
                           "actions": ["mop"]}])
        assert superfluous_attacks(build_all(kb)) == {("A", "B"), ("B", "A")}

    def test_no_self_attack(self, cleaner_args):
        for rel in (terminal_attacks(cleaner_args), superfluous_attacks(cleaner_args)):
            assert all(x != y for x, y in rel)

    def test_shared_subplan_is_one_argument(self):
        # two routes to the same h-subtree produce one object, not two
        kb = kb_of(beliefs=[("b", 1, 1)], goals=["g", "h", "k"],
                   rules=[{"id": "h1", "head": "h", "beliefs": ["b"]},
                          {"id": "g1", "head": "g", "goals": ["h"]},
                          {"id": "k1", "head": "k", "goals": ["h"]}])
        args = build_all(kb)
        assert len(args.for_claim("h")) == 1
        assert superfluous_attacks(args) == set()


class TestMerge:
    def test_one_attack_per_pair_with_all_types(self):
        out = merge({T: {("G", "F")}, S: {("G", "F"), ("F", "G")}})
        assert out == [Attack("F", "G", frozenset({S})), Attack("G", "F", frozenset({T, S}))]
        assert out[1].to_dict() == {"attacker": "G", "target": "F",
                                    "types": ["superfluous", "terminal"]}

    def test_disjoint_relations_add_up(self):
        assert len(merge({T: {("A", "B")}, R: {("B", "C")}, S: {("C", "D")}})) == 3

    def test_empty(self, cleaner):
        assert all_attacks([], cleaner) == []

    def test_resource_and_terminal_together(self):
        kb = kb_of(beliefs=[("b", 1, 1), ("~b", 1, 1)], goals=["g", "h"],
                   resources=[("battery", 100)],
                   rules=[{"id": "r1", "head": "g", "beliefs": ["b"], "needs": {"battery": 70}},
                          {"id": "r2", "head": "h", "beliefs": ["~b"], "needs": {"battery": 70}}])
        out = all_attacks(build_all(kb), kb)
        assert [a.types for a in out] == [frozenset({T, R})] * 2


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 100_000))
def test_detectors_match_definitions(seed):
    kb = random_kb(seed)
    try:
        args = build_all(kb, max_args=60)
    except ArgumentLimitError:
        return
    t, r, s = terminal_attacks(args), resource_attacks(args, kb), superfluous_attacks(args)
    assert t == oracles.terminal(args)
    assert r == oracles.resource(args, kb)
    assert s == oracles.superfluous(args)
    for rel in (t, r, s):
        assert all((y, x) in rel for x, y in rel)
        assert all(x != y for x, y in rel)
