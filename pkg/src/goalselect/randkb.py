"""Random small knowledge bases for fuzzing and property tests.

Generator policy: at most 10 atoms (beliefs, actions, goals) plus up to two
resources, at most 8 rules, rule fan-in up to 4, interval bounds on a 0.05
grid. Goal dependencies follow a random topological order, so every
generated base is acyclic and valid.
"""

from __future__ import annotations

import random

from .kb import (ACTION, BELIEF, GoalDecl, KnowledgeBase, Literal, PlanRule,
                 ProbFact, ResourceDecl, validate)
from .probability import ProbInterval

GRID = 0.05


def _grid(rng: random.Random, lo: float = 0.0, hi: float = 1.0) -> float:
    k0, k1 = round(lo / GRID), round(hi / GRID)
    return round(rng.randint(k0, k1) * GRID, 10)


def _interval(rng: random.Random, min_lower: float = 0.0) -> ProbInterval:
    l = _grid(rng, min_lower, 1.0)
    return ProbInterval(l, _grid(rng, l, 1.0))


def random_kb(seed: int | random.Random | None = None, max_atoms: int = 10,
              max_rules: int = 8) -> KnowledgeBase:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    n_atoms = rng.randint(4, max_atoms)
    n_goals = rng.randint(2, max(2, min(5, n_atoms - 2)))
    n_actions = rng.randint(1, max(1, min(2, n_atoms - n_goals - 1)))
    n_beliefs = max(1, n_atoms - n_goals - n_actions)

    goals = [f"g{i}" for i in range(n_goals)]
    bel_atoms = [f"b{i}" for i in range(n_beliefs)]
    act_atoms = [f"a{i}" for i in range(n_actions)]

    facts = []
    for kind, atoms in ((BELIEF, bel_atoms), (ACTION, act_atoms)):
        for atom in atoms:
            signs = rng.choice([(True,), (True,), (False,), (True, False)])
            for s in signs:
                facts.append(ProbFact(Literal(atom, s), _interval(rng, 0.3), kind))

    resources = [ResourceDecl(f"res{i}", float(_grid(rng, 0.5, 1.0) * 100))
                 for i in range(rng.randint(1, 2))]

    order = goals[:]
    rng.shuffle(order)
    rank = {g: i for i, g in enumerate(order)}

    stated = {f.literal for f in facts}

    def pick_literals(atoms, k, neg_p):
        chosen = rng.sample(atoms, min(k, len(atoms)))
        return [Literal(a, rng.random() >= neg_p) for a in chosen]

    def pick_facts(atoms, k):
        # mostly literals that have a fact, sometimes an unsupported one
        out = []
        for a in rng.sample(atoms, min(k, len(atoms))):
            options = [x for x in (Literal(a), Literal(a, False)) if x in stated]
            if options and rng.random() < 0.9:
                out.append(rng.choice(options))
            else:
                out.append(Literal(a, rng.random() < 0.5))
        return out

    rules = []
    for i in range(rng.randint(1, max_rules)):
        head_atom = rng.choice(goals)
        below = [g for g in goals if rank[g] > rank[head_atom]]
        body_goals = pick_literals(below, rng.choice([0, 0, 1, 1, 2]), 0.2)
        beliefs = pick_facts(bel_atoms, rng.choice([0, 1, 1, 2]))
        actions = pick_facts(act_atoms, rng.choice([0, 0, 1]))
        if not (body_goals or beliefs or actions):
            beliefs = pick_facts(bel_atoms, 1)
        needs = {}
        for res in resources:
            if rng.random() < 0.4:
                needs[res.name] = float(rng.randint(1, 12) * 5)
        rules.append(PlanRule(
            id=f"r{i}",
            head=Literal(head_atom, rng.random() >= 0.2),
            beliefs=tuple(beliefs), goals=tuple(body_goals), actions=tuple(actions),
            interval=_interval(rng, 0.4),
            needs=tuple(needs.items()),
        ))

    positive_heads = sorted({r.head.atom for r in rules if r.head.positive})
    decls = [GoalDecl(g, _grid(rng), g in positive_heads and rng.random() < 0.6)
             for g in goals]

    kb = KnowledgeBase(
        tuple(f for f in facts if f.kind == BELIEF),
        tuple(f for f in facts if f.kind == ACTION),
        tuple(decls), tuple(resources), tuple(rules),
    )
    validate(kb)
    return kb
