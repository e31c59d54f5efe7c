"""Brute-force reference implementations used only by the tests.

Each oracle re-derives its answer straight from the definitions and shares
no helper code with the package beyond the data classes it reads.
"""

import itertools


# -- intervals ---------------------------------------------------------------

def mp_bounds(rule_l, rule_u, prem_l):
    return rule_l * prem_l, 1 - prem_l + rule_u * prem_l


def frechet_lower(lowers):
    return max(0.0, sum(lowers) - (len(lowers) - 1))


# -- argument enumeration ----------------------------------------------------

def enumerate_arguments(kb):
    """Bottom-up fixpoint over all support combinations.

    Returns ``{preorder rule chain: (claim, (l, u))}``.
    """
    facts = {}
    for f in kb.beliefs:
        facts[("belief", f.literal)] = (f.interval.l, f.interval.u)
    for f in kb.actions:
        facts[("action", f.literal)] = (f.interval.l, f.interval.u)

    # tree: (rule, children trees), info: (claim, lower, upper, literals)
    known = {}
    changed = True
    while changed:
        changed = False
        for rule in kb.rules:
            leaf = []
            ok = True
            for kind, part in (("belief", rule.beliefs), ("action", rule.actions)):
                for x in part:
                    if (kind, x) not in facts:
                        ok = False
                    else:
                        leaf.append((x, facts[(kind, x)]))
            if not ok:
                continue
            options = [[k for k, v in known.items() if v[0] == g] for g in rule.goals]
            for combo in itertools.product(*options):
                chain = (rule.id,) + tuple(itertools.chain.from_iterable(combo))
                if chain in known:
                    continue
                lowers = [iv[0] for _, iv in leaf] + [known[c][1] for c in combo]
                lo, up = mp_bounds(rule.interval.l, rule.interval.u, frechet_lower(lowers))
                literals = {rule.head} | {x for x, _ in leaf}
                for c in combo:
                    literals |= known[c][3]
                if any(x.complement() in literals for x in literals):
                    continue
                known[chain] = (rule.head, lo, up, frozenset(literals))
                changed = True
    return {k: (v[0], (v[1], v[2])) for k, v in known.items()}


# -- tree views --------------------------------------------------------------

def walk(a):
    yield a
    for g in a.goals:
        yield from walk(g)


def sub_ids(a):
    return {n.id for g in a.goals for n in walk(g)}


def support_literals(a):
    out = set()
    for n in walk(a):
        out.add(n.rule.head)
        out.update(n.rule.beliefs)
        out.update(n.rule.actions)
    return out


def support_elements(a):
    out = set()
    for n in walk(a):
        out.add(("rule", n.rule.id, n.rule.head, n.claim_interval.l, n.claim_interval.u))
        for e in n.beliefs + n.actions:
            out.add(("fact", e.claim, e.interval.l, e.interval.u))
    return out


def needs(a):
    total = {}
    for n in walk(a):
        for res, amount in n.rule.needs:
            total[res] = total.get(res, 0.0) + amount
    return total


# -- attacks -----------------------------------------------------------------

def inheritance_fixpoint(base, args):
    subs = {a.id: sub_ids(a) for a in args}
    present = {a.id for a in args}
    rel = set(base)
    while True:
        new = set()
        for x, y in rel:
            for c in subs[y] & present:
                new |= {(x, c), (c, x)}
                for d in subs[x] & present:
                    new |= {(c, d), (d, c)}
        new = {p for p in new if p[0] != p[1]}
        if new <= rel:
            return rel
        rel |= new


def terminal(args):
    base = set()
    for a, b in itertools.permutations(args, 2):
        if a.rule.head == b.rule.head:
            continue
        sa, sb = support_literals(a), support_literals(b)
        if any(x.complement() in sb for x in sa):
            base.add((a.id, b.id))
    return inheritance_fixpoint(base, args)


def superfluous(args):
    base = set()
    for a, b in itertools.permutations(args, 2):
        if a.rule.head == b.rule.head and support_elements(a) != support_elements(b):
            base.add((a.id, b.id))
    return inheritance_fixpoint(base, args)


def resource(args, kb):
    avail = {r.name: r.amount for r in kb.resources}
    out = set()
    for a, b in itertools.permutations(args, 2):
        if a.rule.head == b.rule.head:
            continue
        na, nb = needs(a), needs(b)
        for res in na:
            if na[res] > 0 and nb.get(res, 0) > 0 and na[res] + nb[res] > avail[res]:
                out.add((a.id, b.id))
    return out


# -- semantics ---------------------------------------------------------------

def conflict_free_sets(ids, pairs):
    out = set()
    for k in range(len(ids) + 1):
        for combo in itertools.combinations(ids, k):
            s = set(combo)
            if not any(x in s and y in s for x, y in pairs):
                out.add(frozenset(combo))
    return out


def has_cycle(graph):
    """True when some node reaches itself (plain reachability per node)."""
    for start in graph:
        frontier, seen = list(graph[start]), set()
        while frontier:
            n = frontier.pop()
            if n == start:
                return True
            if n in seen:
                continue
            seen.add(n)
            frontier.extend(graph.get(n, ()))
    return False


def closure(literals, rules):
    out = set(literals)
    while True:
        fired = {r.head for r in rules if set(r.body) <= out} - out
        if not fired:
            return out
        out |= fired


# -- preferences -------------------------------------------------------------

def strength(a):
    l, u = a.claim_interval.l, a.claim_interval.u
    pr, lo = 1 - (u - l), (l + u) / 2
    return pr * lo, pr, lo


def utility(a, kb):
    prefs = {g.name: g.pref for g in kb.goals}
    atoms = {n.rule.head.atom for n in walk(a)}
    return sum(prefs[g] for g in atoms) + strength(a)[0] - sum(needs(a).values())


def succeeds(a, b, kb, tol=1e-9):
    (ca, pa, la), (cb, pb, lb) = strength(a), strength(b)
    logical = ca > cb + tol or (abs(ca - cb) <= tol and (
        (abs(pa - pb) <= tol and la > lb + tol) or (abs(la - lb) <= tol and pa > pb + tol)))
    return logical or utility(a, kb) > utility(b, kb) + tol


def filtered(pairs, args, kb):
    by_id = {a.id: a for a in args}
    keep = set()
    for x, y in pairs:
        forward = succeeds(by_id[x], by_id[y], kb)
        backward = succeeds(by_id[y], by_id[x], kb)
        if forward or not backward:
            keep.add((x, y))
    return keep
