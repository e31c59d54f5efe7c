"""
Checking the rationality postulates on random agents
====================================================

Direct consistency always holds. Closure under the plan rules does not:
a conflict-free set can contain the whole body of a rule whose head it
never argues for.
"""

from collections import Counter

from goalselect import build_all, build_framework, conflict_free, successful_filter
from goalselect.postulates import verify_extension
from goalselect.randkb import random_kb

failures, checked, shown = Counter(), 0, 0
for seed in range(300):
    kb = random_kb(seed)
    args = build_all(kb)
    if len(args) > 12:
        continue
    af = successful_filter(build_framework(args, kb), kb)
    for ext in conflict_free(af, kb):
        members = [af.argument(x) for x in sorted(ext.members)]
        checked += 1
        for v in verify_extension(members, kb):
            if not v.passed:
                failures[v.name] += 1
                if shown < 3:
                    shown += 1
                    print(f"seed {seed} {ext} {v.name}: {[str(w) for w in v.witnesses]}")

print(checked, "extensions;", dict(failures) or "no failures")
