"""
Why some attacks survive
========================

Two attacks between the same pair only keep the direction whose attacker
is not beaten, logically or by utility.
"""

from goalselect import build_all, load_fixture
from goalselect.attacks import all_attacks
from goalselect.strength import compare_strength, StrengthVector, prefer_logical, prefer_utility

kb = load_fixture("cleaner")
args = {a.id: a for a in build_all(kb)}

for att in all_attacks(list(args.values()), kb):
    a, b = args[att.attacker], args[att.target]
    print(f"{att.attacker}->{att.target} {sorted(map(str, att.types))}: "
          f"logical {prefer_logical(a, b):+d}, utility {prefer_utility(a, b, kb):+d}")

# equal CO with crossed PR/LO is a tie unless a tiebreak is chosen
x, y = StrengthVector(0.24, 0.6, 0.4), StrengthVector(0.24, 0.4, 0.6)
print("verbatim:", compare_strength(x, y), " pr first:", compare_strength(x, y, "pr"),
      " lo first:", compare_strength(x, y, "lo"))
