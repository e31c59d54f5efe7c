"""
Choosing goals for a cleaning robot
===================================

The robot wants to get fixed and to clean cell (1,3). Both plans are
uncertain, and they disagree about whether the robot is operative.
"""

from goalselect import load_fixture, select
from goalselect.strength import logical_strength, utility

kb = load_fixture("cleaner")
report = select(kb)

# every plan (and sub-plan) the robot can build
for a in report.arguments:
    s, u = logical_strength(a), utility(a, kb)
    print(f"{a.id}: {a.claim!s:<10} {a.claim_interval}  co={s.co:.4f}  utility={u.value:.4f}")

# attacks, then only those that succeed
print("attacks:   ", sorted(report.framework.pairs))
print("successful:", sorted(report.filtered.pairs))

# conflict-free sets and the winners of the two selection steps
print("CF  :", " ".join(map(str, report.cf)))
print("CF' :", " ".join(map(str, report.cf_max_goal)))
print("CF'':", " ".join(map(str, report.cf_max_util)))

# goals the robot can keep pursuing together
for goals in report.compatible_goals:
    print("compatible:", ", ".join(sorted(map(str, goals))))
