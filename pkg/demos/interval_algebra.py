"""
Propagating probability intervals through a plan
================================================
"""

from goalselect.probability import CERTAIN, ProbInterval, conjoin, modus_ponens

# premises of a rule are conjoined without assuming independence
premises = [ProbInterval(0.8, 1.0), ProbInterval(0.54, 1.0), ProbInterval(0.96, 1.0)]
body = conjoin(premises)
print("body:", body)

# a certain rule passes the body bound straight through
print("certain rule:", modus_ponens(CERTAIN, body))

# a shakier rule widens the conclusion
print("rule [0.7, 0.9], premise [0.8, 1]:", modus_ponens(ProbInterval(0.7, 0.9), ProbInterval(0.8, 1.0)))

# more premises can only lower the lower bound
acc = []
for iv in [ProbInterval(0.95, 1.0)] * 6:
    acc.append(iv)
    print(len(acc), "premises ->", conjoin(acc))
