"""Goal selection for agents whose plans are uncertain, structured arguments."""

import logging

from .arguments import Argument, ArgumentSet, ElementaryArgument, build_all, list_res_arg, need_res
from .attacks import Attack, AttackType, all_attacks, resource_attacks, superfluous_attacks, terminal_attacks
from .fixtures import load_fixture
from .kb import KnowledgeBase, Literal, PlanRule, load, load_spec, loads, serialize
from .postulates import (check_closure, check_direct_consistency, check_indirect_consistency,
                         closure_pr, support_projections, verify)
from .probability import ProbInterval, conjoin, modus_ponens
from .semantics import (ArgumentationFramework, Extension, build_framework, comp_goals,
                        conflict_free, max_goal, max_util, select, successful_filter, to_dot)
from .strength import (StrengthVector, UtilityValue, cost, logical_strength, prefer_logical,
                       prefer_utility, utility)

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())
