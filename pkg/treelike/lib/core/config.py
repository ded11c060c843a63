import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import yacs.config as config

from treelike.lib.core.errors import BudgetExceededError

_log = logging.getLogger(__name__)

# Enumeration budgets. Every exhaustive operation refuses to go beyond these unless the
# configuration is explicitly changed.
root = config.CfgNode()
root.max_size = 8
root.max_sym_half_size = 6
root.max_square_half_size = 5
root.max_bijection_size = 7
default_budget_config = root

# Parallel aggregation of statistics. The history tree is cut at 'prefix_depth' and every
# prefix is handed to a joblib worker. n_jobs = 1 keeps everything in-process.
root = config.CfgNode()
root.n_jobs = 1
root.prefix_depth = 3
root.backend = "loky"
default_parallel_config = root

root = config.CfgNode()
root.digits_shorthand_max = 9
default_output_config = root

default_config = config.CfgNode()
default_config.budget = default_budget_config
default_config.parallel = default_parallel_config
default_config.output = default_output_config
default_config.set_new_allowed(False)
default_config.freeze()
del root


def load_config(path: Optional[Union[str, Path]] = None,
                overrides: Optional[Sequence[str]] = None) -> config.CfgNode:
    """ Clone the default configuration and merge, in this order, the YAML file at 'path'
    and a flat list of alternating keys and values such as
    ["budget.max_size", "9"]. The returned node is frozen. """

    cfg = default_config.clone()
    cfg.defrost()
    if path is not None:
        cfg.merge_from_file(str(path))
    if overrides:
        cfg.merge_from_list(list(overrides))

    for key in default_budget_config.keys():
        new, old = cfg.budget[key], default_budget_config[key]
        if new > old:
            _log.warning(f"Budget 'budget.{key}' raised from {old} to {new}. Exhaustive "
                         f"enumeration grows factorially, expect long runtimes.")

    cfg.freeze()
    return cfg


def check_budget(cfg: config.CfgNode, key: str, requested: int, what: str) -> int:
    """ Raise BudgetExceededError if 'requested' is above cfg.budget[key]. """

    limit = cfg.budget[key]
    if requested > limit:
        raise BudgetExceededError(what, requested, limit, f"budget.{key}")
    return requested
