"""Exact class functions of Z_k wr S_n defined by color rules.

Thin python surface over the C++ core: shapes travel as nested lists like
[[3,1],[],[2,2]], exact values as the library's text forms ("z3" is a
primitive root of unity, "q^-2" a Laurent monomial).
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _doc
except ImportError:  # in-tree build: the extension sits next to the package
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _doc

__all__ = [
    "partitions",
    "partition_tuples",
    "class_size",
    "character_value",
    "character_table",
    "decompose_rule",
    "decompose_rule_json",
    "evaluate_rule",
    "tensor_support",
    "refined_ehrhart",
    "q_binomial",
    "frobenius_decompose",
    "wreath_stats",
    "colored_rsk",
    "cycles",
    "class_type",
    "verify_multischur",
    "verify_euler_mahonian",
    "run_acceptance",
    "BudgetError",
]
