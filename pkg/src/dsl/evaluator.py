"""
Set expression evaluator

Walks an ExprAst and evaluates it exactly through the set-algebra operations.
"""

import logging
from typing import Mapping

from src.dsl.parser import BinaryOp, ExprAst, FoldProduct, FoldSum, SetLiteral, SetName, parse_expr
from src.sets.scalar_set import DEFAULT_SIZE_CAP, ScalarSet, kfold_product, kfold_sum, pairwise


logger = logging.getLogger(__name__)


class EvaluationError(ValueError):
    """Expression refers to a set that is not bound"""


def eval_expr(node: ExprAst, env: Mapping[str, ScalarSet], size_cap: int = DEFAULT_SIZE_CAP) -> ScalarSet:
    """
    Evaluate node with set names resolved in env

    Raises:
        EvaluationError: On an unbound name
        ValueError: On kind mismatch or an empty quotient
        SizeCapExceeded: If an intermediate grid is too large
    """
    if isinstance(node, SetName):
        if node.name not in env:
            raise EvaluationError(f"unbound set name {node.name!r}")
        return env[node.name]
    if isinstance(node, SetLiteral):
        return ScalarSet(node.elements)
    if isinstance(node, BinaryOp):
        left = eval_expr(node.left, env, size_cap)
        right = eval_expr(node.right, env, size_cap)
        result = pairwise(left, right, node.op, size_cap)
        if result.skipped_pairs:
            logger.debug(f"Skipped {result.skipped_pairs} pair(s) with a zero denominator")
        return result.result
    if isinstance(node, FoldSum):
        return kfold_sum(eval_expr(node.expr, env, size_cap), node.k, size_cap=size_cap).exact
    if isinstance(node, FoldProduct):
        return kfold_product(eval_expr(node.expr, env, size_cap), node.k, size_cap)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(src: str, env: Mapping[str, ScalarSet], size_cap: int = DEFAULT_SIZE_CAP) -> ScalarSet:
    return eval_expr(parse_expr(src), env, size_cap)
