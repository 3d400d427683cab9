"""
Expression DSL Module

Parser, printer and evaluator for set expressions such as "(A+A)/(A+A)".
"""

from .parser import (
    ParseError,
    SetName,
    SetLiteral,
    BinaryOp,
    FoldSum,
    FoldProduct,
    ExprAst,
    parse_expr,
    print_expr,
    free_names,
)
from .evaluator import EvaluationError, eval_expr, evaluate

__all__ = [
    'ParseError',
    'SetName',
    'SetLiteral',
    'BinaryOp',
    'FoldSum',
    'FoldProduct',
    'ExprAst',
    'parse_expr',
    'print_expr',
    'free_names',
    'EvaluationError',
    'eval_expr',
    'evaluate',
]
