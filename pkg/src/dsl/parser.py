"""
Set expression parser

Grammar (left-associative, "*" and "/" bind tighter than "+" and "-"):

    expr := term {("+" | "-") term}
    term := atom {("*" | "/") atom}
    atom := NAME | "{" scalar {"," scalar} "}" | "(" expr ")"
          | "sum(" INT "," expr ")" | "prod(" INT "," expr ")"

"/" is the elementwise ratio set, not scalar division. sum(k, E) is the
k-fold sumset and prod(k, E) the k-fold product set. The unicode operators
−, ×, ÷ are accepted as aliases.

Example:
    ast = parse_expr("sum(4, prod(2, A))")
    print_expr(ast)            # 'sum(4, prod(2, A))'
    parse_expr("(A+A)/(A+A)")  # BinaryOp(SetOp.DIV, ...)
"""

from dataclasses import dataclass
from typing import Optional, Set, Tuple, Union

from src.arith.scalars import Scalar, format_scalar, parse_scalar
from src.sets.scalar_set import SetOp


class ParseError(ValueError):
    """Syntax error at a character offset"""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


@dataclass(frozen=True)
class SetName:
    name: str


@dataclass(frozen=True)
class SetLiteral:
    elements: Tuple[Scalar, ...]


@dataclass(frozen=True)
class BinaryOp:
    op: SetOp
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class FoldSum:
    k: int
    expr: "ExprAst"


@dataclass(frozen=True)
class FoldProduct:
    k: int
    expr: "ExprAst"


ExprAst = Union[SetName, SetLiteral, BinaryOp, FoldSum, FoldProduct]

_ADDITIVE = {"+": SetOp.ADD, "-": SetOp.SUB, "−": SetOp.SUB}
_MULTIPLICATIVE = {"*": SetOp.MUL, "/": SetOp.DIV, "×": SetOp.MUL, "÷": SetOp.DIV}
_FOLDS = {"sum": FoldSum, "prod": FoldProduct}


class _Parser:
    """Scannerless recursive descent over the source string"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, offset: Optional[int] = None) -> ParseError:
        return ParseError(message, self.pos if offset is None else offset)

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise self.error(f"expected {char!r}, found {found!r}")
        self.pos += 1

    def parse(self) -> ExprAst:
        node = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.peek() in _ADDITIVE:
            op = _ADDITIVE[self.text[self.pos]]
            self.pos += 1
            node = BinaryOp(op, node, self.term())
        return node

    def term(self) -> ExprAst:
        node = self.atom()
        while self.peek() in _MULTIPLICATIVE:
            op = _MULTIPLICATIVE[self.text[self.pos]]
            self.pos += 1
            node = BinaryOp(op, node, self.atom())
        return node

    def atom(self) -> ExprAst:
        char = self.peek()
        if not char:
            raise self.error("expected an operand, found end of input")
        if char == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if char == "{":
            return self.literal()
        if char.isalpha() or char == "_":
            return self.name_or_fold()
        raise self.error(f"expected an operand, found {char!r}")

    def identifier(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def name_or_fold(self) -> ExprAst:
        word = self.identifier()
        if word in _FOLDS and self.peek() == "(":
            self.pos += 1
            k = self.fold_count()
            self.expect(",")
            inner = self.expr()
            self.expect(")")
            return _FOLDS[word](k, inner)
        return SetName(word)

    def fold_count(self) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a fold count")
        k = int(self.text[start:self.pos])
        if k < 1:
            raise self.error("fold count must be >= 1", start)
        return k

    def literal(self) -> SetLiteral:
        open_at = self.pos
        self.pos += 1
        depth = 0
        items, start = [], self.pos
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated set literal", open_at)
            char = self.text[self.pos]
            if char == "(":
                depth += 1
            elif char == ")":
                depth -= 1
            elif depth == 0 and char in ",}":
                items.append((start, self.text[start:self.pos]))
                start = self.pos + 1
                if char == "}":
                    self.pos += 1
                    break
            self.pos += 1

        elements = []
        for offset, item in items:
            if not item.strip():
                raise self.error("empty element in set literal", offset)
            try:
                elements.append(parse_scalar(item))
            except (ValueError, ZeroDivisionError) as e:
                raise self.error(f"bad scalar {item.strip()!r} ({e})", offset) from e
        return SetLiteral(tuple(elements))


def parse_expr(src: str) -> ExprAst:
    """
    Parse a set expression

    Raises:
        ParseError: On a syntax error (offset is 0-based) or a fold count < 1
    """
    return _Parser(src).parse()


_PRECEDENCE = {SetOp.ADD: 1, SetOp.SUB: 1, SetOp.MUL: 2, SetOp.DIV: 2}


def _precedence(node: ExprAst) -> int:
    return _PRECEDENCE[node.op] if isinstance(node, BinaryOp) else 3


def print_expr(node: ExprAst) -> str:
    """Canonical text with the fewest parentheses that reparse to the same tree"""
    if isinstance(node, SetName):
        return node.name
    if isinstance(node, SetLiteral):
        return "{" + ", ".join(format_scalar(e) for e in node.elements) + "}"
    if isinstance(node, FoldSum):
        return f"sum({node.k}, {print_expr(node.expr)})"
    if isinstance(node, FoldProduct):
        return f"prod({node.k}, {print_expr(node.expr)})"

    level = _PRECEDENCE[node.op]
    left = print_expr(node.left)
    right = print_expr(node.right)
    if _precedence(node.left) < level:
        left = f"({left})"
    if _precedence(node.right) <= level:
        right = f"({right})"
    return f"{left}{node.op.value}{right}"


def free_names(node: ExprAst) -> Set[str]:
    if isinstance(node, SetName):
        return {node.name}
    if isinstance(node, BinaryOp):
        return free_names(node.left) | free_names(node.right)
    if isinstance(node, (FoldSum, FoldProduct)):
        return free_names(node.expr)
    return set()
