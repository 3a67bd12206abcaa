"""Command-line interface and body-expression language."""
from .evaluate import RunConfig, eval_expr
from .parser import Apply, ExprError, ParseError, Primitive, parse_expr, print_expr
