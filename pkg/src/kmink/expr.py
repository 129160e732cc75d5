"""Expression grammar: lexer, recursive-descent parser, renderer, evaluator.

The published grammar, round-trip safe (parse(render(ast)) == ast):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | power
    power   := atom ('^' sint)?
    atom    := NUMBER 'i'? | symbol | '(' expr ')' | '[' expr ',' expr ']'
             | ('star' | 'd') '(' expr ')'
             | ('wedge' | 'act') '(' expr ',' expr ')'
    symbol  := 'kappa' | 'box' | 'x0'..'x3' | 'P0'..'P3'
             | 'k[' sint ',' int ']' | 'E[' sint ']' | 'Exp[' sint ']'
             | 'W[' sint ']' | 'tau[' int ']' | 'del[' int ']' | 'e[' int ']'
             | 'f[' int ',' int ']'
             | 'W{' expr ';' expr ';' expr ';' expr '}'
    NUMBER  := INT ('/' INT)?

`[A,B]` is the commutator; products are left associative.  The W{...}
literal names an arbitrary ordered plane wave (three spatial entries and
an integer combination of time symbols) so every engine value renders
back into the grammar.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import momentum as mom
from .action import HeisenbergElement, act
from .forms import OneForm, TwoForm, exterior_d
from .minkowski import PlaneWave, PositionElement
from .scalars import GaussianRational, ScalarValue


class ExprError(ValueError):
    """Positioned syntax or semantic error in an expression."""

    def __init__(self, message, pos=None, where=None):
        self.pos = pos
        if where is not None:
            line, col = where
            super().__init__(f"{message} (line {line}, column {col})")
        elif pos is not None:
            super().__init__(f"{message} (at offset {pos})")
        else:
            super().__init__(message)


def _line_col(text, pos):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    re: Fraction
    im: Fraction = Fraction(0)


@dataclass(frozen=True)
class Sym:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class WaveLit:
    spatial: tuple  # three sub-expressions
    time: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Neg:
    value: object


@dataclass(frozen=True)
class Star:
    value: object


@dataclass(frozen=True)
class ExtD:
    value: object


@dataclass(frozen=True)
class Wedge:
    left: object
    right: object


@dataclass(frozen=True)
class Act:
    left: object
    right: object


@dataclass(frozen=True)
class Comm:
    left: object
    right: object


# -- lexer ----------------------------------------------------------------------

_PUNCT = set("+-*^()[]{},;")


def _lex(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _PUNCT:
            tokens.append((c, c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = text[i:j]
            den = None
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                j += 1
                k = j
                while k < n and text[k].isdigit():
                    k += 1
                den = text[j:k]
                j = k
            imag = False
            if j < n and text[j] == "i" and not (j + 1 < n and text[j + 1].isalnum()):
                imag = True
                j += 1
            value = Fraction(int(num), int(den) if den else 1)
            tokens.append(("NUM", (value, imag), i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("IDENT", text[i:j], i))
            i = j
            continue
        raise ExprError(f"unexpected character {c!r}", i)
    tokens.append(("EOF", None, n))
    return tokens


# -- parser ---------------------------------------------------------------------

_INDEXED = {
    # name -> (number of bracket args, validator)
    "k": (2, lambda a: 0 <= a[1] <= 3),
    "E": (1, lambda a: True),
    "Exp": (1, lambda a: True),
    "W": (1, lambda a: True),
    "tau": (1, lambda a: 0 <= a[0] <= 4),
    "del": (1, lambda a: 0 <= a[0] <= 4),
    "e": (1, lambda a: 0 <= a[0] <= 4),
    "f": (2, lambda a: 0 <= a[0] <= 4 and 0 <= a[1] <= 4),
}

_PLAIN = {"kappa", "box", "x0", "x1", "x2", "x3", "P0", "P1", "P2", "P3"}

_UNARY_FUNCS = {"star": Star, "d": ExtD}
_BINARY_FUNCS = {"wedge": Wedge, "act": Act}


class _Parser:
    def __init__(self, text):
        self.tokens = _lex(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExprError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ExprError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.next()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        if self.peek()[0] == "-":
            self.next()
            return Neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.next()
            return Pow(base, self.signed_int())
        return base

    def signed_int(self):
        neg = False
        if self.peek()[0] == "-":
            self.next()
            neg = True
        tok = self.expect("NUM")
        value, imag = tok[1]
        if imag or value.denominator != 1:
            raise ExprError("exponents must be integers", tok[2])
        return -int(value) if neg else int(value)

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "NUM":
            self.next()
            frac, imag = value
            return Num(Fraction(0), frac) if imag else Num(frac)
        if kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "[":
            self.next()
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Comm(left, right)
        if kind == "IDENT":
            return self.symbol_or_call()
        raise ExprError(f"unexpected token {value!r}", pos)

    def symbol_or_call(self):
        kind, name, pos = self.next()
        if name in _UNARY_FUNCS:
            self.expect("(")
            node = self.expr()
            self.expect(")")
            return _UNARY_FUNCS[name](node)
        if name in _BINARY_FUNCS:
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return _BINARY_FUNCS[name](left, right)
        if name in _PLAIN:
            return Sym(name)
        if name == "W" and self.peek()[0] == "{":
            self.next()
            entries = [self.expr()]
            for _ in range(3):
                self.expect(";")
                entries.append(self.expr())
            self.expect("}")
            return WaveLit(tuple(entries[:3]), entries[3])
        if name in _INDEXED:
            nargs, validate = _INDEXED[name]
            self.expect("[")
            args = [self.signed_int()]
            for _ in range(nargs - 1):
                self.expect(",")
                args.append(self.signed_int())
            tok = self.expect("]")
            if not validate(args):
                raise ExprError(f"index out of range in {name}{args}", pos)
            return Sym(name, tuple(args))
        raise ExprError(f"unknown symbol {name!r}", pos)


def parse(text):
    """Parse grammar text into an AST; raises ExprError with line/column."""
    try:
        return _Parser(text).parse()
    except ExprError as exc:
        if exc.pos is None:
            raise
        raise ExprError(str(exc).rsplit(" (at offset", 1)[0],
                        exc.pos, _line_col(text, exc.pos)) from None


# -- renderer ---------------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW = 1, 2, 3, 4


def _prec(node):
    if isinstance(node, (Add, Sub)):
        return _PREC_ADD
    if isinstance(node, Mul):
        return _PREC_MUL
    if isinstance(node, Neg):
        return _PREC_NEG
    if isinstance(node, Pow):
        return _PREC_POW
    return 5


def render(node):
    """Canonical text for an AST; inverse of parse on the node structure."""
    if isinstance(node, Num):
        if node.im:
            return f"{node.im}i" if not node.re else f"({node.re} + {node.im}i)"
        return str(node.re)
    if isinstance(node, Sym):
        if node.args:
            return f"{node.name}[{','.join(str(a) for a in node.args)}]"
        return node.name
    if isinstance(node, WaveLit):
        inner = "; ".join(render(e) for e in node.spatial) + "; " + render(node.time)
        return "W{" + inner + "}"
    if isinstance(node, Add):
        return f"{_wrap(node.left, _PREC_ADD)} + {_wrap(node.right, _PREC_ADD + 1)}"
    if isinstance(node, Sub):
        return f"{_wrap(node.left, _PREC_ADD)} - {_wrap(node.right, _PREC_ADD + 1)}"
    if isinstance(node, Mul):
        return f"{_wrap(node.left, _PREC_MUL)} * {_wrap(node.right, _PREC_MUL + 1)}"
    if isinstance(node, Neg):
        return f"-{_wrap(node.value, _PREC_NEG)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base, _PREC_POW + 1)}^{node.exp}"
    if isinstance(node, Star):
        return f"star({render(node.value)})"
    if isinstance(node, ExtD):
        return f"d({render(node.value)})"
    if isinstance(node, Wedge):
        return f"wedge({render(node.left)}, {render(node.right)})"
    if isinstance(node, Act):
        return f"act({render(node.left)}, {render(node.right)})"
    if isinstance(node, Comm):
        return f"[{render(node.left)}, {render(node.right)}]"
    raise TypeError(f"cannot render {type(node).__name__}")


def _wrap(node, min_prec):
    text = render(node)
    return f"({text})" if _prec(node) < min_prec else text


# -- evaluator ---------------------------------------------------------------------


class EvalError(ValueError):
    pass


def _is_scalar(v):
    return isinstance(v, ScalarValue)


def evaluate(node):
    """Evaluate an AST into a scalar, momentum, position, form or mixed word."""
    if isinstance(node, Num):
        return ScalarValue.from_gaussian(GaussianRational(node.re, node.im))
    if isinstance(node, Sym):
        return _eval_symbol(node)
    if isinstance(node, WaveLit):
        return _eval_wave(node)
    if isinstance(node, Add):
        return _add(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Sub):
        return _add(evaluate(node.left), _neg(evaluate(node.right)))
    if isinstance(node, Mul):
        return _mul(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Neg):
        return _neg(evaluate(node.value))
    if isinstance(node, Pow):
        return _pow(evaluate(node.base), node.exp)
    if isinstance(node, Star):
        return _star(evaluate(node.value))
    if isinstance(node, ExtD):
        return _ext_d(evaluate(node.value))
    if isinstance(node, Wedge):
        return _wedge(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Act):
        return _act(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Comm):
        left, right = evaluate(node.left), evaluate(node.right)
        return _add(_mul(left, right), _neg(_mul(right, left)))
    raise EvalError(f"cannot evaluate {type(node).__name__}")


def _eval_symbol(node):
    name, args = node.name, node.args
    if name == "kappa":
        return ScalarValue.kappa(1)
    if name == "box":
        return mom.box()
    if name.startswith("x") and name in _PLAIN:
        return PositionElement.x(int(name[1]))
    if name.startswith("P") and name in _PLAIN:
        return mom.MomentumElement.P(int(name[1]))
    if name == "k":
        return ScalarValue.k(args[0], args[1])
    if name == "E":
        return ScalarValue.E(args[0])
    if name == "Exp":
        return mom.MomentumElement.exp_weight(args[0])
    if name == "W":
        return PositionElement.wave(PlaneWave.label(args[0]))
    if name == "tau":
        return OneForm.basis(args[0])
    if name == "del":
        return mom.derivatives()[args[0]]
    if name == "e":
        return mom.vector_fields()[args[0]]
    if name == "f":
        return mom.f_matrix()[args[0]][args[1]]
    raise EvalError(f"unknown symbol {name}")


def _eval_wave(node):
    spatial = []
    for sub in node.spatial:
        v = evaluate(sub)
        if not _is_scalar(v):
            raise EvalError("plane-wave spatial entries must be scalars")
        spatial.append(v)
    t = evaluate(node.time)
    if not _is_scalar(t):
        raise EvalError("plane-wave time entry must be a scalar")
    time = []
    for (kap, ks, es), c in t.terms.items():
        if kap or es or len(ks) != 1 or ks[0][1] != 1 or ks[0][0][1] != 0:
            raise EvalError("plane-wave time must be an integer combination of k[j,0]")
        if c.im or c.re.denominator != 1:
            raise EvalError("plane-wave time coefficients must be integers")
        time.append((ks[0][0][0], int(c.re)))
    return PositionElement.wave(PlaneWave(tuple(spatial), tuple(sorted(time))))


def _add(a, b):
    a, b = _promote_pair(a, b)
    if type(a) is not type(b):
        raise EvalError(f"cannot add {type(a).__name__} and {type(b).__name__}")
    return a + b


def _neg(a):
    return -a


def _mul(a, b):
    if _is_scalar(a) and isinstance(b, (OneForm, TwoForm)):
        return b.scale(a)
    if _is_scalar(b) and isinstance(a, (OneForm, TwoForm)):
        return a.scale(b)
    if isinstance(a, PositionElement) and isinstance(b, OneForm):
        return b.left_mul(a)
    if isinstance(a, OneForm) and isinstance(b, PositionElement):
        return a.right_mul(b)
    if isinstance(a, (OneForm, TwoForm)) or isinstance(b, (OneForm, TwoForm)):
        raise EvalError("use wedge(...) to multiply forms")
    a, b = _promote_pair(a, b)
    return a * b


def _pow(a, n):
    if _is_scalar(a):
        return a ** n
    if n < 0:
        raise EvalError("negative powers need a scalar base")
    if isinstance(a, (mom.MomentumElement, PositionElement, HeisenbergElement)):
        return a ** n if not isinstance(a, HeisenbergElement) else _hpow(a, n)
    raise EvalError(f"cannot raise {type(a).__name__} to a power")


def _hpow(a, n):
    acc = HeisenbergElement.coerce(PositionElement.one())
    for _ in range(n):
        acc = acc * a
    return acc


def _star(a):
    if _is_scalar(a):
        return a.conj()
    if isinstance(a, (mom.MomentumElement, PositionElement, OneForm)):
        return a.star()
    raise EvalError(f"star is not defined on {type(a).__name__}")


def _ext_d(a):
    if _is_scalar(a):
        a = PositionElement.scalar(a)
    if isinstance(a, PositionElement):
        return exterior_d(a)
    if isinstance(a, OneForm):
        return a.exterior_d()
    raise EvalError(f"d is not defined on {type(a).__name__}")


def _wedge(a, b):
    if not isinstance(a, OneForm) or not isinstance(b, OneForm):
        raise EvalError("wedge needs two one-forms")
    return a.wedge(b)


def _act(p, a):
    if _is_scalar(p):
        p = mom.MomentumElement.scalar(p)
    if _is_scalar(a):
        a = PositionElement.scalar(a)
    if not isinstance(p, mom.MomentumElement) or not isinstance(a, PositionElement):
        raise EvalError("act needs a momentum expression and a position expression")
    return act(p, a)


def _promote_pair(a, b):
    """Lift scalars into the partner algebra; mix momenta and positions
    through the Heisenberg double."""
    if _is_scalar(a) and _is_scalar(b):
        return a, b
    if _is_scalar(a):
        return _lift_scalar(a, b), b
    if _is_scalar(b):
        return a, _lift_scalar(b, a)
    if type(a) is type(b):
        return a, b
    kinds = {type(a), type(b)}
    if kinds == {mom.MomentumElement, PositionElement} or HeisenbergElement in kinds:
        return HeisenbergElement.coerce(a), HeisenbergElement.coerce(b)
    return a, b


def _lift_scalar(s, like):
    if isinstance(like, mom.MomentumElement):
        return mom.MomentumElement.scalar(s)
    if isinstance(like, PositionElement):
        return PositionElement.scalar(s)
    if isinstance(like, HeisenbergElement):
        return HeisenbergElement.coerce(s)
    raise EvalError(f"cannot combine a scalar with {type(like).__name__}")


def render_value(v):
    """Grammar-compatible text for an evaluated value."""
    if isinstance(v, tuple):
        return "(" + ", ".join(render_value(c) for c in v) + ")"
    return v.render()


def evaluate_text(text):
    return evaluate(parse(text))
