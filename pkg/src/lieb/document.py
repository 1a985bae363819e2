"""The .lieb structure file format: parser, statement registry, renderer.

A document declares parameters, basis spaces, structures (algebra, coalgebra,
operator, form, tensor, rep blocks of coefficient expressions), and named
checks / constructions to run.  Conventions are fixed once here and printed in
the header of every exported file:

* bracket blocks list ``[a, b] = <vector expr>``; an unlisted mirror pair
  defaults to the negation of its listed partner (explicit entries always win,
  so deliberate antisymmetry violations are expressible);
* coalgebra blocks list ``delta(a) = <2-tensor expr>`` built with ``@``;
* operator blocks list ``a -> <vector expr>`` (unlisted labels map to 0);
* form blocks list ``(a, b) = <scalar expr>``; inside ``form ... skew`` the
  mirror of a listed pair defaults to its negation;
* rep blocks list ``x : v -> <vector expr>`` for the action of x on v.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .multilinear import BasisSpace, BilinearForm, LinearOperator, TwoTensor, ZERO, zeros, zeros3
from .scalars import Assumption, Scalar
from .structures import (
    Corepresentation,
    LieAlgebra,
    LieCoalgebra,
    Representation,
    check_admissible,
    check_cocycle,
    check_co_cybe,
    check_corepresentation,
    check_cybe,
    check_cpnybe,
    check_dual_qt,
    check_frobenius,
    check_lie_algebra,
    check_lie_coalgebra,
    check_nij_lie_bialgebra,
    check_nij_representation,
    check_nijenhuis,
    check_nijenhuis_coalgebra,
    check_pq_equivalents,
    check_representation,
    check_rrbo,
    check_weak_cosymplectic,
    check_weak_symplectic,
)
from . import construct as _construct


class ParseError(ValueError):
    """Syntax or resolution failure, with 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class UnknownNameError(ParseError):
    pass


class DuplicateNameError(ParseError):
    pass


@dataclass
class CheckStatement:
    kind: str
    args: list[str]
    assumptions: list[Assumption]
    line: int


@dataclass
class ConstructStatement:
    op: str
    args: list[str]
    result: str
    line: int


@dataclass
class Document:
    params: list[str] = field(default_factory=list)
    spaces: dict[str, BasisSpace] = field(default_factory=dict)
    structures: dict[str, object] = field(default_factory=dict)
    checks: list[CheckStatement] = field(default_factory=list)
    constructs: list[ConstructStatement] = field(default_factory=list)
    assumptions: list[Assumption] = field(default_factory=list)

    def structure(self, name: str, line: int = 0, col: int = 0):
        if name not in self.structures:
            raise UnknownNameError(f"undefined structure {name!r}", line, col)
        return self.structures[name]


# Check kinds available in documents: kind -> (argument count, callable).
# The callable receives the resolved structures plus the assumption list.
CHECK_KINDS = {
    "lie-algebra": (1, lambda a, assume: check_lie_algebra(a, assume)),
    "lie-coalgebra": (1, lambda c, assume: check_lie_coalgebra(c, assume)),
    "cocycle": (2, lambda a, c, assume: check_cocycle(a, c, assume)),
    "nijenhuis": (2, lambda a, n, assume: check_nijenhuis(a, n, assume)),
    "nij-coalgebra": (2, lambda c, p, assume: check_nijenhuis_coalgebra(c, p, assume)),
    "cybe": (2, lambda a, r, assume: check_cybe(a, r, assume)),
    "co-cybe": (2, lambda c, om, assume: check_co_cybe(c, om, assume)),
    "dual-qt": (2, lambda c, om, assume: check_dual_qt(c, om, assume)),
    "weak-symplectic": (2, lambda a, om, assume: check_weak_symplectic(a, om, assume)),
    "weak-cosymplectic": (2, lambda c, r, assume: check_weak_cosymplectic(c, r, assume)),
    "representation": (1, lambda r, assume: check_representation(r, assume)),
    "nij-representation": (3, lambda r, n, al, assume: check_nij_representation(r, n, al, assume)),
    "admissible": (3, lambda r, n, b, assume: check_admissible(r, n, b, assume)),
    "corepresentation": (1, lambda k, assume: check_corepresentation(k, assumptions=assume)),
    "frobenius": (2, lambda a, b, assume: check_frobenius(a, b, assumptions=assume)),
    "frobenius-nij": (3, lambda a, b, n, assume: check_frobenius(a, b, n, assume)),
    "nij-lie-bialgebra": (4, lambda a, c, n, p, assume: check_nij_lie_bialgebra(a, c, n, p, assume)),
    "cpnybe": (4, lambda a, r, n, p, assume: check_cpnybe(a, r, n, p, assume)),
    "pq-equivalents": (4, lambda a, r, n, p, assume: check_pq_equivalents(a, r, n, p, assume)),
    "rrbo": (5, lambda a, rep, al, n, t, assume: check_rrbo(a, rep, al, n, t, assume)),
}

# Construction ops usable in documents (single-result builders only).
CONSTRUCT_OPS = {
    "delta-from-r": (2, lambda a, r: _construct.delta_from_r(a, r)),
    "bracket-from-omega": (2, lambda c, om: _construct.bracket_from_omega(c, om)),
    "nijenhuis-from-omega-r": (3, lambda a, om, r: _construct.nijenhuis_from_omega_r(a, om, r)),
    "p-from-r-omega": (3, lambda c, r, om: _construct.p_from_r_omega(c, r, om)),
    "dualize": (1, lambda x: _construct.dualize(x)),
    "phi-r": (1, lambda r: _construct.phi_r(r)),
}


# -- tokenizer ----------------------------------------------------------------

_PUNCT = ("->", "[", "]", "(", ")", "{", "}", ",", ":", "=", "@", "+", "-", "*", "/", "^")


@dataclass(frozen=True)
class _Token:
    kind: str          # "name" | "int" | punctuation | "nl" | "end"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        i, n = 0, len(line)
        emitted = False
        while i < n:
            ch = line[i]
            if ch.isspace():
                i += 1
                continue
            if line.startswith("->", i):
                tokens.append(_Token("->", "->", lineno, i + 1))
                i += 2
                emitted = True
                continue
            if ch in "[](){},:=@+-*/^":
                tokens.append(_Token(ch, ch, lineno, i + 1))
                i += 1
                emitted = True
                continue
            if ch.isdigit():
                j = i
                while j < n and line[j].isdigit():
                    j += 1
                tokens.append(_Token("int", line[i:j], lineno, i + 1))
                i = j
                emitted = True
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (line[j].isalnum() or line[j] == "_"):
                    j += 1
                tokens.append(_Token("name", line[i:j], lineno, i + 1))
                i = j
                emitted = True
                continue
            raise ParseError(f"unexpected character {ch!r}", lineno, i + 1)
        if emitted:
            tokens.append(_Token("nl", "", lineno, n + 1))
    tokens.append(_Token("end", "", len(text.splitlines()) + 1, 1))
    return tokens


# -- typed expression values ---------------------------------------------------

@dataclass
class _Value:
    rank: int
    data: object

    @classmethod
    def scalar(cls, s: Scalar) -> _Value:
        return cls(0, s)


def _combine(op: str, a: _Value, b: _Value, tok: _Token) -> _Value:
    if op in ("+", "-"):
        if a.rank != b.rank:
            raise ParseError(f"cannot {'add' if op == '+' else 'subtract'} rank {a.rank} "
                             f"and rank {b.rank} expressions", tok.line, tok.col)
        if a.rank == 0:
            return _Value(0, a.data + b.data if op == "+" else a.data - b.data)
        if a.rank == 1:
            if len(a.data) != len(b.data):
                raise ParseError("vectors from different spaces", tok.line, tok.col)
            return _Value(1, [x + y if op == "+" else x - y for x, y in zip(a.data, b.data)])
        if len(a.data) != len(b.data):
            raise ParseError("tensors from different spaces", tok.line, tok.col)
        return _Value(2, [[x + y if op == "+" else x - y for x, y in zip(ra, rb)]
                          for ra, rb in zip(a.data, b.data)])
    if op == "*":
        if a.rank == 0 and b.rank == 0:
            return _Value(0, a.data * b.data)
        if a.rank == 0:
            return _scale(a.data, b)
        if b.rank == 0:
            return _scale(b.data, a)
        raise ParseError("use @ for tensor products, * only scales", tok.line, tok.col)
    if op == "/":
        if b.rank != 0:
            raise ParseError("can only divide by a scalar", tok.line, tok.col)
        if b.data.is_zero():
            raise ParseError("division by zero", tok.line, tok.col)
        return _scale(Scalar.from_int(1) / b.data, a)
    if op == "@":
        if a.rank == 1 and b.rank == 1:
            return _Value(2, [[x * y for y in b.data] for x in a.data])
        raise ParseError("@ takes two vectors", tok.line, tok.col)
    raise AssertionError(op)


def _scale(s: Scalar, v: _Value) -> _Value:
    if v.rank == 0:
        return _Value(0, s * v.data)
    if v.rank == 1:
        return _Value(1, [s * x for x in v.data])
    return _Value(2, [[s * x for x in row] for row in v.data])


def _negate(v: _Value) -> _Value:
    return _scale(Scalar.from_int(-1), v)


# -- parser --------------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0
        self.doc = Document()

    # token plumbing

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.advance()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or tok.kind!r}",
                             tok.line, tok.col)
        return tok

    def expect_name(self, expected: str | None = None) -> _Token:
        tok = self.expect("name")
        if expected is not None and tok.text != expected:
            raise ParseError(f"expected {expected!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def dashed_name(self) -> _Token:
        """A multi-word identifier joined by dashes, e.g. ``lie-algebra``."""
        first = self.expect("name")
        parts = [first.text]
        while self.peek().kind == "-" and self.tokens[self.pos + 1].kind == "name":
            self.advance()
            parts.append(self.advance().text)
        return _Token("name", "-".join(parts), first.line, first.col)

    def skip_newlines(self):
        while self.peek().kind == "nl":
            self.advance()

    def end_statement(self):
        tok = self.advance()
        if tok.kind not in ("nl", "end"):
            raise ParseError(f"unexpected {tok.text!r} at end of statement", tok.line, tok.col)

    # document grammar

    def parse(self) -> Document:
        while True:
            self.skip_newlines()
            tok = self.peek()
            if tok.kind == "end":
                return self.doc
            if tok.kind != "name":
                raise ParseError(f"expected a statement, found {tok.text!r}", tok.line, tok.col)
            handler = getattr(self, f"_stmt_{tok.text.replace('-', '_')}", None)
            if handler is None:
                raise ParseError(f"unknown statement {tok.text!r}", tok.line, tok.col)
            self.advance()
            handler()

    def _register(self, name_tok: _Token, obj):
        name = name_tok.text
        if name in self.doc.structures or name in self.doc.spaces:
            raise DuplicateNameError(f"name {name!r} is already defined",
                                     name_tok.line, name_tok.col)
        self.doc.structures[name] = obj

    def _stmt_params(self):
        while self.peek().kind == "name":
            name = self.advance().text
            if name not in self.doc.params:
                self.doc.params.append(name)
        self.end_statement()

    def _stmt_space(self):
        name_tok = self.expect("name")
        if name_tok.text in self.doc.spaces or name_tok.text in self.doc.structures:
            raise DuplicateNameError(f"name {name_tok.text!r} is already defined",
                                     name_tok.line, name_tok.col)
        self.expect(":")
        labels = []
        while self.peek().kind == "name":
            labels.append(self.advance().text)
        if not labels:
            tok = self.peek()
            raise ParseError("a space needs at least one basis label", tok.line, tok.col)
        self.end_statement()
        self.doc.spaces[name_tok.text] = BasisSpace(tuple(labels))

    def _space_ref(self) -> BasisSpace:
        tok = self.expect("name")
        if tok.text not in self.doc.spaces:
            raise UnknownNameError(f"undefined space {tok.text!r}", tok.line, tok.col)
        return self.doc.spaces[tok.text]

    def _stmt_algebra(self):
        name_tok = self.expect("name")
        self.expect_name("on")
        sp = self._space_ref()
        self._open_block()
        n = sp.dim
        c = zeros3(n, n, n)
        listed: set[tuple[int, int]] = set()
        while not self._at_block_end():
            self.expect("[")
            i = self._label_index(sp)
            self.expect(",")
            j = self._label_index(sp)
            self.expect("]")
            self.expect("=")
            vec = self._vector_expr(sp)
            for k, value in enumerate(vec):
                c[i][j][k] = value
            listed.add((i, j))
            self.end_statement()
            self.skip_newlines()
        self._close_block()
        for (i, j) in list(listed):
            if (j, i) not in listed:
                for k in range(n):
                    c[j][i][k] = -c[i][j][k]
        self._register(name_tok, LieAlgebra(sp, c))

    def _stmt_coalgebra(self):
        name_tok = self.expect("name")
        self.expect_name("on")
        sp = self._space_ref()
        self._open_block()
        n = sp.dim
        d = zeros3(n, n, n)
        while not self._at_block_end():
            self.expect_name("delta")
            self.expect("(")
            i = self._label_index(sp)
            self.expect(")")
            self.expect("=")
            mat = self._tensor_expr(sp)
            d[i] = mat
            self.end_statement()
            self.skip_newlines()
        self._close_block()
        self._register(name_tok, LieCoalgebra(sp, d))

    def _stmt_operator(self):
        name_tok = self.expect("name")
        self.expect(":")
        dom = self._space_ref()
        self.expect("->")
        cod = self._space_ref()
        self._open_block()
        mat = zeros(cod.dim, dom.dim)
        while not self._at_block_end():
            j = self._label_index(dom)
            self.expect("->")
            vec = self._vector_expr(cod)
            for i, value in enumerate(vec):
                mat[i][j] = value
            self.end_statement()
            self.skip_newlines()
        self._close_block()
        self._register(name_tok, LinearOperator(dom, cod, mat))

    def _stmt_form(self):
        name_tok = self.expect("name")
        self.expect_name("on")
        sp = self._space_ref()
        skew = False
        if self.peek().kind == "name" and self.peek().text == "skew":
            self.advance()
            skew = True
        self._open_block()
        n = sp.dim
        mat = zeros(n, n)
        listed: set[tuple[int, int]] = set()
        while not self._at_block_end():
            self.expect("(")
            i = self._label_index(sp)
            self.expect(",")
            j = self._label_index(sp)
            self.expect(")")
            self.expect("=")
            mat[i][j] = self._scalar_expr(sp)
            listed.add((i, j))
            self.end_statement()
            self.skip_newlines()
        self._close_block()
        if skew:
            for (i, j) in list(listed):
                if (j, i) not in listed and i != j:
                    mat[j][i] = -mat[i][j]
        self._register(name_tok, BilinearForm(sp, mat))

    def _stmt_tensor(self):
        name_tok = self.expect("name")
        self.expect_name("on")
        sp = self._space_ref()
        self._open_block()
        value = self._expr(sp, skip_newlines=True)
        if value.rank != 2:
            tok = self.peek()
            raise ParseError("a tensor block must contain one 2-tensor expression",
                             tok.line, tok.col)
        self.skip_newlines()
        self._close_block()
        self._register(name_tok, TwoTensor(sp, value.data))

    def _stmt_rep(self):
        name_tok = self.expect("name")
        self.expect_name("of")
        alg_tok = self.expect("name")
        algebra = self.doc.structure(alg_tok.text, alg_tok.line, alg_tok.col)
        if not isinstance(algebra, LieAlgebra):
            raise ParseError(f"{alg_tok.text!r} is not an algebra", alg_tok.line, alg_tok.col)
        self.expect_name("on")
        sp = self._space_ref()
        self._open_block()
        n, m = algebra.space.dim, sp.dim
        action = [zeros(m, m) for _ in range(n)]
        while not self._at_block_end():
            i = self._label_index(algebra.space)
            self.expect(":")
            j = self._label_index(sp)
            self.expect("->")
            vec = self._vector_expr(sp)
            for k, value in enumerate(vec):
                action[i][k][j] = value
            self.end_statement()
            self.skip_newlines()
        self._close_block()
        self._register(name_tok, Representation(algebra, sp, action))

    def _stmt_assume(self):
        self.doc.assumptions.extend(self._assumption_list())
        self.end_statement()

    def _stmt_check(self):
        kind_tok = self.dashed_name()
        kind = kind_tok.text
        if kind not in CHECK_KINDS:
            raise ParseError(f"unknown check kind {kind!r}", kind_tok.line, kind_tok.col)
        argc = CHECK_KINDS[kind][0]
        pending = {c.result for c in self.doc.constructs}
        args = []
        for _ in range(argc):
            tok = self.expect("name")
            if tok.text not in pending:
                self.doc.structure(tok.text, tok.line, tok.col)
            args.append(tok.text)
        assumptions: list[Assumption] = []
        if self.peek().kind == "name" and self.peek().text == "assume":
            self.advance()
            assumptions = self._assumption_list()
        self.end_statement()
        self.doc.checks.append(CheckStatement(kind, args, assumptions, kind_tok.line))

    def _stmt_construct(self):
        op_tok = self.dashed_name()
        if op_tok.text not in CONSTRUCT_OPS:
            raise ParseError(f"unknown construction {op_tok.text!r}", op_tok.line, op_tok.col)
        argc = CONSTRUCT_OPS[op_tok.text][0]
        args = []
        for _ in range(argc):
            tok = self.expect("name")
            self.doc.structure(tok.text, tok.line, tok.col)
            args.append(tok.text)
        self.expect_name("as")
        result_tok = self.expect("name")
        if result_tok.text in self.doc.structures or result_tok.text in self.doc.spaces:
            raise DuplicateNameError(f"name {result_tok.text!r} is already defined",
                                     result_tok.line, result_tok.col)
        self.end_statement()
        self.doc.constructs.append(
            ConstructStatement(op_tok.text, args, result_tok.text, op_tok.line))

    # block and expression helpers

    def _open_block(self):
        self.expect("{")
        self.skip_newlines()

    def _close_block(self):
        self.expect("}")
        self.end_statement()

    def _at_block_end(self) -> bool:
        return self.peek().kind == "}"

    def _label_index(self, sp: BasisSpace) -> int:
        tok = self.expect("name")
        if tok.text not in sp.labels:
            raise UnknownNameError(f"{tok.text!r} is not a basis label of this space",
                                   tok.line, tok.col)
        return sp.index(tok.text)

    def _assumption_list(self) -> list[Assumption]:
        out = []
        while True:
            value = self._expr(None).data
            if not isinstance(value, Scalar):
                tok = self.peek()
                raise ParseError("assumptions must be scalar expressions", tok.line, tok.col)
            if not value.den.is_constant():
                tok = self.peek()
                raise ParseError("assumption must be polynomial (clear denominators)",
                                 tok.line, tok.col)
            out.append(Assumption(value.num))
            if self.peek().kind == ",":
                self.advance()
                continue
            return out

    def _scalar_expr(self, sp: BasisSpace | None) -> Scalar:
        value = self._expr(sp)
        if value.rank != 0:
            tok = self.peek()
            raise ParseError("expected a scalar expression", tok.line, tok.col)
        return value.data

    def _vector_expr(self, sp: BasisSpace) -> list[Scalar]:
        value = self._expr(sp)
        if value.rank == 0 and isinstance(value.data, Scalar) and value.data.is_zero():
            return [ZERO] * sp.dim
        if value.rank != 1:
            tok = self.peek()
            raise ParseError("expected a vector expression", tok.line, tok.col)
        return value.data

    def _tensor_expr(self, sp: BasisSpace) -> list[list[Scalar]]:
        value = self._expr(sp)
        if value.rank == 0 and isinstance(value.data, Scalar) and value.data.is_zero():
            return zeros(sp.dim, sp.dim)
        if value.rank != 2:
            tok = self.peek()
            raise ParseError("expected a 2-tensor expression", tok.line, tok.col)
        return value.data

    def _expr(self, sp: BasisSpace | None, skip_newlines: bool = False) -> _Value:
        return self._expr_sum(sp, skip_newlines)

    def _maybe_skip(self, skip: bool):
        if skip:
            while self.peek().kind == "nl" and self.tokens[self.pos + 1].kind != "}":
                self.advance()

    def _expr_sum(self, sp, skip) -> _Value:
        value = self._expr_product(sp, skip)
        while True:
            self._maybe_skip(skip)
            tok = self.peek()
            if tok.kind in ("+", "-"):
                self.advance()
                self._maybe_skip(skip)
                rhs = self._expr_product(sp, skip)
                value = _combine(tok.kind, value, rhs, tok)
            else:
                return value

    def _expr_product(self, sp, skip) -> _Value:
        value = self._expr_unary(sp, skip)
        while True:
            tok = self.peek()
            if tok.kind in ("*", "/", "@"):
                self.advance()
                self._maybe_skip(skip)
                rhs = self._expr_unary(sp, skip)
                value = _combine(tok.kind, value, rhs, tok)
            else:
                return value

    def _expr_unary(self, sp, skip) -> _Value:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            return _negate(self._expr_unary(sp, skip))
        if tok.kind == "+":
            self.advance()
            return self._expr_unary(sp, skip)
        return self._expr_power(sp, skip)

    def _expr_power(self, sp, skip) -> _Value:
        base = self._expr_atom(sp, skip)
        while self.peek().kind == "^":
            tok = self.advance()
            exp_tok = self.expect("int")
            if base.rank != 0:
                raise ParseError("only scalars can be raised to powers", tok.line, tok.col)
            base = _Value(0, base.data ** int(exp_tok.text))
        return base

    def _expr_atom(self, sp, skip) -> _Value:
        tok = self.advance()
        if tok.kind == "int":
            return _Value.scalar(Scalar.from_int(int(tok.text)))
        if tok.kind == "(":
            self._maybe_skip(skip)
            value = self._expr_sum(sp, skip)
            self._maybe_skip(skip)
            self.expect(")")
            return value
        if tok.kind == "name":
            if sp is not None and tok.text in sp.labels:
                i = sp.index(tok.text)
                return _Value(1, [Scalar.from_int(1) if k == i else ZERO
                                  for k in range(sp.dim)])
            if tok.text in self.doc.params:
                return _Value.scalar(Scalar.parameter(tok.text))
            raise UnknownNameError(
                f"{tok.text!r} is neither a basis label here nor a declared parameter",
                tok.line, tok.col)
        raise ParseError(f"unexpected {tok.text or tok.kind!r} in expression",
                         tok.line, tok.col)


def parse_document(text: str) -> Document:
    """Parse a .lieb document; raises ParseError with line/column on failure."""
    return _Parser(_tokenize(text)).parse()


def run_constructs(doc: Document) -> None:
    """Execute the document's construct statements, registering the results."""
    for stmt in doc.constructs:
        if stmt.result in doc.structures:
            continue
        args = [doc.structure(name, stmt.line, 1) for name in stmt.args]
        doc.structures[stmt.result] = CONSTRUCT_OPS[stmt.op][1](*args)


def default_checks(doc: Document) -> list[CheckStatement]:
    """Validity checks for every declared structure with intrinsic axioms."""
    out = []
    for name, obj in doc.structures.items():
        if isinstance(obj, LieAlgebra):
            out.append(CheckStatement("lie-algebra", [name], [], 0))
        elif isinstance(obj, LieCoalgebra):
            out.append(CheckStatement("lie-coalgebra", [name], [], 0))
        elif isinstance(obj, Representation):
            out.append(CheckStatement("representation", [name], [], 0))
        elif isinstance(obj, Corepresentation):
            out.append(CheckStatement("corepresentation", [name], [], 0))
    return out


def run_check_statement(doc: Document, stmt: CheckStatement,
                        extra_assumptions: tuple[Assumption, ...] = ()):
    args = [doc.structure(name, stmt.line, 1) for name in stmt.args]
    assumptions = list(doc.assumptions) + list(stmt.assumptions) + list(extra_assumptions)
    return CHECK_KINDS[stmt.kind][1](*args, assumptions)


# -- rendering -----------------------------------------------------------------

_HEADER = """\
# lieb structure file
# conventions: operator columns are images of basis vectors; form entry
# (a, b) is the value on (a, b); a 2-tensor entry a@b is the coefficient of
# a (x) b; bracket tables list [a, b] with unlisted mirrors defaulting to
# the negation; cobrackets list delta(a) as a 2-tensor expression.
"""


def _space_name(doc_spaces: dict[str, BasisSpace], sp: BasisSpace,
                counter: list[int]) -> str:
    for name, known in doc_spaces.items():
        if known.labels == sp.labels:
            return name
    counter[0] += 1
    name = f"V{counter[0]}"
    doc_spaces[name] = sp
    return name


def _term(coeff: Scalar, *labels: str) -> str:
    body = "@".join(labels)
    text = str(coeff)
    if text == "1":
        return body
    if text == "-1":
        return f"-{body}"
    if coeff.den.is_constant() and len(coeff.num.terms) <= 1:
        return f"{text}*{body}"
    return f"({text})*{body}"


def _sum_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def render_document(structures: dict[str, object],
                    params: list[str] | None = None) -> str:
    """Canonical text for a set of named structures (with header conventions)."""
    from .structures import structure_parameters

    lines = [_HEADER]
    names: set[str] = set(structure_parameters(*structures.values()))
    for p in params or []:
        names.add(p)
    if names:
        lines.append("params " + " ".join(sorted(names)))
    spaces: dict[str, BasisSpace] = {}
    counter = [0]
    body: list[str] = []
    for name, obj in structures.items():
        if isinstance(obj, LieAlgebra):
            sp = _space_name(spaces, obj.space, counter)
            entries = []
            n = obj.space.dim
            labels = obj.space.labels

            def emit(i, j):
                terms = [_term(v, labels[k]) for k, v in enumerate(obj.c[i][j])
                         if not v.is_zero()]
                entries.append(f"  [{labels[i]}, {labels[j]}] = " + _sum_terms(terms))

            for i in range(n):
                if any(not v.is_zero() for v in obj.c[i][i]):
                    emit(i, i)
                for j in range(i + 1, n):
                    mirrored = all((obj.c[i][j][k] + obj.c[j][i][k]).is_zero()
                                   for k in range(n))
                    if mirrored:
                        if any(not v.is_zero() for v in obj.c[i][j]):
                            emit(i, j)
                    else:
                        emit(i, j)
                        emit(j, i)
            body.append(f"algebra {name} on {sp} {{\n" + "\n".join(entries) + "\n}")
        elif isinstance(obj, LieCoalgebra):
            sp = _space_name(spaces, obj.space, counter)
            entries = []
            n = obj.space.dim
            for i in range(n):
                terms = [_term(obj.d[i][a][b], obj.space.labels[a], obj.space.labels[b])
                         for a in range(n) for b in range(n)
                         if not obj.d[i][a][b].is_zero()]
                if terms:
                    entries.append(f"  delta({obj.space.labels[i]}) = " + _sum_terms(terms))
            body.append(f"coalgebra {name} on {sp} {{\n" + "\n".join(entries) + "\n}")
        elif isinstance(obj, LinearOperator):
            dom = _space_name(spaces, obj.domain, counter)
            cod = _space_name(spaces, obj.codomain, counter)
            entries = []
            for j in range(obj.domain.dim):
                terms = [_term(obj.matrix[i][j], obj.codomain.labels[i])
                         for i in range(obj.codomain.dim) if not obj.matrix[i][j].is_zero()]
                if terms:
                    entries.append(f"  {obj.domain.labels[j]} -> " + _sum_terms(terms))
            body.append(f"operator {name} : {dom} -> {cod} {{\n" + "\n".join(entries) + "\n}")
        elif isinstance(obj, BilinearForm):
            sp = _space_name(spaces, obj.space, counter)
            entries = [f"  ({obj.space.labels[i]}, {obj.space.labels[j]}) = {obj.matrix[i][j]}"
                       for i in range(obj.space.dim) for j in range(obj.space.dim)
                       if not obj.matrix[i][j].is_zero()]
            body.append(f"form {name} on {sp} {{\n" + "\n".join(entries) + "\n}")
        elif isinstance(obj, TwoTensor):
            sp = _space_name(spaces, obj.space, counter)
            terms = [_term(obj.matrix[i][j], obj.space.labels[i], obj.space.labels[j])
                     for i in range(obj.space.dim) for j in range(obj.space.dim)
                     if not obj.matrix[i][j].is_zero()]
            body.append(f"tensor {name} on {sp} {{\n  " + _sum_terms(terms) + "\n}")
        elif isinstance(obj, Representation):
            raise TypeError("rendering representations requires naming their algebra; "
                            "export the algebra alongside and write the rep block by hand")
        else:
            raise TypeError(f"cannot render {type(obj).__name__}")
    for name, sp in spaces.items():
        lines.append(f"space {name} : " + " ".join(sp.labels))
    lines.extend(body)
    return "\n".join(lines) + "\n"
