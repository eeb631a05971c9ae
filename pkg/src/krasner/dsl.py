"""Structure-definition language: parser, printer, and elaborator.

The surface syntax declares structures, hyperideals, multiplicative sets and
homomorphisms::

    hyperring A = quotient_zn(12, {1,5,7,11}, n=3)
    hyperring C = chain(3, n=2)
    hyperring P = product(C, C)
    ideal Q in A = {0,4}
    ideal R in A = generate {2}
    mulset S in A = {1,3}
    mulset T in A = closure {3}
    hom swap : P -> P = { (e0,e0) -> (e0,e0), ... }

plus a raw ``tables { ... }`` builder listing every entry explicitly.
Comments run from ``#`` to end of line.  The parser is total: every failure
is a positioned :class:`ParseError`, never an exception escape.  Parsing the
printer's output reproduces the document (positions aside).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core import HyperringTable
from .errors import CapExceededError, KrasnerError, ParseError  # noqa: F401  (re-export)
from . import builders

# ParseError lives here conceptually; keep the import path stable either way.


KEYWORDS = {
    "hyperring", "ideal", "mulset", "hom", "in", "generate", "closure",
    "quotient_zn", "chain", "product", "tables",
    "elements", "zero", "one", "neg", "f", "g", "n",
}

_SYMBOLS = {"{", "}", "(", ")", ",", "=", ";", ":"}


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident' | 'int' | 'sym' | 'arrow' | 'eof'
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch == "-" and i + 1 < n and text[i + 1] == ">":
            tokens.append(Token("arrow", "->", line, start_col))
            i += 2
            col += 2
            continue
        if ch in _SYMBOLS:
            tokens.append(Token("sym", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        raise ParseError(line, start_col, f"unexpected character {ch!r}")
    tokens.append(Token("eof", "", line, col))
    return tokens


# --- syntax tree -------------------------------------------------------------


@dataclass(frozen=True)
class QuotientBuilder:
    modulus: int
    units: tuple[int, ...]
    n: int = 2


@dataclass(frozen=True)
class ChainBuilder:
    k: int
    n: int


@dataclass(frozen=True)
class ProductBuilder:
    left: str
    right: str


@dataclass(frozen=True)
class TablesBuilder:
    elements: tuple[str, ...]
    zero: str
    one: str
    neg: tuple[tuple[str, str], ...]
    f_lines: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]
    g_lines: tuple[tuple[tuple[str, ...], str], ...]


Builder = QuotientBuilder | ChainBuilder | ProductBuilder | TablesBuilder


@dataclass(frozen=True)
class StructDecl:
    name: str
    builder: Builder
    line: int = field(compare=False, default=0)
    col: int = field(compare=False, default=0)


@dataclass(frozen=True)
class IdealDecl:
    name: str
    structure: str
    elements: tuple[str, ...]
    generate: bool = False
    line: int = field(compare=False, default=0)
    col: int = field(compare=False, default=0)
    ref_line: int = field(compare=False, default=0)
    ref_col: int = field(compare=False, default=0)


@dataclass(frozen=True)
class MulsetDecl:
    name: str
    structure: str
    elements: tuple[str, ...]
    closure: bool = False
    line: int = field(compare=False, default=0)
    col: int = field(compare=False, default=0)
    ref_line: int = field(compare=False, default=0)
    ref_col: int = field(compare=False, default=0)


@dataclass(frozen=True)
class HomDecl:
    name: str
    source: str
    target: str
    maplets: tuple[tuple[str, str], ...]
    line: int = field(compare=False, default=0)
    col: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Document:
    decls: tuple = ()

    @property
    def structures(self) -> list[StructDecl]:
        return [d for d in self.decls if isinstance(d, StructDecl)]

    @property
    def ideals(self) -> list[IdealDecl]:
        return [d for d in self.decls if isinstance(d, IdealDecl)]

    @property
    def mulsets(self) -> list[MulsetDecl]:
        return [d for d in self.decls if isinstance(d, MulsetDecl)]

    @property
    def homs(self) -> list[HomDecl]:
        return [d for d in self.decls if isinstance(d, HomDecl)]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, tok: Token, message: str) -> ParseError:
        return ParseError(tok.line, tok.col, message)

    def expect_sym(self, sym: str) -> Token:
        tok = self.advance()
        if tok.kind != "sym" or tok.text != sym:
            raise self.error(tok, f"expected {sym!r}, found {tok.text or 'end of input'!r}")
        return tok

    def expect_keyword(self, word: str) -> Token:
        tok = self.advance()
        if tok.kind != "ident" or tok.text != word:
            raise self.error(tok, f"expected {word!r}, found {tok.text or 'end of input'!r}")
        return tok

    def expect_name(self) -> Token:
        tok = self.advance()
        if tok.kind != "ident":
            raise self.error(tok, f"expected a name, found {tok.text or 'end of input'!r}")
        return tok

    def expect_int(self) -> int:
        tok = self.advance()
        if tok.kind != "int":
            raise self.error(tok, f"expected an integer, found {tok.text or 'end of input'!r}")
        return int(tok.text)

    def expect_elem(self) -> str:
        tok = self.advance()
        if tok.kind not in ("ident", "int"):
            raise self.error(tok, f"expected an element label, found {tok.text or 'end of input'!r}")
        return tok.text

    def at_sym(self, sym: str) -> bool:
        tok = self.peek()
        return tok.kind == "sym" and tok.text == sym

    def elem_set(self) -> tuple[str, ...]:
        self.expect_sym("{")
        items: list[str] = []
        if not self.at_sym("}"):
            items.append(self.expect_elem())
            while self.at_sym(","):
                self.advance()
                if self.at_sym("}"):
                    break  # tolerate a trailing comma
                items.append(self.expect_elem())
        self.expect_sym("}")
        return tuple(items)

    def int_set(self) -> tuple[int, ...]:
        self.expect_sym("{")
        items: list[int] = []
        if not self.at_sym("}"):
            items.append(self.expect_int())
            while self.at_sym(","):
                self.advance()
                items.append(self.expect_int())
        self.expect_sym("}")
        return tuple(items)

    def elem_args(self) -> tuple[str, ...]:
        self.expect_sym("(")
        items = [self.expect_elem()]
        while self.at_sym(","):
            self.advance()
            items.append(self.expect_elem())
        self.expect_sym(")")
        return tuple(items)

    # -- grammar --------------------------------------------------------------

    def document(self) -> Document:
        decls: list = []
        names: dict[str, set[str]] = {"structure": set(), "ideal": set(), "mulset": set(), "hom": set()}
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind != "ident":
                raise self.error(tok, f"expected a declaration, found {tok.text!r}")
            if tok.text == "hyperring":
                decl = self.struct_decl()
                kind = "structure"
            elif tok.text == "ideal":
                decl = self.ideal_decl()
                kind = "ideal"
            elif tok.text == "mulset":
                decl = self.mulset_decl()
                kind = "mulset"
            elif tok.text == "hom":
                decl = self.hom_decl()
                kind = "hom"
            else:
                raise self.error(
                    tok, f"expected 'hyperring', 'ideal', 'mulset' or 'hom', found {tok.text!r}"
                )
            if decl.name in names[kind]:
                raise ParseError(decl.line, decl.col, f"duplicate {kind} name {decl.name!r}")
            names[kind].add(decl.name)
            decls.append(decl)
        return Document(tuple(decls))

    def struct_decl(self) -> StructDecl:
        kw = self.expect_keyword("hyperring")
        name = self.expect_name()
        self.expect_sym("=")
        head = self.expect_name()
        if head.text == "quotient_zn":
            self.expect_sym("(")
            modulus = self.expect_int()
            self.expect_sym(",")
            units = self.int_set()
            n = 2
            if self.at_sym(","):
                self.advance()
                self.expect_keyword("n")
                self.expect_sym("=")
                n = self.expect_int()
            self.expect_sym(")")
            builder: Builder = QuotientBuilder(modulus, units, n)
        elif head.text == "chain":
            self.expect_sym("(")
            k = self.expect_int()
            self.expect_sym(",")
            self.expect_keyword("n")
            self.expect_sym("=")
            n = self.expect_int()
            self.expect_sym(")")
            builder = ChainBuilder(k, n)
        elif head.text == "product":
            self.expect_sym("(")
            left = self.expect_name().text
            self.expect_sym(",")
            right = self.expect_name().text
            self.expect_sym(")")
            builder = ProductBuilder(left, right)
        elif head.text == "tables":
            builder = self.tables_body()
        else:
            raise self.error(head, f"unknown builder {head.text!r}")
        return StructDecl(name.text, builder, line=kw.line, col=kw.col)

    def tables_body(self) -> TablesBuilder:
        self.expect_sym("{")
        elements: tuple[str, ...] | None = None
        zero = one = None
        neg: list[tuple[str, str]] = []
        f_lines: list[tuple[tuple[str, ...], tuple[str, ...]]] = []
        g_lines: list[tuple[tuple[str, ...], str]] = []
        while not self.at_sym("}"):
            tok = self.advance()
            if tok.kind != "ident":
                raise self.error(tok, f"expected a table item, found {tok.text or 'end of input'!r}")
            if tok.text == "elements":
                items = [self.expect_elem()]
                while self.at_sym(","):
                    self.advance()
                    items.append(self.expect_elem())
                elements = tuple(items)
            elif tok.text == "zero":
                zero = self.expect_elem()
            elif tok.text == "one":
                one = self.expect_elem()
            elif tok.text == "neg":
                self.expect_sym("(")
                src = self.expect_elem()
                self.expect_sym(")")
                self.expect_sym("=")
                neg.append((src, self.expect_elem()))
            elif tok.text == "f":
                args = self.elem_args()
                self.expect_sym("=")
                f_lines.append((args, self.elem_set()))
            elif tok.text == "g":
                args = self.elem_args()
                self.expect_sym("=")
                g_lines.append((args, self.expect_elem()))
            else:
                raise self.error(tok, f"unknown table item {tok.text!r}")
            self.expect_sym(";")
        self.expect_sym("}")
        end = self.tokens[self.pos - 1]
        if elements is None:
            raise self.error(end, "tables block lacks an 'elements' item")
        if zero is None or one is None:
            raise self.error(end, "tables block must declare zero and one")
        return TablesBuilder(elements, zero, one, tuple(neg), tuple(f_lines), tuple(g_lines))

    def ideal_decl(self) -> IdealDecl:
        kw = self.expect_keyword("ideal")
        name = self.expect_name()
        self.expect_keyword("in")
        struct = self.expect_name()
        self.expect_sym("=")
        generate = False
        if self.peek().kind == "ident" and self.peek().text == "generate":
            self.advance()
            generate = True
        elems = self.elem_set()
        return IdealDecl(name.text, struct.text, elems, generate, line=kw.line, col=kw.col,
                         ref_line=struct.line, ref_col=struct.col)

    def mulset_decl(self) -> MulsetDecl:
        kw = self.expect_keyword("mulset")
        name = self.expect_name()
        self.expect_keyword("in")
        struct = self.expect_name()
        self.expect_sym("=")
        closure = False
        if self.peek().kind == "ident" and self.peek().text == "closure":
            self.advance()
            closure = True
        elems = self.elem_set()
        return MulsetDecl(name.text, struct.text, elems, closure, line=kw.line, col=kw.col,
                         ref_line=struct.line, ref_col=struct.col)

    def hom_decl(self) -> HomDecl:
        kw = self.expect_keyword("hom")
        name = self.expect_name()
        self.expect_sym(":")
        source = self.expect_name()
        tok = self.advance()
        if tok.kind != "arrow":
            raise self.error(tok, f"expected '->', found {tok.text or 'end of input'!r}")
        target = self.expect_name()
        self.expect_sym("=")
        self.expect_sym("{")
        maplets: list[tuple[str, str]] = []
        if not self.at_sym("}"):
            maplets.append(self.maplet())
            while self.at_sym(","):
                self.advance()
                if self.at_sym("}"):
                    break
                maplets.append(self.maplet())
        self.expect_sym("}")
        return HomDecl(name.text, source.text, target.text, tuple(maplets),
                       line=kw.line, col=kw.col)

    def maplet(self) -> tuple[str, str]:
        src = self.expect_elem()
        tok = self.advance()
        if tok.kind != "arrow":
            raise self.error(tok, f"expected '->', found {tok.text or 'end of input'!r}")
        return (src, self.expect_elem())


def parse(text: str) -> Document:
    """Parse a document; every failure is a positioned ParseError."""
    return _Parser(tokenize(text)).document()


# --- printer ------------------------------------------------------------------


def _print_set(items) -> str:
    return "{" + ",".join(items) + "}"


def print_document(doc: Document) -> str:
    out: list[str] = []
    for d in doc.decls:
        if isinstance(d, StructDecl):
            b = d.builder
            if isinstance(b, QuotientBuilder):
                out.append(
                    f"hyperring {d.name} = quotient_zn({b.modulus}, "
                    f"{_print_set(map(str, b.units))}, n={b.n})"
                )
            elif isinstance(b, ChainBuilder):
                out.append(f"hyperring {d.name} = chain({b.k}, n={b.n})")
            elif isinstance(b, ProductBuilder):
                out.append(f"hyperring {d.name} = product({b.left}, {b.right})")
            else:
                lines = [f"hyperring {d.name} = tables {{"]
                lines.append("  elements " + ", ".join(b.elements) + ";")
                lines.append(f"  zero {b.zero}; one {b.one};")
                for src, dst in b.neg:
                    lines.append(f"  neg({src}) = {dst};")
                for args, val in b.f_lines:
                    lines.append(f"  f({','.join(args)}) = {_print_set(val)};")
                for args, val in b.g_lines:
                    lines.append(f"  g({','.join(args)}) = {val};")
                lines.append("}")
                out.append("\n".join(lines))
        elif isinstance(d, IdealDecl):
            mid = "generate " if d.generate else ""
            out.append(f"ideal {d.name} in {d.structure} = {mid}{_print_set(d.elements)}")
        elif isinstance(d, MulsetDecl):
            mid = "closure " if d.closure else ""
            out.append(f"mulset {d.name} in {d.structure} = {mid}{_print_set(d.elements)}")
        elif isinstance(d, HomDecl):
            maplets = ", ".join(f"{a} -> {b}" for a, b in d.maplets)
            out.append(f"hom {d.name} : {d.source} -> {d.target} = {{ {maplets} }}")
    return "\n".join(out) + ("\n" if out else "")


# --- elaboration ----------------------------------------------------------------


@dataclass
class Environment:
    structures: dict[str, HyperringTable]
    ideals: dict[str, tuple[str, frozenset[int]]]
    mulsets: dict[str, tuple[str, frozenset[int]]]
    homs: dict[str, "object"]  # name -> Homomorphism

    def structure_of_ideal(self, name: str) -> HyperringTable:
        return self.structures[self.ideals[name][0]]


def elaborate(doc: Document, max_size: int = 16) -> Environment:
    """Build the declared objects.

    Reference and arity problems raise positioned ParseErrors; semantic
    validation failures (a declared ideal that is not one, an invalid
    multiplicative set or homomorphism) raise PreconditionError; oversized
    carriers raise CapExceededError.  Structures are built but *not* judged
    against the axioms here; commands decide how strict to be.
    """
    from .ideals import generate_hyperideal, is_hyperideal, mul_set, multiplicative_closure
    from .morphisms import homomorphism
    from .errors import PreconditionError

    env = Environment({}, {}, {}, {})
    for d in doc.decls:
        if isinstance(d, StructDecl):
            b = d.builder
            try:
                if isinstance(b, QuotientBuilder):
                    table = builders.quotient_by_units(b.modulus, b.units, b.n)
                elif isinstance(b, ChainBuilder):
                    table = builders.chain(b.k, b.n)
                elif isinstance(b, ProductBuilder):
                    for ref in (b.left, b.right):
                        if ref not in env.structures:
                            raise ParseError(d.line, d.col, f"unresolved reference {ref!r}")
                    table = builders.product(env.structures[b.left], env.structures[b.right],
                                             name=d.name)
                else:
                    table = builders.from_tables(
                        d.name, b.elements,
                        {args: vals for args, vals in b.f_lines},
                        {args: val for args, val in b.g_lines},
                        b.zero, b.one, dict(b.neg),
                    )
            except ParseError:
                raise
            except KrasnerError as exc:
                raise ParseError(d.line, d.col, str(exc)) from exc
            if table.size > max_size:
                raise CapExceededError(
                    f"structure {d.name!r} has {table.size} elements, over the cap "
                    f"{max_size}; rerun with a larger --max-size"
                )
            named = table if table.name == d.name else _renamed(table, d.name)
            env.structures[d.name] = named
        elif isinstance(d, (IdealDecl, MulsetDecl)):
            if d.structure not in env.structures:
                raise ParseError(d.ref_line, d.ref_col,
                                 f"unresolved reference {d.structure!r}")
            table = env.structures[d.structure]
            try:
                elems = frozenset(table.index_of(lbl) for lbl in d.elements)
            except KrasnerError as exc:
                raise ParseError(d.line, d.col, str(exc)) from exc
            if isinstance(d, IdealDecl):
                if d.generate:
                    value = generate_hyperideal(table, elems)
                else:
                    check = is_hyperideal(table, elems)
                    if not check.ok:
                        raise PreconditionError(
                            f"{d.name!r} is not a hyperideal of {d.structure!r}: "
                            f"{check.reason} at {check.witness}"
                        )
                    value = elems
                env.ideals[d.name] = (d.structure, value)
            else:
                if d.closure:
                    value = multiplicative_closure(table, elems)
                else:
                    value = mul_set(table, elems)
                env.mulsets[d.name] = (d.structure, value)
        elif isinstance(d, HomDecl):
            for ref in (d.source, d.target):
                if ref not in env.structures:
                    raise ParseError(d.line, d.col, f"unresolved reference {ref!r}")
            src = env.structures[d.source]
            dst = env.structures[d.target]
            mapping = [None] * src.size
            try:
                for a, b_ in d.maplets:
                    mapping[src.index_of(a)] = dst.index_of(b_)
            except KrasnerError as exc:
                raise ParseError(d.line, d.col, str(exc)) from exc
            if any(v is None for v in mapping):
                missing = [src.label(i) for i, v in enumerate(mapping) if v is None]
                raise ParseError(
                    d.line, d.col,
                    f"hom {d.name!r} is partial; missing {', '.join(missing)}"
                )
            env.homs[d.name] = homomorphism(src, dst, mapping)
    return env


def _renamed(table: HyperringTable, name: str) -> HyperringTable:
    clone = HyperringTable(
        name, table.m, table.n, table.labels, table._f, table._g,
        table.zero, table.one, table.negation,
    )
    return clone
