"""Concrete syntax: parsing and printing of objects and terms.

Grammar summary (see README for the full table):

    objects        I | name | (A * B)
    base morphisms id[A], gen-name, alpha[A,B,C], alpha'[A,B,C],
                   lambda[A], lambda'[A], rho[A], rho'[A]
    strict extras  pack[A,B], unpack[A,B], unit+, unit-, lift(f),
                   idD[A1|A2|...]
    combinators    f ; g   (diagrammatic, loosest)
                   f (*) g (tensor, tighter)

``;`` and ``(*)`` associate to the left; printing re-parenthesises
right-nested children, so parse(show(t)) == t for every term.
"""

from __future__ import annotations

import re

from .terms import (
    UNIT, Assoc, AssocInv, Base, Comp, Gen, Id, MorC, ObjC, Signature,
    Tensor, TensorM, TermError, UnitL, UnitLInv, UnitR, UnitRInv,
    make_signature, show_obj,
)
from .strict import (
    CompD, IdD, Lift, MorD, Pack, TensorD, UnitElim, UnitIntro, Unpack,
    Wires,
)


class ParseError(TermError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


_TOKEN_RE = re.compile(r"""
    (?P<WS>\s+)
  | (?P<OTIMES>\(\*\))
  | (?P<UNITINTRO>unit\+)
  | (?P<UNITELIM>unit-(?![A-Za-z0-9_]))
  | (?P<ARROW>->)
  | (?P<NAME>[A-Za-z_][A-Za-z0-9_]*'?)
  | (?P<LP>\()
  | (?P<RP>\))
  | (?P<LB>\[)
  | (?P<RB>\])
  | (?P<COMMA>,)
  | (?P<SEMI>;)
  | (?P<PIPE>\|)
  | (?P<STAR>\*)
""", re.VERBOSE)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind != "WS":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> str:
        return self.tokens[self.index][0]

    def next(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str) -> str:
        tok_kind, value, _ = self.tokens[self.index]
        if tok_kind != kind:
            found = value if value else "end of input"
            self.fail(f"expected {kind}, found {found!r}")
        self.index += 1
        return value

    def fail(self, message: str):
        _, value, pos = self.tokens[self.index]
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        raise ParseError(message, line, col)

    def at_end(self) -> bool:
        return self.peek() == "EOF"

    # -- objects ------------------------------------------------------------

    def obj(self) -> ObjC:
        if self.peek() == "LP":
            self.next()
            left = self.obj()
            self.expect("STAR")
            right = self.obj()
            self.expect("RP")
            return Tensor(left, right)
        if self.peek() == "NAME":
            name = self.next()[1]
            if name == "I":
                return UNIT
            if name.endswith("'"):
                self.fail(f"unexpected primed name {name!r} in object")
            return Base(name)
        self.fail("expected an object")

    def wires(self) -> Wires:
        if self.peek() == "RB":
            return ()
        out = [self.obj()]
        while self.peek() == "PIPE":
            self.next()
            out.append(self.obj())
        return tuple(out)

    # -- base-category morphisms ---------------------------------------------

    def cmor(self) -> MorC:
        out = self.cten()
        while self.peek() == "SEMI":
            self.next()
            out = Comp(out, self.cten())
        return out

    def cten(self) -> MorC:
        out = self.catom()
        while self.peek() == "OTIMES":
            self.next()
            out = TensorM(out, self.catom())
        return out

    def catom(self) -> MorC:
        if self.peek() == "LP":
            self.next()
            out = self.cmor()
            self.expect("RP")
            return out
        if self.peek() != "NAME":
            self.fail("expected a morphism")
        name = self.next()[1]
        if name in ("alpha", "alpha'"):
            a, b, c = self._obj_args(3)
            return Assoc(a, b, c) if name == "alpha" else AssocInv(a, b, c)
        if name in ("lambda", "lambda'"):
            (a,) = self._obj_args(1)
            return UnitL(a) if name == "lambda" else UnitLInv(a)
        if name in ("rho", "rho'"):
            (a,) = self._obj_args(1)
            return UnitR(a) if name == "rho" else UnitRInv(a)
        if name == "id":
            (a,) = self._obj_args(1)
            return Id(a)
        if name.endswith("'"):
            self.fail(f"unknown primed morphism {name!r}")
        return Gen(name)

    def _obj_args(self, n: int) -> list[ObjC]:
        self.expect("LB")
        args = [self.obj()]
        while self.peek() == "COMMA":
            self.next()
            args.append(self.obj())
        self.expect("RB")
        if len(args) != n:
            self.fail(f"expected {n} object argument(s), got {len(args)}")
        return args

    # -- strict-category morphisms --------------------------------------------

    def dmor(self) -> MorD:
        out = self.dten()
        while self.peek() == "SEMI":
            self.next()
            out = CompD(out, self.dten())
        return out

    def dten(self) -> MorD:
        out = self.datom()
        while self.peek() == "OTIMES":
            self.next()
            out = TensorD(out, self.datom())
        return out

    def datom(self) -> MorD:
        kind = self.peek()
        if kind == "UNITINTRO":
            self.next()
            return UnitIntro()
        if kind == "UNITELIM":
            self.next()
            return UnitElim()
        if kind == "LP":
            self.next()
            out = self.dmor()
            self.expect("RP")
            return out
        if kind != "NAME":
            self.fail("expected a strict morphism")
        name = self.next()[1]
        if name == "pack":
            a, b = self._obj_args(2)
            return Pack(a, b)
        if name == "unpack":
            a, b = self._obj_args(2)
            return Unpack(a, b)
        if name == "lift":
            self.expect("LP")
            inner = self.cmor()
            self.expect("RP")
            return Lift(inner)
        if name == "idD":
            self.expect("LB")
            w = self.wires()
            self.expect("RB")
            return IdD(w)
        self.fail(f"unknown strict morphism {name!r}")


def _run(parser_method, text: str):
    p = _Parser(text)
    out = parser_method(p)
    if not p.at_end():
        p.fail("trailing input")
    return out


def parse_obj(text: str) -> ObjC:
    return _run(_Parser.obj, text)


def parse_cmor(text: str) -> MorC:
    return _run(_Parser.cmor, text)


def parse_dmor(text: str) -> MorD:
    return _run(_Parser.dmor, text)


def parse_wires(text: str) -> Wires:
    p = _Parser(text)
    if p.at_end():
        return ()
    out = p.wires()
    if not p.at_end():
        p.fail("trailing input")
    return out


# ---------------------------------------------------------------------------
# Printing

_PREC_COMP = 0
_PREC_TENS = 1


def show_cmor(f: MorC) -> str:
    return _show_c(f, _PREC_COMP)


def _show_c(f: MorC, ctx: int) -> str:
    if isinstance(f, Comp):
        s = f"{_show_c(f.first, _PREC_COMP)} ; {_show_c(f.second, _PREC_TENS)}"
        return f"({s})" if ctx > _PREC_COMP else s
    if isinstance(f, TensorM):
        s = f"{_show_c(f.left, _PREC_TENS)} (*) {_show_c(f.right, _PREC_TENS + 1)}"
        return f"({s})" if ctx > _PREC_TENS else s
    if isinstance(f, Id):
        return f"id[{show_obj(f.obj)}]"
    if isinstance(f, Gen):
        return f.name
    if isinstance(f, Assoc):
        return f"alpha[{show_obj(f.a)},{show_obj(f.b)},{show_obj(f.c)}]"
    if isinstance(f, AssocInv):
        return f"alpha'[{show_obj(f.a)},{show_obj(f.b)},{show_obj(f.c)}]"
    if isinstance(f, UnitL):
        return f"lambda[{show_obj(f.obj)}]"
    if isinstance(f, UnitLInv):
        return f"lambda'[{show_obj(f.obj)}]"
    if isinstance(f, UnitR):
        return f"rho[{show_obj(f.obj)}]"
    if isinstance(f, UnitRInv):
        return f"rho'[{show_obj(f.obj)}]"
    raise TypeError(f)


def show_dmor(t: MorD) -> str:
    return _show_d(t, _PREC_COMP)


def _show_d(t: MorD, ctx: int) -> str:
    if isinstance(t, CompD):
        s = f"{_show_d(t.first, _PREC_COMP)} ; {_show_d(t.second, _PREC_TENS)}"
        return f"({s})" if ctx > _PREC_COMP else s
    if isinstance(t, TensorD):
        s = f"{_show_d(t.left, _PREC_TENS)} (*) {_show_d(t.right, _PREC_TENS + 1)}"
        return f"({s})" if ctx > _PREC_TENS else s
    if isinstance(t, IdD):
        return f"idD[{'|'.join(show_obj(w) for w in t.wires)}]"
    if isinstance(t, Lift):
        return f"lift({show_cmor(t.mor)})"
    if isinstance(t, Pack):
        return f"pack[{show_obj(t.left)},{show_obj(t.right)}]"
    if isinstance(t, Unpack):
        return f"unpack[{show_obj(t.left)},{show_obj(t.right)}]"
    if isinstance(t, UnitIntro):
        return "unit+"
    if isinstance(t, UnitElim):
        return "unit-"
    raise TypeError(t)


# ---------------------------------------------------------------------------
# Signature and model files

_OBJ_LINE = re.compile(r"^obj\s+([A-Za-z_][A-Za-z0-9_]*)$")
_GEN_LINE = re.compile(r"^gen\s+([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(.+)$")


def parse_signature(text: str) -> Signature:
    """Signature file: one ``obj NAME`` or ``gen NAME : A -> B`` per line."""
    bases: list[str] = []
    gens: dict[str, tuple[ObjC, ObjC]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _OBJ_LINE.match(line)
        if m:
            name = m.group(1)
            if name in bases:
                raise ParseError(f"duplicate object {name!r}", lineno, 1)
            bases.append(name)
            continue
        m = _GEN_LINE.match(line)
        if m:
            name, type_text = m.groups()
            q = _Parser(type_text)
            dom = q.obj()
            q.expect("ARROW")
            cod = q.obj()
            if not q.at_end():
                q.fail("trailing input after generator type")
            if name in gens:
                raise ParseError(f"duplicate generator {name!r}", lineno, 1)
            gens[name] = (dom, cod)
            continue
        raise ParseError("expected 'obj NAME' or 'gen NAME : A -> B'",
                         lineno, 1)
    return make_signature(bases, gens)


def show_signature(sig: Signature) -> str:
    lines = [f"obj {name}" for name in sorted(sig.base_objects)]
    for name in sorted(sig.generators):
        dom, cod = sig.generators[name]
        lines.append(f"gen {name} : {show_obj(dom)} -> {show_obj(cod)}")
    return "\n".join(lines) + "\n"


def parse_model_config(text: str) -> tuple[dict[str, int], int]:
    """Model file: ``name=size`` lines plus an optional ``seed=n`` line."""
    sizes: dict[str, int] = {}
    seed = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected key=value", lineno, 1)
        key, value = (part.strip() for part in line.split("=", 1))
        try:
            number = int(value)
        except ValueError:
            raise ParseError(f"expected an integer, found {value!r}",
                             lineno, 1) from None
        if key == "seed":
            seed = number
        else:
            sizes[key] = number
    return sizes, seed
