"""A concrete monoidal category of finite sets with nested pairing.

Used as a brute-force extensional oracle: objects evaluate to enumerated
carriers, morphisms to total function tables, and two symbolic terms are
compared by evaluating both exhaustively.  Pairing is genuinely nested,
``Pair(Pair(a, b), c)`` and ``Pair(a, Pair(b, c))`` are different
elements, so associators are exercised honestly rather than vanishing.

Generator tables are drawn pseudo-randomly from the model seed, one
reproducible table per generator name.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .terms import (
    Assoc, AssocInv, Base, Comp, Gen, Id, MorC, ObjC, Signature, Tensor,
    TensorM, TermError, UnitL, UnitLInv, UnitR, UnitRInv, Unit, show_obj,
    typecheck_c,
)
from .strict import (
    CompD, IdD, Lift, MorD, Pack, TensorD, UnitElim, UnitIntro, Unpack,
    Wires, show_wires, typecheck_d,
)


class DomainMismatch(TermError):
    pass


@dataclass(frozen=True)
class UnitElem:
    pass


@dataclass(frozen=True)
class Atom:
    index: int


@dataclass(frozen=True)
class Pair:
    first: "Element"
    second: "Element"


Element = UnitElem | Atom | Pair

UNIT_ELEM = UnitElem()


class FinModel:
    """Carrier sizes per base object plus seeded generator tables.

    Immutable after construction; carriers are memoised, so instances are
    safe to share across tests and threads.
    """

    def __init__(self, sig: Signature, sizes: dict[str, int] | None = None,
                 seed: int = 0):
        self.sig = sig
        self.sizes = {name: 2 for name in sig.base_objects}
        if sizes:
            for name, n in sizes.items():
                if name not in sig.base_objects:
                    raise TermError(f"size given for undeclared base {name!r}")
                if n < 1:
                    raise TermError(f"carrier of {name!r} must be nonempty")
                self.sizes[name] = n
        self.seed = seed
        self._carriers: dict[ObjC, tuple[Element, ...]] = {}
        self.gen_tables: dict[str, dict[Element, Element]] = {}
        for name in sorted(sig.generators):
            dom, cod = sig.generators[name]
            rng = random.Random(f"{seed}/{name}")
            cod_carrier = self.carrier(cod)
            self.gen_tables[name] = {
                x: rng.choice(cod_carrier) for x in self.carrier(dom)}

    def carrier(self, a: ObjC) -> tuple[Element, ...]:
        cached = self._carriers.get(a)
        if cached is not None:
            return cached
        if isinstance(a, Unit):
            out: tuple[Element, ...] = (UNIT_ELEM,)
        elif isinstance(a, Base):
            if a.name not in self.sizes:
                raise TermError(f"no carrier for base {a.name!r}")
            out = tuple(Atom(i) for i in range(self.sizes[a.name]))
        elif isinstance(a, Tensor):
            out = tuple(Pair(x, y)
                        for x in self.carrier(a.left)
                        for y in self.carrier(a.right))
        else:
            raise TypeError(a)
        self._carriers[a] = out
        return out


@dataclass
class FuncTable:
    """A total function between enumerated carriers.

    ``dom``/``cod`` are objects (for tables over the base category) or
    wire sequences (for tables over the strict one); keys and values are
    elements or tuples of elements accordingly.
    """
    dom: object
    cod: object
    mapping: dict


def eval_obj(a: ObjC, model: FinModel) -> tuple[Element, ...]:
    return model.carrier(a)


def eval_mor(f: MorC, model: FinModel) -> FuncTable:
    dom, cod = typecheck_c(f, model.sig)

    if isinstance(f, Id):
        mapping = {x: x for x in model.carrier(f.obj)}
    elif isinstance(f, Gen):
        mapping = dict(model.gen_tables[f.name])
    elif isinstance(f, Comp):
        t1 = eval_mor(f.first, model)
        t2 = eval_mor(f.second, model)
        mapping = {x: t2.mapping[y] for x, y in t1.mapping.items()}
    elif isinstance(f, TensorM):
        t1 = eval_mor(f.left, model)
        t2 = eval_mor(f.right, model)
        mapping = {Pair(x, y): Pair(t1.mapping[x], t2.mapping[y])
                   for x in t1.mapping for y in t2.mapping}
    elif isinstance(f, Assoc):
        mapping = {Pair(x, Pair(y, z)): Pair(Pair(x, y), z)
                   for x in model.carrier(f.a)
                   for y in model.carrier(f.b)
                   for z in model.carrier(f.c)}
    elif isinstance(f, AssocInv):
        mapping = {Pair(Pair(x, y), z): Pair(x, Pair(y, z))
                   for x in model.carrier(f.a)
                   for y in model.carrier(f.b)
                   for z in model.carrier(f.c)}
    elif isinstance(f, UnitL):
        mapping = {Pair(UNIT_ELEM, x): x for x in model.carrier(f.obj)}
    elif isinstance(f, UnitLInv):
        mapping = {x: Pair(UNIT_ELEM, x) for x in model.carrier(f.obj)}
    elif isinstance(f, UnitR):
        mapping = {Pair(x, UNIT_ELEM): x for x in model.carrier(f.obj)}
    elif isinstance(f, UnitRInv):
        mapping = {x: Pair(x, UNIT_ELEM) for x in model.carrier(f.obj)}
    else:
        raise TypeError(f)
    return FuncTable(dom, cod, mapping)


def _wire_carrier(w: Wires, model: FinModel) -> list[tuple[Element, ...]]:
    out: list[tuple[Element, ...]] = [()]
    for label in w:
        out = [xs + (x,) for xs in out for x in model.carrier(label)]
    return out


def eval_mor_d(t: MorD, model: FinModel) -> FuncTable:
    dom, cod = typecheck_d(t, model.sig)

    if isinstance(t, IdD):
        mapping = {xs: xs for xs in _wire_carrier(t.wires, model)}
    elif isinstance(t, Lift):
        inner = eval_mor(t.mor, model)
        mapping = {(x,): (y,) for x, y in inner.mapping.items()}
    elif isinstance(t, Pack):
        mapping = {(x, y): (Pair(x, y),)
                   for x in model.carrier(t.left)
                   for y in model.carrier(t.right)}
    elif isinstance(t, Unpack):
        mapping = {(Pair(x, y),): (x, y)
                   for x in model.carrier(t.left)
                   for y in model.carrier(t.right)}
    elif isinstance(t, UnitIntro):
        mapping = {(): (UNIT_ELEM,)}
    elif isinstance(t, UnitElim):
        mapping = {(UNIT_ELEM,): ()}
    elif isinstance(t, CompD):
        t1 = eval_mor_d(t.first, model)
        t2 = eval_mor_d(t.second, model)
        mapping = {xs: t2.mapping[ys] for xs, ys in t1.mapping.items()}
    elif isinstance(t, TensorD):
        t1 = eval_mor_d(t.left, model)
        t2 = eval_mor_d(t.right, model)
        mapping = {xs + ys: t1.mapping[xs] + t2.mapping[ys]
                   for xs in t1.mapping for ys in t2.mapping}
    else:
        raise TypeError(t)
    return FuncTable(dom, cod, mapping)


def extensional_equal(x: FuncTable, y: FuncTable) -> bool:
    """Pointwise comparison over the full enumerated domain."""
    if x.dom != y.dom:
        raise DomainMismatch(f"{_show_end(x.dom)} vs {_show_end(y.dom)}")
    return x.mapping == y.mapping


def _show_end(end) -> str:
    if isinstance(end, tuple):
        return show_wires(end)
    return show_obj(end)
