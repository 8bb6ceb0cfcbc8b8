"""Terms of the strictified category built over a signature.

Objects here are plain tuples of wire labels, each label an object of the
underlying (non-strict) category.  Tensor on such objects is tuple
concatenation, so associativity and unitality hold on the nose.  The empty
tuple is the strict unit and is distinct from the one-wire sequence
``(I,)`` carrying the lifted unit object.

Morphism terms are generated by lifted morphisms (one wire to one wire),
the two adapter families (``Pack``/``Unpack`` fuse or split a pair of
wires, ``UnitIntro``/``UnitElim`` summon or dispel a unit wire),
identities, composition and tensor.

The rewrite system lives on *sequential normal forms*: every term factors
into slices ``id ⊗ generator ⊗ id``.  Reordering slices whose supports are
disjoint does not change the denoted morphism (strict interchange), which
the cancellation loop uses to bring inverse adapter pairs together.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .terms import (
    UNIT, Assoc, AssocInv, Base, Comp, Id, MorC, ObjC, Signature, Tensor,
    TensorM, TermError, TypeMismatch, UnitL, UnitLInv, UnitR, UnitRInv,
    Unit, flatten, invert_structural, show_obj, typecheck_c,
)

Wires = tuple  # tuple[ObjC, ...]


class NotInvertible(TermError):
    pass


class FlatteningMismatch(TermError):
    pass


class RewriteBudgetExceeded(TermError):
    pass


# ---------------------------------------------------------------------------
# Morphism terms

@dataclass(frozen=True)
class IdD:
    wires: Wires


@dataclass(frozen=True)
class Lift:
    mor: MorC


@dataclass(frozen=True)
class Pack:
    left: ObjC
    right: ObjC


@dataclass(frozen=True)
class Unpack:
    left: ObjC
    right: ObjC


@dataclass(frozen=True)
class UnitIntro:
    pass


@dataclass(frozen=True)
class UnitElim:
    pass


@dataclass(frozen=True)
class CompD:
    first: "MorD"
    second: "MorD"


@dataclass(frozen=True)
class TensorD:
    left: "MorD"
    right: "MorD"


MorD = IdD | Lift | Pack | Unpack | UnitIntro | UnitElim | CompD | TensorD

# The generator nodes: everything except identities, composition, tensor.
GeneratorD = (Lift, Pack, Unpack, UnitIntro, UnitElim)


def chain_d(*ts: MorD) -> MorD:
    """Left-fold composition of one or more strict terms."""
    out = ts[0]
    for t in ts[1:]:
        out = CompD(out, t)
    return out


def show_wires(w: Wires) -> str:
    return "[" + "|".join(show_obj(x) for x in w) + "]"


def flatten_wires(w: Wires) -> tuple[str, ...]:
    out: tuple[str, ...] = ()
    for label in w:
        out += flatten(label)
    return out


def typecheck_d(t: MorD, sig: Signature) -> tuple[Wires, Wires]:
    """Return (dom, cod) wire sequences of ``t``."""

    def go(u: MorD, path: str) -> tuple[Wires, Wires]:
        if isinstance(u, IdD):
            return u.wires, u.wires
        if isinstance(u, Lift):
            d, c = typecheck_c(u.mor, sig)
            return (d,), (c,)
        if isinstance(u, Pack):
            return (u.left, u.right), (Tensor(u.left, u.right),)
        if isinstance(u, Unpack):
            return (Tensor(u.left, u.right),), (u.left, u.right)
        if isinstance(u, UnitIntro):
            return (), (UNIT,)
        if isinstance(u, UnitElim):
            return (UNIT,), ()
        if isinstance(u, CompD):
            d1, c1 = go(u.first, path + ".first")
            d2, c2 = go(u.second, path + ".second")
            if c1 != d2:
                raise TypeMismatch(
                    path,
                    f"{show_wires(c1)} composed against {show_wires(d2)}")
            return d1, c2
        if isinstance(u, TensorD):
            d1, c1 = go(u.left, path + ".left")
            d2, c2 = go(u.right, path + ".right")
            return d1 + d2, c1 + c2
        raise TypeError(u)

    return go(t, "root")


def invert_d(t: MorD) -> MorD:
    """Formal inverse; defined when every lifted morphism is structural."""
    if isinstance(t, IdD):
        return t
    if isinstance(t, Lift):
        try:
            return Lift(invert_structural(t.mor))
        except TermError as err:
            raise NotInvertible(str(err)) from None
    if isinstance(t, Pack):
        return Unpack(t.left, t.right)
    if isinstance(t, Unpack):
        return Pack(t.left, t.right)
    if isinstance(t, UnitIntro):
        return UnitElim()
    if isinstance(t, UnitElim):
        return UnitIntro()
    if isinstance(t, CompD):
        return CompD(invert_d(t.second), invert_d(t.first))
    if isinstance(t, TensorD):
        return TensorD(invert_d(t.left), invert_d(t.right))
    raise TypeError(t)


# ---------------------------------------------------------------------------
# Sequential normal form

@dataclass(frozen=True)
class Slice:
    """One factor ``id_left ⊗ gen ⊗ id_right`` of a sequential normal form."""
    left: Wires
    gen: MorD
    right: Wires
    gen_dom: Wires
    gen_cod: Wires

    @property
    def dom(self) -> Wires:
        return self.left + self.gen_dom + self.right

    @property
    def cod(self) -> Wires:
        return self.left + self.gen_cod + self.right

    @property
    def pos(self) -> int:
        return len(self.left)


@dataclass(frozen=True)
class SeqNF:
    dom: Wires
    slices: tuple[Slice, ...]

    @property
    def cod(self) -> Wires:
        return self.slices[-1].cod if self.slices else self.dom


def make_slice(left: Wires, gen: MorD, right: Wires, sig: Signature) -> Slice:
    d, c = typecheck_d(gen, sig)
    return Slice(tuple(left), gen, tuple(right), d, c)


def seq_normal_form(t: MorD, sig: Signature) -> SeqNF:
    """Factor ``t`` into slices.

    The result composes back to a term equal to ``t`` modulo the strict
    monoidal axioms only (functoriality of tensor and interchange);
    identities contribute no slices, a tensor ``t ⊗ u`` factors as
    ``(t ⊗ id) ; (id ⊗ u)``.
    """
    dom, _ = typecheck_d(t, sig)

    def go(u: MorD) -> tuple[Wires, Wires, list[Slice]]:
        if isinstance(u, IdD):
            return u.wires, u.wires, []
        if isinstance(u, GeneratorD):
            s = make_slice((), u, (), sig)
            return s.gen_dom, s.gen_cod, [s]
        if isinstance(u, CompD):
            d1, _, s1 = go(u.first)
            _, c2, s2 = go(u.second)
            return d1, c2, s1 + s2
        if isinstance(u, TensorD):
            d1, c1, s1 = go(u.left)
            d2, c2, s2 = go(u.right)
            padded = [Slice(s.left, s.gen, s.right + d2, s.gen_dom, s.gen_cod)
                      for s in s1]
            padded += [Slice(c1 + s.left, s.gen, s.right, s.gen_dom, s.gen_cod)
                       for s in s2]
            return d1 + d2, c1 + c2, padded
        raise TypeError(u)

    _, _, slices = go(t)
    return SeqNF(dom, tuple(slices))


def slice_term(s: Slice) -> MorD:
    out: MorD = s.gen
    if s.right:
        out = TensorD(out, IdD(s.right))
    if s.left:
        out = TensorD(IdD(s.left), out)
    return out


def recompose(slices, dom: Wires) -> MorD:
    if not slices:
        return IdD(tuple(dom))
    return chain_d(*(slice_term(s) for s in slices))


# ---------------------------------------------------------------------------
# Canonical arrows (packing / unpacking)

def pack_obj(x: Wires) -> MorD:
    """The adapter that assembles ``x`` from its flattened base wires.

    Built by recursion on the wire sequence and on each wire label: a unit
    label is summoned from nothing, a base label is left alone, a tensor
    label is built from its halves and fused.
    """
    if len(x) == 0:
        return IdD(())
    if len(x) == 1:
        label = x[0]
        if isinstance(label, Unit):
            return UnitIntro()
        if isinstance(label, Base):
            return IdD((label,))
        if isinstance(label, Tensor):
            halves = TensorD(pack_obj((label.left,)), pack_obj((label.right,)))
            return CompD(halves, Pack(label.left, label.right))
        raise TypeError(label)
    return TensorD(pack_obj(x[:1]), pack_obj(x[1:]))


def unpack_obj(x: Wires) -> MorD:
    return invert_d(pack_obj(x))


def canonical_d(a: Wires, b: Wires) -> MorD:
    """The canonical adapter-only arrow ``a -> b``: unpack then repack.

    Requires the flattened base sequences of both sides to coincide; with
    no braiding available, wires cannot be permuted, only rebracketed.
    """
    a, b = tuple(a), tuple(b)
    if flatten_wires(a) != flatten_wires(b):
        raise FlatteningMismatch(
            f"{show_wires(a)} flattens to {flatten_wires(a)}, "
            f"{show_wires(b)} to {flatten_wires(b)}")
    down = unpack_obj(a)
    up = pack_obj(b)
    if isinstance(down, IdD) and isinstance(up, IdD):
        return IdD(a)
    if isinstance(down, IdD):
        return up
    if isinstance(up, IdD):
        return down
    return CompD(down, up)


# ---------------------------------------------------------------------------
# Rewriting

RULESETS = ("FUNCTORIALITY", "ADAPTER_CANCEL", "NATURALITY_SLIDE",
            "STRUCTURAL_EXPAND")


@dataclass
class RewriteStats:
    cancelled_pairs: int = 0
    swaps: int = 0
    trace: list[str] = field(default_factory=list)


class _Budget:
    def __init__(self, max_steps):
        self.left = max_steps

    def tick(self):
        if self.left is None:
            return
        self.left -= 1
        if self.left < 0:
            raise RewriteBudgetExceeded("rewrite step budget exhausted")


def _map_lifts(t: MorD, fn) -> MorD:
    if isinstance(t, Lift):
        return fn(t.mor)
    if isinstance(t, CompD):
        return CompD(_map_lifts(t.first, fn), _map_lifts(t.second, fn))
    if isinstance(t, TensorD):
        return TensorD(_map_lifts(t.left, fn), _map_lifts(t.right, fn))
    return t


def _rw_functoriality(t: MorD) -> MorD:
    def fn(f: MorC) -> MorD:
        if isinstance(f, Id):
            return IdD((f.obj,))
        if isinstance(f, Comp):
            return CompD(fn(f.first), fn(f.second))
        return Lift(f)

    return _map_lifts(t, fn)


def _expand_structural_lift(f: MorC, sig: Signature) -> MorD:
    """Adapter composite for one lifted structural constructor.

    Tensors unpack, act on both wires, and repack; the associator and
    unitor images are the fixed composites whose orientation is the one
    that typechecks.
    """
    if isinstance(f, TensorM):
        d1, c1 = typecheck_c(f.left, sig)
        d2, c2 = typecheck_c(f.right, sig)
        return chain_d(
            Unpack(d1, d2),
            TensorD(Lift(f.left), Lift(f.right)),
            Pack(c1, c2))
    if isinstance(f, Assoc):
        return chain_d(
            Unpack(f.a, Tensor(f.b, f.c)),
            TensorD(IdD((f.a,)), Unpack(f.b, f.c)),
            TensorD(Pack(f.a, f.b), IdD((f.c,))),
            Pack(Tensor(f.a, f.b), f.c))
    if isinstance(f, AssocInv):
        return chain_d(
            Unpack(Tensor(f.a, f.b), f.c),
            TensorD(Unpack(f.a, f.b), IdD((f.c,))),
            TensorD(IdD((f.a,)), Pack(f.b, f.c)),
            Pack(f.a, Tensor(f.b, f.c)))
    if isinstance(f, UnitL):
        return CompD(Unpack(UNIT, f.obj),
                     TensorD(UnitElim(), IdD((f.obj,))))
    if isinstance(f, UnitLInv):
        return CompD(TensorD(UnitIntro(), IdD((f.obj,))),
                     Pack(UNIT, f.obj))
    if isinstance(f, UnitR):
        return CompD(Unpack(f.obj, UNIT),
                     TensorD(IdD((f.obj,)), UnitElim()))
    if isinstance(f, UnitRInv):
        return CompD(TensorD(IdD((f.obj,)), UnitIntro()),
                     Pack(f.obj, UNIT))
    return Lift(f)


def _rw_structural_expand(t: MorD, sig: Signature) -> MorD:
    def fn(f: MorC) -> MorD:
        out = _expand_structural_lift(f, sig)
        if isinstance(out, Lift):
            return out
        return _map_lifts(out, fn)

    return _map_lifts(t, fn)


def _is_inverse_pair(s1: Slice, s2: Slice) -> bool:
    if s1.left != s2.left:
        return False
    g1, g2 = s1.gen, s2.gen
    if isinstance(g1, Pack) and isinstance(g2, Unpack):
        return (g1.left, g1.right) == (g2.left, g2.right)
    if isinstance(g1, Unpack) and isinstance(g2, Pack):
        return (g1.left, g1.right) == (g2.left, g2.right)
    if isinstance(g1, UnitIntro) and isinstance(g2, UnitElim):
        return True
    if isinstance(g1, UnitElim) and isinstance(g2, UnitIntro):
        return True
    return False


def _swap_if_left(s1: Slice, s2: Slice) -> tuple[Slice, Slice] | None:
    """Swap adjacent slices when the second acts strictly left of the first.

    Sound by strict interchange: disjoint supports commute.  Only the
    left-moving direction is taken so the loop orders slices by position
    and terminates.
    """
    a1 = len(s1.left)
    a2 = len(s2.left)
    n2 = len(s2.gen_dom)
    if a2 + n2 > a1:
        return None
    tail = s1.left[a2 + n2:]
    new_first = Slice(s2.left, s2.gen, tail + s1.gen_dom + s1.right,
                      s2.gen_dom, s2.gen_cod)
    new_second = Slice(s2.left + s2.gen_cod + tail, s1.gen, s1.right,
                       s1.gen_dom, s1.gen_cod)
    return new_first, new_second


def _cancel_and_slide(slices: list[Slice], budget: _Budget,
                      stats: RewriteStats) -> list[Slice]:
    changed = True
    guard = (len(slices) + 2) ** 2 + 16
    while changed:
        changed = False
        i = 0
        while i < len(slices) - 1:
            if _is_inverse_pair(slices[i], slices[i + 1]):
                budget.tick()
                stats.cancelled_pairs += 1
                stats.trace.append(
                    f"cancel {_gen_name(slices[i].gen)}/"
                    f"{_gen_name(slices[i + 1].gen)} at wire {slices[i].pos}")
                del slices[i:i + 2]
                i = max(i - 1, 0)
                changed = True
            else:
                i += 1
        for i in range(len(slices) - 1):
            swapped = _swap_if_left(slices[i], slices[i + 1])
            if swapped is not None:
                budget.tick()
                stats.swaps += 1
                slices[i], slices[i + 1] = swapped
                changed = True
        guard -= 1
        if guard <= 0:
            break
    return slices


def _gen_name(g: MorD) -> str:
    if isinstance(g, Pack):
        return f"pack[{show_obj(g.left)},{show_obj(g.right)}]"
    if isinstance(g, Unpack):
        return f"unpack[{show_obj(g.left)},{show_obj(g.right)}]"
    if isinstance(g, UnitIntro):
        return "unit+"
    if isinstance(g, UnitElim):
        return "unit-"
    if isinstance(g, Lift):
        return "lift(...)"
    return type(g).__name__


def _slide_naturality(slices: list[Slice], sig: Signature,
                      stats: RewriteStats) -> list[Slice]:
    """Push lifted tensors from the packed side to the unpacked side.

    ``pack ; lift(f (*) g)`` becomes ``(lift f (*) lift g) ; pack`` and
    ``lift(f (*) g) ; unpack`` becomes ``unpack ; (lift f (*) lift g)``,
    with a bounded number of left-to-right sweeps.
    """
    for _ in range(max(len(slices), 1)):
        out: list[Slice] = []
        i = 0
        fired = False
        while i < len(slices):
            s1 = slices[i]
            s2 = slices[i + 1] if i + 1 < len(slices) else None
            if (s2 is not None and s1.left == s2.left
                    and isinstance(s1.gen, Pack)
                    and isinstance(s2.gen, Lift)
                    and isinstance(s2.gen.mor, TensorM)):
                f, g = s2.gen.mor.left, s2.gen.mor.right
                df, cf = typecheck_c(f, sig)
                dg, cg = typecheck_c(g, sig)
                if (df, dg) == (s1.gen.left, s1.gen.right):
                    left, right = s1.left, s1.right
                    out.append(make_slice(left, Lift(f), (dg,) + right, sig))
                    out.append(make_slice(left + (cf,), Lift(g), right, sig))
                    out.append(make_slice(left, Pack(cf, cg), right, sig))
                    stats.trace.append(f"slide lift across {_gen_name(s1.gen)}")
                    i += 2
                    fired = True
                    continue
            if (s2 is not None and s1.left == s2.left
                    and isinstance(s1.gen, Lift)
                    and isinstance(s1.gen.mor, TensorM)
                    and isinstance(s2.gen, Unpack)):
                f, g = s1.gen.mor.left, s1.gen.mor.right
                df, cf = typecheck_c(f, sig)
                dg, cg = typecheck_c(g, sig)
                if (cf, cg) == (s2.gen.left, s2.gen.right):
                    left, right = s1.left, s1.right
                    out.append(make_slice(left, Unpack(df, dg), right, sig))
                    out.append(make_slice(left, Lift(f), (dg,) + right, sig))
                    out.append(make_slice(left + (cf,), Lift(g), right, sig))
                    stats.trace.append(f"slide lift across {_gen_name(s2.gen)}")
                    i += 2
                    fired = True
                    continue
            out.append(s1)
            i += 1
        slices = out
        if not fired:
            break
    return slices


def apply_rules(t: MorD, sig: Signature, ruleset: str,
                max_steps: int | None = None) -> MorD:
    """Apply one named ruleset exhaustively; output has identical dom/cod."""
    if ruleset not in RULESETS:
        raise ValueError(f"unknown ruleset {ruleset!r}; expected one of {RULESETS}")
    typecheck_d(t, sig)
    if ruleset == "FUNCTORIALITY":
        return _rw_functoriality(t)
    if ruleset == "STRUCTURAL_EXPAND":
        return _rw_structural_expand(t, sig)
    nf = seq_normal_form(t, sig)
    stats = RewriteStats()
    if ruleset == "ADAPTER_CANCEL":
        slices = _cancel_and_slide(list(nf.slices), _Budget(max_steps), stats)
    else:
        slices = _slide_naturality(list(nf.slices), sig, stats)
    return recompose(slices, nf.dom)


def normalize_adapters(t: MorD, sig: Signature,
                       max_steps: int | None = None) -> MorD:
    term, _ = normalize_adapters_with_stats(t, sig, max_steps)
    return term


def normalize_adapters_with_stats(
        t: MorD, sig: Signature,
        max_steps: int | None = None) -> tuple[MorD, RewriteStats]:
    """Normalise ``t``: expand structural lifts, slice, cancel adapters.

    Adapter-only results are presented canonically: the identity when the
    endpoints coincide, otherwise ``unpack(dom) ; pack(cod)``.  That
    presentation is licensed by the coherence of the adapter fragment
    (every adapter-only arrow equals the canonical one), so it holds even
    when the local cancellation loop leaves residual slices.  Terms still
    containing lifted generators are recomposed from their cancelled
    slices.
    """
    budget = _Budget(max_steps)
    stats = RewriteStats()
    prev = None
    while prev != t:
        prev = t
        t = _rw_functoriality(t)
        t = _rw_structural_expand(t, sig)
    nf = seq_normal_form(t, sig)
    dom, cod = nf.dom, nf.cod
    slices = _slide_naturality(list(nf.slices), sig, stats)
    slices = _cancel_and_slide(slices, budget, stats)
    if not any(isinstance(s.gen, Lift) for s in slices):
        if dom == cod:
            stats.trace.append("adapter-only endpoints coincide: identity")
            return IdD(dom), stats
        stats.trace.append("adapter-only: canonical presentation")
        return canonical_d(dom, cod), stats
    return recompose(slices, dom), stats
