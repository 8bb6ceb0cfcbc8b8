from strictcat import demos
from strictcat.strict import (
    Lift, Pack, UnitElim, UnitIntro, Unpack, normalize_adapters,
    normalize_adapters_with_stats, seq_normal_form, typecheck_d,
)
from strictcat.functors import strictify_expand
from strictcat.finmodel import FinModel, eval_mor_d, extensional_equal
from strictcat.terms import typecheck_c


def _count_nodes(t, kinds):
    from strictcat.strict import CompD, TensorD
    if isinstance(t, kinds):
        return 1
    if isinstance(t, CompD):
        return _count_nodes(t.first, kinds) + _count_nodes(t.second, kinds)
    if isinstance(t, TensorD):
        return _count_nodes(t.left, kinds) + _count_nodes(t.right, kinds)
    return 0


def test_parity_types():
    sig = demos.parity_signature()
    for n in (1, 2, 3, 5):
        dom, cod = typecheck_d(demos.parity_term(n), sig)
        assert dom == (demos.bit_bundle(n),)
        assert cod == (demos.BIT,)


def test_parity_counts():
    sig = demos.parity_signature()
    t = demos.parity_term(3)
    assert _count_nodes(t, Lift) == 2
    assert _count_nodes(t, Unpack) == 2
    assert _count_nodes(t, Pack) == 2


def test_ba_nonstrict_typechecks():
    sig = demos.ba_signature()
    dom, cod = typecheck_c(demos.ba_nonstrict(), sig)
    assert dom == demos.A_DSTAR
    assert cod == demos.A


def test_ba_cancellation():
    """Normalising the bracketed encoding recovers the strict diagram.

    Every bundler-unbundler pair created at the six stage boundaries
    cancels; the six remaining adapters are the unavoidable interface
    bookkeeping of the strict-setting encoding itself, which the result
    matches syntactically.
    """
    sig = demos.ba_signature()
    expanded = strictify_expand(demos.ba_nonstrict(), sig)
    assert _count_nodes(expanded, (Pack, Unpack, UnitIntro, UnitElim)) == 18
    out, stats = normalize_adapters_with_stats(expanded, sig)
    assert stats.cancelled_pairs == 6
    assert _count_nodes(out, (Pack, Unpack, UnitIntro, UnitElim)) == 6
    direct = demos.ba_strict_direct()
    assert out == normalize_adapters(direct, sig)
    assert len(seq_normal_form(out, sig).slices) == \
        len(seq_normal_form(direct, sig).slices) == 9


def test_ba_extensional_agreement():
    sig = demos.ba_signature()
    model = FinModel(sig, seed=2)
    lhs = eval_mor_d(strictify_expand(demos.ba_nonstrict(), sig), model)
    rhs = eval_mor_d(demos.ba_strict_direct(), model)
    assert extensional_equal(lhs, rhs)
