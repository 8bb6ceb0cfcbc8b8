import pytest

from strictcat.terms import (
    UNIT, Assoc, AssocInv, Base, Comp, Gen, Id, Tensor, TensorM, UnitL,
    UnitLInv, UnitR, UnitRInv,
)
from strictcat.strict import (
    IdD, Lift, Pack, UnitElim, UnitIntro, Unpack,
)
from strictcat.syntax import (
    ParseError, parse_cmor, parse_dmor, parse_model_config, parse_obj,
    parse_signature, parse_wires, show_cmor, show_dmor, show_signature,
)
from strictcat.generate import random_dmor, random_mor

from conftest import W


def test_parse_obj():
    assert parse_obj("I") == UNIT
    assert parse_obj("W") == W
    assert parse_obj("(W * (I * W))") == Tensor(W, Tensor(UNIT, W))


def test_parse_obj_rejects_garbage():
    with pytest.raises(ParseError):
        parse_obj("(W *)")
    with pytest.raises(ParseError):
        parse_obj("W * W")  # tensor must be parenthesised


def test_parse_cmor_atoms():
    assert parse_cmor("id[I]") == Id(UNIT)
    assert parse_cmor("alpha[W,I,W]") == Assoc(W, UNIT, W)
    assert parse_cmor("alpha'[W,W,W]") == AssocInv(W, W, W)
    assert parse_cmor("lambda[W]") == UnitL(W)
    assert parse_cmor("lambda'[W]") == UnitLInv(W)
    assert parse_cmor("rho[W]") == UnitR(W)
    assert parse_cmor("rho'[W]") == UnitRInv(W)
    assert parse_cmor("f") == Gen("f")


def test_parse_cmor_precedence():
    # ; binds looser than (*)
    t = parse_cmor("f ; g (*) h")
    assert t == Comp(Gen("f"), TensorM(Gen("g"), Gen("h")))
    t2 = parse_cmor("(f ; g) (*) h")
    assert t2 == TensorM(Comp(Gen("f"), Gen("g")), Gen("h"))


def test_parse_cmor_left_associative():
    assert parse_cmor("f ; g ; h") == Comp(Comp(Gen("f"), Gen("g")), Gen("h"))


def test_parse_dmor_atoms():
    assert parse_dmor("pack[W,I]") == Pack(W, UNIT)
    assert parse_dmor("unpack[W,W]") == Unpack(W, W)
    assert parse_dmor("unit+") == UnitIntro()
    assert parse_dmor("unit-") == UnitElim()
    assert parse_dmor("lift(f ; g)") == Lift(Comp(Gen("f"), Gen("g")))
    assert parse_dmor("idD[W|(W * I)]") == IdD((W, Tensor(W, UNIT)))
    assert parse_dmor("idD[]") == IdD(())


def test_parse_wires():
    assert parse_wires("W|I") == (W, UNIT)
    assert parse_wires("") == ()


def test_round_trip_cmor(demo_sig):
    for seed in range(500):
        f = random_mor(demo_sig, 6, seed)
        assert parse_cmor(show_cmor(f)) == f


def test_round_trip_dmor(demo_sig):
    for seed in range(500):
        t = random_dmor(demo_sig, 3, seed)
        assert parse_dmor(show_dmor(t)) == t


def test_round_trip_handles_right_nesting():
    t = Comp(Gen("f"), Comp(Gen("g"), Gen("h")))
    assert parse_cmor(show_cmor(t)) == t
    t2 = TensorM(Gen("f"), TensorM(Gen("g"), Gen("h")))
    assert parse_cmor(show_cmor(t2)) == t2


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_cmor("f ;; g")
    assert info.value.line == 1
    assert info.value.column >= 4


def test_signature_file_round_trip(demo_sig):
    text = show_signature(demo_sig)
    again = parse_signature(text)
    assert again == demo_sig


def test_signature_file_parsing():
    sig = parse_signature(
        "# circuit bits\n"
        "obj b\n"
        "gen xor : (b * b) -> b\n"
        "\n"
        "gen zero : I -> b\n")
    assert sig.base_objects == frozenset({"b"})
    assert sig.generators["xor"] == (Tensor(Base("b"), Base("b")), Base("b"))
    assert sig.generators["zero"] == (UNIT, Base("b"))


def test_signature_file_rejects_duplicates():
    with pytest.raises(ParseError):
        parse_signature("obj b\nobj b\n")


def test_model_config():
    sizes, seed = parse_model_config("W=3\nseed=9\n# comment\n")
    assert sizes == {"W": 3}
    assert seed == 9
    with pytest.raises(ParseError):
        parse_model_config("W=two\n")
