from collections import Counter

from strictcat.terms import (
    Assoc, AssocInv, Comp, Gen, Id, TensorM, UnitL, UnitLInv, UnitR,
    UnitRInv, Unit, Base, Tensor, typecheck_c,
)
from strictcat.strict import typecheck_d
from strictcat.generate import (
    enumerate_catw_objects, random_adapter_walk, random_dmor, random_mor,
    random_obj, random_structural_walk,
)

from conftest import W


def _constructors(f):
    yield type(f).__name__
    if isinstance(f, Comp):
        yield from _constructors(f.first)
        yield from _constructors(f.second)
    elif isinstance(f, TensorM):
        yield from _constructors(f.left)
        yield from _constructors(f.right)


def test_random_mor_depth_one_is_a_leaf(demo_sig):
    for seed in range(50):
        f = random_mor(demo_sig, 1, seed)
        assert not isinstance(f, (Comp, TensorM))


def test_random_obj_is_in_grammar(catw_sig):
    for seed in range(50):
        a = random_obj(catw_sig, 3, seed)
        stack = [a]
        while stack:
            node = stack.pop()
            assert isinstance(node, (Unit, Base, Tensor))
            if isinstance(node, Tensor):
                stack += [node.left, node.right]


def test_random_mor_always_typechecks(demo_sig):
    for seed in range(300):
        f = random_mor(demo_sig, 6, seed)
        typecheck_c(f, demo_sig)  # must not raise


def test_distribution_smoke(demo_sig):
    tally = Counter()
    for seed in range(1000):
        tally.update(_constructors(random_mor(demo_sig, 6, seed)))
    for name in ("Id", "Gen", "Comp", "TensorM", "Assoc", "AssocInv",
                 "UnitL", "UnitLInv", "UnitR", "UnitRInv"):
        assert tally[name] >= 1, f"constructor {name} never generated"


def test_random_mor_deterministic(demo_sig):
    assert random_mor(demo_sig, 5, 123) == random_mor(demo_sig, 5, 123)


def test_random_structural_walk_typechecks(catw_sig, rng):
    for _ in range(100):
        start = random_obj(catw_sig, 3, rng)
        f = random_structural_walk(start, 5, rng)
        dom, _ = typecheck_c(f, catw_sig)
        assert dom == start


def test_random_adapter_walk_typechecks(catw_sig, rng):
    for _ in range(100):
        walk = random_adapter_walk(catw_sig, (W, W), 6, rng)
        typecheck_d(walk, catw_sig)


def test_random_dmor_typechecks(demo_sig):
    for seed in range(200):
        typecheck_d(random_dmor(demo_sig, 3, seed), demo_sig)


def test_enumerate_catw_objects_bounds():
    objs = enumerate_catw_objects(2, 1)
    from strictcat.terms import objsize
    assert len(objs) == len(set(objs))
    for o in objs:
        assert objsize(o) <= 2
        assert sum(1 for _ in _units(o)) <= 1
    # spot-check membership
    assert W in objs
    assert Tensor(W, W) in objs
    from strictcat.terms import UNIT
    assert UNIT in objs
    assert Tensor(W, UNIT) in objs


def _units(a):
    if isinstance(a, Unit):
        yield a
    elif isinstance(a, Tensor):
        yield from _units(a.left)
        yield from _units(a.right)
