import json

import pytest

import kflag
from kflag import LaurentPoly, Permutation


def test_permutation_basics():
    w = Permutation([2, 3, 1])
    assert str(w) == "2,3,1"
    assert w(1) == 2
    assert (w * w).images == [3, 1, 2]
    assert w.inverse() == Permutation([3, 1, 2])
    assert Permutation.longest(3).reduced_word() == [1, 2, 1]
    assert kflag.word_product(3, [1, 2]) == w
    assert len(kflag.enumerate(4)) == 24
    assert kflag.bruhat_leq(Permutation.identity(3), w)
    assert len({Permutation([1, 2]), Permutation([1, 2])}) == 1


def test_cycle_notation_rejected():
    with pytest.raises(kflag.InvalidInput, match="one-line"):
        Permutation.parse("(12)")
    with pytest.raises(kflag.KflagError):
        Permutation([1, 1])


def test_worked_example():
    g = kflag.permuted_grothendieck(Permutation([1, 3, 2]), Permutation([2, 1, 3]))
    assert str(g) == "1 - y3*x1^-1"
    expected = LaurentPoly.one(3) - LaurentPoly.y(3, 3) * LaurentPoly.x(3, 1, -1)
    assert g == expected
    zero_at = {str(z) for z in kflag.enumerate(3) if kflag.restrict(g, z).is_zero()}
    assert zero_at == {"3,1,2", "3,2,1"}
    assert [str(z) for z in kflag.support(g)] == ["1,2,3", "1,3,2", "2,1,3", "2,3,1"]


def test_operators():
    f = LaurentPoly.x(2, 1, 2)
    assert str(kflag.delta(1, f)) == "x1 + x2"
    assert kflag.delta(1, kflag.delta(1, f)).is_zero()
    assert kflag.pi(1, kflag.pi(1, f)) == kflag.pi(1, f)
    assert LaurentPoly.from_json(f.to_json()) == f
    with pytest.raises(kflag.InvalidInput):
        kflag.delta(2, f)


def test_grothendieck_longest_is_one():
    assert kflag.grothendieck(Permutation.longest(4)) == LaurentPoly.one(4)
    assert kflag.top(3) == kflag.grothendieck(Permutation.identity(3))


def test_verify_and_decompose():
    ok, pairs, report = kflag.verify_support_theorem(3, jobs=2)
    assert ok and pairs == 36
    assert all(entry["pass"] for entry in json.loads(report))

    gamma = Permutation([3, 1, 2])
    cls = kflag.restrict_all(kflag.permuted_grothendieck(Permutation([2, 3, 1]), gamma))
    assert [(str(w), str(a)) for w, a in kflag.decompose(cls, gamma)] == [("2,3,1", "1")]


def test_weight_varieties():
    assert kflag.is_regular("1,0,-1", "1/4,1/8,-3/8")
    assert not kflag.is_regular("1,0,-1", "0,0,0")
    gens = json.loads(kflag.kernel_generators("1/2,-1/2", "0,0"))
    assert [(g["v"], g["gamma"]) for g in gens] == [([1, 2], [1, 2]), ([1, 2], [2, 1])]
    with pytest.raises(kflag.NotRegular):
        kflag.kernel_generators("1,0,-1", "0,0,0")
    p = json.loads(kflag.presentation("1,0,-1", "1/4,1/8,-3/8"))
    assert p["n"] == 3 and len(p["kernel"]) == 24
