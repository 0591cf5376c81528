import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surgerykit.fpgroup import AbelianInvariants, abelianization, smith_diagonal
from surgerykit.words import Presentation

from oracles import determinantal_factors, elementary_factors

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_known_forms():
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
    assert smith_diagonal([[2, 0], [0, 3]]) == [1, 6]
    assert smith_diagonal([[0, 0], [0, 0]]) == []
    assert smith_diagonal([[6]]) == [6]
    assert smith_diagonal([[4, 0, 0], [0, 6, 0], [0, 0, 10]]) == [2, 2, 60]


def test_oracles_agree_with_each_other():
    rng = random.Random(5)
    for _ in range(100):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        assert determinantal_factors(m) == elementary_factors(m)


@given(matrices)
def test_divisibility_chain(m):
    d = smith_diagonal(m)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert d == determinantal_factors(m)


def test_matches_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form

    rng = random.Random(9)
    for _ in range(60):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        s = smith_normal_form(sympy.Matrix(m), domain=sympy.ZZ)
        diag = [abs(int(s[i, i])) for i in range(min(r, c)) if s[i, i] != 0]
        assert sorted(diag) == sorted(smith_diagonal(m))


def test_abelian_invariants_text():
    assert str(AbelianInvariants((3,), 0)) == "Z/3"
    assert str(AbelianInvariants((), 2)) == "Z^2"
    assert str(AbelianInvariants((2, 4), 1)) == "Z + Z/2 + Z/4"
    assert str(AbelianInvariants()) == "0"
    with pytest.raises(ValueError):
        AbelianInvariants((4, 2))
    with pytest.raises(ValueError):
        AbelianInvariants((1,))


def test_abelianization_of_presentations():
    assert abelianization(Presentation.from_strings("ab", ["a^6", "b^4"])) == AbelianInvariants((2, 12), 0)
    assert abelianization(Presentation.from_strings("ab", [])) == AbelianInvariants((), 2)
    assert abelianization(Presentation.from_strings("ab", ["aba'b'"])) == AbelianInvariants((), 2)
    assert abelianization(Presentation.trivial()).is_trivial
