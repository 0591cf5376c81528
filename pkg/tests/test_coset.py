import pytest

from surgerykit.fpgroup import Status, coset_enumerate
from surgerykit.fpgroup.coset import available_backends, backend
from surgerykit.knots import builtin
from surgerykit.surgery import surgery_presentation
from surgerykit.fpgroup import simplify_presentation
from surgerykit.words import GroupWord, Presentation

from oracles import binary_icosahedral, binary_tetrahedral, closure, find_epimorphism

BACKENDS = available_backends()


def _pres(names, rels):
    return Presentation.from_strings(names, rels)


def triangle_group(l, m, n):
    # <r, s, t | r^l = s^m = t^n = rst>
    return _pres("rst", [f"r^{l}t's'r'", f"s^{m}t's'r'", f"t^{n}t's'r'"])


@pytest.mark.parametrize("use", BACKENDS)
@pytest.mark.parametrize(
    "names, rels, order",
    [
        ("a", ["a^5"], 5),
        ("ab", ["a^2", "b^3", "abab"], 6),
        ("ab", ["a^2", "b^2", "abababab"], 8),
        ("ab", ["a^4", "a^2b^-2", "b'aba"], 8),
        ("ab", ["a^2", "b^3", "ababababab"], 60),
    ],
)
def test_small_orders(use, names, rels, order):
    t = coset_enumerate(_pres(names, rels), (), 10_000, use=use)
    assert t.complete
    assert t.index == order
    assert t.is_permutation_action()
    assert t.relators_close(_pres(names, rels).relators)


@pytest.mark.parametrize("use", BACKENDS)
def test_binary_polyhedral_orders(use):
    for (l, m, n), order in (((2, 2, 3), 12), ((3, 3, 2), 24), ((4, 3, 2), 48), ((5, 3, 2), 120)):
        t = coset_enumerate(triangle_group(l, m, n), (), 100_000, use=use)
        assert t.index == order


@pytest.mark.parametrize("use", BACKENDS)
def test_subgroup_index(use):
    p = _pres("ab", ["a^2", "b^3", "abab"])
    t = coset_enumerate(p, [GroupWord.power(1, 1)], 1000, use=use)
    assert t.index == 2


@pytest.mark.parametrize("use", BACKENDS)
def test_budget_exhausted_on_infinite_group(use):
    t = coset_enumerate(_pres("ab", ["aba'b'"]), (), 500, use=use)
    assert t.status is Status.BUDGET_EXHAUSTED
    assert t.index is None
    assert t.cosets_defined <= 500


def test_zero_generators():
    t = coset_enumerate(Presentation.trivial())
    assert t.index == 1


def test_bad_budget():
    with pytest.raises(ValueError):
        coset_enumerate(_pres("a", ["a^2"]), (), 0)


def test_backends_agree_exactly():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernel not built")
    cases = [
        triangle_group(5, 3, 2),
        surgery_presentation(builtin("trefoil")),
        surgery_presentation(builtin("trefoil-framing1")),
        _pres("ab", ["a^3", "b^3", "abab"]),
    ]
    for p in cases:
        a = coset_enumerate(p, (), 50_000, use="python")
        b = coset_enumerate(p, (), 50_000, use="compiled")
        assert a == b


def test_env_forces_python(monkeypatch):
    monkeypatch.setenv("SURGERYKIT_PURE_PYTHON", "1")
    assert backend() == "python"


def test_csv_export():
    t = coset_enumerate(_pres("a", ["a^3"]))
    assert t.to_csv().splitlines() == ["coset,a,a'", "0,1,2", "1,2,0", "2,0,1"]


def test_surgered_trefoil_against_quaternions():
    # order 24 from enumeration; the binary tetrahedral group is a quotient
    p = surgery_presentation(builtin("trefoil"))
    assert coset_enumerate(p).index == 24
    group = closure(binary_tetrahedral())
    assert len(group) == 24
    assert find_epimorphism(simplify_presentation(p), group) is not None


def test_surgered_framing1_trefoil_against_quaternions():
    p = surgery_presentation(builtin("trefoil-framing1"))
    assert coset_enumerate(p).index == 120
    group = binary_icosahedral()
    assert len(group) == 120
    assert find_epimorphism(simplify_presentation(p), group) is not None


def test_surgered_orders_match_sympy():
    pytest.importorskip("sympy")
    from sympy.combinatorics.fp_groups import FpGroup
    from sympy.combinatorics.free_groups import free_group

    for name, order in (("trefoil", 24), ("trefoil-framing1", 120)):
        p = simplify_presentation(surgery_presentation(builtin(name)))
        F, *gens = free_group(" ".join(f"g{i}" for i in range(p.generator_count)))
        rels = []
        for r in p.relators:
            w = F.identity
            for g, e in r.letters:
                w = w * gens[g] ** e
            rels.append(w)
        assert FpGroup(F, rels).order() == order
