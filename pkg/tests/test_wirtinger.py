from surgerykit.diagram import writhe
from surgerykit.knots import builtin, unknot_with_kinks
from surgerykit.wirtinger import crossing_relator, exponent_sum, longitude_word, wirtinger_presentation
from surgerykit.words import Presentation

from corpus import random_diagrams


def test_trefoil_presentation():
    d = builtin("trefoil")
    p = wirtinger_presentation(d)
    assert p == Presentation.from_strings("abc", ["b'c'ac", "c'a'ba", "a'b'cb"])


def test_relator_shapes():
    names = "abc"
    assert crossing_relator(2, 0, 1, 1).format(names) == "b'c'ac"
    assert crossing_relator(2, 0, 1, -1).format(names) == "b'cac'"


def test_trefoil_longitude():
    assert longitude_word(builtin("trefoil")).format("abc") == "cab"


def test_framing1_longitude():
    d = builtin("trefoil-framing1")
    lam = longitude_word(d)
    assert lam.format(d.names) == "caba'a'"
    assert lam.format_powers(d.names) == "caba^-2"


def test_longitude_start_arc_rotates():
    d = builtin("trefoil")
    words = {longitude_word(d, s).format("abc") for s in range(3)}
    assert words == {"cab", "abc", "bca"}


def test_unknot_longitudes():
    assert longitude_word(unknot_with_kinks(0)).letters == ()
    assert exponent_sum(longitude_word(unknot_with_kinks(5))) == 5
    assert exponent_sum(longitude_word(unknot_with_kinks(-3))) == -3


def test_exponent_sum_is_writhe_on_corpus():
    for d in random_diagrams(11, 60):
        assert exponent_sum(longitude_word(d)) == writhe(d)
