"""Built-in diagrams used by the CLI, the tests and the benchmarks."""

from __future__ import annotations

from importlib import resources

from .diagram import OrientedDiagram, from_gauss, parse_native, parse_pd

__all__ = ["builtin", "builtin_file", "builtin_names", "builtin_text", "unknot_with_kinks", "load_diagram"]

_FILES = {
    "unknot": "unknot.knot",
    "trefoil": "trefoil.knot",
    "trefoil-framing1": "trefoil_framing1.knot",
    "trefoil-5x": "trefoil_writhe3_5x.knot",
    "trefoil-pd": "trefoil.pd",
    "figure-eight": "figure_eight.pd",
}


def builtin_names() -> list[str]:
    return sorted(_FILES)


def builtin_file(name: str) -> str:
    try:
        return _FILES[name]
    except KeyError:
        raise KeyError(f"no built-in diagram {name!r}; choose from {builtin_names()}") from None


def builtin_text(name: str) -> str:
    return resources.files("surgerykit").joinpath("data", builtin_file(name)).read_text()


def builtin(name: str) -> OrientedDiagram:
    text = builtin_text(name)
    return parse_pd(text) if builtin_file(name).endswith(".pd") else parse_native(text)


def load_diagram(text: str, fmt: str = "native", mirror_image: bool = False) -> OrientedDiagram:
    from .diagram import mirror

    if fmt == "pd":
        return parse_pd(text, mirror_image=mirror_image)
    if fmt != "native":
        raise ValueError(f"unknown format {fmt!r}")
    d = parse_native(text)
    return mirror(d) if mirror_image else d


def unknot_with_kinks(p: int) -> OrientedDiagram:
    """Unknot drawn with |p| curls, all of sign sign(p); writhe p."""
    if p == 0:
        return OrientedDiagram((), ())
    sign = 1 if p > 0 else -1
    seq = []
    for k in range(abs(p)):
        seq += [(k, True), (k, False)]
    return from_gauss(seq, [sign] * abs(p))
