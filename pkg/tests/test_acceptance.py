"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import random_diagrams, variant_pairs  # noqa: E402
from oracles import determinantal_factors, elementary_factors  # noqa: E402

from surgerykit.diagram import writhe  # noqa: E402
from surgerykit.fpgroup import AbelianInvariants, abelianization, coset_enumerate, smith_diagonal  # noqa: E402
from surgerykit.knots import builtin, unknot_with_kinks  # noqa: E402
from surgerykit.surgery import (  # noqa: E402
    SurgerySpec,
    analyze_group,
    framed_unknot_surgery,
    perform_surgery,
    surgery_presentation,
    zero_surgery_group,
)
from surgerykit.viz import scene_meshes  # noqa: E402
from surgerykit.wirtinger import exponent_sum, longitude_word, wirtinger_presentation  # noqa: E402
from surgerykit.words import GroupWord, Presentation  # noqa: E402

_capsys = None


@pytest.fixture(autouse=True)
def _grab_capsys(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


def report(n: int, title: str, ok: bool, detail: str) -> None:
    line = f"[criterion {n}] {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    if _capsys is not None:
        with _capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


def test_criterion_1_trefoil_framing_3():
    t = time.perf_counter()
    d = builtin("trefoil")
    lam = longitude_word(d)
    r = perform_surgery(SurgerySpec("one_surgery", d), budget=10_000)
    dt = time.perf_counter() - t
    ok = (
        lam.format(d.names) == "cab"
        and r.order == 24
        and r.abelian == AbelianInvariants((3,), 0)
        and r.identification.startswith("binary tetrahedral")
        and r.identification.endswith("(consistent)")
        and r.table.cosets_defined <= 10_000
        and dt < 1.0
    )
    detail = (
        f"longitude {lam.format(d.names)}, order {r.order}, H1 {r.abelian}, "
        f"'{r.identification}', {r.table.cosets_defined} cosets, {dt:.3f}s"
    )
    report(1, "trefoil framing 3", ok, detail)


def test_criterion_2_trefoil_framing_1():
    t = time.perf_counter()
    d = builtin("trefoil-framing1")
    lam = longitude_word(d)
    r = perform_surgery(SurgerySpec("one_surgery", d), budget=100_000)
    dt = time.perf_counter() - t
    ok = (
        lam.format_powers(d.names) == "caba^-2"
        and lam.format(d.names) == "caba'a'"
        and r.order == 120
        and r.abelian.free_rank == 0
        and r.abelian.torsion == ()
        and r.perfect
        and "binary icosahedral" in r.identification
        and "Poincare homology sphere" in r.identification
        and r.identification.endswith("(consistent)")
        and r.table.cosets_defined <= 100_000
        and dt < 2.0
    )
    detail = (
        f"longitude {lam.format_powers(d.names)}, order {r.order}, H1 {r.abelian}, "
        f"perfect {r.perfect}, '{r.identification}', {r.table.cosets_defined} cosets, {dt:.3f}s"
    )
    report(2, "trefoil framing 1", ok, detail)


def test_criterion_3_lens_spaces():
    t = time.perf_counter()
    bad = []
    for p in range(-7, 8):
        got = abelianization(surgery_presentation(unknot_with_kinks(p)))
        want = AbelianInvariants((), 1) if p == 0 else AbelianInvariants((abs(p),) if abs(p) > 1 else (), 0)
        if got != want or abelianization(framed_unknot_surgery(p)) != got:
            bad.append(p)
    dt = time.perf_counter() - t
    report(3, "lens space family", not bad and dt < 1.0, f"15 framings, mismatches {bad}, {dt:.3f}s")


def test_criterion_4_longitude_writhe_law():
    ds = random_diagrams(2024, 240)
    ds += [builtin("trefoil"), builtin("figure-eight"), unknot_with_kinks(0)]
    bad = sum(1 for d in ds if exponent_sum(longitude_word(d)) != writhe(d))
    kinds = {d.n_crossings for d in ds}
    ok = bad == 0 and len(ds) >= 200
    report(4, "exponent sum of longitude = writhe", ok, f"{len(ds)} diagrams ({min(kinds)}..{max(kinds)} crossings), {bad} failures")


def test_criterion_5_reidemeister_invariance():
    pairs = variant_pairs(77, 120)
    budget = 20_000
    failures = []
    compared = 0
    kinds = {"R2": 0, "R3": 0}
    for d, move, e in pairs:
        kinds[move] += 1
        z = AbelianInvariants((), 1)
        if writhe(d) != writhe(e):
            failures.append("writhe")
            continue
        if abelianization(wirtinger_presentation(d)) != z or abelianization(wirtinger_presentation(e)) != z:
            failures.append("knot group")
            continue
        sd, se = surgery_presentation(d), surgery_presentation(e)
        ad, ae = abelianization(sd), abelianization(se)
        if ad != ae:
            failures.append("surgered H1")
            continue
        if ad.free_rank == 0:
            td, te = coset_enumerate(sd, (), budget), coset_enumerate(se, (), budget)
            if td.complete and te.complete:
                compared += 1
                if td.index != te.index:
                    failures.append("order")
    ok = not failures and len(pairs) >= 100 and kinds["R2"] and kinds["R3"]
    detail = f"{len(pairs)} pairs ({kinds['R2']} R2, {kinds['R3']} R3), {compared} order comparisons, failures {failures}"
    report(5, "Reidemeister invariance", bool(ok), detail)


def test_criterion_6_smith_normal_form():
    rng = random.Random(6)
    bad = 0
    for _ in range(500):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        want = elementary_factors(m)
        if smith_diagonal(m) != want or determinantal_factors(m) != want:
            bad += 1
    report(6, "Smith normal form vs brute-force oracle", bad == 0, f"500 matrices, {bad} mismatches")


def test_criterion_7_cyclic_coset_tables():
    bad = []
    for n in range(1, 65):
        p = Presentation(1, ("a",), (GroupWord.power(0, n),))
        t = coset_enumerate(p)
        if not (t.complete and t.index == n and t.is_permutation_action() and t.relators_close(p.relators)):
            bad.append(n)
    report(7, "Todd-Coxeter on <a | a^n>", not bad, f"n = 1..64, failures {bad}")


def test_criterion_8_zero_surgery_rule():
    ranks = []
    p = Presentation.trivial()
    for n in range(1, 6):
        p = zero_surgery_group(p)
        ranks.append(analyze_group(p).abelian.free_rank)
    report(8, "repeated 0-surgery", ranks == [1, 2, 3, 4, 5], f"free ranks {ranks}")


def test_criterion_9_viz_topology():
    problems = []
    slowest = 0.0
    counts = {}
    for segments in (8, 16, 64):
        for projection in ("first", "second"):
            for surgery in (0, 1):
                for instance in ("initial", "critical", "final"):
                    t = time.perf_counter()
                    meshes = scene_meshes(projection, surgery, instance, segments)
                    slowest = max(slowest, time.perf_counter() - t)
                    for m in meshes:
                        chi = m.euler_characteristic()
                        if m.surface == "sphere" and chi != 2 or m.surface == "torus" and chi != 0:
                            problems.append(f"{m.label}@{segments} chi={chi}")
                        if m.closed and not m.is_watertight():
                            problems.append(f"{m.label}@{segments} leaks")
                    if projection == "first" and instance == "initial":
                        counts[(surgery, segments)] = [(m.surface, m.closed) for m in meshes]
    for segments in (8, 16, 64):
        if counts[(0, segments)] != [("sphere", True)] * 2:
            problems.append(f"0-surgery pieces {counts[(0, segments)]}")
        if counts[(1, segments)] != [("torus", True)]:
            problems.append(f"1-surgery pieces {counts[(1, segments)]}")
    ok = not problems and slowest < 1.0
    detail = f"36 scenes, 2 balls / 1 solid torus, slowest {slowest:.3f}s, problems {problems}"
    report(9, "mesh topology", ok, detail)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
