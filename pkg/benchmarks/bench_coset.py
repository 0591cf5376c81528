"""Compare the compiled and pure-Python coset enumeration kernels.

    python benchmarks/bench_coset.py [--repeat N]
"""

import argparse
import re
import time

from surgerykit.fpgroup import coset_enumerate
from surgerykit.fpgroup.coset import available_backends
from surgerykit.knots import builtin
from surgerykit.surgery import surgery_presentation
from surgerykit.words import Presentation

def coxeter(names, rels):
    # expand "(ab)^k" shorthand, which the word parser does not accept
    expanded = [re.sub(r"\((\w+)\)\^(\d+)", lambda m: m.group(1) * int(m.group(2)), r) for r in rels]
    return Presentation.from_strings(names, expanded)


CASES = [
    ("trefoil, framing 3", surgery_presentation(builtin("trefoil")), 24),
    ("trefoil, framing 1", surgery_presentation(builtin("trefoil-framing1")), 120),
    ("<a | a^512>", Presentation.from_strings("a", ["a^512"]), 512),
    # Coxeter groups H4 and E6
    (
        "H4",
        coxeter(
            "abcd",
            ["a^2", "b^2", "c^2", "d^2", "(ab)^5", "(bc)^3", "(cd)^3", "(ac)^2", "(ad)^2", "(bd)^2"],
        ),
        14400,
    ),
    (
        "E6",
        coxeter(
            "abcdef",
            ["a^2", "b^2", "c^2", "d^2", "e^2", "f^2",
             "(ab)^3", "(bc)^3", "(cd)^3", "(de)^3", "(cf)^3",
             "(ac)^2", "(ad)^2", "(ae)^2", "(af)^2", "(bd)^2", "(be)^2",
             "(bf)^2", "(ce)^2", "(df)^2", "(ef)^2"],
        ),
        51840,
    ),
]


def best_time(p, use, repeat):
    best = float("inf")
    table = None
    for _ in range(repeat):
        t = time.perf_counter()
        table = coset_enumerate(p, (), 2_000_000, use=use)
        best = min(best, time.perf_counter() - t)
    return best, table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    print(f"{'case':<22}{'order':>8}" + "".join(f"{b + ' (s)':>16}" for b in backends) + f"{'speedup':>10}")
    for name, p, order in CASES:
        times = {}
        for b in backends:
            dt, table = best_time(p, b, args.repeat)
            assert table.index == order, (name, b, table.index)
            times[b] = dt
        speed = f"{times['python'] / times['compiled']:.1f}x" if "compiled" in times else "-"
        print(f"{name:<22}{order:>8}" + "".join(f"{times[b]:>16.4f}" for b in backends) + f"{speed:>10}")


if __name__ == "__main__":
    main()
