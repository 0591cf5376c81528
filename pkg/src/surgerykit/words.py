"""Free-group words and finite presentations.

Text syntax for words (used in JSON and on the command line): a word is a
juxtaposition of generator tokens.  A token is a generator name (a letter
followed by optional digits) optionally followed by ``'`` (inverse) or by
``^n`` / ``^-n`` (power).  ``1`` or the empty string is the identity.
Whitespace and ``*`` between tokens are ignored.  Example: ``b'c'ac``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "GroupWord",
    "Presentation",
    "WordSyntaxError",
    "free_reduce_letters",
    "cyclic_reduce_letters",
    "parse_word",
]


class WordSyntaxError(ValueError):
    pass


Letter = tuple[int, int]


def free_reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def cyclic_reduce_letters(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    w = free_reduce_letters(letters)
    i, j = 0, len(w) - 1
    while i < j and w[i][0] == w[j][0] and w[i][1] == -w[j][1]:
        i += 1
        j -= 1
    return w[i : j + 1]


@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word; ``letters`` are ``(generator, ±1)`` pairs."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if g < 0 or e not in (1, -1):
                raise ValueError(f"bad letter {(g, e)!r}")
        object.__setattr__(self, "letters", free_reduce_letters(letters))

    @classmethod
    def of(cls, *letters: Letter) -> "GroupWord":
        return cls(tuple(letters))

    @classmethod
    def power(cls, g: int, n: int) -> "GroupWord":
        e = 1 if n >= 0 else -1
        return cls(((g, e),) * abs(n))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def conjugate(self, u: "GroupWord") -> "GroupWord":
        """``u^-1 * self * u``."""
        return u.inverse() * self * u

    def cyclically_reduced(self) -> "GroupWord":
        return GroupWord(cyclic_reduce_letters(self.letters))

    def exponent_sum(self, generator: int | None = None) -> int:
        return sum(e for g, e in self.letters if generator is None or g == generator)

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def shifted(self, offset: int) -> "GroupWord":
        return GroupWord(tuple((g + offset, e) for g, e in self.letters))

    def is_cyclic_conjugate_of(self, other: "GroupWord") -> bool:
        a = cyclic_reduce_letters(self.letters)
        b = cyclic_reduce_letters(other.letters)
        if len(a) != len(b):
            return False
        if not a:
            return True
        doubled = a + a
        n = len(a)
        return any(doubled[i : i + n] == b for i in range(n))

    def format(self, names: Sequence[str]) -> str:
        if not self.letters:
            return "1"
        return "".join(names[g] + ("'" if e < 0 else "") for g, e in self.letters)

    def format_powers(self, names: Sequence[str]) -> str:
        """Compact form with exponents, e.g. ``caba^-2``."""
        if not self.letters:
            return "1"
        parts = []
        run_g, run_n = None, 0
        for g, e in self.letters + ((None, 0),):
            if g == run_g and e == (1 if run_n > 0 else -1):
                run_n += e
                continue
            if run_g is not None:
                parts.append(names[run_g] if run_n == 1 else f"{names[run_g]}^{run_n}")
            run_g, run_n = g, e
        return "".join(parts)


_TOKEN_RE = re.compile(r"\s*(?:\*\s*)?([A-Za-z][0-9]*)\s*(?:(')|\^\s*(-?\d+))?\s*")


def parse_word(text: str, names: Sequence[str]) -> GroupWord:
    index = {n: i for i, n in enumerate(names)}
    s = text.strip()
    if s in ("", "1"):
        return GroupWord()
    letters: list[Letter] = []
    pos = 0
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError(f"cannot parse word {text!r} at {s[pos:]!r}")
        name, prime, power = m.groups()
        if name not in index:
            raise WordSyntaxError(f"unknown generator {name!r} in {text!r}")
        n = -1 if prime else (int(power) if power is not None else 1)
        g = index[name]
        letters.extend([(g, 1 if n > 0 else -1)] * abs(n))
        pos = m.end()
    return GroupWord(tuple(letters))


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    generator_names: tuple[str, ...]
    relators: tuple[GroupWord, ...] = ()

    def __post_init__(self):
        names = tuple(self.generator_names)
        if len(names) != self.generator_count:
            raise ValueError(
                f"{self.generator_count} generators but {len(names)} names given"
            )
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {names}")
        rels = tuple(r.cyclically_reduced() for r in self.relators)
        for r in rels:
            for g in r.generators():
                if g >= self.generator_count:
                    raise ValueError(f"relator uses generator {g} >= {self.generator_count}")
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", rels)

    @classmethod
    def trivial(cls) -> "Presentation":
        return cls(0, (), ())

    @classmethod
    def free(cls, names: Sequence[str]) -> "Presentation":
        return cls(len(names), tuple(names), ())

    @classmethod
    def from_strings(cls, names: Sequence[str], relators: Iterable[str]) -> "Presentation":
        names = tuple(names)
        return cls(len(names), names, tuple(parse_word(r, names) for r in relators))

    def with_relator(self, w: GroupWord) -> "Presentation":
        return Presentation(self.generator_count, self.generator_names, self.relators + (w,))

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def format_word(self, w: GroupWord) -> str:
        return w.format(self.generator_names)

    def relator_strings(self) -> list[str]:
        return [r.format(self.generator_names) for r in self.relators]

    def __str__(self) -> str:
        gens = ", ".join(self.generator_names)
        rels = ", ".join(self.relator_strings())
        return f"< {gens} | {rels} >"

    def to_dict(self) -> dict:
        return {"generators": list(self.generator_names), "relators": self.relator_strings()}

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        try:
            names = data["generators"]
            rels = data.get("relators", [])
        except (KeyError, TypeError):
            raise ValueError("presentation JSON needs 'generators' and 'relators'") from None
        return cls.from_strings(names, rels)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        return cls.from_dict(json.loads(text))
