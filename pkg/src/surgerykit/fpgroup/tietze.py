"""Tietze simplification and free products of presentations."""

from __future__ import annotations

from typing import Sequence

from ..words import GroupWord, Presentation, cyclic_reduce_letters, free_reduce_letters

__all__ = ["free_reduce", "free_product", "simplify_presentation", "canonical_relator"]

Word = tuple[tuple[int, int], ...]


def free_reduce(w: GroupWord) -> GroupWord:
    return GroupWord(free_reduce_letters(w.letters))


def _inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def canonical_relator(w: Word) -> Word:
    """Representative of ``w`` up to cyclic permutation and inversion."""
    w = cyclic_reduce_letters(w)
    if not w:
        return w
    best = None
    for v in (w, _inverse(w)):
        for i in range(len(v)):
            c = v[i:] + v[:i]
            if best is None or c < best:
                best = c
    return best


def _normalize(rels: Sequence[Word]) -> list[Word]:
    seen = set()
    out = []
    for r in rels:
        c = canonical_relator(r)
        if c and c not in seen:
            seen.add(c)
            out.append(c)
    out.sort(key=lambda w: (len(w), w))
    return out


def _total(rels) -> int:
    return sum(len(r) for r in rels)


def _substitute(rels: Sequence[Word], g: int, image: Word) -> list[Word]:
    inv = _inverse(image)
    out = []
    for r in rels:
        letters = []
        for h, e in r:
            if h == g:
                letters.extend(image if e > 0 else inv)
            else:
                letters.append((h, e))
        out.append(free_reduce_letters(letters))
    return out


def _elimination(rels: list[Word], ngens: int):
    """Best generator elimination as ``(new_rels, g)`` or None."""
    best = None
    for idx, r in enumerate(rels):
        for g in range(ngens):
            pos = [i for i, (h, _) in enumerate(r) if h == g]
            if len(pos) != 1:
                continue
            i = pos[0]
            e = r[i][1]
            # r = u g^e v = 1  =>  g = (v u)^(-e)
            vu = r[i + 1 :] + r[:i]
            image = _inverse(vu) if e > 0 else vu
            others = rels[:idx] + rels[idx + 1 :]
            new = _normalize(_substitute(others, g, free_reduce_letters(image)))
            key = (_total(new), -g, idx)
            if best is None or key < best[0]:
                best = (key, new, g)
    if best is None:
        return None
    return best[1], best[2]


def _shorten(rels: list[Word]):
    """Replace a long piece of one relator using another relator; None if
    no relator gets shorter."""
    for si, s in enumerate(rels):
        n = len(s)
        for v in (s, _inverse(s)):
            for rot in range(n):
                c = v[rot:] + v[:rot]
                for cut in range(n, n // 2, -1):
                    u, rest = c[:cut], c[cut:]
                    for ri, r in enumerate(rels):
                        if ri == si or len(r) < cut:
                            continue
                        m = len(r)
                        doubled = r + r
                        for start in range(m):
                            if doubled[start : start + cut] == u:
                                tail = doubled[start + cut : start + m]
                                new_r = cyclic_reduce_letters(_inverse(rest) + tail)
                                if len(new_r) < m:
                                    out = list(rels)
                                    out[ri] = new_r
                                    return _normalize(out)
    return None


def simplify_presentation(p: Presentation, effort: int = 1000) -> Presentation:
    """Shrink a presentation with Tietze moves.

    Moves: drop trivial and duplicate relators, eliminate a generator that
    occurs exactly once in some relator (when that does not lengthen the
    presentation), and shorten relators by substituting a long piece of
    another relator.  At most ``effort`` moves are applied.  Neither the
    generator count nor the total relator length ever grows.
    """
    names = list(p.generator_names)
    rels = _normalize(r.letters for r in p.relators)
    budget = effort
    while budget > 0:
        elim = _elimination(rels, len(names))
        if elim is not None and _total(elim[0]) <= _total(rels):
            new, g = elim
            rels = [tuple((h - (h > g), e) for h, e in r) for r in new]
            del names[g]
            budget -= 1
            continue
        shorter = _shorten(rels)
        if shorter is not None:
            rels = shorter
            budget -= 1
            continue
        break
    out = Presentation(len(names), tuple(names), tuple(GroupWord(r) for r in rels))
    if out.total_length() > p.total_length() or out.generator_count > p.generator_count:
        return p
    return out


def _fresh(name: str, taken: set[str]) -> str:
    if name not in taken:
        return name
    stem = name.rstrip("0123456789") or "x"
    i = 1
    while f"{stem}{i}" in taken:
        i += 1
    return f"{stem}{i}"


def free_product(p: Presentation, q: Presentation) -> Presentation:
    """Generators of ``p`` then those of ``q`` (renamed on clashes)."""
    taken = set(p.generator_names)
    q_names = []
    for name in q.generator_names:
        new = _fresh(name, taken)
        taken.add(new)
        q_names.append(new)
    names = tuple(p.generator_names) + tuple(q_names)
    off = p.generator_count
    rels = tuple(p.relators) + tuple(r.shifted(off) for r in q.relators)
    return Presentation(len(names), names, rels)
