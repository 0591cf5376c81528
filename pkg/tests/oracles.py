"""Independent reference computations used to check the library."""

from itertools import combinations
from math import gcd


# --- Smith normal form -----------------------------------------------------


def _det(m):
    """Exact integer determinant by Bareiss elimination."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def determinantal_factors(m):
    """Invariant factors d_k = D_k / D_{k-1}, D_k = gcd of all k x k minors."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    out = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, _det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def elementary_factors(m):
    """Diagonalize with Bezout row/column operations, then fix the
    divisibility chain with (a, b) -> (gcd, lcm).  Deliberately naive."""
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0

    def ext(x, y):
        if y == 0:
            return (1 if x >= 0 else -1), 0, abs(x)
        s, t, g = ext(y, x % y)
        return t, s - (x // y) * t, g

    for t in range(min(rows, cols)):
        while True:
            for i in range(t + 1, rows):
                x, y = a[t][t], a[i][t]
                if y and x and y % x == 0:
                    f = y // x
                    a[i] = [w - f * v for v, w in zip(a[t], a[i])]
                elif y:
                    s, u, g = ext(x, y)
                    p, q = x // g, y // g
                    rt, ri = a[t], a[i]
                    a[t] = [s * v + u * w for v, w in zip(rt, ri)]
                    a[i] = [-q * v + p * w for v, w in zip(rt, ri)]
            for j in range(t + 1, cols):
                x, y = a[t][t], a[t][j]
                if y and x and y % x == 0:
                    f = y // x
                    for r in range(rows):
                        a[r][j] -= f * a[r][t]
                elif y:
                    s, u, g = ext(x, y)
                    p, q = x // g, y // g
                    for r in range(rows):
                        v, w = a[r][t], a[r][j]
                        a[r][t] = s * v + u * w
                        a[r][j] = -q * v + p * w
            if all(a[i][t] == 0 for i in range(t + 1, rows)) and all(
                a[t][j] == 0 for j in range(t + 1, cols)
            ):
                break
    diag = [abs(a[i][i]) for i in range(min(rows, cols))]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                x, y = diag[i], diag[j]
                g = gcd(x, y)
                l = x * y // g if g else 0
                # zeros go last; the rest become a divisibility chain
                if (x == 0 and y != 0) or (x and y and (x, y) != (g, l)):
                    diag[i], diag[j] = (y, x) if x == 0 else (g, l)
                    changed = True
    return [d for d in diag if d]


# --- unit quaternions --------------------------------------------------------


def qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def qinv(p):
    a, b, c, d = p
    return (a, -b, -c, -d)


def qkey(p):
    return tuple(round(v, 9) + 0.0 for v in p)


def closure(gens):
    """Elements of the group generated by unit quaternions ``gens``."""
    one = (1.0, 0.0, 0.0, 0.0)
    seen = {qkey(one): one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = qmul(x, g)
                k = qkey(y)
                if k not in seen:
                    seen[k] = y
                    nxt.append(y)
        frontier = nxt
    return list(seen.values())


def binary_tetrahedral():
    units = []
    for i in range(4):
        for s in (1.0, -1.0):
            v = [0.0] * 4
            v[i] = s
            units.append(tuple(v))
    for sa in (0.5, -0.5):
        for sb in (0.5, -0.5):
            for sc in (0.5, -0.5):
                for sd in (0.5, -0.5):
                    units.append((sa, sb, sc, sd))
    return units


def binary_icosahedral():
    phi = (1 + 5 ** 0.5) / 2
    i = (0.0, 1.0, 0.0, 0.0)
    w = (0.5, 0.5, 0.5, 0.5)
    r = (phi / 2, 0.5, 1 / (2 * phi), 0.0)
    return closure([i, w, r])


def evaluate(word, images):
    """Image of a GroupWord under generator -> quaternion."""
    x = (1.0, 0.0, 0.0, 0.0)
    for g, e in word.letters:
        x = qmul(x, images[g] if e > 0 else qinv(images[g]))
    return x


def find_epimorphism(presentation, group):
    """Images of the (at most two) generators in ``group`` that kill every
    relator and generate all of ``group``; None if there are none."""
    n = presentation.generator_count
    if n > 2:
        raise ValueError("search is limited to two generators")
    one = qkey((1.0, 0.0, 0.0, 0.0))
    target = len(group)
    choices = [[]]
    for _ in range(n):
        choices = [c + [x] for c in choices for x in group]
    for images in choices:
        if all(qkey(evaluate(r, images)) == one for r in presentation.relators):
            if len(closure(images)) == target:
                return images
    return None
