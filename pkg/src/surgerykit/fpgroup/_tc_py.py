"""Pure-Python HLT coset enumeration kernel.

Letters are ints: ``2*g`` is generator g, ``2*g + 1`` its inverse, so the
inverse of letter x is ``x ^ 1``.  The compiled kernel in ``_tc_ext``
implements the same procedure with the same definition order, so both give
identical tables.
"""

MAX_DEDUCTIONS = 4096


class BudgetExhausted(Exception):
    pass


def enumerate_cosets(ngens, relators, subgroup, budget):
    """Return ``(complete, table, defined)``.

    ``table`` is the standardized table (list of rows, one int per letter)
    when ``complete``, else None.  ``defined`` counts cosets ever created.
    """
    ncols = 2 * ngens
    table = [[-1] * ncols]
    parent = [0]
    deductions = []
    n = 1

    # cyclic conjugates of relators and their inverses, keyed by first letter
    by_letter = [[] for _ in range(ncols)]
    for r in relators:
        if not r:
            continue
        inv = [x ^ 1 for x in reversed(r)]
        for w in (r, inv):
            for i in range(len(w)):
                c = w[i:] + w[:i]
                if c not in by_letter[c[0]]:
                    by_letter[c[0]].append(c)

    def rep(c):
        r = c
        while parent[r] != r:
            r = parent[r]
        while parent[c] != r:
            parent[c], c = r, parent[c]
        return r

    def merge(a, b, queue):
        a, b = rep(a), rep(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        parent[b] = a
        queue.append(b)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(ncols):
                d = row[x]
                if d < 0:
                    continue
                xi = x ^ 1
                table[d][xi] = -1
                mu, nu = rep(g), rep(d)
                if table[mu][x] >= 0:
                    merge(nu, table[mu][x], queue)
                elif table[nu][xi] >= 0:
                    merge(mu, table[nu][xi], queue)
                else:
                    table[mu][x] = nu
                    table[nu][xi] = mu
                    push(mu, x)

    def push(c, x):
        if len(deductions) < MAX_DEDUCTIONS:
            deductions.append((c, x))
        else:
            deductions.clear()

    def define(c, x):
        nonlocal n
        if n >= budget:
            raise BudgetExhausted
        b = n
        n += 1
        table.append([-1] * ncols)
        parent.append(b)
        table[c][x] = b
        table[b][x ^ 1] = c
        push(c, x)

    def scan(a, w, fill):
        f, i = a, 0
        b, j = a, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                push(f, w[i])
                return
            if not fill:
                return
            define(f, w[i])

    def process_deductions():
        while deductions:
            c, x = deductions.pop()
            if parent[c] != c:
                continue
            for w in by_letter[x]:
                scan(c, w, False)
                if parent[c] != c:
                    break
            d = table[c][x]
            if d >= 0 and parent[d] == d:
                for w in by_letter[x ^ 1]:
                    scan(d, w, False)
                    if parent[d] != d:
                        break

    try:
        for w in subgroup:
            if w:
                scan(0, w, True)
                process_deductions()
        a = 0
        while a < n:
            if parent[a] == a:
                for r in relators:
                    if r:
                        scan(a, r, True)
                        process_deductions()
                    if parent[a] != a:
                        break
                if parent[a] == a:
                    for x in range(ncols):
                        if table[a][x] < 0:
                            define(a, x)
                            process_deductions()
                            if parent[a] != a:
                                break
            a += 1
    except BudgetExhausted:
        return False, None, n
    return True, standardize(table, parent, ncols), n


def standardize(table, parent, ncols):
    order = {0: 0}
    queue = [0]
    i = 0
    while i < len(queue):
        c = queue[i]
        i += 1
        for x in range(ncols):
            d = table[c][x]
            if d >= 0 and d not in order:
                order[d] = len(queue)
                queue.append(d)
    return [[order[table[c][x]] for x in range(ncols)] for c in queue]
