"""Pure-Python hot kernels.

Reference implementation of the routines in ``_kernels.pyx``; used when the
compiled extension is unavailable or ``CLASSICAL_PIERI_PURE=1`` is set.
Partitions are plain tuples of positive weakly decreasing ints; Laurent
polynomials are ``{exponent tuple: int}`` dicts without zero entries.
"""

BACKEND = "python"


def is_horizontal_strip(inner, outer):
    n_out = len(outer)
    n_in = len(inner)
    if n_in > n_out or n_out > n_in + 1:
        return False
    for i in range(n_out):
        o = outer[i]
        a = inner[i] if i < n_in else 0
        if a > o:
            return False
        if i + 1 < n_out and outer[i + 1] > a:
            return False
    return True


def is_vertical_strip(inner, outer):
    n_out = len(outer)
    n_in = len(inner)
    if n_in > n_out:
        return False
    for i in range(n_out):
        d = outer[i] - (inner[i] if i < n_in else 0)
        if d < 0 or d > 1:
            return False
    return True


def lr_coefficient(outer, inner, weight):
    """Count LR tableaux of shape outer/inner and content ``weight``.

    Rows are filled top to bottom; a row is described by how many times each
    letter occurs in it.  ``ends[k]`` is the column just past the last letter
    <= k in the previous row, which gives column strictness; the running
    letter totals give the lattice (ballot) condition on the reverse reading
    word.
    """
    L = len(outer)
    K = len(weight)
    if sum(outer) != sum(inner) + sum(weight):
        return 0
    if len(inner) > L:
        return 0
    mu = list(inner) + [0] * (L - len(inner))
    for i in range(L):
        if mu[i] > outer[i]:
            return 0
    if K == 0:
        return 1
    totals = [0] * (K + 2)

    def fill_row(i, prev_ends):
        if i == L:
            for k in range(K):
                if totals[k + 1] != weight[k]:
                    return 0
            return 1
        width = outer[i] - mu[i]
        ends = [mu[i]] * (K + 1)
        top = min(i + 1, K)

        def choose(k, pos, remaining):
            # pos: column where letter k starts; letters > top never fit in row i
            if k > top:
                if remaining == 0:
                    return fill_row(i + 1, ends[:])
                return 0
            sub = 0
            # column strictness: letter k cells must lie under letters < k of row i-1
            limit = prev_ends[k - 1] if i > 0 else outer[i]
            max_c = min(remaining, limit - pos, weight[k - 1] - totals[k])
            if k > 1:
                # ballot condition: after this row's k's, total k <= total (k-1) before this row
                max_c = min(max_c, before[k - 1] - totals[k])
            for c in range(max_c, -1, -1):
                totals[k] += c
                for kk in range(k, K + 1):
                    ends[kk] = pos + c
                sub += choose(k + 1, pos + c, remaining - c)
                totals[k] -= c
            return sub

        before = totals[:]
        return choose(1, mu[i], width)

    first_ends = [outer[0]] * (K + 1)
    return fill_row(0, first_ends)


def laurent_mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            v = get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def laurent_add_scaled(acc, b, scale, shift=None):
    """In place: acc += scale * x**shift * b."""
    if not scale:
        return
    get = acc.get
    if shift is None:
        for e, c in b.items():
            v = get(e, 0) + scale * c
            if v:
                acc[e] = v
            else:
                del acc[e]
    else:
        for e, c in b.items():
            e2 = tuple([x + y for x, y in zip(e, shift)])
            v = get(e2, 0) + scale * c
            if v:
                acc[e2] = v
            else:
                del acc[e2]
