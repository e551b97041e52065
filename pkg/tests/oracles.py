"""Slow, independent reference computations used only by the tests."""

from fractions import Fraction
from itertools import product

from classical_pieri.partitions import Partition, partitions_of


def ssyt_content(shape, nvars):
    """Schur polynomial s_shape(x_1..x_nvars) as {exponent: coefficient} by brute force."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    out = {}
    for filling in product(range(nvars), repeat=len(cells)):
        t = dict(zip(cells, filling))
        ok = all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t) and \
            all(t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t)
        if ok:
            e = [0] * nvars
            for v in filling:
                e[v] += 1
            out[tuple(e)] = out.get(tuple(e), 0) + 1
    return out


def poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def schur_expand(poly, nvars):
    """Coefficients of a symmetric polynomial in the Schur basis (dominant-term peeling)."""
    poly = dict(poly)
    out = {}
    while poly:
        lead = max(poly, key=lambda e: (sum(e), e))
        lam = Partition(p for p in lead if p)
        c = poly[lead]
        out[lam] = c
        for e, v in ssyt_content(lam, nvars).items():
            poly[e] = poly.get(e, 0) - c * v
            if not poly[e]:
                del poly[e]
    return out


def brute_lr(mu, nu, lam):
    nvars = max(len(lam), 1)
    if len(mu) > nvars or len(nu) > nvars:
        return 0
    prod = poly_mul(ssyt_content(mu, nvars), ssyt_content(nu, nvars))
    return schur_expand(prod, nvars).get(Partition(lam), 0)


def _weyl_dim(lam, rho, positive_roots):
    num = Fraction(1)
    for root in positive_roots:
        a = sum(r * (l + s) for r, l, s in zip(root, lam, rho))
        b = sum(r * s for r, s in zip(root, rho))
        num *= Fraction(a, b)
    assert num.denominator == 1
    return int(num)


def _roots(n, family):
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            a = [0] * n
            a[i], a[j] = 1, -1
            roots.append(a)
            b = [0] * n
            b[i], b[j] = 1, 1
            roots.append(b)
        e = [0] * n
        if family == "C":
            e[i] = 2
            roots.append(e)
        elif family == "B":
            e[i] = 1
            roots.append(e)
    return roots


def weyl_dimension(family, n, lam):
    """Weyl dimension formula for Sp_2n ('C'), SO_2n+1 ('B') and SO_2n ('D')."""
    lam = list(lam) + [0] * (n - len(lam))
    if family == "C":
        rho = [n - i for i in range(n)]
    elif family == "B":
        rho = [Fraction(2 * (n - i) - 1, 2) for i in range(n)]
    else:
        rho = [n - 1 - i for i in range(n)]
    return _weyl_dim(lam, rho, _roots(n, family))


def all_subpartitions(lam):
    for size in range(sum(lam) + 1):
        for mu in partitions_of(size):
            if len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam)):
                yield mu
