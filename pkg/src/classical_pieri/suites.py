"""Verification suites: each closed-form rule checked against an independent oracle.

Every suite returns a :class:`SuiteReport`; it passes iff no mismatch was
recorded.  Comparisons are exact.  Grid defaults are the acceptance ranges;
all of them can be narrowed or widened through keyword arguments.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from . import pieri, tableaux
from .characters import (
    GroupId,
    RepRingElement,
    decompose_character,
    irreducible_character,
    power_character,
    restrict_gl_character,
)
from .laurent import LaurentPolynomial
from .modification import formal_nl_product, o_modify, sp_modify
from .partitions import (
    Partition,
    column,
    conjugate,
    enumerate_partitions,
    format_partition,
    in_par_o,
    is_horizontal_strip,
    is_vertical_strip,
    odd_column_count,
    odd_row_count,
    partitions_of,
    sharp_partition,
)
from .symfun import (
    branching_expansion,
    lr_coefficient,
    lr_product,
    nl_coefficient,
    nl_product,
    o_schur_h,
    sp_schur_h,
)

__all__ = ["SuiteReport", "SUITES", "run_suite", "run_all"]


def _show(value):
    if isinstance(value, RepRingElement):
        return value.to_json()
    if isinstance(value, LaurentPolynomial):
        return value.render()
    if isinstance(value, tuple) and all(isinstance(p, int) for p in value):
        return format_partition(value)
    return value


@dataclass
class SuiteReport:
    name: str
    grid: dict
    cases: int = 0
    mismatches: List[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def check(self, inputs: dict, got, expected) -> bool:
        self.cases += 1
        if got == expected:
            return True
        self.mismatches.append({
            "inputs": {k: _show(v) for k, v in inputs.items()},
            "got": _show(got),
            "expected": _show(expected),
        })
        return False

    def to_json(self) -> dict:
        mism = sorted(self.mismatches, key=lambda m: json.dumps(m, sort_keys=True))
        return {
            "suite": self.name,
            "grid": self.grid,
            "cases": self.cases,
            "passed": self.passed,
            "mismatches": mism,
            "wall_time": round(self.wall_time, 3),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: {self.cases} cases, {len(self.mismatches)} mismatches"
                f" ({self.wall_time:.1f}s)")


def _timed(fn):
    def run(**grid) -> SuiteReport:
        start = time.perf_counter()
        report = fn(**grid)
        report.wall_time = time.perf_counter() - start
        return report

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _specialize_sym(hp, g: GroupId) -> LaurentPolynomial:
    return hp.specialize(lambda r: power_character(g, "sym", r), LaurentPolynomial.one(g.nvars))


def _so_label(lam: Partition, N: int) -> Partition:
    """The SO_N basis label carrying the restriction of the O_N irreducible lam."""
    return lam if len(lam) <= N // 2 else sharp_partition(lam, N)


# ------------------------------------------------------------------- suites

@_timed
def sp_pieri_suite(ranks=(1, 2, 3), max_size=6, max_r=5) -> SuiteReport:
    """Sp_2n Pieri rule = formal Newell-Littlewood product = character decomposition."""
    rep = SuiteReport("sp-pieri", {"n": list(ranks), "max_size": max_size, "max_r": max_r})
    for n in ranks:
        g = GroupId.sp(n)
        for mu in enumerate_partitions(max_size, max_length=n):
            chi = irreducible_character(g, mu)
            for r in range(max_r + 1):
                rule = pieri.tensor_decomposition(g, mu, "sym", r)
                inputs = {"n": n, "mu": mu, "r": r}
                rep.check({**inputs, "oracle": "formal"}, rule, formal_nl_product(g, mu, (r,)))
                oracle = decompose_character(g, chi * power_character(g, "sym", r))
                rep.check({**inputs, "oracle": "character"}, rule, oracle)
    return rep


def _all_labels(*elems) -> set:
    out = set()
    for e in elems:
        out.update(e.coeffs)
    return out


@_timed
def o_pieri_suite(ranks=(2, 3, 4, 5), max_size=6, max_r=4) -> SuiteReport:
    """O_N Pieri rule with condition (iii) = formal Newell-Littlewood product."""
    rep = SuiteReport("o-pieri", {"N": list(ranks), "max_size": max_size, "max_r": max_r})
    for N in ranks:
        g = GroupId.o(N)
        for mu in enumerate_partitions(max_size, two_column_bound=N):
            for r in range(max_r + 1):
                formal = formal_nl_product(g, mu, (r,))
                driven = pieri.tensor_decomposition(g, mu, "row", r)
                for lam in sorted(_all_labels(formal, driven)):
                    rep.check({"N": N, "mu": mu, "lam": lam, "r": r},
                              pieri.o_pieri_mult(mu, lam, r, N), formal[lam])
    return rep


@_timed
def o_sym_power_suite(ranks=(2, 3, 4, 5), max_size=6, max_r=4) -> SuiteReport:
    """Multiplicities in V[mu] (x) S^r(V) for O_N against sum_s of formal products with (r - 2s)."""
    rep = SuiteReport("o-sym-power", {"N": list(ranks), "max_size": max_size, "max_r": max_r})
    for N in ranks:
        g = GroupId.o(N)
        for mu in enumerate_partitions(max_size, two_column_bound=N):
            for r in range(max_r + 1):
                total = RepRingElement(g)
                for s in range(r // 2 + 1):
                    total = total + formal_nl_product(g, mu, (r - 2 * s,))
                driven = pieri.tensor_decomposition(g, mu, "sym", r)
                for lam in sorted(_all_labels(total, driven)):
                    rep.check({"N": N, "mu": mu, "lam": lam, "r": r},
                              pieri.o_sym_power_mult(mu, lam, r, N), total[lam])
    return rep


@_timed
def so_pieri_suite(ranks=(1, 2, 3), max_size=6, max_r=5) -> SuiteReport:
    """SO_2n+1 and SO_2n Pieri rules against character decomposition of S[mu] * S[(r)]."""
    rep = SuiteReport("so-pieri", {"n": list(ranks), "max_size": max_size, "max_r": max_r})
    for family, rule in (("SOodd", pieri.so_odd_pieri_mult), ("SOeven", pieri.so_even_pieri_coeff)):
        for n in ranks:
            g = GroupId(family, n)
            for mu in enumerate_partitions(max_size, max_length=n):
                chi = irreducible_character(g, mu)
                for r in range(max_r + 1):
                    oracle = decompose_character(g, chi * irreducible_character(g, (r,) if r else ()))
                    driven = pieri.tensor_decomposition(g, mu, "row", r)
                    for lam in sorted(_all_labels(oracle, driven)):
                        rep.check({"group": str(g), "mu": mu, "lam": lam, "r": r},
                                  rule(mu, lam, r, n), oracle[lam])
    return rep


@_timed
def dual_pieri_suite(ranks=(1, 2, 3), max_size=6) -> SuiteReport:
    """Dual Pieri rules for Sp_2n, SO_2n+1, SO_2n against decomposition of S[mu] * E_r."""
    rep = SuiteReport("dual-pieri", {"n": list(ranks), "max_size": max_size, "r": "0..2n"})
    rules = {"Sp": pieri.sp_dual_pieri_mult, "SOodd": pieri.so_odd_dual_pieri_mult,
             "SOeven": pieri.so_even_dual_pieri_coeff}
    for family, rule in rules.items():
        for n in ranks:
            g = GroupId(family, n)
            for mu in enumerate_partitions(max_size, max_length=n):
                chi = irreducible_character(g, mu)
                for r in range(2 * n + 1):
                    oracle = decompose_character(g, chi * power_character(g, "ext", r))
                    driven = pieri.tensor_decomposition(g, mu, "ext", r)
                    for lam in sorted(_all_labels(oracle, driven)):
                        rep.check({"group": str(g), "mu": mu, "lam": lam, "r": r},
                                  rule(mu, lam, r, n), oracle[lam])
    return rep


@_timed
def standard_pieri_suite(ranks=(1, 2, 3, 4), max_size=6) -> SuiteReport:
    """Adding or removing one cell = the r = 1 case of the general rules, every family."""
    rep = SuiteReport("standard-pieri", {"rank": list(ranks), "max_size": max_size})
    for family in ("Sp", "O", "SOodd", "SOeven"):
        for rank in ranks:
            g = GroupId(family, rank)
            bound = {"two_column_bound": rank} if family == "O" else {"max_length": rank}
            for mu in enumerate_partitions(max_size, **bound):
                rep.check({"group": str(g), "mu": mu}, pieri.standard_pieri(g, mu),
                          pieri.tensor_decomposition(g, mu, "row", 1))
    return rep


@_timed
def modification_suite(ranks=(1, 2, 3), max_size=8, max_part=4) -> SuiteReport:
    """Modification rules against the specialized symplectic/orthogonal Schur determinants."""
    rep = SuiteReport("modification", {"n": list(ranks), "max_size": max_size,
                                       "max_part": max_part})
    for n in ranks:
        sp, so = GroupId.sp(n), GroupId.so_odd(n)
        N = 2 * n + 1
        for lam in enumerate_partitions(max_size, max_part=max_part):
            img = sp_modify(lam, n)
            want = (LaurentPolynomial.zero(n) if img.is_zero
                    else irreducible_character(sp, img.label) * img.sign)
            rep.check({"group": str(sp), "lam": lam}, want, _specialize_sym(sp_schur_h(lam), sp))
            img = o_modify(lam, N)
            want = (LaurentPolynomial.zero(n) if img.is_zero
                    else irreducible_character(so, _so_label(img.label, N)) * img.sign)
            rep.check({"group": f"O_{N}", "lam": lam}, want, _specialize_sym(o_schur_h(lam), so))
    return rep


def _modified_sum(g: GroupId, branching: Dict[Partition, int], modify, N=None) -> LaurentPolynomial:
    acc = LaurentPolynomial.zero(g.nvars)
    for mu, c in branching.items():
        img = modify(mu)
        if img.is_zero:
            continue
        label = img.label if N is None else _so_label(img.label, N)
        acc = acc + irreducible_character(g, label) * (c * img.sign)
    return acc


@_timed
def branching_suite(ranks=(1, 2, 3), max_size=6, o_ranks=(1, 2, 3, 4, 5)) -> SuiteReport:
    """Littlewood branching and the restriction multiplicities from GL."""
    rep = SuiteReport("branching", {"n": list(ranks), "max_size": max_size, "N": list(o_ranks)})
    for n in ranks:
        g = GroupId.sp(n)
        for lam in enumerate_partitions(max_size):
            if len(lam) > 2 * n:
                target = LaurentPolynomial.zero(n)
            else:
                target = restrict_gl_character(lam, g)
            via = _modified_sum(g, branching_expansion("sp", lam), lambda mu: sp_modify(mu, n))
            rep.check({"group": str(g), "lam": lam, "identity": "sp-branching"}, via, target)
            if len(lam) <= 2 * n:
                dec = decompose_character(g, target)
                for m in range(sum(lam) + 1):
                    rep.check({"group": str(g), "lam": lam, "m": m},
                              dec[(m,) if m else ()], pieri.rest_mult("Sp", lam, m, n))
    for N in o_ranks:
        g = GroupId.o(N)
        for lam in enumerate_partitions(max_size, max_length=N):
            br = branching_expansion("o", lam)
            acc: dict = {}
            for mu, c in br.items():
                if len(mu) > N:
                    continue
                img = o_modify(mu, N)
                if not img.is_zero:
                    acc[img.label] = acc.get(img.label, 0) + c * img.sign
            for m in range(N + 1):
                rep.check({"group": str(g), "lam": lam, "m": m},
                          acc.get(column(m), 0), pieri.rest_mult("O", lam, m, N))
            if N % 2 and N > 1:
                so = GroupId.so_odd(N // 2)
                via = _modified_sum(so, br, lambda mu: o_modify(mu, N), N)
                rep.check({"group": str(so), "lam": lam, "identity": "o-branching"},
                          via, restrict_gl_character(lam, so))
    return rep


@_timed
def universal_pieri_suite(max_size=6, max_r=5) -> SuiteReport:
    """#{xi : mu/xi, lam/xi horizontal strips, sizes summing to r} = N^lam_{mu,(r)}."""
    rep = SuiteReport("universal-pieri", {"max_size": max_size, "max_r": max_r})
    for mu in enumerate_partitions(max_size):
        for r in range(max_r + 1):
            bulk = nl_product(mu, (r,) if r else ())
            for lam in enumerate_partitions(sum(mu) + r):
                if (sum(lam) - sum(mu) - r) % 2:
                    continue
                count = len(pieri.pieri_set(mu, lam, r))
                rep.check({"mu": mu, "lam": lam, "r": r}, count, bulk.get(lam, 0))
                if count or lam in bulk:
                    rep.check({"mu": mu, "lam": lam, "r": r, "via": "nl_coefficient"},
                              count, nl_coefficient(mu, (r,) if r else (), lam))
    return rep


def _compositions(max_total: int, max_len: int):
    for k in range(max_len + 1):
        for c in itertools.product(range(max_total + 1), repeat=k):
            if sum(c) <= max_total:
                yield c


@_timed
def equinumeration_suite(max_total=6, max_k=4, ranks=(1, 2, 3), o_ranks=(1, 2, 3, 4, 5),
                         max_m=6, burrill_k=6) -> SuiteReport:
    """Both sides of every equinumeration agree, and side (a) equals iterated Pieri."""
    rep = SuiteReport("equinumeration", {"max_total": max_total, "max_k": max_k,
                                         "n": list(ranks), "N": list(o_ranks), "max_m": max_m,
                                         "burrill_k": burrill_k})
    comps = list(_compositions(max_total, max_k))
    for variant in tableaux.MAIN2_VARIANTS:
        for rank in (o_ranks if variant == 3 else ranks):
            for m in range(max_m + 1):
                if variant in (4, 5) and m > rank:
                    continue
                for alpha in comps:
                    a = tableaux.main2_count(variant, "a", alpha, rank, m)
                    inputs = {"variant": variant, "alpha": list(alpha), "rank": rank, "m": m}
                    rep.check({**inputs, "vs": "side b"}, a,
                              tableaux.main2_count(variant, "b", alpha, rank, m))
                    rep.check({**inputs, "vs": "iterated pieri"}, a,
                              tableaux.iterated_pieri_multiplicity(variant, alpha, rank, m))
    for variant in tableaux.BURRILL_VARIANTS:
        for rank in (o_ranks if variant == 2 else ranks):
            for m in range(max_m + 1):
                if variant in (3, 4) and m > rank:
                    continue
                for k in range(burrill_k + 1):
                    rep.check({"burrill": variant, "k": k, "rank": rank, "m": m},
                              tableaux.burrill_count(variant, "a", k, rank, m),
                              tableaux.burrill_count(variant, "b", k, rank, m))
    return rep


# ------------------------------------------------------------- properties

def _weyl_images(p: LaurentPolynomial):
    n = p.nvars
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield p.map_exponents(lambda e: tuple(signs[i] * e[perm[i]] for i in range(n)))


@_timed
def property_suite(max_lr=8, max_nl=5, max_char=6, char_ranks=(1, 2, 3)) -> SuiteReport:
    """The module invariants over their stated ranges."""
    rep = SuiteReport("properties", {"max_lr": max_lr, "max_nl": max_nl,
                                     "max_char": max_char, "n": list(char_ranks)})
    parts = list(enumerate_partitions(max_lr))

    # partitions
    for lam in parts:
        rep.check({"prop": "conjugate involution", "lam": lam}, conjugate(conjugate(lam)), lam)
        rep.check({"prop": "c parity", "lam": lam}, odd_column_count(lam) % 2, sum(lam) % 2)
        rep.check({"prop": "r parity", "lam": lam}, odd_row_count(lam) % 2, sum(lam) % 2)
    small = list(enumerate_partitions(6))
    for mu, lam in itertools.product(small, repeat=2):
        rep.check({"prop": "strip duality", "mu": mu, "lam": lam}, is_horizontal_strip(mu, lam),
                  is_vertical_strip(conjugate(mu), conjugate(lam)))
    for N in range(1, 7):
        for lam in enumerate_partitions(8, two_column_bound=N):
            rep.check({"prop": "sharp involution", "lam": lam, "N": N},
                      sharp_partition(sharp_partition(lam, N), N), lam)
        got = list(enumerate_partitions(8, two_column_bound=N))
        rep.check({"prop": "enumeration filter", "N": N}, got,
                  [lam for lam in parts if in_par_o(lam, N)])
    rep.check({"prop": "enumeration distinct"}, len(set(parts)), len(parts))

    # LR coefficients
    for lam in parts:
        for a in range(sum(lam) + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(sum(lam) - a):
                    c = lr_coefficient(mu, nu, lam)
                    if (a, tuple(mu)) <= (sum(lam) - a, tuple(nu)):
                        rep.check({"prop": "LR symmetry", "mu": mu, "nu": nu, "lam": lam},
                                  c, lr_coefficient(nu, mu, lam))
                    if len(nu) <= 1:
                        rep.check({"prop": "LR row", "mu": mu, "nu": nu, "lam": lam},
                                  c, int(is_horizontal_strip(mu, lam)))
                    if len(nu) == sum(nu):
                        rep.check({"prop": "LR column", "mu": mu, "nu": nu, "lam": lam},
                                  c, int(is_vertical_strip(mu, lam)))
    gl3 = GroupId.gl(3)
    for mu, nu in itertools.product(list(enumerate_partitions(4, max_length=3)), repeat=2):
        if sum(mu) + sum(nu) > max_lr:
            continue
        oracle = decompose_character(gl3, irreducible_character(gl3, mu)
                                     * irreducible_character(gl3, nu))
        prod = {lam: c for lam, c in lr_product(mu, nu).items() if len(lam) <= 3}
        rep.check({"prop": "LR vs GL3 characters", "mu": mu, "nu": nu}, prod, oracle.coeffs)

    # Newell-Littlewood
    nl_parts = list(enumerate_partitions(max_nl))
    for mu, nu in itertools.product(nl_parts, repeat=2):
        prod = nl_product(mu, nu)
        for lam in nl_parts:
            c = prod.get(lam, 0)
            if (sum(mu) + sum(nu) - sum(lam)) % 2:
                rep.check({"prop": "NL parity", "mu": mu, "nu": nu, "lam": lam}, c, 0)
                continue
            for a, b, d in itertools.permutations((mu, nu, lam)):
                if (a, b, d) != (mu, nu, lam):
                    rep.check({"prop": "NL symmetry", "triple": [format_partition(x) for x in
                                                                 (a, b, d)]},
                              nl_product(a, b).get(d, 0), c)

    # characters
    for n in char_ranks:
        for family in ("Sp", "SOodd", "SOeven"):
            g = GroupId(family, n)
            for lam in enumerate_partitions(max_char, max_length=n):
                chi = irreducible_character(g, lam)
                # S_[lam] for SO_2n is also invariant under single inversions
                moved = next((img for img in _weyl_images(chi) if img != chi), chi)
                rep.check({"prop": "Weyl symmetry", "group": str(g), "lam": lam}, moved, chi)
                rep.check({"prop": "decompose round trip", "group": str(g), "lam": lam},
                          decompose_character(g, chi).coeffs, {lam: 1})
        sp = GroupId.sp(n)
        for r in range(7):
            rep.check({"prop": "H_r = S<(r)>", "n": n, "r": r}, power_character(sp, "sym", r),
                      irreducible_character(sp, (r,) if r else ()))
        so = GroupId.so_odd(n)
        for r in range(n + 1):
            rep.check({"prop": "E_r = S[(1^r)]", "n": n, "r": r}, power_character(so, "ext", r),
                      irreducible_character(so, column(r)))
        for r in range(2 * n + 1):
            acc = LaurentPolynomial.zero(n)
            for s in range(r // 2 + 1):
                acc = acc + irreducible_character(so, (r - 2 * s,) if r > 2 * s else ())
            rep.check({"prop": "H_r = sum of rows", "n": n, "r": r}, acc,
                      power_character(so, "sym", r))
        # combinations round trip
        for family in ("Sp", "SOodd", "SOeven"):
            g = GroupId(family, n)
            labels = list(enumerate_partitions(4, max_length=n))
            for i in range(len(labels)):
                combo = {labels[i]: 3, labels[(5 * i + 1) % len(labels)]: -2,
                         labels[(3 * i + 2) % len(labels)]: 1}
                elem = RepRingElement(g, combo)
                poly = LaurentPolynomial.zero(n)
                for lam, c in elem.coeffs.items():
                    poly = poly + irreducible_character(g, lam) * c
                rep.check({"prop": "combination round trip", "group": str(g), "index": i},
                          decompose_character(g, poly).coeffs, elem.coeffs)

    # modification rules
    for n in (1, 2, 3):
        for lam in enumerate_partitions(8):
            img = sp_modify(lam, n)
            if not img.is_zero:
                rep.check({"prop": "sp idempotent", "lam": lam, "n": n},
                          sp_modify(img.label, n).label, img.label)
            if len(lam) == n + 1:
                rep.check({"prop": "sp length n+1", "lam": lam, "n": n}, img.is_zero, True)
    for N in range(1, 8):
        for lam in enumerate_partitions(8):
            img = o_modify(lam, N)
            if not img.is_zero:
                rep.check({"prop": "o idempotent", "lam": lam, "N": N},
                          o_modify(img.label, N).label, img.label)
            cols = list(conjugate(lam)) + [0, 0, 0]
            if cols[0] + cols[1] == N + 1 or cols[0] + cols[2] == N + 2:
                rep.check({"prop": "o vanishing", "lam": lam, "N": N}, img.is_zero, True)

    # witness symmetry and weight permutation invariance
    for mu, lam in itertools.product(small, repeat=2):
        for r in range(5):
            rep.check({"prop": "pieri witness symmetry", "mu": mu, "lam": lam, "r": r},
                      set(pieri.pieri_set(mu, lam, r)), set(pieri.pieri_set(lam, mu, r)))
            if len(mu) <= 3 and len(lam) <= 3:
                rep.check({"prop": "dual witness symmetry", "mu": mu, "lam": lam, "r": r},
                          set(pieri.dual_pieri_set(mu, lam, r, 3)),
                          set(pieri.dual_pieri_set(lam, mu, r, 3)))
    for alpha in _compositions(6, 4):
        for perm in set(itertools.permutations(alpha)):
            for kind in ("column", "row"):
                rep.check({"prop": "weight permutation", "alpha": list(alpha),
                           "perm": list(perm), "kind": kind},
                          tableaux.strict_tableaux_by_shape(kind, perm),
                          tableaux.strict_tableaux_by_shape(kind, alpha))
    # all-ones weights reduce the main count to the one-box count
    for k in range(7):
        for n in (1, 2, 3):
            for m in range(k + 1):
                rep.check({"prop": "all-ones reduction", "k": k, "n": n, "m": m},
                          tableaux.main2_count(1, "a", (1,) * k, n, m),
                          tableaux.burrill_count(1, "a", k, n, m))
    return rep


SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "sp-pieri": sp_pieri_suite,
    "o-pieri": o_pieri_suite,
    "o-sym-power": o_sym_power_suite,
    "so-pieri": so_pieri_suite,
    "dual-pieri": dual_pieri_suite,
    "standard-pieri": standard_pieri_suite,
    "modification": modification_suite,
    "branching": branching_suite,
    "universal-pieri": universal_pieri_suite,
    "equinumeration": equinumeration_suite,
    "properties": property_suite,
}


def run_suite(name: str, **grid) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](**grid)


def run_all() -> List[SuiteReport]:
    return [fn() for fn in SUITES.values()]
