"""The ring of symmetric functions as polynomials in h_1, h_2, ...

Schur, symplectic Schur and orthogonal Schur functions are expanded as
determinants in the h's.  Littlewood-Richardson coefficients come from
counting lattice-word skew tableaux, independently of any character
computation; Newell-Littlewood and Littlewood branching coefficients are
sums of those.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, Iterator, Optional, Sequence

from . import kernels
from .laurent import subset_determinant
from .partitions import Partition, conjugate, contains, partitions_of

__all__ = [
    "HPolynomial",
    "h",
    "h_jacobi_trudi",
    "sp_schur_h",
    "o_schur_h",
    "lr_coefficient",
    "lr_product",
    "skew_expansion",
    "nl_coefficient",
    "nl_product",
    "branching_coefficient",
    "branching_expansion",
]


class HPolynomial:
    """Integer polynomial in the generators h_1, h_2, ...

    A monomial is a nondecreasing tuple of generator indices, e.g. h_1^2 h_3
    is ``(1, 1, 3)``; the empty tuple is 1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted(mono))
            if mono and mono[0] <= 0:
                raise ValueError("generator indices must be positive")
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "HPolynomial":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = HPolynomial({(): other})
        if not isinstance(other, HPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other) -> "HPolynomial":
        if isinstance(other, HPolynomial):
            return other
        if isinstance(other, int):
            return HPolynomial._raw({(): other} if other else {})
        raise TypeError(f"cannot combine HPolynomial with {type(other).__name__}")

    def _combine(self, other, sign: int) -> "HPolynomial":
        other = self._coerce(other)
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            v = acc.get(mono, 0) + sign * c
            if v:
                acc[mono] = v
            else:
                acc.pop(mono, None)
        return HPolynomial._raw(acc)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return self._coerce(other)._combine(self, -1)

    def __neg__(self):
        return HPolynomial._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return HPolynomial._raw({m: c * other for m, c in self.terms.items()} if other else {})
        other = self._coerce(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                v = acc.get(mono, 0) + c1 * c2
                if v:
                    acc[mono] = v
                else:
                    acc.pop(mono, None)
        return HPolynomial._raw(acc)

    __rmul__ = __mul__

    def halve(self) -> "HPolynomial":
        """Exact division by 2; raises ArithmeticError on an odd coefficient."""
        out = {}
        for m, c in self.terms.items():
            if c % 2:
                raise ArithmeticError(f"coefficient {c} of {m} is odd")
            out[m] = c // 2
        return HPolynomial._raw(out)

    def specialize(self, value: Callable[[int], object], one):
        """Apply the ring map h_r -> value(r); products are shared by prefix."""
        cache: dict = {(): one}

        def prod(mono):
            if mono in cache:
                return cache[mono]
            res = prod(mono[:-1]) * value(mono[-1])
            cache[mono] = res
            return res

        total = None
        for mono in sorted(self.terms):
            term = prod(mono) * self.terms[mono]
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(m), m)):
            c = self.terms[mono]
            body = "*".join(f"h{i}" for i in mono) or "1"
            if mono and abs(c) != 1:
                body = f"{abs(c)}*{body}"
            elif not mono:
                body = str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def __repr__(self) -> str:
        return f"HPolynomial({self.render()})"


_ZERO = HPolynomial._raw({})
_ONE = HPolynomial._raw({(): 1})


def h(r: int) -> HPolynomial:
    """The generator h_r with h_0 = 1 and h_r = 0 for r < 0."""
    if r < 0:
        return _ZERO
    if r == 0:
        return _ONE
    return HPolynomial._raw({(r,): 1})


def _det(entries) -> HPolynomial:
    if not entries:
        return _ONE
    return subset_determinant(entries, _ZERO, _ONE)


def h_jacobi_trudi(lam: Sequence[int]) -> HPolynomial:
    """s_lam = det(h_{lam_i - i + j})."""
    l = len(lam)
    return _det([[h(lam[i] - i + j) for j in range(l)] for i in range(l)])


@lru_cache(maxsize=None)
def _sp_schur(lam: Partition) -> HPolynomial:
    l = len(lam)
    # 1-based: h_{lam_i - i + j} + h_{lam_i - i - j + 2}
    full = _det([[h(lam[i - 1] - i + j) + h(lam[i - 1] - i - j + 2) for j in range(1, l + 1)]
                 for i in range(1, l + 1)])
    if not l:
        return full
    return full.halve()


def sp_schur_h(lam: Sequence[int]) -> HPolynomial:
    """Symplectic Schur function s_<lam> in the h basis."""
    return _sp_schur(Partition(lam))


@lru_cache(maxsize=None)
def _o_schur(lam: Partition) -> HPolynomial:
    l = len(lam)
    return _det([[h(lam[i - 1] - i + j) - h(lam[i - 1] - i - j) for j in range(1, l + 1)]
                 for i in range(1, l + 1)])


def o_schur_h(lam: Sequence[int]) -> HPolynomial:
    """Orthogonal Schur function s_[lam] in the h basis."""
    return _o_schur(Partition(lam))


@lru_cache(maxsize=None)
def _lr(mu: Partition, nu: Partition, lam: Partition) -> int:
    return kernels.lr_coefficient(tuple(lam), tuple(mu), tuple(nu))


def lr_coefficient(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> int:
    """LR^lam_{mu,nu}: coefficient of s_lam in s_mu * s_nu."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    return _lr(mu, nu, lam)


def _supersets(mu: Partition, size: int, nu: Partition) -> Iterator[Partition]:
    """Partitions of ``size`` containing mu and nu, with the LR support bounds."""
    max_part = (mu[0] if mu else 0) + (nu[0] if nu else 0)
    max_len = len(mu) + len(nu)
    for lam in partitions_of(size, max_part=max_part, max_length=max_len):
        if contains(lam, mu) and contains(lam, nu):
            yield lam


@lru_cache(maxsize=None)
def _lr_product(mu: Partition, nu: Partition) -> tuple:
    size = sum(mu) + sum(nu)
    out = []
    for lam in _supersets(mu, size, nu):
        c = _lr(mu, nu, lam)
        if c:
            out.append((lam, c))
    return tuple(out)


def lr_product(mu: Sequence[int], nu: Sequence[int]) -> Dict[Partition, int]:
    """Schur expansion of s_mu * s_nu."""
    mu, nu = Partition(mu), Partition(nu)
    if sum(mu) < sum(nu):
        mu, nu = nu, mu
    return dict(_lr_product(mu, nu))


@lru_cache(maxsize=None)
def _skew(mu: Partition, tau: Partition) -> tuple:
    if not contains(mu, tau):
        return ()
    out = []
    for xi in partitions_of(sum(mu) - sum(tau), max_part=mu[0] if mu else 0,
                            max_length=len(mu)):
        if contains(mu, xi):
            c = _lr(tau, xi, mu)
            if c:
                out.append((xi, c))
    return tuple(out)


def skew_expansion(mu: Sequence[int], tau: Sequence[int]) -> Dict[Partition, int]:
    """s_{mu/tau} = sum_xi LR^mu_{tau,xi} s_xi."""
    return dict(_skew(Partition(mu), Partition(tau)))


def _subpartitions(mu: Partition) -> Iterator[Partition]:
    """Every partition contained in mu (including the empty one and mu)."""
    def rec(i, cap):
        if i == len(mu):
            yield ()
            return
        yield ()
        for p in range(min(cap, mu[i]), 0, -1):
            for tail in rec(i + 1, p):
                yield (p,) + tail

    for parts in rec(0, mu[0] if mu else 0):
        yield Partition(parts)


def nl_coefficient(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> int:
    """Newell-Littlewood coefficient sum_{tau,xi,eta} LR^mu_{tau,xi} LR^nu_{tau,eta} LR^lam_{xi,eta}."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if (sum(mu) + sum(nu) - sum(lam)) % 2:
        return 0
    total = 0
    for tau in _subpartitions(mu):
        if not contains(nu, tau):
            continue
        xis = _skew(mu, tau)
        if not xis:
            continue
        etas = _skew(nu, tau)
        for xi, a in xis:
            if not contains(lam, xi):
                continue
            for eta, b in etas:
                if sum(xi) + sum(eta) != sum(lam):
                    continue
                c = lr_coefficient(xi, eta, lam)
                if c:
                    total += a * b * c
    return total


@lru_cache(maxsize=None)
def _nl_product(mu: Partition, nu: Partition) -> tuple:
    acc: dict = {}
    for tau in _subpartitions(mu):
        if not contains(nu, tau):
            continue
        xis = _skew(mu, tau)
        etas = _skew(nu, tau)
        for xi, a in xis:
            for eta, b in etas:
                for lam, c in lr_product(xi, eta).items():
                    acc[lam] = acc.get(lam, 0) + a * b * c
    return tuple(sorted(acc.items()))


def nl_product(mu: Sequence[int], nu: Sequence[int]) -> Dict[Partition, int]:
    """All nonzero Newell-Littlewood coefficients N^lam_{mu,nu}, keyed by lam."""
    mu, nu = Partition(mu), Partition(nu)
    if (sum(mu), tuple(mu)) < (sum(nu), tuple(nu)):
        mu, nu = nu, mu
    return dict(_nl_product(mu, nu))


def _all_even(parts: Sequence[int]) -> bool:
    return all(p % 2 == 0 for p in parts)


def branching_coefficient(kind: str, lam: Sequence[int], mu: Sequence[int],
                          size_cap: Optional[int] = None) -> int:
    """sum over kappa in E' (kind 'sp') or E (kind 'o') of LR^lam_{kappa,mu}.

    E' holds partitions whose columns all have even length, E those whose rows
    all have even length.  ``size_cap`` optionally bounds |lam| as a guard.
    """
    if kind not in ("sp", "o"):
        raise ValueError(f"kind must be 'sp' or 'o', not {kind!r}")
    lam, mu = Partition(lam), Partition(mu)
    if size_cap is not None and sum(lam) > size_cap:
        raise ValueError(f"|lambda| = {sum(lam)} exceeds the size cap {size_cap}")
    rest = sum(lam) - sum(mu)
    if rest < 0 or rest % 2 or not contains(lam, mu):
        return 0
    total = 0
    for kappa in partitions_of(rest, max_part=lam[0] if lam else 0, max_length=len(lam)):
        ok = _all_even(conjugate(kappa)) if kind == "sp" else _all_even(kappa)
        if ok and contains(lam, kappa):
            total += lr_coefficient(kappa, mu, lam)
    return total


def branching_expansion(kind: str, lam: Sequence[int]) -> Dict[Partition, int]:
    """All nonzero branching coefficients for fixed lam, keyed by mu."""
    lam = Partition(lam)
    out = {}
    for size in range(sum(lam) % 2, sum(lam) + 1, 2):
        for mu in partitions_of(size, max_part=lam[0] if lam else 0, max_length=len(lam)):
            if contains(lam, mu):
                c = branching_coefficient(kind, lam, mu)
                if c:
                    out[mu] = c
    return out
