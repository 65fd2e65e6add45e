"""Exact irreducible characters of the symmetric group and the Kronecker
coefficient they define.

Characters are computed by the border-strip (Murnaghan-Nakayama) recursion in
beta-number form and memoized; everything stays in arbitrary-precision integers.
This module is the independent ground truth the closed forms are tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, enumerate_partitions, z_of


class SizeMismatch(ValueError):
    """The partitions of a character or Kronecker query have different sizes."""


class IntegralityViolation(ArithmeticError):
    """n! failed to divide the class-weighted character sum.

    This can only happen through an implementation bug, never through valid
    input, so it is raised loudly instead of being rounded away.
    """


# Provenance labels carried by KroneckerResult.
ORACLE = "Oracle"
TWO_ROW_TWO_ROW = "TwoRowTwoRow"
HOOK_HOOK = "HookHook"
HOOK_TWO_ROW = "HookTwoRow"
DELTA_RULE = "DeltaRule"


@dataclass(frozen=True)
class KroneckerResult:
    """A Kronecker coefficient plus how it was obtained.

    ``moves`` records the symmetry normalization applied before a closed form
    fired: "permute(i,j,k)" means slot s of the normalized triple held entry
    perm[s] of the original, "conjugate(s,t)" that the two named slots were
    then conjugated.  Applying the conjugations again and inverting the
    permutation recovers the original triple.
    """

    gamma: int
    provenance: str
    moves: tuple[str, ...] = ()


_strip_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _char(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama recursion on raw part tuples."""
    if not rho:
        return 1 if not lam else 0
    key = (lam, rho)
    cached = _strip_cache.get(key)
    if cached is not None:
        return cached
    strip, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - strip
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        m = len(new_beta)
        new_lam = tuple(new_beta[i] - (m - 1 - i) for i in range(m))
        new_lam = tuple(p for p in new_lam if p > 0)
        term = _char(new_lam, rest)
        total += -term if height % 2 else term
    _strip_cache[key] = total
    return total


def character(lam: Partition, rho: Partition) -> int:
    """Character value of the irreducible indexed by lam at cycle type rho."""
    if lam.n != rho.n:
        raise SizeMismatch(f"|{lam}| = {lam.n} but |{rho}| = {rho.n}")
    return _char(lam.parts, rho.parts)


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible indexed by lam (character at the identity)."""
    return _char(lam.parts, (1,) * lam.n)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Cycle types of S_n with their class sizes n!/z_rho, in enumeration order."""
    nf = math.factorial(n)
    return tuple((rho.parts, nf // z_of(rho)) for rho in enumerate_partitions(n))


@lru_cache(maxsize=None)
def _char_row(lam: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Character values of lam across all classes of S_n, aligned with _classes(n)."""
    return tuple(_char(lam, rho) for rho, _ in _classes(n))


def clear_cache() -> None:
    """Drop all memoized character data; callers sweeping many n may use this
    between sizes to bound memory."""
    _strip_cache.clear()
    _classes.cache_clear()
    _char_row.cache_clear()


def kron_oracle(lam: Partition, mu: Partition, nu: Partition) -> KroneckerResult:
    """Kronecker coefficient via the classwise character sum.

    Accumulates sum over cycle types of (class size) * chi^lam * chi^mu * chi^nu
    in exact integers, then divides by n! once; divisibility is checked, not
    assumed.
    """
    n = lam.n
    if mu.n != n or nu.n != n:
        raise SizeMismatch(f"sizes differ: |{lam}|={lam.n}, |{mu}|={mu.n}, |{nu}|={nu.n}")
    row_l = _char_row(lam.parts, n)
    row_m = _char_row(mu.parts, n)
    row_n = _char_row(nu.parts, n)
    total = 0
    for (_, size), a, b, c in zip(_classes(n), row_l, row_m, row_n):
        total += size * a * b * c
    nf = math.factorial(n)
    if total % nf:
        raise IntegralityViolation(
            f"{nf} does not divide {total} for ({lam}; {mu}; {nu})"
        )
    gamma = total // nf
    return KroneckerResult(gamma=gamma, provenance=ORACLE)
