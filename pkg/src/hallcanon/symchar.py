"""Partitions, Kostka numbers and symmetric-group characters.

Kostka numbers are computed by direct enumeration of semistandard Young
tableaux.  Permutation characters come from a cycle-assignment count, and
Specht characters are recovered by inverting the unitriangular Kostka
system (Young's rule) over the integers.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def is_partition(parts):
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def normalize_partition(parts):
    """Sort and drop zeros; raises if negative entries are present."""
    parts = tuple(sorted((int(p) for p in parts if p != 0), reverse=True))
    if parts and parts[-1] < 0:
        raise ValueError("partition parts must be positive")
    return parts


def partitions(n, max_part=None):
    """All partitions of n as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def dominates(lam, mu):
    """True if lam dominates mu (partial sums of lam >= those of mu)."""
    s1 = s2 = 0
    for i in range(max(len(lam), len(mu))):
        s1 += lam[i] if i < len(lam) else 0
        s2 += mu[i] if i < len(mu) else 0
        if s1 < s2:
            return False
    return True


@lru_cache(maxsize=None)
def kostka(lam, mu):
    """Number of semistandard Young tableaux of shape lam and content mu."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("shape and content must have equal size")
    if not lam:
        return 1

    # fill rows top to bottom; state = column heights used so far per column
    def count(row, prev_row_fill, remaining):
        # prev_row_fill: entries of the previous row (for column-strictness)
        if row == len(lam):
            return 1 if all(r == 0 for r in remaining) else 0
        width = lam[row]
        total = 0
        # weakly increasing row of length `width` over alphabet 1..len(mu)
        def fill(col, minval, used, acc):
            nonlocal total
            if col == width:
                rem = list(remaining)
                ok = True
                for val, cnt in acc.items():
                    rem[val] -= cnt
                    if rem[val] < 0:
                        ok = False
                        break
                if ok:
                    total += count(row + 1, used, tuple(rem))
                return
            lo = minval
            for val in range(lo, len(mu)):
                if prev_row_fill is not None and col < len(prev_row_fill) \
                        and val <= prev_row_fill[col]:
                    continue
                if remaining[val] - acc.get(val, 0) <= 0:
                    continue
                acc[val] = acc.get(val, 0) + 1
                fill(col + 1, val, used + (val,) if col < width else used, acc)
                acc[val] -= 1
                if not acc[val]:
                    del acc[val]

        fill(0, 0, (), {})
        return total

    return count(0, None, mu)


@lru_cache(maxsize=None)
def perm_character(lam, mu):
    """Character of the permutation module indexed by lam at cycle type mu.

    Counts the ways to distribute the cycles of a permutation of cycle type
    mu into ordered blocks of sizes lam_1, lam_2, ... (the fixed points of
    the permutation acting on the Young-subgroup coset space).
    """
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    cycles = list(mu)

    # cosets of the Young subgroup are ordered set partitions into blocks of
    # sizes lam_i; a coset is fixed iff every cycle lands inside one block
    @lru_cache(maxsize=None)
    def distribute(i, loads):
        if i == len(cycles):
            return 1 if all(l == 0 for l in loads) else 0
        total = 0
        for j, l in enumerate(loads):
            if l >= cycles[i]:
                new = loads[:j] + (l - cycles[i],) + loads[j + 1:]
                total += distribute(i + 1, new)
        return total

    return distribute(0, lam)


def _cycle_type(perm):
    n = len(perm)
    seen = [False] * n
    lens = []
    for i in range(n):
        if not seen[i]:
            l, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                l += 1
            lens.append(l)
    return normalize_partition(lens)


def class_size(mu):
    """Size of the conjugacy class of cycle type mu in S_|mu|."""
    n = sum(mu)
    cz = centralizer_size(mu)
    import math
    return math.factorial(n) // cz


def centralizer_size(mu):
    import math
    out = 1
    for l in set(mu):
        m = mu.count(l)
        out *= l ** m * math.factorial(m)
    return out


@lru_cache(maxsize=None)
def _specht_table(m):
    """Character table {(lam, mu): value} of S_m via Kostka inversion."""
    parts = partitions(m)
    # order by dominance-compatible total order (sort by dominance refinement:
    # lexicographic descending works since lex extends dominance)
    order = sorted(parts, reverse=True)
    table = {}
    # perm characters: t'_lam(mu)
    tprime = {(lam, mu): perm_character(lam, mu) for lam in order for mu in order}
    # Young's rule: t'_lam = sum_nu kostka(nu, lam) * t_nu, with
    # kostka(nu, lam) = 0 unless nu dominates lam and kostka(lam, lam) = 1;
    # solve from most dominant to least (lex-descending extends dominance)
    solved = {}
    for lam in order:
        # t_lam = t'_lam - sum_{nu strictly dominating lam} K_{nu,lam} t_nu
        for mu in order:
            val = tprime[(lam, mu)]
            for nu in order:
                if nu != lam and dominates(nu, lam) and sum(nu) == m:
                    k = kostka(nu, lam)
                    if k:
                        val -= k * solved[(nu, mu)]
            solved[(lam, mu)] = val
    return solved


def specht_character(lam, mu):
    """Irreducible character of S_m indexed by lam at cycle type mu."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    m = sum(lam)
    return _specht_table(m)[(lam, mu)]


def character_table(m):
    """Full character table of S_m as {(lam, mu): value}."""
    return dict(_specht_table(m))
