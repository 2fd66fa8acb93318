"""Noncrossing partitions and the free moment-cumulant machinery.

Provides the lattice-free essentials: enumeration of NC(n) and of the
noncrossing pairings NC2(n), the moment <-> free-cumulant transforms, the
join-with-interval-partition test used by the product formula for cumulants
of products, mixed moments of a free semicircular family, and the exact
small-matrix oracle for cumulants of quadratic forms in free standard
semicircular variables (which equal the traces of matrix powers).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .exceptions import ResourceLimitError
from .gaussian_rational import GaussianRational, to_gaussian_rational

ENUMERATION_BOUND = 14  # Catalan(14) ~ 2.7M partitions, still comfortable

__all__ = [
    "ENUMERATION_BOUND",
    "NCPartition",
    "catalan",
    "cumulants_from_moments",
    "enumerate_nc",
    "joins_to_top",
    "moments_from_cumulants",
    "moments_from_cumulants_enumerated",
    "nc_pairings",
    "quadratic_form_cumulants_oracle",
    "quadratic_form_moments",
    "semicircular_mixed_moment",
]


def catalan(n):
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class NCPartition:
    """A noncrossing set partition of {1..n}, blocks sorted by minimum."""

    n: int
    blocks: tuple

    def block_of(self, i):
        for b in self.blocks:
            if i in b:
                return b
        raise KeyError(i)

    def is_valid(self):
        """Check disjoint cover and the noncrossing property."""
        seen = sorted(i for b in self.blocks for i in b)
        if seen != list(range(1, self.n + 1)):
            return False
        return not _has_crossing(self.blocks)


def _has_crossing(blocks):
    owner = {}
    for idx, b in enumerate(blocks):
        for i in b:
            owner[i] = idx
    order = sorted(owner)
    stack = []
    for i in order:
        w = owner[i]
        if stack and stack[-1] == w:
            # closing inside the innermost open block is always fine
            pass
        if w in stack:
            while stack and stack[-1] != w:
                return True
        else:
            stack.append(w)
        if i == max(blocks[w]):
            stack.pop()
    return False


def _nc_blocks(lo, hi):
    """Yield noncrossing partitions of range(lo, hi) as tuples of tuples."""
    if lo >= hi:
        yield ()
        return
    rest = range(lo + 1, hi)
    for size in range(hi - lo):
        for tail in combinations(rest, size):
            first = (lo,) + tail
            cuts = list(first[1:]) + [hi]
            gap_parts = []
            start = lo + 1
            for c in cuts:
                gap_parts.append(list(_nc_blocks(start, c)))
                start = c + 1 if c < hi else hi
            for pieces in product(*gap_parts):
                out = (first,)
                for piece in pieces:
                    out = out + piece
                yield out


def enumerate_nc(n):
    """All noncrossing partitions of {1..n}; |NC(n)| = Catalan(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ENUMERATION_BOUND:
        raise ResourceLimitError(
            f"NC({n}) enumeration exceeds bound {ENUMERATION_BOUND}"
        )
    out = []
    for blocks in _nc_blocks(1, n + 1):
        out.append(NCPartition(n, tuple(sorted(blocks))))
    return out


def nc_pairings(m):
    """All noncrossing pair partitions of {1..m} (empty list for odd m)."""
    if m % 2:
        return []
    return [tuple(p) for p in _pairings_range(tuple(range(1, m + 1)), True)]


def _pairings_range(elements, noncrossing):
    if not elements:
        yield ()
        return
    a = elements[0]
    for j in range(1, len(elements)):
        b = elements[j]
        inside = elements[1:j]
        outside = elements[j + 1:]
        if noncrossing:
            if len(inside) % 2:
                continue
            for pin in _pairings_range(inside, True):
                for pout in _pairings_range(outside, True):
                    yield ((a, b),) + pin + pout
        else:
            rest = inside + outside
            for p in _pairings_range(rest, False):
                yield ((a, b),) + p


def all_pairings(m):
    """All (m-1)!! pair partitions of {1..m}, crossing ones included."""
    if m % 2:
        return []
    return [tuple(p) for p in _pairings_range(tuple(range(1, m + 1)), False)]


# ---------------------------------------------------------------------------
# moment <-> cumulant transforms
# ---------------------------------------------------------------------------

def moments_from_cumulants(cumulants, n_max):
    """Moments m_1..m_n from free cumulants K_1..K_n.

    Uses the nesting recursion
    m_n = sum_{s=1}^{n} K_s * sum_{i_1+...+i_s=n-s} m_{i_1} ... m_{i_s},
    which works for any order; entries may be Fractions or floats.
    """
    if len(cumulants) < n_max:
        raise ValueError("cumulants must be defined up to n_max")
    zero = cumulants[0] * 0 if n_max else 0
    m = [zero + 1]
    for n in range(1, n_max + 1):
        comp = _compositions_table(m, n)
        acc = zero
        for s in range(1, n + 1):
            acc = acc + cumulants[s - 1] * comp[s][n - s]
        m.append(acc)
    return m[1:]


def _compositions_table(m, n):
    """comp[s][t] = sum over s-part weak compositions of t of products of m."""
    comp = [None] * (n + 1)
    comp[0] = [m[0] * 0 + 1] + [m[0] * 0] * n
    for s in range(1, n + 1):
        row = []
        for t in range(n - s + 1):
            acc = m[0] * 0
            for u in range(t + 1):
                acc = acc + m[u] * comp[s - 1][t - u]
            row.append(acc)
        comp[s] = row + [m[0] * 0] * (n + 1 - len(row))
    return comp


def moments_from_cumulants_enumerated(cumulants, n_max):
    """Same transform by direct summation over NC(n); cross-check route."""
    if n_max > 8:
        raise ResourceLimitError("enumeration route limited to n_max <= 8")
    out = []
    for n in range(1, n_max + 1):
        acc = cumulants[0] * 0
        for part in enumerate_nc(n):
            term = acc * 0 + 1
            for b in part.blocks:
                term = term * cumulants[len(b) - 1]
            acc = acc + term
        out.append(acc)
    return out


def cumulants_from_moments(moments, r_max):
    """Free cumulants K_1..K_r from moments; exact triangular inversion."""
    if len(moments) < r_max:
        raise ValueError("moments must be defined up to r_max")
    zero = moments[0] * 0 if r_max else 0
    m = [zero + 1] + list(moments[:r_max])
    cums = []
    for n in range(1, r_max + 1):
        comp = _compositions_table(m, n)
        acc = m[n]
        for s in range(1, n):
            acc = acc - cums[s - 1] * comp[s][n - s]
        cums.append(acc)  # comp[n][0] = 1 multiplies K_n itself
    return cums


# ---------------------------------------------------------------------------
# product formula support
# ---------------------------------------------------------------------------

def joins_to_top(partition, interval_lengths):
    """True iff partition v interval-partition = the one-block partition.

    The interval partition is given by its block lengths only (that is the
    only shape the product formula needs); the join is computed by
    union-find over the ground set.
    """
    n = partition.n
    if sum(interval_lengths) != n or any(s < 1 for s in interval_lengths):
        raise ValueError("interval lengths must be positive and sum to n")
    parent = list(range(n + 1))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    for b in partition.blocks:
        for i in b[1:]:
            union(b[0], i)
    pos = 1
    for length in interval_lengths:
        for i in range(pos + 1, pos + length):
            union(pos, i)
        pos += length
    root = find(1)
    return all(find(i) == root for i in range(2, n + 1))


# ---------------------------------------------------------------------------
# semicircular families and the quadratic-form oracle
# ---------------------------------------------------------------------------

def semicircular_mixed_moment(word):
    """Mixed moment of a free standard semicircular family.

    ``word`` is a sequence of letters (indices); the moment equals the
    number of noncrossing pairings whose pairs join equal letters.
    Odd-length words give 0.
    """
    m = len(word)
    if m % 2:
        return 0
    count = 0
    for pairing in nc_pairings(m):
        if all(word[a - 1] == word[b - 1] for a, b in pairing):
            count += 1
    return count


def quadratic_form_moments(matrix, p_max):
    """Exact moments of Q = sum_{ij} a_ij X_i X_j, X_i free standard
    semicircular, computed by summing letter assignments over noncrossing
    pairings of the 2p word positions.
    """
    a = [[to_gaussian_rational(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n > 4 or p_max > 5:
        raise ResourceLimitError("oracle limited to size <= 4, order <= 5")
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i].conjugate():
                raise ValueError("matrix must be Hermitian")
    moments = []
    for p in range(1, p_max + 1):
        acc = GaussianRational(0)
        for pairing in nc_pairings(2 * p):
            blocks = list(pairing)
            for letters in product(range(n), repeat=len(blocks)):
                h = {}
                for (u, v), letter in zip(blocks, letters):
                    h[u] = letter
                    h[v] = letter
                term = GaussianRational(1)
                for k in range(p):
                    term = term * a[h[2 * k + 1]][h[2 * k + 2]]
                    if term == GaussianRational(0):
                        break
                acc = acc + term
        moments.append(acc)
    return moments


def quadratic_form_cumulants_oracle(matrix, r_max):
    """Exact free cumulants of the quadratic form, via moments + inversion.

    By the product formula these must equal Tr(A^r); the comparison against
    the independent exact trace route is the oracle check.
    """
    moments = quadratic_form_moments(matrix, r_max)
    for m in moments:
        if not m.is_real:
            raise ValueError(f"non-real moment from Hermitian input: {m!r}")
    cums = cumulants_from_moments([m.re for m in moments], r_max)
    return cums


def limit_theorem_small_check(matrix_builder, r, n_list):
    """Normalized trace powers Tr(A_n^r) / n^r along a sequence of sizes.

    This is the convergence sequence of the r-th cumulant of the quadratic
    form toward the r-th limit cumulant.  Exact matrices (entries coercible
    to Gaussian rationals, size <= 16) give exact Fractions; anything else
    is handled in floating point.
    """
    from .spectra import exact_trace_powers, float_trace_power

    out = []
    for n in n_list:
        a = matrix_builder(n)
        try:
            if n <= 16:
                tr = exact_trace_powers(a, r)[r - 1]
                from fractions import Fraction

                out.append(tr / Fraction(n) ** r)
                continue
        except TypeError:
            pass
        out.append(float_trace_power(a, r) / float(n) ** r)
    return out
