"""The finite field method for ideal arrangements of classical root systems:
minor sets and valid primes, closed-form coboundary evaluations at primes via
the block partition, the brute-force point-counting oracle, and the full
interpolation pipeline producing exact coboundary polynomials.

The evaluation at a prime p sums, over all ways of distributing each block of
exchangeable coordinates across the residues of F_p, the multinomial weight
times t to the number of hyperplanes the distribution satisfies.  Residues are
consumed in the symmetric pairs {c, p-c} (plus 0), which keeps the dynamic
program independent of which residue is which and lets one transition table
serve every step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import ConstraintError, GuardExceeded, InconsistencyError, UnsupportedTypeError
from .exactpoly import BivariatePolynomial, UnivariatePolynomial, lagrange_interpolate
from .ideals import complement, decompose_components, tuple_normal
from . import crapo

DEFAULT_MAX_POINTS = 10 ** 8


# ---- minor sets and prime plans ---------------------------------------------


@dataclass(frozen=True)
class MinorProfile:
    """All k x k minors (k <= max_order) of the matrix with the given rows.

    The minor set is stored symmetrically: row swaps realize both signs, so d
    and -d are recorded together.
    """

    vectors: tuple
    minors: frozenset
    max_order: int

    def magnitudes(self):
        return sorted({abs(d) for d in self.minors})


def _det(rows):
    """Exact determinant by fraction-free elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def minor_set(vectors, max_order=None, max_minors=5_000_000):
    """Every minor of the matrix whose rows are the given vectors.

    Exhaustive over row and column subsets, so intended for ambient dimension
    at most 5; the guard refuses anything combinatorially larger.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return MinorProfile((), frozenset(), 0)
    dim = len(vectors[0])
    m = len(vectors)
    if max_order is None:
        max_order = min(m, dim)
    if max_order > min(m, dim):
        raise ConstraintError("max_order exceeds matrix dimensions")
    total = sum(comb(m, k) * comb(dim, k) for k in range(1, max_order + 1))
    if total > max_minors:
        raise GuardExceeded(f"{total} minors exceeds guard {max_minors}")
    minors = set()
    for k in range(1, max_order + 1):
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(dim), k):
                d = _det([[vectors[r][c] for c in cols] for r in rows])
                minors.add(d)
                minors.add(-d)
    if 0 in minors:
        minors.add(0)
    return MinorProfile(tuple(vectors), frozenset(minors), max_order)


@dataclass(frozen=True)
class PrimePlan:
    """Interpolation abscissae: primes over which reduction is correct."""

    primes: tuple
    family: str
    rank: int


def _odd_primes():
    yield 3
    cand = 5
    while True:
        if all(cand % p for p in range(3, cand) if p * p <= cand):
            yield cand
        cand += 2


def classical_minor_magnitudes(family, n):
    """Magnitudes of the minor set of the positive-root matrix of a classical type.

    Type A gives {0, 1}; B (and with it C and D, whose rows are a subset up to
    scaling) gives {0} with all powers of two up to 2^floor(n/2).
    """
    if family == "A":
        return {0, 1}
    if family in ("B", "C", "D"):
        return {0} | {2 ** k for k in range(n // 2 + 1)}
    raise UnsupportedTypeError(family)


def prime_plan(family, rank, count=None):
    """The first rank+1 odd primes avoiding the family's minor magnitudes.

    Odd primes are always valid for the classical families (only powers of two
    occur), so the plan simply starts at 3.
    """
    if family not in ("A", "B", "C", "D"):
        raise UnsupportedTypeError(f"prime plans are for classical families, not {family}")
    bad = classical_minor_magnitudes(family, max(rank, 2))
    want = (rank + 1) if count is None else count
    out = []
    for p in _odd_primes():
        if p not in bad:
            out.append(p)
        if len(out) == want:
            break
    return PrimePlan(tuple(out), family, rank)


# ---- brute-force point counting ---------------------------------------------


@dataclass(frozen=True)
class TProfile:
    """counts[k] = number of points of F_p^n lying on exactly k hyperplanes."""

    counts: tuple
    p: int
    n: int
    rank: int

    def total(self):
        return sum(self.counts)

    def coboundary(self):
        """chi-bar(p, t) as a polynomial in t: the profile divided by p^(n - rank)."""
        d = self.p ** (self.n - self.rank)
        out = []
        for c in self.counts:
            if c % d:
                raise InconsistencyError(
                    f"profile entry {c} not divisible by p^(n-rank) = {d}"
                )
            out.append(c // d)
        return UnivariatePolynomial(out)


def count_points_bruteforce(tuples, n, p, max_points=DEFAULT_MAX_POINTS):
    """Exhaustive weighted point count over F_p^n.

    Membership per hyperplane tuple: (i, j) holds when x_i = x_j, (i, -j)
    when x_i = -x_j, and (i, 0) when x_i = 0.
    """
    if p ** n > max_points:
        raise GuardExceeded(f"p^n = {p ** n} exceeds guard {max_points}")
    tuples = [tuple(t) for t in tuples]
    rank = crapo.rank_of([tuple_normal(t, n) for t in tuples]) if tuples else 0
    try:
        import numpy as np
    except ImportError:
        np = None
    if np is not None:
        total = p ** n
        chunk = 1 << 20
        weights = p ** np.arange(n, dtype=np.int64)
        counts = np.zeros(len(tuples) + 1, dtype=np.int64)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            grid = (idx[None, :] // weights[:, None]) % p
            hits = np.zeros(idx.shape[0], dtype=np.int64)
            for (i, j) in tuples:
                if j == 0:
                    hits += grid[i - 1] == 0
                elif j > 0:
                    hits += grid[i - 1] == grid[j - 1]
                else:
                    hits += grid[i - 1] == (p - grid[-j - 1]) % p
            counts += np.bincount(hits, minlength=len(tuples) + 1)
        return TProfile(tuple(int(c) for c in counts), p, n, rank)
    counts = [0] * (len(tuples) + 1)
    for x in itertools.product(range(p), repeat=n):
        k = 0
        for (i, j) in tuples:
            if j == 0:
                k += x[i - 1] == 0
            elif j > 0:
                k += x[i - 1] == x[j - 1]
            else:
                k += x[i - 1] == (p - x[-j - 1]) % p
        counts[k] += 1
    return TProfile(tuple(counts), p, n, rank)


# ---- the counting model and its dynamic program ------------------------------


class CountingModel:
    """Blocks of exchangeable coordinates plus pair-incidence flags for one
    hyperplane tuple set; evaluates the weighted point count at any odd prime.

    Blocks are taken from a BlockPartition when available (the partition in
    accordance with an ideal) or computed directly as the coordinate classes
    under hyperplane-set automorphisms.
    """

    def __init__(self, m, tuples, blocks=None):
        self.m = m
        self.tuples = sorted(tuple(t) for t in tuples)
        tset = set(self.tuples)
        self.rank = (
            crapo.rank_of([tuple_normal(t, m) for t in self.tuples]) if self.tuples else 0
        )
        if blocks is None:
            blocks = self._automorphism_blocks(m, tset)
        self.blocks = [list(b) for b in blocks]
        covered = sorted(x for b in self.blocks for x in b)
        if covered != list(range(1, m + 1)):
            raise ConstraintError("blocks must partition 1..m")
        nb = len(self.blocks)

        def pos(i, j):
            a, b = min(i, j), max(i, j)
            return (a, b) in tset

        def neg(i, j):
            a, b = min(i, j), max(i, j)
            return (a, -b) in tset

        def zero(i):
            return (i, 0) in tset

        self.pos_within = [
            pos(b[0], b[1]) if len(b) > 1 else False for b in self.blocks
        ]
        self.neg_within = [
            neg(b[0], b[1]) if len(b) > 1 else False for b in self.blocks
        ]
        self.zero_flags = [zero(b[0]) for b in self.blocks]
        self.pos_cross = {}
        self.neg_cross = {}
        for i in range(nb):
            for j in range(i + 1, nb):
                self.pos_cross[(i, j)] = pos(self.blocks[i][0], self.blocks[j][0])
                self.neg_cross[(i, j)] = neg(self.blocks[i][0], self.blocks[j][0])
        self._verify_uniform(tset)
        self._pair_kernel = {}
        self._zero_kernel = {}

    @classmethod
    def from_block_partition(cls, bp, tuples):
        return cls(bp.rst.n_param, tuples, blocks=bp.blocks)

    @staticmethod
    def _automorphism_blocks(m, tset):
        def pos(i, j):
            a, b = min(i, j), max(i, j)
            return (a, b) in tset

        def neg(i, j):
            a, b = min(i, j), max(i, j)
            return (a, -b) in tset

        def zero(i):
            return (i, 0) in tset

        def equivalent(i, j):
            if zero(i) != zero(j):
                return False
            for z in range(1, m + 1):
                if z in (i, j):
                    continue
                if pos(i, z) != pos(j, z) or neg(i, z) != neg(j, z):
                    return False
            return True

        blocks = []
        for x in range(1, m + 1):
            for b in blocks:
                if equivalent(b[0], x):
                    b.append(x)
                    break
            else:
                blocks.append([x])
        return blocks

    def _verify_uniform(self, tset):
        def pos(i, j):
            a, b = min(i, j), max(i, j)
            return (a, b) in tset

        def neg(i, j):
            a, b = min(i, j), max(i, j)
            return (a, -b) in tset

        for bi, blk in enumerate(self.blocks):
            for x in blk:
                if ((x, 0) in tset) != self.zero_flags[bi]:
                    raise ConstraintError(f"zero column not uniform on block {blk}")
            for a in range(len(blk)):
                for b in range(a + 1, len(blk)):
                    if (
                        pos(blk[a], blk[b]) != self.pos_within[bi]
                        or neg(blk[a], blk[b]) != self.neg_within[bi]
                    ):
                        raise ConstraintError(f"pairs not uniform within block {blk}")
        for (i, j), pc in self.pos_cross.items():
            ncx = self.neg_cross[(i, j)]
            for a in self.blocks[i]:
                for b in self.blocks[j]:
                    if pos(a, b) != pc or neg(a, b) != ncx:
                        raise ConstraintError(
                            f"pairs not uniform across blocks {self.blocks[i]} x {self.blocks[j]}"
                        )

    # transition tables are independent of the prime, so they are built once
    # per starting state and reused across every residue step of every prime.

    def _alloc_zero(self, state):
        key = state
        cached = self._zero_kernel.get(key)
        if cached is not None:
            return cached
        nb = len(state)
        out = []

        def rec(bi, alloc, weight, de):
            if bi == nb:
                out.append(
                    (tuple(r - a for r, a in zip(state, alloc)), weight, de)
                )
                return
            r = state[bi]
            for a in range(r + 1):
                d = 0
                if self.pos_within[bi]:
                    d += a * (a - 1) // 2
                if self.neg_within[bi]:
                    d += a * (a - 1) // 2
                if self.zero_flags[bi]:
                    d += a
                for bj in range(bi):
                    cross = 0
                    if self.pos_cross[(bj, bi)]:
                        cross += 1
                    if self.neg_cross[(bj, bi)]:
                        cross += 1
                    d += cross * alloc[bj] * a
                alloc.append(a)
                rec(bi + 1, alloc, weight * comb(r, a), de + d)
                alloc.pop()

        rec(0, [], 1, 0)
        self._zero_kernel[key] = out
        return out

    def _alloc_pair(self, state):
        key = state
        cached = self._pair_kernel.get(key)
        if cached is not None:
            return cached
        nb = len(state)
        out = []

        def rec(bi, aa, bb, weight, de):
            if bi == nb:
                out.append(
                    (
                        tuple(r - a - b for r, a, b in zip(state, aa, bb)),
                        weight,
                        de,
                    )
                )
                return
            r = state[bi]
            for a in range(r + 1):
                for b in range(r - a + 1):
                    d = 0
                    if self.pos_within[bi]:
                        d += a * (a - 1) // 2 + b * (b - 1) // 2
                    if self.neg_within[bi]:
                        d += a * b
                    for bj in range(bi):
                        if self.pos_cross[(bj, bi)]:
                            d += aa[bj] * a + bb[bj] * b
                        if self.neg_cross[(bj, bi)]:
                            d += aa[bj] * b + bb[bj] * a
                    aa.append(a)
                    bb.append(b)
                    rec(
                        bi + 1,
                        aa,
                        bb,
                        weight * comb(r, a) * comb(r - a, b),
                        de + d,
                    )
                    aa.pop()
                    bb.pop()

        rec(0, [], [], 1, 0)
        self._pair_kernel[key] = out
        return out

    def point_count_profile(self, p):
        """Dense coefficient list of sum over F_p^m of t^(#satisfied hyperplanes)."""
        if p % 2 == 0:
            raise ConstraintError("the counting model requires an odd prime")
        sizes = tuple(len(b) for b in self.blocks)
        states = {sizes: {0: 1}}
        # residue 0, then (p-1)/2 interchangeable residue pairs
        nxt = {}
        for st, poly in states.items():
            for st2, w, de in self._alloc_zero(st):
                tgt = nxt.setdefault(st2, {})
                for e, c in poly.items():
                    tgt[e + de] = tgt.get(e + de, 0) + c * w
        states = nxt
        for _ in range((p - 1) // 2):
            nxt = {}
            for st, poly in states.items():
                for st2, w, de in self._alloc_pair(st):
                    tgt = nxt.setdefault(st2, {})
                    for e, c in poly.items():
                        tgt[e + de] = tgt.get(e + de, 0) + c * w
            states = nxt
        final = states.get(tuple(0 for _ in sizes), {})
        out = [0] * (len(self.tuples) + 1)
        for e, c in final.items():
            out[e] += c
        if sum(out) != p ** self.m:
            raise InconsistencyError("point count does not total p^m")
        return out

    def coboundary_at_prime(self, p):
        """chi-bar(p, t): the profile divided by p^(m - rank), exactly."""
        prof = self.point_count_profile(p)
        d = p ** (self.m - self.rank)
        out = []
        for c in prof:
            if c % d:
                raise InconsistencyError(
                    f"profile entry {c} not divisible by p^(m-rank) = {d}"
                )
            out.append(c // d)
        return UnivariatePolynomial(out)


def coboundary_ideal_at_prime(bp, p):
    """Closed-form evaluation chi-bar(p, t) for an ideal arrangement from its
    block partition.  p must come from a valid prime plan (odd, not a minor)."""
    model = CountingModel.from_block_partition(bp, bp.hyperplanes)
    return model.coboundary_at_prime(p)


# ---- full classical arrangements --------------------------------------------


def _compositions(n):
    """Ordered partitions (compositions) of n into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def coboundary_full_at_prime(family, n, p):
    """chi-bar of the full classical arrangement at an odd prime, in closed form.

    A sums over compositions of n with binomial(p, u) weights divided by p; B
    and D split off the zero-valued coordinates (t-exponent a^2 resp. a(a-1))
    and distribute the rest over (p-1)/2 sign-symmetric residue pairs with
    doubled multiplicities.  Type C shares the B arrangement.
    """
    if family == "C":
        family = "B"
    if p % 2 == 0 or p < 3:
        raise ConstraintError("need an odd prime")
    if family == "A":
        total = UnivariatePolynomial.zero()
        for parts in _compositions(n):
            u = len(parts)
            w = comb(p, u) * _multinomial(n, parts)
            e = sum(a * (a - 1) // 2 for a in parts)
            total = total + UnivariatePolynomial([0] * e + [w])
        coeffs = []
        for c in total.coeffs:
            if c % p:
                raise InconsistencyError("type A sum not divisible by p")
            coeffs.append(c // p)
        return UnivariatePolynomial(coeffs)
    if family in ("B", "D"):
        total = UnivariatePolynomial.zero()
        for a in range(n + 1):
            ea = a * a if family == "B" else a * (a - 1)
            base = comb(n, a)
            for parts in _compositions(n - a):
                u = len(parts)
                w = base * comb((p - 1) // 2, u) * _multinomial(n - a, parts) * 2 ** (n - a)
                e = ea + sum(b * (b - 1) // 2 for b in parts)
                total = total + UnivariatePolynomial([0] * e + [w])
        return total
    raise UnsupportedTypeError(family)


def _multinomial(n, parts):
    out = 1
    rem = n
    for a in parts:
        out *= comb(rem, a)
        rem -= a
    return out


def full_arrangement_tuples(family, n):
    """Hyperplane tuples of the full classical arrangement."""
    out = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if family in ("B", "C", "D"):
        out += [(i, -j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if family in ("B", "C"):
        out += [(i, 0) for i in range(1, n + 1)]
    if family == "A":
        pass
    return sorted(out)


def coboundary_full(family, n):
    """Exact chi-bar(q, t) of the full classical arrangement via interpolation."""
    rank = n - 1 if family == "A" else n
    plan = prime_plan(family, rank)
    points = [
        (p, coboundary_full_at_prime(family, n, p)) for p in plan.primes
    ]
    return lagrange_interpolate(points)


# ---- the ideal pipeline ------------------------------------------------------


def coboundary_polynomial(ideal, primes=None):
    """Exact coboundary polynomial chi-bar(q, t) of a classical ideal arrangement.

    Decomposes the complement into connected components, evaluates each
    component's closed form over its prime plan, interpolates, and multiplies;
    the coboundary polynomial is rank-relative, so components simply multiply.
    An explicit prime list overrides the plan (it must hold enough odd primes
    outside the family's minor set).
    """
    rst = ideal.rst
    if not rst.is_classical:
        raise UnsupportedTypeError(
            f"the finite field pipeline covers classical types, not {rst.family}"
        )
    comp = complement(ideal)
    if not comp.roots:
        return BivariatePolynomial.one(("q", "t"))
    result = BivariatePolynomial.one(("q", "t"))
    for component in decompose_components(comp):
        model = CountingModel(component.size, component.tuples)
        if primes is None:
            plan_primes = prime_plan(component.family, model.rank).primes
        else:
            bad = classical_minor_magnitudes(component.family, component.size)
            usable = [p for p in primes if p % 2 and p not in bad]
            if len(usable) < model.rank + 1:
                raise ConstraintError(
                    f"need {model.rank + 1} valid primes, got {usable}"
                )
            plan_primes = tuple(usable[: model.rank + 1])
        points = [(p, model.coboundary_at_prime(p)) for p in plan_primes]
        result = result * lagrange_interpolate(points)
    return result


def tutte_via_ffmethod(ideal, primes=None):
    """Tutte polynomial of a classical ideal arrangement via the coboundary route."""
    from .exactpoly import coboundary_to_tutte

    cb = coboundary_polynomial(ideal, primes=primes)
    rank = arrangement_rank(ideal)
    return coboundary_to_tutte(cb, rank)


def arrangement_rank(ideal):
    from .ideals import arrangement_of

    return arrangement_of(ideal).rank()
