"""Derived quantities: characteristic polynomials, region counts, ideal
exponents from the height partition, and the exponent-factorization
cross-check.  Also hosts the engine dispatcher that picks the finite-field
pipeline for classical types and the basis-activity formula for exceptional
ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import crapo, ffmethod
from .errors import ConstraintError, InconsistencyError
from .exactpoly import tutte_to_characteristic
from .ideals import arrangement_of


@dataclass(frozen=True)
class IdealExponents:
    """Height partition of an ideal complement and its dual partition."""

    heights: tuple    # lambda_1 >= lambda_2 >= ...
    exponents: tuple  # m_{lambda_1} >= ... >= m_1

    def total(self):
        return sum(self.heights)


def ideal_exponents(ideal):
    """Ideal exponents from the height partition of the complement.

    lambda_i counts complement roots of height i; the exponents are the dual
    partition values m_i = #{j : lambda_j >= lambda_1 - i + 1}, reported in
    weakly decreasing order.
    """
    heights = {}
    for r in ideal.complement_roots():
        heights[r.height] = heights.get(r.height, 0) + 1
    if not heights:
        return IdealExponents((), ())
    lam = [heights.get(h, 0) for h in range(1, max(heights) + 1)]
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise InconsistencyError(f"height counts {lam} are not weakly decreasing")
    lam_sorted = sorted(lam, reverse=True)
    top = lam_sorted[0]
    exps = [
        sum(1 for l in lam_sorted if l >= top - i + 1) for i in range(1, top + 1)
    ]
    return IdealExponents(tuple(lam_sorted), tuple(sorted(exps, reverse=True)))


def tutte_of_ideal(ideal, engine="auto", primes=None, max_subsets=None):
    """Tutte polynomial of an ideal arrangement by the requested engine.

    auto routes classical types through the finite-field pipeline and
    exceptional types through the basis-activity formula; oracle forces the
    corank-nullity expansion.
    """
    rst = ideal.rst
    if engine == "auto":
        engine = "ffmethod" if rst.is_classical else "crapo"
    if engine == "ffmethod":
        return ffmethod.tutte_via_ffmethod(ideal, primes=primes)
    comp_roots = ideal.complement_roots()
    vectors = [r.simple_coords for r in comp_roots]
    cfg = crapo.VectorConfig(vectors, dim=rst.rank)
    if engine == "crapo":
        if max_subsets is not None:
            return crapo.tutte_crapo(cfg, max_subsets=max_subsets)
        return crapo.tutte_crapo(cfg)
    if engine == "oracle":
        if max_subsets is not None:
            # the guard counts subsets, i.e. 2^elements
            return crapo.tutte_corank_nullity(
                cfg, max_elements=max(0, int(max_subsets).bit_length() - 1)
            )
        return crapo.tutte_corank_nullity(cfg)
    raise ConstraintError(f"unknown engine {engine!r}")


def coboundary_of_ideal(ideal, engine="auto"):
    """Coboundary polynomial of an ideal arrangement.

    Classical types use the finite-field pipeline directly; otherwise the
    Tutte polynomial is computed first and converted through
    chi-bar(q, t) = (t-1)^rank T(q/(t-1) + 1, t), carried out exactly by
    reversing the coboundary-to-Tutte substitution.
    """
    rst = ideal.rst
    if engine == "auto" and rst.is_classical:
        return ffmethod.coboundary_polynomial(ideal)
    tutte = tutte_of_ideal(ideal, engine=engine)
    return tutte_to_coboundary(tutte, arrangement_of(ideal).rank())


def tutte_to_coboundary(tutte, rank):
    """Inverse transform: chi-bar(q, t) from T(x, y) with the given rank."""
    from .exactpoly import BivariatePolynomial

    # chi-bar(q,t) = (t-1)^r T(q/(t-1)+1, t): expand T termwise with exact
    # division at the end.  Work in the ring Z[q, t] by clearing (t-1) powers:
    # (t-1)^r x^a y^b -> (q + (t-1))^a t^b (t-1)^(r-a);  a <= r always.
    out = BivariatePolynomial.zero(("q", "t"))
    tm1 = BivariatePolynomial({(0, 1): 1, (0, 0): -1}, ("q", "t"))
    qplus = BivariatePolynomial({(1, 0): 1, (0, 1): 1, (0, 0): -1}, ("q", "t"))
    for (a, b), c in tutte.coeffs.items():
        if a > rank:
            raise ConstraintError("x-degree exceeds rank")
        term = (qplus ** a) * (tm1 ** (rank - a)) * BivariatePolynomial({(0, b): c}, ("q", "t"))
        out = out + term
    return out


def characteristic_polynomial(ideal, engine="auto"):
    tutte = tutte_of_ideal(ideal, engine=engine)
    arr = arrangement_of(ideal)
    return tutte_to_characteristic(tutte, arr.dim, arr.rank())


def region_count(tutte, n, rank):
    """Number of chambers: (-1)^n chi(-1), always strictly positive."""
    chi = tutte_to_characteristic(tutte, n, rank)
    val = (-1) ** n * chi.evaluate(-1)
    if val <= 0:
        raise InconsistencyError(f"nonpositive region count {val}")
    return val


@dataclass
class FactorizationReport:
    """Outcome of checking chi(q) = q^(n - rank) * prod (q - m_i)."""

    ok: bool
    exponents: tuple
    characteristic: object
    leftover: object = None
    detail: str = ""

    def to_json_dict(self):
        return {
            "ok": self.ok,
            "exponents": list(self.exponents),
            "characteristic": self.characteristic.to_text("q"),
            "detail": self.detail,
        }


def check_exponent_factorization(ideal, engine="auto"):
    """Whether the characteristic polynomial splits over the ideal exponents.

    Failure is reported, not raised: the factorization is a theorem only for
    the families where the ideal arrangements are free with ideal exponents.
    """
    exps = ideal_exponents(ideal)
    chi = characteristic_polynomial(ideal, engine=engine)
    arr = arrangement_of(ideal)
    n, rank = arr.dim, arr.rank()
    work = chi
    # strip q^(n - rank)
    for _ in range(n - rank):
        quot, rem = work.divide_linear(0)
        if rem != 0:
            return FactorizationReport(
                False, exps.exponents, chi, work, "q^(n-rank) does not divide chi"
            )
        work = quot
    for m in exps.exponents:
        quot, rem = work.divide_linear(m)
        if rem != 0:
            return FactorizationReport(
                False, exps.exponents, chi, work, f"(q - {m}) does not divide the cofactor"
            )
        work = quot
    if work != 1:
        return FactorizationReport(
            False, exps.exponents, chi, work, f"cofactor {work} left over"
        )
    return FactorizationReport(True, exps.exponents, chi, None, "split")
