"""Structural analysis of A-polynomials.

Covers the abelian (L-1) factor, recognition of products of cyclotomic
polynomials, the degree-zero decomposition into (L-1) times distinct
cyclotomics, unit evaluations at M = +1/-1 against the +/- L^a (L-1)^b
(L+1)^c form, monicity at the units, the M-degree verdict, and the
inversion-symmetry palindrome check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Optional

from . import newton
from .poly import BivarPoly, UnivarPoly

__all__ = [
    "cyclotomic",
    "euler_phi",
    "cyclotomic_candidates",
    "CyclotomicProfile",
    "NotCyclotomic",
    "is_product_of_cyclotomics",
    "Violation",
    "mdeg_trivial_decomposition",
    "UnitEvaluationForm",
    "UnitEvalFailure",
    "check_unit_evaluation",
    "check_monic_at_units",
    "PASS",
    "FAIL",
    "UNKNOT_OK",
    "theorem1_verdict",
    "symmetry_check",
    "AnalysisReport",
    "analyze",
]

_L_MINUS_1 = BivarPoly({(0, 1): 1, (0, 0): -1})

_cyclotomic_cache = {1: UnivarPoly([-1, 1])}


def cyclotomic(d: int) -> UnivarPoly:
    """The d-th cyclotomic polynomial, by exact division of x^d - 1."""
    if d < 1:
        raise ValueError("cyclotomic order must be positive")
    if d in _cyclotomic_cache:
        return _cyclotomic_cache[d]
    f = UnivarPoly([-1] + [0] * (d - 1) + [1])  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            q = f.try_divide(cyclotomic(e))
            assert q is not None
            f = q
    _cyclotomic_cache[d] = f
    return f


_phi_cache = {}


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("totient of nonpositive integer")
    if n in _phi_cache:
        return _phi_cache[n]
    result, m = n, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    _phi_cache[n] = result
    return result


def cyclotomic_candidates(degree: int):
    """All orders d with euler_phi(d) <= degree, ascending.

    phi(d) >= sqrt(d/2), so d <= 2*degree^2 + 1 bounds the search.
    """
    if degree < 1:
        return []
    bound = 2 * degree * degree + 1
    return [d for d in range(1, bound + 1) if euler_phi(d) <= degree]


@dataclass(frozen=True)
class CyclotomicProfile:
    """Orders and multiplicities of recognized cyclotomic factors."""

    factors: tuple  # ((order, multiplicity), ...) with orders ascending
    sign: int = 1

    @property
    def product_d(self) -> int:
        return prod(d for d, _ in self.factors) if self.factors else 1

    def reconstruct(self) -> UnivarPoly:
        f = UnivarPoly([self.sign])
        for d, m in self.factors:
            f = f * cyclotomic(d) ** m
        return f

    def as_dict(self):
        return {
            "factors": [{"order": d, "multiplicity": m} for d, m in self.factors],
            "product_d": self.product_d,
            "sign": self.sign,
        }


@dataclass(frozen=True)
class NotCyclotomic:
    """Recognition failure; residual is the undivided part."""

    residual: UnivarPoly


def _strip_cyclotomic_factors(f: UnivarPoly, orders=None):
    """Divide out all cyclotomic factors of f.

    Returns (list of (order, multiplicity), residual). ``orders`` defaults
    to every d with phi(d) <= deg f. Cheap value filters at x=2 and x=3
    skip candidates that cannot divide.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    g = f.primitive()
    if g.degree() == 0:
        return [], f
    if orders is None:
        orders = cyclotomic_candidates(g.degree())
    factors = []
    v2, v3 = g(2), g(3)
    for d in orders:
        if euler_phi(d) > g.degree():
            continue
        cd = cyclotomic(d)
        c2, c3 = cd(2), cd(3)
        mult = 0
        while (v2 % c2 == 0) and (v3 % c3 == 0):
            q = g.try_divide(cd)
            if q is None:
                break
            g = q
            mult += 1
            v2, v3 = g(2), g(3)
            if g.degree() == 0:
                break
        if mult:
            factors.append((d, mult))
        if g.degree() == 0:
            break
    # residual scaled so that prod(cyclotomics) * residual == f exactly
    p = UnivarPoly([1])
    for d, m in factors:
        p = p * cyclotomic(d) ** m
    residual = f.try_divide(p)
    assert residual is not None
    return factors, residual


def is_product_of_cyclotomics(f: UnivarPoly):
    """Recognize f as +/- a product of cyclotomic polynomials.

    Greedy trial division by Phi_d over all d with phi(d) <= deg f; success
    iff the final quotient is +/-1. Returns a CyclotomicProfile or
    NotCyclotomic(residual).
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    if abs(f.leading_coefficient()) != 1:
        return NotCyclotomic(f)
    if f.degree() == 0:
        return CyclotomicProfile((), sign=f.leading_coefficient())
    factors, residual = _strip_cyclotomic_factors(f)
    if residual.is_zero or residual.degree() != 0 or abs(residual.coeffs[0]) != 1:
        return NotCyclotomic(residual)
    return CyclotomicProfile(tuple(factors), sign=residual.coeffs[0])


@dataclass(frozen=True)
class Violation:
    """Failure of the (L-1) * distinct-cyclotomics structure."""

    reason: str
    residual: Optional[UnivarPoly] = None


def mdeg_trivial_decomposition(a: BivarPoly):
    """Decompose an M-degree-zero polynomial as +/-(L-1) * distinct Phi_d.

    Returns (abelian multiplicity, CyclotomicProfile of the nonunit orders)
    on success, else a Violation. The profile's product_d is the surgery
    step d used by the proof replay (1 when there are no nonunit factors).
    """
    if a.is_zero:
        raise ValueError("zero polynomial")
    if a.deg_m() != 0:
        raise ValueError("decomposition applies only to M-degree-zero polynomials")
    f = a.eval_m(1)  # faithful: no M dependence
    prof = is_product_of_cyclotomics(f)
    if isinstance(prof, NotCyclotomic):
        return Violation("not a product of cyclotomic polynomials", prof.residual)
    mults = dict(prof.factors)
    if mults.get(1, 0) != 1:
        if 1 not in mults:
            return Violation("missing abelian factor (L-1)")
        return Violation("repeated abelian factor (L-1)")
    for d, m in prof.factors:
        if d != 1 and m != 1:
            return Violation(f"repeated cyclotomic factor of order {d}")
    nonunit = tuple((d, m) for d, m in prof.factors if d != 1)
    return 1, CyclotomicProfile(nonunit, sign=prof.sign)


@dataclass(frozen=True)
class UnitEvaluationForm:
    """Exponents of +/- L^a (L-1)^b (L+1)^c."""

    sign: int
    a: int
    b: int
    c: int

    def reconstruct(self) -> UnivarPoly:
        f = UnivarPoly([self.sign]).shift(self.a)
        f = f * UnivarPoly([-1, 1]) ** self.b
        f = f * UnivarPoly([1, 1]) ** self.c
        return f

    def as_dict(self):
        return {"sign": self.sign, "a": self.a, "b": self.b, "c": self.c}


@dataclass(frozen=True)
class UnitEvalFailure:
    residual: UnivarPoly

    def as_dict(self):
        return {"failure": True, "residual": str(self.residual)}


def check_unit_evaluation(a: BivarPoly, m: int):
    """Check eval at M = m in {+1,-1} against the unit-evaluation form.

    Divides by L, then (L-1), then (L+1) (order fixed for determinism;
    the factors are coprime so it does not matter), and succeeds iff the
    final quotient is +/-1.
    """
    if a.is_zero:
        raise ValueError("zero polynomial")
    if m not in (1, -1):
        raise ValueError("unit evaluation is defined at M = +1 or -1 only")
    f = a.eval_m(m)
    if f.is_zero:
        return UnitEvalFailure(f)
    av = 0
    while f[0] == 0:
        f = UnivarPoly(f.coeffs[1:])
        av += 1
    b = 0
    while True:
        q = f.try_divide(UnivarPoly([-1, 1]))
        if q is None:
            break
        f, b = q, b + 1
    c = 0
    while True:
        q = f.try_divide(UnivarPoly([1, 1]))
        if q is None:
            break
        f, c = q, c + 1
    if f.is_zero or f.degree() != 0 or abs(f.coeffs[0]) != 1:
        return UnitEvalFailure(f)
    return UnitEvaluationForm(sign=f.coeffs[0], a=av, b=b, c=c)


def check_monic_at_units(a: BivarPoly):
    """Monicity of eval at M = +1 and M = -1.

    Returns a pair of True/False/None; None marks a vanishing evaluation
    (a distinguished outcome, not an error).
    """
    if a.is_zero:
        raise ValueError("zero polynomial")
    out = []
    for m in (1, -1):
        f = a.eval_m(m)
        out.append(None if f.is_zero else abs(f.leading_coefficient()) == 1)
    return tuple(out)


PASS = "PASS"
FAIL = "FAIL"
UNKNOT_OK = "UNKNOT_OK"


def theorem1_verdict(a: BivarPoly, claims_nontrivial_knot: bool) -> str:
    """Nontrivial-M-degree verdict on an A-normal-form polynomial.

    PASS when deg_M != 0; UNKNOT_OK for L-1 when the input is not claimed
    to come from a nontrivial knot; FAIL otherwise (for real knot data a
    FAIL would contradict the nontriviality theorem).
    """
    if a.is_zero:
        raise ValueError("zero polynomial")
    nf, _ = a.normalize()
    if nf != a:
        raise ValueError("verdict requires A-normal form input")
    if a.deg_m() != 0:
        return PASS
    if a == _L_MINUS_1 and not claims_nontrivial_knot:
        return UNKNOT_OK
    return FAIL


def symmetry_check(a: BivarPoly):
    """Palindrome test for A(M,L) = sign * M^alpha L^beta A(1/M, 1/L).

    alpha and beta are forced to deg_M and deg_L; returns
    (holds, (alpha, beta, sign) or None).
    """
    if a.is_zero:
        raise ValueError("zero polynomial")
    alpha, beta = a.deg_m(), a.deg_l()
    for sign in (1, -1):
        if all(a.terms.get((alpha - i, beta - j)) == sign * c for (i, j), c in a.terms.items()):
            return True, (alpha, beta, sign)
    return False, None


def abelian_multiplicity(a: BivarPoly) -> int:
    """Multiplicity of the (L-1) factor, by exact trial division."""
    if a.is_zero:
        raise ValueError("zero polynomial")
    mult = 0
    cur = a
    while True:
        q = cur.try_divide(_L_MINUS_1)
        if q is None:
            return mult
        cur, mult = q, mult + 1


@dataclass
class AnalysisReport:
    """All structural checks on one polynomial, JSON-serializable."""

    name: str
    deg_m: int
    deg_l: int
    abelian_multiplicity: int
    unit_eval_plus: object
    unit_eval_minus: object
    monic_plus: Optional[bool]
    monic_minus: Optional[bool]
    vertical_edge: Optional[bool]
    cyclotomic: object  # CyclotomicProfile, Violation, or None
    verdict: str

    def as_dict(self):
        def unit(u):
            return u.as_dict() if u is not None else None

        if isinstance(self.cyclotomic, CyclotomicProfile):
            cyc = self.cyclotomic.as_dict()
        elif isinstance(self.cyclotomic, Violation):
            cyc = {"violation": self.cyclotomic.reason}
        else:
            cyc = None
        return {
            "name": self.name,
            "deg_M": self.deg_m,
            "deg_L": self.deg_l,
            "abelian_multiplicity": self.abelian_multiplicity,
            "unit_eval_plus": unit(self.unit_eval_plus),
            "unit_eval_minus": unit(self.unit_eval_minus),
            "monic_plus": self.monic_plus,
            "monic_minus": self.monic_minus,
            "vertical_edge": self.vertical_edge,
            "cyclotomic": cyc,
            "verdict": self.verdict,
        }


def analyze(a: BivarPoly, name: str = "", claims_nontrivial_knot: bool = False) -> AnalysisReport:
    """Run the full battery of structural checks on one polynomial."""
    if a.is_zero:
        raise ValueError("cannot analyze the zero polynomial")
    nf, _ = a.normalize()
    poly = newton.newton_polygon(nf)
    if len(poly.vertices) < 2:
        vertical = None
    else:
        vertical = newton.has_vertical_edge(poly)
    if nf.deg_m() == 0:
        dec = mdeg_trivial_decomposition(nf)
        cyc = dec if isinstance(dec, Violation) else dec[1]
    else:
        cyc = None
    monic_plus, monic_minus = check_monic_at_units(nf)
    return AnalysisReport(
        name=name,
        deg_m=nf.deg_m(),
        deg_l=nf.deg_l(),
        abelian_multiplicity=abelian_multiplicity(nf),
        unit_eval_plus=check_unit_evaluation(nf, 1),
        unit_eval_minus=check_unit_evaluation(nf, -1),
        monic_plus=monic_plus,
        monic_minus=monic_minus,
        vertical_edge=vertical,
        cyclotomic=cyc,
        verdict=theorem1_verdict(nf, claims_nontrivial_knot),
    )
