"""A-polynomial generators: unknot, torus knots, two-bridge elimination.

Two-bridge A-polynomials are computed from the standard 2-generator
presentation: the meridian generators are sent to the one-parameter normal
form

    a -> [[M, 1], [0, 1/M]],   b -> [[M, 0], [t, 1/M]],

the relator gives a single polynomial condition on (M, t), the preferred
longitude evaluates to an eigenvalue relation in (M, t, L), and t is
eliminated by a resultant. The longitude word convention (including the
meridian framing correction) is pinned here and validated by the oracle
tests; see the presentation docstring.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .poly import BivarPoly, TriPolyInT, bivar_from_sympy, resultant_t

__all__ = [
    "Unknot",
    "TorusKnot",
    "TwoBridgeKnot",
    "NamedKnot",
    "GroupPresentation",
    "unknot_a",
    "torus_a",
    "two_bridge_presentation",
    "sl2_word_eval",
    "eliminate_two_bridge",
    "EliminationDegeneracyError",
]

_L_MINUS_1 = BivarPoly({(0, 1): 1, (0, 0): -1})


@dataclass(frozen=True)
class Unknot:
    pass


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        if abs(self.p) < 2 or abs(self.q) < 2:
            raise ValueError("torus knot parameters need |p| >= 2 and |q| >= 2")
        if gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")


@dataclass(frozen=True)
class TwoBridgeKnot:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise ValueError("two-bridge p must be odd and >= 3")
        if not (0 < self.q < self.p):
            raise ValueError("two-bridge q must satisfy 0 < q < p")
        if gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")


@dataclass(frozen=True)
class NamedKnot:
    label: str
    a_poly: BivarPoly


@dataclass(frozen=True)
class GroupPresentation:
    """Two-generator presentation <a, b | a w = w b> with longitude word.

    Words are tuples of (generator, exponent) letters. The longitude is
    w * wbar * a^(-2e) where wbar swaps the generators of w and e is the
    total exponent sum of w, so the longitude has exponent sum zero in the
    abelianization.
    """

    generators: tuple
    w: tuple
    relator: tuple
    longitude: tuple
    sign_sequence: tuple


def unknot_a() -> BivarPoly:
    """The unknot's A-polynomial, L - 1."""
    return _L_MINUS_1


def _word_inverse(word):
    return tuple((g, -e) for g, e in reversed(word))


def two_bridge_presentation(p: int, q: int) -> GroupPresentation:
    """Standard presentation of the two-bridge knot group for p/q.

    Sign sequence eps_i = (-1)^floor(i*qtilde/p) for i = 1..p-1, where
    qtilde is the odd representative of q modulo 2p in (-p, p); w
    alternates b, a, ... with those exponents. The relator is a w = w b.
    """
    TwoBridgeKnot(p, q)  # validate
    qt = q if q % 2 == 1 else q - p
    eps = tuple((-1) ** ((i * qt) // p) for i in range(1, p))
    w = tuple(("b" if i % 2 == 0 else "a", e) for i, e in enumerate(eps))
    relator = (("a", 1),) + w + (("b", -1),) + _word_inverse(w)
    wbar = tuple(("a" if g == "b" else "b", e) for g, e in w)
    e_sum = sum(eps)
    longitude = w + wbar + ((("a", -2 * e_sum),) if e_sum else ())
    return GroupPresentation(
        generators=("a", "b"),
        w=w,
        relator=relator,
        longitude=longitude,
        sign_sequence=eps,
    )


def sl2_word_eval(word, assignments):
    """Evaluate a word in 2x2 matrices over a ring (sympy entries).

    Inverses use the determinant-1 adjugate rule, so every assignment must
    have determinant 1.
    """
    import sympy as sp

    result = sp.eye(2)
    for g, e in word:
        if g not in assignments:
            raise KeyError(f"no matrix assigned to generator {g!r}")
        x = assignments[g]
        if e < 0:
            x = sp.Matrix([[x[1, 1], -x[0, 1]], [-x[1, 0], x[0, 0]]])
        for _ in range(abs(e)):
            result = result * x
    return result


def _tripoly_from_expr(expr, tsym, msym, lsym) -> TriPolyInT:
    """Collect a Laurent-in-M expression into t-coefficients over Z[M, L].

    The denominator must be a pure monomial in M (it is, for words in the
    normal-form matrices); its exponent is recorded on the carrier.
    """
    import sympy as sp

    num, den = sp.fraction(sp.together(sp.expand(expr)))
    den = sp.expand(den)
    dpoly = sp.Poly(den, msym)
    if len(dpoly.terms()) != 1:
        raise ValueError(f"denominator is not a pure monomial in M: {den}")
    (dm,), _dc = dpoly.terms()[0]
    # the denominator's constant factor and sign never vanish, so only the
    # monomial exponent matters for the zero set
    poly = sp.Poly(sp.expand(num), tsym, msym, lsym)
    coeffs = {}
    for (k, i, j), c in poly.terms():
        coeffs.setdefault(int(k), {})[(int(i), int(j))] = int(c)
    if not coeffs:
        return TriPolyInT([], denom=(int(dm), 0))
    top = max(coeffs)
    return TriPolyInT(
        [BivarPoly(coeffs.get(k, {})) for k in range(top + 1)],
        denom=(int(dm), 0),
    )


class EliminationDegeneracyError(RuntimeError):
    """The resultant vanished identically; the elimination is degenerate."""


def _squarefree_bivar(p: BivarPoly) -> BivarPoly:
    """Product of the distinct irreducible factors, via exact square-free
    decomposition over Z[M, L] (sympy)."""
    import sympy as sp

    from .poly import bivar_to_sympy

    M, L = sp.symbols("M L")
    _, factors = sp.Poly(bivar_to_sympy(p), M, L).sqf_list()
    out = BivarPoly.const(1)
    for f, _mult in factors:
        out = out * bivar_from_sympy(f.as_expr())
    return out


def riley_polynomial(p: int, q: int):
    """The representation condition phi(M, t) = 0 as a TriPolyInT.

    Evaluates a w - w b on the normal-form matrices; the diagonal entries
    vanish identically and the off-diagonal entries agree up to a factor
    of -t, so the (1,2) entry is the single independent condition.
    """
    import sympy as sp

    M, t = sp.symbols("M t")
    L = sp.Symbol("L")
    pres = two_bridge_presentation(p, q)
    A = sp.Matrix([[M, 1], [0, 1 / M]])
    B = sp.Matrix([[M, 0], [t, 1 / M]])
    W = sl2_word_eval(pres.w, {"a": A, "b": B})
    E = A * W - W * B
    return _tripoly_from_expr(E[0, 1], t, M, L), pres


def eliminate_two_bridge(p: int, q: int) -> BivarPoly:
    """A-polynomial of the two-bridge knot p/q by resultant elimination.

    Eliminates the representation parameter t from the relator condition
    and the longitude eigenvalue relation, takes the square-free part,
    guarantees one abelian (L-1) factor, and returns A-normal form.
    """
    import sympy as sp

    M, t, L = sp.symbols("M t L")
    phi, pres = riley_polynomial(p, q)
    A = sp.Matrix([[M, 1], [0, 1 / M]])
    B = sp.Matrix([[M, 0], [t, 1 / M]])
    lam = sl2_word_eval(pres.longitude, {"a": A, "b": B})
    psi = _tripoly_from_expr(lam[0, 0] - L, t, M, L)
    res = resultant_t(phi, psi)
    if res.is_zero:
        raise EliminationDegeneracyError(
            f"resultant for two-bridge ({p},{q}) vanished identically"
        )
    nf, _ = _squarefree_bivar(res).normalize()
    if nf.try_divide(_L_MINUS_1) is None:
        nf, _ = (nf * _L_MINUS_1).normalize()
    return nf


def torus_a(p: int, q: int) -> BivarPoly:
    """Closed-form torus knot A-polynomial.

    Irreducible representations send the central fiber to +/-I and satisfy
    v = +/- u^(-pq) on the boundary; the minus sign always occurs, the plus
    sign only when both parameters exceed 2. Negative parameters (mirror
    images) invert the longitude eigenvalue.
    """
    TorusKnot(p, q)  # validate
    mirror = (p * q) < 0
    a, b = abs(p), abs(q)
    pq = a * b
    minus = BivarPoly({(pq, 1): 1, (0, 0): 1})  # L*M^pq + 1
    if a == 2 or b == 2:
        out = _L_MINUS_1 * minus
    else:
        plus = BivarPoly({(pq, 1): 1, (0, 0): -1})  # L*M^pq - 1
        out = _L_MINUS_1 * minus * plus
    if mirror:
        out = out.invert_l()
    return out.normal_form()
