"""Exact sparse polynomial arithmetic over the integers.

Three carriers:

* ``UnivarPoly`` -- dense integer polynomial in one variable (called L or v
  depending on context).
* ``BivarPoly`` -- sparse integer polynomial in M and L, keyed by exponent
  pairs (i, j) = (M-exponent, L-exponent).
* ``TriPolyInT`` -- polynomial in an elimination variable t whose
  coefficients are BivarPoly values, with an optional recorded pure-monomial
  denominator (Laurent shifts in M picked up mid-elimination).

All values are immutable after construction and every operation is a pure
function, so instances can be shared freely across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "UnivarPoly",
    "BivarPoly",
    "TriPolyInT",
    "Stripped",
    "PolyParseError",
    "parse_poly",
    "format_poly",
    "gcd_univar",
    "squarefree_univar",
    "resultant_t",
]


def _grlex_key(ij):
    # graded-lexicographic with L > M: total degree first, then L-exponent
    i, j = ij
    return (i + j, j)


class UnivarPoly:
    """Integer polynomial in one variable, dense coefficient tuple.

    ``coeffs[k]`` is the coefficient of x^k; trailing zeros are trimmed, the
    zero polynomial has an empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    def __setattr__(self, name, value):
        raise AttributeError("UnivarPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def monomial(cls, c, k):
        return cls([0] * k + [c])

    # -- basics -------------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    def degree(self):
        if self.is_zero:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def leading_coefficient(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other):
        return isinstance(other, UnivarPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UnivarPoly", self.coeffs))

    def __repr__(self):
        return f"UnivarPoly({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "L" if k == 1 else f"L^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UnivarPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivarPoly([self[k] + other[k] for k in range(n)])

    def __neg__(self):
        return UnivarPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UnivarPoly([c * other for c in self.coeffs])
        if not isinstance(other, UnivarPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UnivarPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if ca == 0:
                continue
            for b, cb in enumerate(other.coeffs):
                out[a + b] += ca * cb
        return UnivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = UnivarPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        # Horner, highest term first
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k):
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return UnivarPoly((0,) * k + self.coeffs)

    def derivative(self):
        return UnivarPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    # -- content and division -----------------------------------------

    def content(self):
        if self.is_zero:
            return 0
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading_coefficient() < 0:
            g = -g
        return UnivarPoly([c // g for c in self.coeffs])

    def try_divide(self, d):
        """Exact quotient self / d over the integers, or None."""
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return UnivarPoly()
        rem = list(self.coeffs)
        dd = d.degree()
        dl = d.leading_coefficient()
        if len(rem) - 1 < dd:
            return None
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, dl)
            if r:
                return None
            quot[k - dd] = q
            for e, dc in enumerate(d.coeffs):
                rem[k - dd + e] -= q * dc
        if any(rem[:dd]):
            return None
        return UnivarPoly(quot)


def _pseudo_rem(a: UnivarPoly, b: UnivarPoly) -> UnivarPoly:
    """Pseudo-remainder of a by b (b nonzero)."""
    da, db = a.degree() if not a.is_zero else -1, b.degree()
    if da < db:
        return a
    lc = b.leading_coefficient()
    rem = a
    while not rem.is_zero and rem.degree() >= db:
        k = rem.degree() - db
        rem = rem * lc - b.shift(k) * rem.leading_coefficient()
    return rem


def gcd_univar(f: UnivarPoly, g: UnivarPoly) -> UnivarPoly:
    """Primitive gcd over the integers, positive leading coefficient."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero:
        return g.primitive()
    if g.is_zero:
        return f.primitive()
    cont = gcd(f.content(), g.content())
    a, b = f.primitive(), g.primitive()
    if a.degree() < b.degree():
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive()
    # a is primitive with positive leading coefficient; restore the content gcd
    return UnivarPoly([c * cont for c in a.coeffs])


def squarefree_univar(f: UnivarPoly) -> UnivarPoly:
    """Square-free part of f, primitive with positive leading coefficient."""
    if f.is_zero:
        raise ValueError("square-free part of zero is undefined")
    fp = f.primitive()
    if fp.degree() == 0:
        return UnivarPoly([1])
    g = gcd_univar(fp, fp.derivative())
    q = fp.try_divide(g)
    assert q is not None, "gcd must divide its argument exactly"
    return q.primitive()


@dataclass(frozen=True)
class Stripped:
    """Unit, monomial, and content data removed by normalization.

    The original polynomial equals sign * content * M^i0 * L^j0 * normalized.
    """

    sign: int
    i0: int
    j0: int
    content: int


class BivarPoly:
    """Sparse integer polynomial in M and L.

    ``terms`` maps (i, j) exponent pairs to nonzero integer coefficients;
    the zero polynomial is the empty map.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (i, j), c in dict(terms).items():
                c = int(c)
                if c == 0:
                    continue
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in term ({i},{j})")
                t[(int(i), int(j))] = c
        object.__setattr__(self, "terms", t)

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def term(cls, c, i, j):
        return cls({(i, j): c})

    @classmethod
    def var_m(cls):
        return cls({(1, 0): 1})

    @classmethod
    def var_l(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_univar_l(cls, u: UnivarPoly):
        return cls({(0, j): c for j, c in enumerate(u.coeffs)})

    @classmethod
    def from_univar_m(cls, u: UnivarPoly):
        return cls({(i, 0): c for i, c in enumerate(u.coeffs)})

    # -- basics -------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(("BivarPoly", frozenset(self.terms.items())))

    def __repr__(self):
        return f"BivarPoly({self.terms!r})"

    def __str__(self):
        return format_poly(self)

    def deg_m(self):
        if self.is_zero:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(i for i, _ in self.terms)

    def deg_l(self):
        if self.is_zero:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(j for _, j in self.terms)

    def min_m(self):
        if self.is_zero:
            raise ValueError("zero polynomial")
        return min(i for i, _ in self.terms)

    def min_l(self):
        if self.is_zero:
            raise ValueError("zero polynomial")
        return min(j for _, j in self.terms)

    def leading_term(self):
        """(exponent pair, coefficient) of the graded-lex leading term."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        ij = max(self.terms, key=_grlex_key)
        return ij, self.terms[ij]

    def support(self):
        return frozenset(self.terms)

    def content(self):
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        t = dict(self.terms)
        for ij, c in other.terms.items():
            s = t.get(ij, 0) + c
            if s:
                t[ij] = s
            else:
                t.pop(ij, None)
        return BivarPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({ij: -c for ij, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, BivarPoly) else -BivarPoly.const(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BivarPoly({ij: c * other for ij, c in self.terms.items()})
        if not isinstance(other, BivarPoly):
            return NotImplemented
        t = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                ij = (i1 + i2, j1 + j2)
                s = t.get(ij, 0) + c1 * c2
                if s:
                    t[ij] = s
                else:
                    t.pop(ij, None)
        return BivarPoly(t)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = BivarPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- normalization ------------------------------------------------

    def normalize(self):
        """A-normal form plus the stripped (sign, i0, j0, content) data.

        A-normal form: coefficient gcd 1, positive sign on the graded-lex
        leading term (L > M), and no M or L monomial factor.
        """
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        i0 = self.min_m()
        j0 = self.min_l()
        cont = self.content()
        shifted = {(i - i0, j - j0): c // cont for (i, j), c in self.terms.items()}
        lead = max(shifted, key=_grlex_key)
        sign = 1 if shifted[lead] > 0 else -1
        if sign < 0:
            shifted = {ij: -c for ij, c in shifted.items()}
        return BivarPoly(shifted), Stripped(sign=sign, i0=i0, j0=j0, content=cont)

    def normal_form(self):
        return self.normalize()[0]

    # -- evaluation and substitution ----------------------------------

    def eval_m(self, m: int) -> UnivarPoly:
        """Substitute an exact integer for M, yielding a polynomial in L."""
        out = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c * m**i
        if not out:
            return UnivarPoly()
        coeffs = [0] * (max(out) + 1)
        for j, c in out.items():
            coeffs[j] = c
        return UnivarPoly(coeffs)

    def eval_l(self, l: int) -> UnivarPoly:
        """Substitute an exact integer for L, yielding a polynomial in M."""
        out = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, 0) + c * l**j
        if not out:
            return UnivarPoly()
        coeffs = [0] * (max(out) + 1)
        for i, c in out.items():
            coeffs[i] = c
        return UnivarPoly(coeffs)

    def eval_complex(self, u, v) -> complex:
        """Floating evaluation at (M, L) = (u, v).

        Terms are summed in descending graded-lex order so the result is
        reproducible across runs.
        """
        acc = 0j
        for ij in sorted(self.terms, key=_grlex_key, reverse=True):
            i, j = ij
            acc += self.terms[ij] * (u**i) * (v**j)
        return acc

    def substitute_surgery(self, n: int) -> UnivarPoly:
        """Restriction to the 1/n surgery line u = v^(-n), denominators cleared.

        Returns v^(n*deg_m) * p(v^(-n), v) as an exact polynomial in v.
        """
        if self.is_zero:
            raise ValueError("surgery substitution of the zero polynomial")
        if n < 1:
            raise ValueError("surgery denominator n must be >= 1")
        d = self.deg_m()
        out = {}
        for (i, j), c in self.terms.items():
            e = n * (d - i) + j
            out[e] = out.get(e, 0) + c
        coeffs = [0] * (max(out) + 1)
        for e, c in out.items():
            coeffs[e] = c
        return UnivarPoly(coeffs)

    def swap_vars(self):
        """Exchange the roles of M and L."""
        return BivarPoly({(j, i): c for (i, j), c in self.terms.items()})

    def invert_l(self):
        """Substitute L -> 1/L and clear the denominator by L^deg_l."""
        if self.is_zero:
            return self
        d = self.deg_l()
        return BivarPoly({(i, d - j): c for (i, j), c in self.terms.items()})

    # -- division -----------------------------------------------------

    def _l_coeffs(self):
        """Coefficients as polynomials in M, indexed by L-exponent."""
        out = {}
        for (i, j), c in self.terms.items():
            out.setdefault(j, {})[i] = c
        res = {}
        for j, d in out.items():
            coeffs = [0] * (max(d) + 1)
            for i, c in d.items():
                coeffs[i] = c
            res[j] = UnivarPoly(coeffs)
        return res

    def try_divide(self, d: "BivarPoly"):
        """Exact quotient self / d, or None when d does not divide exactly.

        Division is performed in L with exact coefficient division in Z[M];
        sufficient for the candidate factors used by the analysis modules.
        """
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return BivarPoly()
        rem = self._l_coeffs()
        dl = d.deg_l()
        dcoeffs = d._l_coeffs()
        dlead = dcoeffs[dl]
        quot = {}
        while rem:
            rl = max(rem)
            if rl < dl:
                return None
            q = rem[rl].try_divide(dlead)
            if q is None:
                return None
            quot[rl - dl] = q
            for j, dc in dcoeffs.items():
                tgt = rl - dl + j
                cur = rem.get(tgt, UnivarPoly())
                new = cur - q * dc
                if new.is_zero:
                    rem.pop(tgt, None)
                else:
                    rem[tgt] = new
        out = {}
        for j, u in quot.items():
            for i, c in enumerate(u.coeffs):
                if c:
                    out[(i, j)] = c
        return BivarPoly(out)


class TriPolyInT:
    """Polynomial in an elimination variable t over BivarPoly coefficients.

    ``denom`` records a pure monomial (M^dm * L^dl) global denominator picked
    up from Laurent shifts during elimination; it is cleared before any
    resultant is taken (it only contributes a monomial factor, which the
    caller's normalization removes).
    """

    __slots__ = ("coeffs", "denom")

    def __init__(self, coeffs, denom=(0, 0)):
        cs = [c if isinstance(c, BivarPoly) else BivarPoly.const(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        dm, dl = denom
        if dm < 0 or dl < 0:
            raise ValueError("denominator exponents must be nonnegative")
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "denom", (int(dm), int(dl)))

    def __setattr__(self, name, value):
        raise AttributeError("TriPolyInT is immutable")

    @property
    def is_zero(self):
        return not self.coeffs

    def degree_t(self):
        if self.is_zero:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return BivarPoly()

    def __eq__(self, other):
        return (
            isinstance(other, TriPolyInT)
            and self.coeffs == other.coeffs
            and self.denom == other.denom
        )

    def __repr__(self):
        return f"TriPolyInT({list(self.coeffs)!r}, denom={self.denom})"


def resultant_t(p: TriPolyInT, q: TriPolyInT) -> BivarPoly:
    """Resultant of p and q with respect to t, exact over Z[M, L].

    Recorded monomial denominators are cleared first (they only scale the
    resultant by a monomial). The sign convention is the Sylvester
    determinant with deg(p) rows of q's coefficients on top, so that
    Res_t(t - f, t - g) = g - f. Backed by sympy's fraction-free
    resultant, whose sign is then pinned to that determinant by an
    integer-point evaluation; the test suite checks the whole thing
    against a cofactor-expansion Sylvester determinant built on
    BivarPoly arithmetic alone.
    """
    import sympy as sp

    if p.is_zero or q.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    if p.degree_t() == 0 and q.degree_t() == 0:
        raise ValueError("both inputs have t-degree 0; nothing to eliminate")
    M, L, T = sp.symbols("M L t")

    def to_expr(tri):
        e = sp.Integer(0)
        for k, c in enumerate(tri.coeffs):
            for (i, j), cc in c.terms.items():
                e += cc * M**i * L**j * T**k
        return e

    res = bivar_from_sympy(
        sp.resultant(sp.expand(to_expr(p)), sp.expand(to_expr(q)), T)
    )
    if res.is_zero:
        return res
    return _match_sylvester_sign(p.coeffs, q.coeffs, res)


def _match_sylvester_sign(pc, qc, res: BivarPoly) -> BivarPoly:
    """Flip res if needed so it equals the Sylvester determinant with q's
    coefficient rows on top (deg(p) of them) and p's rows below.

    sympy's resultant agrees with that determinant only up to sign, with
    the sign depending on the degree pair, so we settle it by evaluating
    both at integer points until the value is nonzero. Evaluation
    commutes with the determinant, so a single nonzero sample decides.
    """
    import sympy as sp

    m = len(pc) - 1
    n = len(qc) - 1
    size = m + n
    for m0, l0 in ((2, 3), (3, 2), (5, 7), (2, 11), (7, 5), (11, 13)):
        res_val = sum(c * m0**i * l0**j for (i, j), c in res.terms.items())
        if res_val == 0:
            continue
        pv = [sum(cc * m0**i * l0**j for (i, j), cc in c.terms.items()) for c in pc]
        qv = [sum(cc * m0**i * l0**j for (i, j), cc in c.terms.items()) for c in qc]
        rows = []
        for r in range(m):
            row = [0] * size
            for k, c in enumerate(reversed(qv)):
                row[r + k] = c
            rows.append(row)
        for r in range(n):
            row = [0] * size
            for k, c in enumerate(reversed(pv)):
                row[r + k] = c
            rows.append(row)
        det_val = int(sp.Matrix(rows).det(method="berkowitz"))
        if det_val == res_val:
            return res
        if det_val == -res_val:
            return -res
        raise AssertionError("resultant differs from Sylvester determinant")
    # res vanished at every sample point; fall back to symbolic comparison
    rows = []
    for r in range(m):
        row = [sp.Integer(0)] * size
        for k, c in enumerate(reversed(qc)):
            row[r + k] = bivar_to_sympy(c)
        rows.append(row)
    for r in range(n):
        row = [sp.Integer(0)] * size
        for k, c in enumerate(reversed(pc)):
            row[r + k] = bivar_to_sympy(c)
        rows.append(row)
    det = bivar_from_sympy(sp.expand(sp.Matrix(rows).det(method="berkowitz")))
    if det == res:
        return res
    if det == -res:
        return -res
    raise AssertionError("resultant differs from Sylvester determinant")


def bivar_from_sympy(expr) -> BivarPoly:
    """Convert a sympy polynomial in symbols M, L into a BivarPoly."""
    import sympy as sp

    M, L = sp.symbols("M L")
    expr = sp.expand(expr)
    if expr == 0:
        return BivarPoly()
    poly = sp.Poly(expr, M, L)
    return BivarPoly({(int(i), int(j)): int(c) for (i, j), c in poly.terms()})


def bivar_to_sympy(p: BivarPoly):
    import sympy as sp

    M, L = sp.symbols("M L")
    e = sp.Integer(0)
    for (i, j), c in p.terms.items():
        e += c * M**i * L**j
    return e


# -- text grammar -----------------------------------------------------


class PolyParseError(ValueError):
    """Syntax error in the polynomial text grammar, with 1-based position."""

    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([ML])|(\^)|(\*)|(\+)|(-)|([()])|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    line, col = 1, 1
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        ws = text[pos : m.start(m.lastindex)]
        for ch in ws:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        tok = m.group(m.lastindex)
        if m.lastindex == 8:
            raise PolyParseError(f"unexpected character {tok!r}", line, col)
        kind = ["int", "var", "caret", "star", "plus", "minus", "paren"][m.lastindex - 1]
        if kind == "paren":
            kind = "lparen" if tok == "(" else "rparen"
        tokens.append((kind, tok, line, col))
        col += len(tok)
        pos = m.end()
    tokens.append(("end", "", line, col))
    return tokens


def parse_poly(text: str) -> BivarPoly:
    """Parse the polynomial text grammar into a BivarPoly.

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := factor ('*'? factor)*
    factor     := integer | 'M'['^'n] | 'L'['^'n] | '(' expression ')' ['^'n]

    Whitespace-insensitive; omitted exponents and coefficients mean 1.
    Parenthesized products are accepted on input; canonical printing never
    emits them.
    """
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx]

    def take():
        nonlocal idx
        t = tokens[idx]
        idx += 1
        return t

    def error(msg, tok):
        raise PolyParseError(msg, tok[2], tok[3])

    def parse_exponent():
        if peek()[0] != "caret":
            return 1
        take()
        etok = take()
        if etok[0] != "int":
            error("expected exponent after '^'", etok)
        return int(etok[1])

    def parse_factor():
        kind, val, _, _ = peek()
        if kind == "int":
            take()
            return BivarPoly.const(int(val))
        if kind == "var":
            take()
            e = parse_exponent()
            return BivarPoly.term(1, e if val == "M" else 0, e if val == "L" else 0)
        if kind == "lparen":
            take()
            inner = parse_expression()
            if peek()[0] != "rparen":
                error("expected ')'", peek())
            take()
            return inner ** parse_exponent()
        error("expected a term", peek())

    def parse_term():
        result = parse_factor()
        while True:
            kind = peek()[0]
            if kind == "star":
                take()
                result = result * parse_factor()
            elif kind in ("int", "var", "lparen"):
                result = result * parse_factor()
            else:
                return result

    def parse_expression():
        sign = 1
        if peek()[0] in ("plus", "minus"):
            sign = -1 if take()[0] == "minus" else 1
        result = parse_term() * sign
        while peek()[0] in ("plus", "minus"):
            sign = -1 if take()[0] == "minus" else 1
            result = result + parse_term() * sign
        return result

    result = parse_expression()
    if peek()[0] != "end":
        error("unexpected trailing input", peek())
    return result


def format_poly(p: BivarPoly) -> str:
    """Canonical text form: descending graded-lex terms, explicit '^'."""
    if p.is_zero:
        return "0"
    parts = []
    for ij in sorted(p.terms, key=_grlex_key, reverse=True):
        i, j = ij
        c = p.terms[ij]
        factors = []
        if j:
            factors.append("L" if j == 1 else f"L^{j}")
        if i:
            factors.append("M" if i == 1 else f"M^{i}")
        if not factors or abs(c) != 1:
            factors.insert(0, str(abs(c)))
        parts.append(("-" if c < 0 else "+", "*".join(factors)))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def slope_fraction(di, dj):
    """Lowest-terms slope dj/di, used by the Newton polygon module."""
    return Fraction(dj, di)
