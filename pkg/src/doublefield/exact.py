"""Exact rational and polynomial arithmetic.

Scalars are ``fractions.Fraction``; univariate polynomials are dense
coefficient tuples tagged with their variable, bivariate polynomials are
sparse exponent maps.  Heavy algebra (factorization over Q, resultants,
square-free decomposition) is delegated to sympy behind the interfaces
defined here; everything stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Sequence, Union

import mpmath
import sympy

from .errors import DegreeBound, PrecisionFailure

Rational = Fraction

_SYM = {"x": sympy.Symbol("x"), "y": sympy.Symbol("y")}

DEFAULT_FACTOR_DEGREE_BOUND = 24


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, sympy.Rational):
        return Fraction(int(v.p), int(v.q))
    raise TypeError(f"not an exact rational: {v!r}")


@dataclass(frozen=True)
class UPoly:
    """Dense univariate polynomial over Q in the variable ``var``.

    ``coeffs[i]`` is the coefficient of ``var**i``; the tuple carries no
    trailing zeros, so the zero polynomial has an empty tuple.
    """

    var: str
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def make(var: str, coeffs: Iterable) -> "UPoly":
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return UPoly(var, tuple(cs))

    @staticmethod
    def const(var: str, c) -> "UPoly":
        return UPoly.make(var, [c])

    @staticmethod
    def gen(var: str) -> "UPoly":
        return UPoly.make(var, [0, 1])

    @staticmethod
    def zero(var: str) -> "UPoly":
        return UPoly(var, ())

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __add__(self, other: "UPoly") -> "UPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly.make(
            self.var,
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ],
        )

    def __neg__(self) -> "UPoly":
        return UPoly(self.var, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other: Union["UPoly", int, Fraction]) -> "UPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return UPoly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly.make(self.var, out)

    __rmul__ = __mul__

    def scale(self, c) -> "UPoly":
        c = _frac(c)
        if c == 0:
            return UPoly.zero(self.var)
        return UPoly(self.var, tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative exponent")
        out = UPoly.const(self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        dlc = other.lc()
        d = other.degree()
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / dlc
            q[k] = f
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= f * b
            rem.pop()
        return UPoly.make(self.var, q), UPoly.make(self.var, rem)

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("not an exact division")
        return q

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc())

    def derivative(self) -> "UPoly":
        return UPoly.make(self.var, [i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, v) -> Fraction:
        v = _frac(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, inner: "UPoly") -> "UPoly":
        """Substitute ``inner`` for the variable (result in inner's variable)."""
        acc = UPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + UPoly.const(inner.var, c)
        return acc

    def reversed_coeffs(self) -> "UPoly":
        """x^deg * f(1/x): the reciprocal polynomial."""
        return UPoly.make(self.var, tuple(reversed(self.coeffs)))

    def with_var(self, var: str) -> "UPoly":
        return UPoly(var, self.coeffs)

    def _check(self, other: "UPoly") -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __str__(self) -> str:
        return render_upoly(self)


@dataclass(frozen=True)
class BPoly:
    """Sparse bivariate polynomial over Q in x and y.

    ``terms`` maps nothing to zero: it is a sorted tuple of
    ``((i, j), coeff)`` with ``coeff`` nonzero, where ``i`` is the
    x-exponent and ``j`` the y-exponent.
    """

    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    @staticmethod
    def make(d: dict[tuple[int, int], Fraction]) -> "BPoly":
        items = sorted((k, _frac(v)) for k, v in d.items() if v != 0)
        return BPoly(tuple(items))

    @staticmethod
    def const(c) -> "BPoly":
        return BPoly.make({(0, 0): _frac(c)})

    @staticmethod
    def gen(var: str) -> "BPoly":
        return BPoly.make({(1, 0) if var == "x" else (0, 1): Fraction(1)})

    @staticmethod
    def zero() -> "BPoly":
        return BPoly(())

    @staticmethod
    def from_upoly(p: UPoly) -> "BPoly":
        if p.var == "x":
            return BPoly.make({(i, 0): c for i, c in enumerate(p.coeffs)})
        return BPoly.make({(0, j): c for j, c in enumerate(p.coeffs)})

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def deg_x(self) -> int:
        return max((k[0] for k, _ in self.terms), default=-1)

    def deg_y(self) -> int:
        return max((k[1] for k, _ in self.terms), default=-1)

    def __add__(self, other: "BPoly") -> "BPoly":
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, Fraction(0)) + v
        return BPoly.make(d)

    def __neg__(self) -> "BPoly":
        return BPoly(tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other: "BPoly") -> "BPoly":
        return self + (-other)

    def __mul__(self, other: Union["BPoly", int, Fraction]) -> "BPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        d: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms:
            for (i2, j2), b in other.terms:
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, Fraction(0)) + a * b
        return BPoly.make(d)

    __rmul__ = __mul__

    def scale(self, c) -> "BPoly":
        c = _frac(c)
        if c == 0:
            return BPoly.zero()
        return BPoly(tuple((k, v * c) for k, v in self.terms))

    def __pow__(self, n: int) -> "BPoly":
        if n < 0:
            raise ValueError("negative exponent")
        out = BPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def transpose(self) -> "BPoly":
        """Swap the roles of x and y."""
        return BPoly(tuple(sorted(((j, i), v) for (i, j), v in self.terms)))

    def coeff_of_x(self, i: int) -> UPoly:
        """Coefficient of x**i, as a polynomial in y."""
        d: dict[int, Fraction] = {}
        for (a, b), v in self.terms:
            if a == i:
                d[b] = v
        n = max(d, default=-1) + 1
        return UPoly.make("y", [d.get(j, 0) for j in range(n)])

    def x_coeffs(self) -> list[UPoly]:
        """All coefficients of powers of x, index = x-exponent."""
        return [self.coeff_of_x(i) for i in range(self.deg_x() + 1)]

    def eval_x(self, c) -> UPoly:
        """Substitute x = c; result is a polynomial in y."""
        c = _frac(c)
        acc = UPoly.zero("y")
        for p in reversed(self.x_coeffs()):
            acc = acc * c + p
        return acc

    def eval_y(self, c) -> UPoly:
        return self.transpose().eval_x(c).with_var("x")

    def eval_xy(self, a, b) -> Fraction:
        return self.eval_x(a).eval(b)

    def as_upoly(self) -> UPoly:
        """Convert when at most one variable occurs (constants become 'x')."""
        if self.deg_x() > 0 and self.deg_y() > 0:
            raise ValueError("genuinely bivariate")
        if self.deg_y() > 0:
            d = {j: v for (_, j), v in self.terms}
            return UPoly.make("y", [d.get(j, 0) for j in range(self.deg_y() + 1)])
        d = {i: v for (i, _), v in self.terms}
        return UPoly.make("x", [d.get(i, 0) for i in range(max(self.deg_x(), 0) + 1)])

    def __str__(self) -> str:
        return render_bpoly(self)


# ---------------------------------------------------------------------------
# sympy bridges


def _u2sym(p: UPoly):
    s = _SYM[p.var]
    return sum(sympy.Rational(c.numerator, c.denominator) * s**i for i, c in enumerate(p.coeffs))


def _sym2u(expr, var: str) -> UPoly:
    p = sympy.Poly(expr, _SYM[var], domain="QQ")
    coeffs = list(reversed(p.all_coeffs()))
    return UPoly.make(var, coeffs)


def _b2sym(p: BPoly):
    x, y = _SYM["x"], _SYM["y"]
    return sum(
        sympy.Rational(v.numerator, v.denominator) * x**i * y**j for (i, j), v in p.terms
    )


def _sym2b(expr) -> BPoly:
    p = sympy.Poly(expr, _SYM["x"], _SYM["y"], domain="QQ")
    d = {}
    for (i, j), c in p.terms():
        d[(int(i), int(j))] = _frac(sympy.Rational(c))
    return BPoly.make(d)


# ---------------------------------------------------------------------------
# canonical primitive-integer forms


def primitive_int_upoly(p: UPoly) -> tuple[Fraction, UPoly]:
    """Return (unit, q) with q integer, content-free, positive leading
    coefficient, and p = unit * q."""
    if p.is_zero():
        raise ValueError("zero polynomial has no primitive form")
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
    ints = [c * den_lcm for c in p.coeffs]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c.numerator))
    if ints[-1] < 0:
        g = -g
    unit = Fraction(g, den_lcm)
    return unit, UPoly.make(p.var, [c / g for c in ints])


def primitive_int_bpoly(p: BPoly) -> tuple[Fraction, BPoly]:
    """Same normalization for bivariate polynomials; the sign is fixed by
    the graded-lex leading term (total degree, then x-exponent)."""
    if p.is_zero():
        raise ValueError("zero polynomial has no primitive form")
    den_lcm = 1
    for _, c in p.terms:
        den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
    ints = {k: v * den_lcm for k, v in p.terms}
    g = 0
    for v in ints.values():
        g = int_gcd(g, abs(v.numerator))
    lead = max(ints, key=lambda k: (k[0] + k[1], k[0]))
    if ints[lead] < 0:
        g = -g
    unit = Fraction(g, den_lcm)
    return unit, BPoly.make({k: v / g for k, v in ints.items()})


def int_content(p: UPoly) -> Fraction:
    """Content of a rational polynomial: p / content is primitive integer."""
    return primitive_int_upoly(p)[0]


# ---------------------------------------------------------------------------
# gcd, resultants, square-free parts


def gcd_u(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd over Q; gcd(f, 0) = monic(f)."""
    if f.var != g.var:
        raise ValueError("variable mismatch")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def gcd_b(f: BPoly, g: BPoly) -> BPoly:
    """Gcd of bivariate polynomials over Q (primitive integer form)."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    d = sympy.gcd(_b2sym(f), _b2sym(g))
    return primitive_int_bpoly(_sym2b(d))[1]


def factor_b(f: BPoly) -> tuple[Fraction, list[tuple[BPoly, int]]]:
    """Complete factorization of a bivariate polynomial over Q.

    Returns (unit, [(primitive integer irreducible factor, multiplicity)])
    with unit * prod(factor**mult) == f exactly.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.deg_x() <= 0 and f.deg_y() <= 0:
        return f.terms[0][1] if f.terms else Fraction(0), []
    unit_s, fac = sympy.factor_list(_b2sym(f), _SYM["x"], _SYM["y"])
    unit = _frac(sympy.Rational(unit_s))
    out = []
    for p, m in fac:
        u, q = primitive_int_bpoly(_sym2b(p))
        unit *= u ** int(m)
        out.append((q, int(m)))
    out.sort(key=lambda t: t[0].terms)
    return unit, out


def squarefree_decomposition_b(f: BPoly) -> list[tuple[BPoly, int]]:
    """Square-free decomposition of a bivariate polynomial over Q."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.deg_x() <= 0 and f.deg_y() <= 0:
        return []
    _, fac = sympy.sqf_list(_b2sym(f), _SYM["x"], _SYM["y"])
    return [(primitive_int_bpoly(_sym2b(p))[1], int(m)) for p, m in fac]


def resultant_u(f: UPoly, g: UPoly) -> Fraction:
    """Resultant of two univariate polynomials (same variable)."""
    if f.var != g.var:
        raise ValueError("variable mismatch")
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    if f.degree() == 0:
        return f.lc() ** g.degree()
    if g.degree() == 0:
        return g.lc() ** f.degree()
    r = sympy.resultant(_u2sym(f), _u2sym(g), _SYM[f.var])
    return _frac(sympy.Rational(r))


def resultant_x(f: BPoly, g: BPoly) -> UPoly:
    """Sylvester resultant eliminating x; a polynomial in y."""
    if f.deg_x() < 0 or g.deg_x() < 0:
        raise ValueError("zero polynomial")
    if f.deg_x() == 0 and g.deg_x() == 0:
        raise ValueError("both inputs constant in x")
    if f.deg_x() == 0:
        return (f.as_upoly().with_var("y") ** g.deg_x()) if f.deg_y() >= 0 else UPoly.zero("y")
    if g.deg_x() == 0:
        return g.as_upoly().with_var("y") ** f.deg_x()
    # Convention: product of f over the x-roots of g (times lc powers), i.e.
    # Res(g, f) in sympy's ordering, so that Res_x(x - y^2, x - y) = y - y^2.
    r = sympy.resultant(_b2sym(g), _b2sym(f), _SYM["x"])
    return _sym2u(r, "y")


def resultant_y(f: BPoly, g: BPoly) -> UPoly:
    """Sylvester resultant eliminating y; a polynomial in x."""
    return resultant_x(f.transpose(), g.transpose()).with_var("x")


def squarefree_decomposition(f: UPoly) -> list[tuple[UPoly, int]]:
    """Monic square-free decomposition: pairwise coprime factors with
    multiplicities whose weighted product is monic(f)."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree() == 0:
        return []
    _, fac = sympy.sqf_list(_u2sym(f))
    return [(_sym2u(p, f.var).monic(), int(m)) for p, m in fac]


def coprime_basis(fs: Sequence[UPoly]) -> tuple[list[UPoly], list[list[int]]]:
    """Gcd-refined pairwise-coprime monic basis plus exponent matrix.

    Each input equals its leading unit times the product of basis
    elements raised to its exponent row.
    """
    if not fs:
        return [], []
    var = fs[0].var
    basis: list[UPoly] = []
    for f in fs:
        if f.is_zero():
            raise ValueError("zero polynomial")
        work = [f.monic()]
        while work:
            h = work.pop()
            if h.degree() == 0:
                continue
            placed = False
            for i, b in enumerate(basis):
                g = gcd_u(h, b)
                if g.degree() == 0:
                    continue
                if g == b:
                    work.append(h.exact_div(b))
                    placed = True
                    break
                # split b by g, retry h against the refined basis
                basis[i : i + 1] = [g, b.exact_div(g)]
                basis[:] = [q for q in basis if q.degree() > 0]
                work.append(h)
                placed = True
                break
            if not placed:
                basis.append(h)
    basis.sort(key=lambda p: (p.degree(), p.coeffs))
    rows = []
    for f in fs:
        h = f.monic()
        row = []
        for b in basis:
            e = 0
            while h.degree() >= b.degree():
                q, r = h.divmod(b)
                if not r.is_zero():
                    break
                h = q
                e += 1
            row.append(e)
        if h.degree() != 0:
            raise AssertionError("coprime basis refinement failed")
        rows.append(row)
    return list(basis), rows


def factor_q(
    f: UPoly, degree_bound: int = DEFAULT_FACTOR_DEGREE_BOUND
) -> tuple[Fraction, list[tuple[UPoly, int]]]:
    """Complete factorization over Q into monic irreducibles.

    Returns (unit, [(factor, multiplicity), ...]) with
    unit * prod(factor**mult) == f exactly.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree() > degree_bound:
        raise DegreeBound(f"degree {f.degree()} exceeds bound {degree_bound}")
    if f.degree() == 0:
        return f.lc(), []
    unit_s, fac = sympy.factor_list(_u2sym(f))
    unit = _frac(sympy.Rational(unit_s))
    out = []
    for p, m in fac:
        q = _sym2u(p, f.var)
        unit *= q.lc() ** int(m)
        out.append((q.monic(), int(m)))
    out.sort(key=lambda t: (t[0].degree(), t[0].coeffs))
    return unit, out


# ---------------------------------------------------------------------------
# bivariate irreducibility certification


def content_free_both_ways(f: BPoly) -> bool:
    xs = [c for c in f.x_coeffs() if not c.is_zero()]
    g = xs[0]
    for c in xs[1:]:
        g = gcd_u(g, c)
    if g.degree() != 0:
        return False
    ft = f.transpose()
    ys = [c for c in ft.x_coeffs() if not c.is_zero()]
    g = ys[0]
    for c in ys[1:]:
        g = gcd_u(g, c)
    return g.degree() == 0


def certify_irreducible_bivariate(f: BPoly, specialization_range: int = 10) -> str:
    """Sound sufficient irreducibility test over Q; returns "certified"
    or "unknown" (never certifies a reducible polynomial).

    Certified when the polynomial is content-free in each variable and
    either has degree 1 in one variable, or some small integer
    specialization y := c keeps full x-degree and is irreducible.
    """
    if f.deg_x() < 1 or f.deg_y() < 1:
        raise ValueError("needs positive degree in both variables")
    if not content_free_both_ways(f):
        return "unknown"
    if f.deg_x() == 1 or f.deg_y() == 1:
        return "certified"
    lc = f.coeff_of_x(f.deg_x())
    candidates = [0]
    for k in range(1, specialization_range + 1):
        candidates.extend([k, -k])
    for c in candidates:
        if lc.eval(c) == 0:
            continue
        spec = f.eval_y(c)
        try:
            _, fac = factor_q(spec)
        except DegreeBound:
            return "unknown"
        if len(fac) == 1 and fac[0][1] == 1:
            return "certified"
    return "unknown"


# ---------------------------------------------------------------------------
# certified complex roots


def complex_roots(f: UPoly, eps=1e-12, prec: int = 80) -> list[mpmath.mpc]:
    """All deg(f) complex roots with multiplicity.

    Each returned z satisfies (|f(z)|/|lc|)**(1/deg) < eps for its
    square-free factor, a sound bound on the distance to a true root.
    Raises PrecisionFailure when certification cannot be reached.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if f.degree() == 0:
        return []
    roots: list[mpmath.mpc] = []
    for sq, mult in squarefree_decomposition(f):
        deg = sq.degree()
        found = None
        for wp in (prec, 2 * prec, 4 * prec, 8 * prec, 16 * prec):
            with mpmath.workprec(wp):
                cs = [
                    mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
                    for c in reversed(sq.coeffs)
                ]
                try:
                    rs = mpmath.polyroots(cs, maxsteps=400, extraprec=wp)
                except Exception:
                    continue
                if _roots_certified(sq, rs, eps):
                    found = [mpmath.mpc(r) for r in rs]
                    break
        if found is None:
            raise PrecisionFailure(
                f"could not certify roots of degree-{deg} factor at prec={prec}"
            )
        roots.extend(found * mult)
    return roots


def _roots_certified(sq: UPoly, rs, eps) -> bool:
    deg = sq.degree()
    lc = abs(mpmath.mpf(sq.lc().numerator) / mpmath.mpf(sq.lc().denominator))
    for z in rs:
        val = _eval_mp(sq, mpmath.mpc(z))
        if (abs(val) / lc) ** (mpmath.mpf(1) / deg) >= eps:
            return False
    return True


def _eval_mp(p: UPoly, z):
    acc = mpmath.mpc(0)
    for c in reversed(p.coeffs):
        acc = acc * z + mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
    return acc


# ---------------------------------------------------------------------------
# rendering


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_upoly(p: UPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree(), -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            mon = ""
        elif i == 1:
            mon = p.var
        else:
            mon = f"{p.var}^{i}"
        parts.append(_term_str(c, mon, first=not parts))
    return "".join(parts)


def render_bpoly(p: BPoly) -> str:
    if p.is_zero():
        return "0"
    terms = sorted(p.terms, key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0], -t[0][1]))
    parts = []
    for (i, j), c in terms:
        mons = []
        if i == 1:
            mons.append("x")
        elif i > 1:
            mons.append(f"x^{i}")
        if j == 1:
            mons.append("y")
        elif j > 1:
            mons.append(f"y^{j}")
        parts.append(_term_str(c, "*".join(mons), first=not parts))
    return "".join(parts)


def _term_str(c: Fraction, mon: str, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    if not first:
        sign = " - " if c < 0 else " + "
    a = abs(c)
    if not mon:
        body = _fmt_coeff(a)
    elif a == 1:
        body = mon
    else:
        body = f"{_fmt_coeff(a)}*{mon}"
    return f"{sign}{body}"
