"""Genus-0 Arakelov intersection layer over Q(y) and the residue scalar
product on divisors of Q(x,y).

Divisors of Q(y) are completed with real coefficients on the finite
fibers (one per rational prime) and on the archimedean fiber.  The
archimedean metric is Fubini-Study; with that normalization the two
basic integrals have exact closed forms (integral of log(1+|z|^2) is 1,
integral of log|z-a| is half log(1+|a|^2)), and principal Arakelov
divisors intersect everything of disjoint support to zero (the product
formula), which is what makes the residue scalar product well defined
on divisor classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .divisors import (
    BinaryPlace,
    DeltaElement,
    Divisor,
    UnaryPlace,
    degree_over_K,
    degree_over_Kp,
    divisor_of_upoly,
    principal_divisor,
    restrict_to_Kp,
)
from .errors import CommonSupport, MoveFailure
from .exact import (
    BPoly,
    UPoly,
    complex_roots,
    factor_b,
    primitive_int_upoly,
    resultant_u,
)
from .pairing import SIDE_KPRIME, pair

DEFAULT_PREC = 80


def _root_eps(prec: int):
    return mpmath.mpf(2) ** (-(prec // 2))


def fs_point_integral(c, prec: int = DEFAULT_PREC):
    """Closed form of the Fubini-Study average of log|z - c|."""
    with mpmath.workprec(prec):
        c = mpmath.mpc(c)
        return mpmath.mpf(0.5) * mpmath.log(1 + abs(c) ** 2)


def fs_kappa_closed_form():
    """Closed form of the Fubini-Study average of log(1 + |z|^2)."""
    return mpmath.mpf(1)


def fs_point_integral_quadrature(c, prec: int = DEFAULT_PREC):
    """Independent evaluation of the same average by radial reduction
    (Jensen's formula on circles) and adaptive quadrature."""
    with mpmath.workprec(prec):
        a = abs(mpmath.mpc(c))

        def integrand(r):
            return 2 * r * mpmath.log(max(r, a)) / (1 + r**2) ** 2

        return mpmath.quad(integrand, [0, a, mpmath.inf] if a > 0 else [0, 1, mpmath.inf])


def fs_kappa_quadrature(prec: int = DEFAULT_PREC):
    with mpmath.workprec(prec):
        return mpmath.quad(lambda u: mpmath.log(1 + u) / (1 + u) ** 2, [0, mpmath.inf])


def g_fs(z, w, prec: int = DEFAULT_PREC):
    """Fubini-Study Green's function on P1 at two distinct finite points."""
    with mpmath.workprec(prec):
        z, w = mpmath.mpc(z), mpmath.mpc(w)
        return (
            -mpmath.log(abs(z - w))
            + mpmath.mpf(0.5) * mpmath.log(1 + abs(z) ** 2)
            + mpmath.mpf(0.5) * mpmath.log(1 + abs(w) ** 2)
        )


def _height(q: UPoly, prec: int):
    """log|lc| + sum over roots of half log(1+|root|^2), for a primitive
    integer polynomial: the archimedean content of its zero cycle."""
    with mpmath.workprec(prec):
        total = mpmath.log(abs(mpmath.mpf(q.lc().numerator) / q.lc().denominator))
        for a in complex_roots(q, eps=_root_eps(prec), prec=prec):
            total += mpmath.mpf(0.5) * mpmath.log(1 + abs(a) ** 2)
        return total


def arch_lambda(q: UnaryPlace, prec: int = DEFAULT_PREC):
    """Archimedean fiber coefficient attached to a place of Q(y): minus
    the Fubini-Study average of the log-norm of its defining section."""
    with mpmath.workprec(prec):
        if q.is_infinity():
            return mpmath.mpf(0.5)
        return -_height(q.poly, prec) + mpmath.mpf(q.poly.degree()) / 2


@dataclass(frozen=True)
class ArakelovDivisorKp:
    """Horizontal divisor of Q(y) plus real vertical coefficients at
    finitely many rational primes and one archimedean coefficient."""

    horizontal: Divisor
    vertical: tuple[tuple[int, object], ...]  # (prime, real coeff), sorted
    arch: object  # real

    @staticmethod
    def make(horizontal: Divisor, vertical: dict | None = None, arch=0) -> "ArakelovDivisorKp":
        vert = tuple(
            sorted((p, v) for p, v in (vertical or {}).items() if v != 0)
        )
        return ArakelovDivisorKp(horizontal, vert, mpmath.mpf(arch) * 1)

    @staticmethod
    def zero() -> "ArakelovDivisorKp":
        return ArakelovDivisorKp.make(Divisor.zero())

    def vertical_dict(self) -> dict:
        return dict(self.vertical)

    def __add__(self, other: "ArakelovDivisorKp") -> "ArakelovDivisorKp":
        v = self.vertical_dict()
        for p, c in other.vertical:
            v[p] = v.get(p, 0) + c
        return ArakelovDivisorKp.make(
            self.horizontal + other.horizontal, v, self.arch + other.arch
        )

    def __neg__(self) -> "ArakelovDivisorKp":
        return ArakelovDivisorKp.make(
            -self.horizontal, {p: -c for p, c in self.vertical}, -self.arch
        )

    def __sub__(self, other: "ArakelovDivisorKp") -> "ArakelovDivisorKp":
        return self + (-other)

    def scale(self, k) -> "ArakelovDivisorKp":
        return ArakelovDivisorKp.make(
            self.horizontal.scale(int(k)),
            {p: c * k for p, c in self.vertical},
            self.arch * k,
        )


def arakelov_from_divisor(D: Divisor, prec: int = DEFAULT_PREC) -> ArakelovDivisorKp:
    """Complete a divisor of Q(y) with its archimedean fiber coefficient
    and empty vertical part."""
    with mpmath.workprec(prec):
        arch = mpmath.mpf(0)
        for q, c in D.coeffs:
            arch += c * arch_lambda(q, prec)
        return ArakelovDivisorKp.make(D, None, arch)


def principal_arakelov(num: UPoly, den: UPoly | None = None, unit=1, prec: int = DEFAULT_PREC) -> ArakelovDivisorKp:
    """Arakelov divisor of a nonzero element unit * num/den of Q(y):
    horizontal function-field divisor, Gauss valuations on the finite
    fibers, and minus the archimedean average of its log."""
    if num.is_zero() or (den is not None and den.is_zero()):
        raise ValueError("zero element")
    unit = Fraction(unit)
    if unit == 0:
        raise ValueError("zero element")
    un, pn = primitive_int_upoly(num)
    unit *= un
    if den is not None:
        ud, pd = primitive_int_upoly(den)
        unit /= ud
    else:
        pd = None
    horizontal = divisor_of_upoly(pn)
    if pd is not None and pd.degree() >= 0:
        horizontal = horizontal - divisor_of_upoly(pd)
    vertical: dict[int, int] = {}
    for p, e in _prime_factorization(unit.numerator):
        vertical[p] = vertical.get(p, 0) + e
    for p, e in _prime_factorization(unit.denominator):
        vertical[p] = vertical.get(p, 0) - e
    with mpmath.workprec(prec):
        arch = -mpmath.log(abs(mpmath.mpf(unit.numerator)) / unit.denominator)
        arch -= _height(pn, prec)
        if pd is not None:
            arch += _height(pd, prec)
    return ArakelovDivisorKp.make(horizontal, vertical, arch)


def _prime_factorization(n: int) -> list[tuple[int, int]]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _horizontal_degree(D: Divisor) -> int:
    from .divisors import degree_K

    return degree_K(D)


def intersect(D: ArakelovDivisorKp, E: ArakelovDivisorKp, prec: int = DEFAULT_PREC):
    """Arakelov intersection number; requires disjoint horizontal
    supports."""
    if not D.horizontal.disjoint_from(E.horizontal):
        raise CommonSupport("horizontal supports are not disjoint")
    with mpmath.workprec(prec):
        total = mpmath.mpf(0)
        for q1, c1 in D.horizontal.coeffs:
            for q2, c2 in E.horizontal.coeffs:
                total += c1 * c2 * _hh(q1, q2, prec)
        dD = _horizontal_degree(D.horizontal)
        dE = _horizontal_degree(E.horizontal)
        for p, v in E.vertical:
            total += dD * v * mpmath.log(p)
        for p, v in D.vertical:
            total += dE * v * mpmath.log(p)
        total += dD * E.arch + dE * D.arch
        return total


def _hh(q1: UnaryPlace, q2: UnaryPlace, prec: int):
    """Intersection of two distinct horizontal prime divisors: finite
    part log|Res|, archimedean part the Green's function summed over
    root pairs (the infinite place entering as the limit point)."""
    if q1.is_infinity() and q2.is_infinity():
        raise CommonSupport("both places at infinity")
    if q1.is_infinity():
        return _height(q2.poly, prec)
    if q2.is_infinity():
        return _height(q1.poly, prec)
    r = resultant_u(q1.poly, q2.poly)
    if r == 0:
        raise CommonSupport("places coincide")
    with mpmath.workprec(prec):
        total = mpmath.log(abs(mpmath.mpf(r.numerator) / r.denominator))
        roots1 = complex_roots(q1.poly, eps=_root_eps(prec), prec=prec)
        roots2 = complex_roots(q2.poly, eps=_root_eps(prec), prec=prec)
        for a in roots1:
            for b in roots2:
                total += g_fs(a, b, prec)
        return total


def canonical_representative(c: int, prec: int = DEFAULT_PREC) -> ArakelovDivisorKp:
    """A representative of the canonical Arakelov class (the class of
    -2 times infinity) with horizontal part -2(y - c)."""
    base = arakelov_from_divisor(Divisor.of(UnaryPlace.infinity("y"), -2), prec)
    move = principal_arakelov(UPoly.make("y", [-c, 1]), prec=prec)
    return base - move.scale(2)


def deg_Kp(D: ArakelovDivisorKp, prec: int = DEFAULT_PREC, c: int | None = None):
    """Arakelov degree against the canonical class, computed through a
    representative whose horizontal support avoids D's."""
    if c is None:
        support = {
            tuple(q.poly.coeffs) for q, _ in D.horizontal.coeffs if not q.is_infinity()
        }
        c = 0
        while (Fraction(-c), Fraction(1)) in support:
            c += 1
    rep = canonical_representative(c, prec)
    return intersect(D, rep, prec)


def trace_to_Kp(A: Divisor) -> Divisor:
    """Divisor of Q(y) carried by A: the y-unary components as they
    stand, and every other prime counted at infinity with its residue
    degree over Q(x).

    The completion at infinity is what makes the degree of the result
    vanish on every principal divisor (the y-degrees of numerator and
    denominator balance), which in turn makes the bracket, and with it
    the residue scalar product, well defined on divisor classes.
    """
    out = restrict_to_Kp(A)
    extra = sum(
        w * degree_over_K(m)
        for m, w in A.coeffs
        if not (isinstance(m, UnaryPlace) and m.var == "y")
    )
    if extra:
        out = out + Divisor.of(UnaryPlace.infinity("y"), extra)
    return out


def bracket(A: Divisor, b: Divisor, prec: int = DEFAULT_PREC):
    """N(b) deg(A traced to Q(y)) + N(A) deg(b traced to Q(y)), with N
    the residue degree over Q(y) extended by linearity."""
    nA = sum(w * degree_over_Kp(m) for m, w in A.coeffs)
    nB = sum(w * degree_over_Kp(m) for m, w in b.coeffs)
    with mpmath.workprec(prec):
        total = mpmath.mpf(0)
        if nB:
            total += nB * deg_Kp(arakelov_from_divisor(trace_to_Kp(A), prec), prec)
        if nA:
            total += nA * deg_Kp(arakelov_from_divisor(trace_to_Kp(b), prec), prec)
        return total


def residue_scalar_product(
    A: Divisor, b: Divisor, prec: int = DEFAULT_PREC, shift_bound: int = 64
):
    """bracket(A, b) minus the Arakelov degree of the norm pairing."""
    paired = pair(A, b, SIDE_KPRIME, shift_bound)
    with mpmath.workprec(prec):
        return bracket(A, b, prec) - deg_Kp(arakelov_from_divisor(paired, prec), prec)


# ---------------------------------------------------------------------------
# moving divisors within their class


def principal_move(A: Divisor, fresh: int, shift_bound: int = 64) -> Divisor:
    """An equivalent divisor A + div(h) with support disjoint from A's,
    built from a deterministic schedule of moving elements.

    The element h inverts every finite component of A and then clears
    any infinite components with powers of fresh linear factors x - t,
    y - t chosen to avoid A's support.
    """
    factors: list[tuple[BPoly, int]] = []
    for m, w in A.coeffs:
        if isinstance(m, BinaryPlace):
            factors.append((m.poly, -w))
        elif not m.is_infinity():
            factors.append((BPoly.from_upoly(m.poly), -w))
    h = DeltaElement.from_factors(1, factors) if factors else DeltaElement.one()
    moved = A + principal_divisor(h)
    # clear infinite components that collide with A's support
    support = set(A.support())
    for var in ("x", "y"):
        infp = UnaryPlace.infinity(var)
        if infp in support and moved.coeff(infp) != 0:
            w = moved.coeff(infp)
            t = _fresh_constant(support, var, fresh)
            lin = BPoly.gen(var) - BPoly.const(t)
            extra = DeltaElement.from_factors(1, [(lin, w)])
            moved = moved + principal_divisor(extra)
    if not moved.disjoint_from(A):
        raise MoveFailure(f"move with fresh constant {fresh} failed for {A}")
    return moved


def _fresh_constant(support, var: str, fresh: int) -> int:
    t = fresh
    while True:
        place = UnaryPlace.finite(UPoly.make(var, [-t, 1]))
        if place not in support:
            return t
        t += 1


# ---------------------------------------------------------------------------
# explorer for self-products


def _prime_pool(max_deg: int) -> list:
    """Deterministic pool of prime divisors of Q(x,y) with degrees
    bounded by max_deg in each variable."""
    pool = [UnaryPlace.infinity("x"), UnaryPlace.infinity("y")]
    for var in ("x", "y"):
        for c in (0, 1, -1, 2):
            pool.append(UnaryPlace.finite(UPoly.make(var, [-c, 1])))
        if max_deg >= 2:
            pool.append(UnaryPlace.finite(UPoly.make(var, [-2, 0, 1])))
            pool.append(UnaryPlace.finite(UPoly.make(var, [1, 0, 1])))
    X, Y = BPoly.gen("x"), BPoly.gen("y")
    candidates = [
        X - Y,
        X + Y,
        X - Y - BPoly.const(1),
        X + Y - BPoly.const(2),
        2 * X - Y - BPoly.const(1),
        X * Y - BPoly.const(1),
        X * Y - BPoly.const(2),
        X * Y + X - BPoly.const(1),
    ]
    if max_deg >= 2:
        candidates += [
            X - Y**2,
            X**2 - Y,
            X**2 - Y - BPoly.const(1),
            X + Y**2 - BPoly.const(3),
            X**2 + Y**2 - BPoly.const(2),
            X**2 - Y**2 - BPoly.const(1),
            X**2 * Y - BPoly.const(1),
            X * Y**2 - X - BPoly.const(1),
        ]
    for f in candidates:
        if f.deg_x() > max_deg or f.deg_y() > max_deg:
            continue
        _, fac = factor_b(f)
        if len(fac) == 1 and fac[0][1] == 1:
            pool.append(BinaryPlace(fac[0][0], True))
    return pool


def explore_self_products(
    trials: int,
    max_deg: int = 2,
    seed: int = 0,
    prec: int = DEFAULT_PREC,
    shift_bound: int = 64,
) -> dict:
    """Deterministically sample divisors, move each off its own support
    by two independent principal moves, and report the self residue
    scalar products and the residual between the two moves."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    pool = _prime_pool(max_deg)
    records = []
    minimum = None
    negatives = []
    for t in range(trials):
        k = rng.randint(1, 3)
        comps: dict = {}
        for _ in range(k):
            m = pool[rng.randrange(len(pool))]
            comps[m] = comps.get(m, 0) + rng.choice([-2, -1, 1, 2])
        A = Divisor.make(comps)
        if A.is_zero():
            A = Divisor.of(pool[rng.randrange(len(pool))])
        a1 = principal_move(A, fresh=17 + t, shift_bound=shift_bound)
        a2_base = principal_move(A, fresh=29 + t, shift_bound=shift_bound)
        a2 = _second_move(A, a2_base, 41 + t, shift_bound)
        v1 = residue_scalar_product(a1, A, prec, shift_bound)
        v2 = residue_scalar_product(a2, A, prec, shift_bound)
        residual = abs(v1 - v2)
        value = float(v1)
        records.append(
            {
                "trial": t,
                "divisor": str(A),
                "value": value,
                "move_residual": float(residual),
            }
        )
        if minimum is None or value < minimum:
            minimum = value
        if value < -1e-6:
            negatives.append(t)
    return {
        "trials": trials,
        "max_deg": max_deg,
        "seed": seed,
        "records": records,
        "minimum": minimum,
        "negative_trials": negatives,
    }


def _second_move(A: Divisor, moved: Divisor, fresh: int, shift_bound: int) -> Divisor:
    """A second representative, distinct from the first move, obtained
    by adding one more principal divisor with disjoint support."""
    support = set(A.support()) | set(moved.support())
    t1 = fresh
    while True:
        lin1 = UnaryPlace.finite(UPoly.make("y", [-t1, 1]))
        lin2 = UnaryPlace.finite(UPoly.make("y", [-(t1 + 1), 1]))
        if lin1 not in support and lin2 not in support:
            break
        t1 += 1
    num = BPoly.gen("y") - BPoly.const(t1)
    den = BPoly.gen("y") - BPoly.const(t1 + 1)
    extra = principal_divisor(DeltaElement.from_fraction(num, den))
    out = moved + extra
    if not out.disjoint_from(A):
        raise MoveFailure("second move failed to stay off the support")
    return out
