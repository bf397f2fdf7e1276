"""Divisor-valued norm pairings on Q(x,y).

``pair(A, b, side)`` sends a coprime pair of divisors of Q(x,y) to a
divisor of Q(x) (side K) or Q(y) (side Kprime).  Binary-against-binary
and unary-against-binary contributions come from chart resultants;
pairs involving a unary prime of the output side reduce to residue
degrees; unary-against-unary pairs on the same side vanish.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charts import fiber_divisor, infx_fiber_divisor, transpose_divisor
from .divisors import (
    BinaryPlace,
    DeltaElement,
    Divisor,
    Place,
    UnaryPlace,
    degree_over_Kp,
    principal_divisor,
)
from .errors import NotCoprime, NotDegreeOne
from .exact import BPoly
from .residues import RationalIsom, residue_iso

SIDE_K = "K"
SIDE_KPRIME = "Kprime"


def transpose_place(m: Place) -> Place:
    if isinstance(m, BinaryPlace):
        return BinaryPlace(m.poly.transpose(), m.certified)
    nv = "x" if m.var == "y" else "y"
    if m.poly is None:
        return UnaryPlace.infinity(nv)
    return UnaryPlace.finite(m.poly.with_var(nv))


def pair(A: Divisor, b: Divisor, side: str = SIDE_KPRIME, shift_bound: int = 64) -> Divisor:
    """Bilinear norm pairing of two divisors with disjoint supports."""
    if side not in (SIDE_K, SIDE_KPRIME):
        raise ValueError(f"unknown side {side!r}")
    if not A.disjoint_from(b):
        raise NotCoprime("pairing requires disjoint supports")
    out = Divisor.zero()
    for m, wm in A.coeffs:
        for n, wn in b.coeffs:
            out = out + _pair_primes(m, n, side, shift_bound).scale(wm * wn)
    return out


def _pair_primes(m: Place, n: Place, side: str, shift_bound: int) -> Divisor:
    if side == SIDE_K:
        return transpose_divisor(
            _pair_primes_kp(transpose_place(m), transpose_place(n), shift_bound)
        )
    return _pair_primes_kp(m, n, shift_bound)


def _pair_primes_kp(m: Place, n: Place, shift_bound: int) -> Divisor:
    m_kp_unary = isinstance(m, UnaryPlace) and m.var == "y"
    n_kp_unary = isinstance(n, UnaryPlace) and n.var == "y"
    if m_kp_unary and n_kp_unary:
        return Divisor.zero()
    if n_kp_unary:
        return Divisor.of(n, degree_over_Kp(m)) if degree_over_Kp(m) else Divisor.zero()
    if m_kp_unary:
        return Divisor.of(m, degree_over_Kp(n)) if degree_over_Kp(n) else Divisor.zero()
    # both m and n live over the x-line: binary or x-unary
    fm = _curve_of(m)
    fn = _curve_of(n)
    if fm is None and fn is None:
        # two x-unary places (possibly one at infinity) norm to zero in Q(y)
        return Divisor.zero()
    if fm is None:
        # m = infinity of Q(x) against the curve of n
        if isinstance(n, UnaryPlace):
            return Divisor.zero()
        return infx_fiber_divisor(fn)
    if fn is None:
        if isinstance(m, UnaryPlace):
            return Divisor.zero()
        return infx_fiber_divisor(fm)
    if isinstance(m, UnaryPlace) and isinstance(n, UnaryPlace):
        return Divisor.zero()
    return fiber_divisor(fm, fn, shift_bound)


def _curve_of(m: Place) -> BPoly | None:
    """Defining polynomial as a curve in the (x, y) plane; None for the
    x-infinity section."""
    if isinstance(m, BinaryPlace):
        return m.poly
    if m.var == "x":
        return None if m.is_infinity() else BPoly.from_upoly(m.poly)
    raise AssertionError("y-unary places are handled before curve extraction")


def dx_divisor() -> Divisor:
    """Divisor of the differential dx on Q(x): -2 times infinity."""
    return Divisor.of(UnaryPlace.infinity("x"), -2)


def image_dx(mu: RationalIsom) -> Divisor:
    """Image of dx under x -> mu: -2 times the pole divisor of mu."""
    from .divisors import divisor_of_upoly

    out = Divisor.zero()
    if mu.den.degree() >= 1:
        out = divisor_of_upoly(mu.den, include_infinity=False)
    w_inf = (0 if mu.num.is_zero() else mu.num.degree()) - mu.den.degree()
    if w_inf > 0:
        out = out + Divisor.of(UnaryPlace.infinity("y"), w_inf)
    return out.scale(-2)


@dataclass(frozen=True)
class SelfPairing:
    """Self-pairing of a degree-one binary prime up to principal
    divisors: the pairing of the moved divisor against the prime, plus
    the moving data."""

    value: Divisor
    moved: Divisor
    moving_element: str


def self_pair_degree_one(
    m: BinaryPlace, side: str = SIDE_KPRIME, shift_bound: int = 64
) -> SelfPairing:
    """Pair a degree-one binary prime with itself by first replacing it
    with the equivalent divisor m - div(x - mu), which has support
    disjoint from m."""
    if m.poly.deg_x() != 1:
        raise NotDegreeOne(f"prime has x-degree {m.poly.deg_x()}, expected 1")
    iso = residue_iso(m)
    elem = DeltaElement.from_fraction(m.poly, BPoly.from_upoly(iso.den.with_var("y")))
    n = Divisor.of(m) - principal_divisor(elem)
    if n.coeff(m) != 0:
        raise AssertionError("moving step failed to clear the prime")
    value = pair(n, Divisor.of(m), side, shift_bound)
    return SelfPairing(value, n, f"({m.poly})/({iso.den})")
