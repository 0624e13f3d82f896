"""The one-parameter family of quadric-failure divisor classes.

For t >= 0 the pair (g, n) = ((t^2+5t+10)/2, (t^2+3t+2)/2) makes the two
sides of the multiplication map Sym^2 H^0(K - sum p_j) -> H^0(2K - 2 sum p_j)
have equal dimension, and the failure locus is a divisor whose class is

    (8-t)*lambda + t*sum psi_j - delta_irr - sum b_{i:s}(t) * delta_{i:S},

with closed-form b for i in {0, 1} and only the bound b >= 1 for 2 <= i <= g/2.
This module holds the closed forms, the test-curve intersection numbers behind
them, both recurrences, and their verifiers.  All formulas accept exact
rationals or Poly values, so every identity can be checked symbolically as
well as on grids.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import LinearSystem, Poly, invert_matrix, rat, solve_linear
from .picard import Coefficient, DivisorClass, Space, boundary_orbits


HALF = Fraction(1, 2)


def gn_pair(t):
    """(g, n) for family parameter t; both entries are integers for t in N."""
    g = (t * t + 5 * t + 10) / 2 if isinstance(t, Poly) else Fraction(t * t + 5 * t + 10, 2)
    n = (t * t + 3 * t + 2) / 2 if isinstance(t, Poly) else Fraction(t * t + 3 * t + 2, 2)
    if not isinstance(t, Poly):
        if t < 0:
            raise ValueError("family parameter must be >= 0")
        g, n = int(g), int(n)
    return g, n


def family_space(t: int) -> Space:
    g, n = gn_pair(t)
    return Space(g, n)


def verify_balance(t) -> bool:
    """dim Sym^2 of a rank-(t+4) space vs h^0 of the quadratic side."""
    g, n = gn_pair(t)
    lhs = (t + 4) * (t + 5) / 2 if isinstance(t, Poly) else Fraction((t + 4) * (t + 5), 2)
    return lhs == 3 * g - 3 - 2 * n


def balanced_pairs(g_max: int):
    """Independent re-derivation of the family table.

    Enumerates all (g, n) with g <= g_max where the two dimensions agree and
    the target projective space has dimension >= 3 (g - n >= 4), and tags each
    with its parameter t = g - n - 4.
    """
    if g_max < 5:
        return []
    out = []
    for g in range(2, g_max + 1):
        for n in range(0, 3 * g):
            d = g - n
            if d < 4:
                continue
            if d * (d + 1) == 2 * (3 * g - 3 - 2 * n):
                out.append((g, n, d - 4))
    return sorted(out)


# ---------------------------------------------------------------------------
# closed-form coefficients


def b0(s, t):
    """b_{0:s}(t) = s(st+s+t-1)/2, defined for s >= 2."""
    if not isinstance(s, Poly) and s < 2:
        raise ValueError(f"b0 is defined for s >= 2, got s={s}")
    return _half(s * (s * t + s + t - 1))


def b1(s, t):
    """b_{1:0}(t) = t+4; b_{1:s}(t) = (s^2 t + s^2 - s t + s + 6)/2 for s >= 1."""
    if not isinstance(s, Poly):
        if s < 0:
            raise ValueError(f"b1 is defined for s >= 0, got s={s}")
        if s == 0:
            return t + 4 if isinstance(t, Poly) else rat(t) + 4
    return _half(s * s * t + s * s - s * t + s + 6)


def tilde_b(i, s, t):
    """(i^2(t-3) - i(2s(t-1)+t-5) + s(st+s+t-1)) / 2."""
    return _half(i * i * (t - 3) - i * (2 * s * (t - 1) + t - 5) + s * (s * t + s + t - 1))


def _half(x):
    return x / 2 if isinstance(x, Poly) else rat(x) * HALF


def known_b(i, s, t):
    """The exactly-known coefficient b_{i:s}(t), or None where only a bound holds."""
    if i == 0 and s >= 2:
        return b0(s, t)
    if i == 1:
        return b1(s, t)
    return None


# ---------------------------------------------------------------------------
# the divisor class itself


def quad_class(t: int) -> DivisorClass:
    """The family class on (g(t), n(t)) as a DivisorClass.

    Boundary entries with i in {0, 1} carry the exact closed forms (keyed to
    the canonical (i, |S|), so mirrored representatives resolve through
    canonicalization).  Entries with 2 <= i <= g/2 are only bounded: the
    subtracted multiplicity is >= 1, stored as AtMost(-1).  The t=0 class is
    the pullback of the classical genus-5 Brill-Noether divisor and is fully
    known, so its i=2 entries are Exact(-6).
    """
    space = family_space(t)
    sym = {}
    for (i, s) in boundary_orbits(space):
        if i == 0:
            sym[(i, s)] = Coefficient.exact(-b0(s, t))
        elif i == 1:
            sym[(i, s)] = Coefficient.exact(-b1(s, t))
        elif t == 0:
            sym[(i, s)] = Coefficient.exact(-6)  # classical BN^1_{5,3} value
        else:
            sym[(i, s)] = Coefficient.at_most(-1)
    return DivisorClass(
        space,
        lam=8 - t,
        psi=Fraction(t),
        delta_irr=-1,
        boundary_sym=sym,
    )


# ---------------------------------------------------------------------------
# test-curve intersection numbers and the two recurrences


def c1_pushforward_L(i, s, g, n):
    """T_{i:S} . c1 of the pushforward of the once-twisted sheaf, for i < s."""
    _check_lemma_range(i, s, g)
    return -(i - s) * ((i - s - 1) * (g - i - 1) + n - s)


def c1_pushforward_L2(i, s, g, n):
    """T_{i:S} . c1 of the pushforward of the squared twisted sheaf, for i < s."""
    _check_lemma_range(i, s, g)
    return (
        -2 * (i * i * (4 * g + 6 * s + 1) + i * (-g * (6 * s + 5) + 3 * n - 2 * s * s + 5))
        - 2 * s * (g * (2 * s + 3) - 2 * n - 3)
        + 8 * i ** 3
    )


def _check_lemma_range(i, s, g):
    if isinstance(i, Poly) or isinstance(s, Poly) or isinstance(g, Poly):
        return
    if not 0 <= i <= g:
        raise ValueError(f"genus index {i} outside 0..{g}")
    if i >= s:
        raise ValueError(f"intersection formulas require i < s, got i={i}, s={s}")


def d1_phi_prime(i, s, t):
    """Pairing of T_{i:S} with the degeneracy class of the modified map.

    Equal-rank Porteous on Sym^2 E -> F with rk E = t+4 gives
    c1(F) - (t+5) c1(E), evaluated against the test curve via the two closed
    forms above.
    """
    g, n = gn_pair(t)
    return c1_pushforward_L2(i, s, g, n) - (t + 5) * c1_pushforward_L(i, s, g, n)


def verify_tilde_recurrence(i, s, t) -> bool:
    """Test-curve relation pinning tilde_b:

    T.[D1] = (2g-2i-2+n-s) tilde_b(i,s) - (n-s) tilde_b(i,s+1) + (n-s) t.
    """
    g, n = gn_pair(t)
    rhs = (
        (2 * g - 2 * i - 2 + n - s) * tilde_b(i, s, t)
        - (n - s) * tilde_b(i, s + 1, t)
        + (n - s) * t
    )
    return d1_phi_prime(i, s, t) == rhs


def d1_theta(s, t):
    """Degeneracy-class cubic from the fibered-square computation:

    (s^2(t^3+6t^2+13t+8) - 2s(t^3+4t^2+4t-3) + t^3+8t^2+29t+34) / 2.
    """
    return _half(
        s * s * (t ** 3 + 6 * t * t + 13 * t + 8)
        - 2 * s * (t ** 3 + 4 * t * t + 4 * t - 3)
        + (t ** 3 + 8 * t * t + 29 * t + 34)
    )


def b1_recurrence_rhs(s, t):
    """t(n-s) + (2g-4+n-s) b_{1:s} - (n-s) b_{1:s+1}."""
    g, n = gn_pair(t)
    return t * (n - s) + (2 * g - 4 + n - s) * b1(s, t) - (n - s) * b1(s + 1, t)


def verify_b1_recurrence(s, t) -> bool:
    """The closed-form cubic matches the b_{1:s} recurrence (s >= 1).

    s = 0 is excluded: the boundary analysis behind the cubic needs a
    non-empty S, and b_{1:0} enters only through the Pic reduction below.
    """
    if not isinstance(s, Poly) and s < 1:
        raise ValueError("recurrence check requires s >= 1")
    return d1_theta(s, t) == b1_recurrence_rhs(s, t)


def b1_pairing_via_class(s: int, t: int) -> Fraction:
    """Same left side, third way: pair quad_class(t) with T_{1:{1..s}}."""
    from .picard import TestCurve, intersect_test_curve

    space = family_space(t)
    curve = TestCurve(space, 1, frozenset(range(1, s + 1)))
    return intersect_test_curve(quad_class(t), curve)


# ---------------------------------------------------------------------------
# the Pic(genus-1, 2-pointed) reduction


def b_from_pic12(t):
    """Solve for (b_{1:0}, b_{1:1}) from the vanishing elliptic-tail pullback.

    The pullback relation (8-t) lambda - delta_irr + t psi_p + b11 psi_q'
    - b10 delta_0 = 0 reduces, via 12 lambda = delta_irr and
    psi = lambda + delta_0, to a 2x2 system with constant matrix; the unique
    solution is (t+4, 4).  Accepts an integer t or a Poly for the symbolic
    statement; the integer path exercises the exact solver.
    """
    from .pullbacks import pic12_reduce

    const_lam, const_del = pic12_reduce({"lambda": 8 - t, "psi_p": t, "delta_irr": -1})
    col_b10 = pic12_reduce({"delta_0": -1})
    col_b11 = pic12_reduce({"psi_q": 1})
    matrix = [
        [col_b10[0], col_b11[0]],
        [col_b10[1], col_b11[1]],
    ]
    rhs = [-const_lam, -const_del]
    if isinstance(t, Poly):
        inv = invert_matrix(matrix)
        b10 = inv[0][0] * rhs[0] + inv[0][1] * rhs[1]
        b11 = inv[1][0] * rhs[0] + inv[1][1] * rhs[1]
        return b10, b11
    sol = solve_linear(LinearSystem(matrix, rhs))
    if not sol.is_unique:
        raise ValueError(f"Pic reduction system is {sol.status}")
    return sol.vector


# ---------------------------------------------------------------------------
# tilde_b vs known b comparison (the excess must be non-negative)


def tilde_vs_known_b(t: int):
    """Compare tilde_b with the exactly-known b over the whole (i, s) grid.

    Yields (i, s, tilde, b, ok) with ok = (tilde <= b); tilde_b is only a
    lower-bound carrier, so tilde > b would flag an inconsistency.
    """
    _, n = gn_pair(t)
    for i in (0, 1):
        for s in range(0, n + 1):
            b = known_b(i, s, t)
            if b is None:
                continue
            tv = tilde_b(i, s, t)
            yield (i, s, tv, b, tv <= b)
