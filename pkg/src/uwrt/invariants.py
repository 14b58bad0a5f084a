"""Invariants of integral homology spheres and knots built on the engine.

The central object is the unified invariant J_M living in the completed
ring handled by qhat.  It is computed either from an admissible surgery
presentation (a 0-framed algebraically split diagram together with a
list of +-1 framings) or from the closed formulas for the family
obtained by surgery on the Borromean rings.  Specializations provided
here: the classical WRT value at a root of unity, the Ohtsuki series
with its congruence checks, and the two-variable knot invariant with
its theta-specializations.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import (DepthExceeded, NotAdmissible, NotAKnot, NotInQSubring,
                     UnknownName, ZeroDenominator)
from .laurent import (LaurentU, ModPoly, ONE, QQ, ZERO, cyclotomic,
                      falling_bal, pochhammer, q_pow, qfact_bal, qint_bal,
                      qnum, reduce_mod, u_pow)
from .qhat import DEFAULT_DEPTH, HabiroElem, eval_root, taylor
from .repring import _p_in_v, omega_coeff
from .reps import twist_eigen
from .tangles import Diagram, builtin, colored_jones, linking_data

# -- surgery presentations ---------------------------------------------------


class SurgeryPresentation:
    """Either a 0-framed diagram with framing data, or a named family.

    Diagram form: the diagram must be drawn with zero writhe on every
    component; the +-1 surgery framings travel separately and are
    applied through twist eigenvalues.  diagram=None with no framings
    is the empty link (a presentation of the 3-sphere).

    Family form: family="borromean" with params (i, j, k) meaning
    surgery on the Borromean rings with framings -1/i, -1/j, -1/k;
    a zero parameter means no surgery on that component.
    """

    __slots__ = ("diagram", "framings", "family", "params")

    def __init__(self, diagram=None, framings=None, family=None, params=None):
        if family is not None:
            if family != "borromean":
                raise UnknownName(f"unknown surgery family {family!r}")
            params = tuple(int(p) for p in (params or ()))
            if len(params) != 3:
                raise UnknownName("borromean family needs three parameters")
            self.family = family
            self.params = params
            self.diagram = None
            self.framings = None
        else:
            self.family = None
            self.params = None
            self.diagram = diagram
            self.framings = tuple(framings) if framings is not None else ()

    @staticmethod
    def from_json(obj):
        if "family" in obj:
            return SurgeryPresentation(family=obj["family"],
                                       params=obj.get("params", ()))
        d = obj.get("diagram")
        if isinstance(d, str):
            from .tangles import parse_diagram
            d = parse_diagram(d)
        return SurgeryPresentation(diagram=d,
                                   framings=obj.get("framings", ()))

    def __repr__(self):
        if self.family:
            return f"SurgeryPresentation({self.family}, {self.params})"
        tag = "empty" if self.diagram is None else repr(self.diagram)
        return f"SurgeryPresentation({tag}, framings={self.framings})"


def unlink_diagram(m):
    """A 0-framed m-component unlink drawn one component at a time."""
    slices = []
    for c in range(m):
        slices.append([("cup", c, False)])
        slices.append([("cap", c)])
    return Diagram(slices, name=f"unlink{m}")


def s3_presentations():
    """Four admissible presentations of the 3-sphere."""
    return [
        SurgeryPresentation(diagram=None, framings=()),
        SurgeryPresentation(diagram=builtin("unknot"), framings=(1,)),
        SurgeryPresentation(diagram=builtin("unknot"), framings=(-1,)),
        SurgeryPresentation(diagram=unlink_diagram(2), framings=(1, -1)),
    ]


def borromean_presentation(framings):
    return SurgeryPresentation(diagram=builtin("borromean"),
                               framings=tuple(framings))


def _check_admissible(d, framings):
    if d is None:
        if framings:
            raise NotAdmissible("framings given for the empty link")
        return
    if len(framings) != d.component_count:
        raise NotAdmissible(
            f"{d.component_count} components but {len(framings)} framings")
    if any(f not in (1, -1) for f in framings):
        raise NotAdmissible("surgery framings must be +1 or -1")
    lk = linking_data(d)
    m = d.component_count
    for i in range(m):
        if lk[i][i] != 0:
            raise NotAdmissible(
                f"component {i + 1} is drawn with writhe {lk[i][i]}, "
                "expected a 0-framed diagram")
        for j in range(i + 1, m):
            if lk[i][j] != 0:
                raise NotAdmissible(
                    f"components {i + 1} and {j + 1} have linking number "
                    f"{lk[i][j]}, expected an algebraically split link")


def _diagram_form(pres):
    """(diagram, framings) for a presentation; family form is converted
    when every parameter is +-1 (framing -1/i = -i)."""
    if pres.family is None:
        return pres.diagram, pres.framings
    if any(p not in (1, -1) for p in pres.params):
        raise NotAdmissible(
            "only +-1 borromean parameters have a +-1-framed diagram form")
    return builtin("borromean"), tuple(-p for p in pres.params)


# -- packed accumulation for the multilinear surgery sum ---------------------
#
# The inner sums over V-colors reuse the Kronecker packing idea from the
# contraction engine, but with wider digits: coefficients here are sums
# of products of a basis-change coefficient per component and a colored
# Jones value, which can far exceed the engine's per-entry sizes.

_JBITS = 128
_JBASE = 1 << _JBITS
_JHALF = 1 << (_JBITS - 1)
_JMASK = _JBASE - 1
_JGUARD = 1 << (_JBITS - 16)


def _jpack(x):
    if x.is_zero():
        return (0, 0)
    mag = 0
    for k, c in enumerate(x.coeffs):
        mag += c << (_JBITS * k)
    return (x.min, mag)


def _junpack(value):
    offset, mag = value
    coeffs = []
    while mag:
        d = mag & _JMASK
        if d >= _JHALF:
            d -= _JBASE
        if abs(d) > _JHALF - _JGUARD:
            raise OverflowError("packed coefficient near digit boundary")
        coeffs.append(d)
        mag = (mag - d) >> _JBITS
    return LaurentU(offset, coeffs)


def _jadd(a, b):
    oa, ma = a
    ob, mb = b
    if ma == 0:
        return b
    if mb == 0:
        return a
    if oa <= ob:
        return (oa, ma + (mb << (_JBITS * (ob - oa))))
    return (ob, mb + (ma << (_JBITS * (oa - ob))))


@lru_cache(maxsize=None)
def _packed_p(k):
    """V-coefficients of P_k, packed."""
    return tuple((a, _jpack(c)) for a, c in sorted(_p_in_v(k).items()))


_packed_jones_cache = {}
_pprime_cache = {}


def _packed_jones(d, colors):
    key = (d.key(), colors)
    hit = _packed_jones_cache.get(key)
    if hit is None:
        hit = _jpack(colored_jones(d, colors))
        _packed_jones_cache[key] = hit
    return hit


def _jones_pprime(d, ks):
    """J of the 0-framed diagram with colors P'_{k_1}, ..., P'_{k_m}."""
    key = (d.key(), ks)
    hit = _pprime_cache.get(key)
    if hit is not None:
        return hit
    num = (0, 0)
    for picks in product(*[_packed_p(k) for k in ks]):
        off = 0
        mag = 1
        for _, (o, m) in picks:
            off += o
            mag *= m
        jo, jm = _packed_jones(d, tuple(a for a, _ in picks))
        num = _jadd(num, (off + jo, mag * jm))
    val = _junpack(num)
    for k in ks:
        val = val.exact_div(qfact_bal(k))
    _pprime_cache[key] = val
    return val


# -- the unified invariant ----------------------------------------------------


def jm_from_surgery(pres, N=DEFAULT_DEPTH):
    """J_M from an admissible surgery presentation, at depth N.

    The term for framing-corrected colors (k_1, ..., k_m) is divisible
    by (q)_K with K = max(k_i); it is stored in slot K after that exact
    division, so truncating the k-ranges at N is sound.
    """
    if pres.family is not None:
        return jm_borromean(*pres.params, N)
    d, fr = pres.diagram, pres.framings
    _check_admissible(d, fr)
    out = [ZERO] * N
    if d is None:
        out[0] = ONE
        return HabiroElem(N, out)
    m = d.component_count
    for ks in product(range(N), repeat=m):
        base = _jones_pprime(d, ks)
        if base.is_zero():
            continue
        exp = 0
        sign = 1
        for k, f in zip(ks, fr):
            exp -= f * k * (k + 3)
            if f == 1 and k % 2:
                sign = -sign
        term = base * u_pow(exp, sign)
        K = max(ks)
        out[K] = out[K] + term.exact_div(pochhammer(K))
    return HabiroElem(N, out)


def jm_borromean(i, j, k, N=DEFAULT_DEPTH):
    """J of M_{i,j,k} by the closed formula, at depth N."""
    out = []
    for l in range(N):
        c = omega_coeff(i, l) * omega_coeff(j, l) * omega_coeff(k, l)
        if c.is_zero():
            out.append(ZERO)
            continue
        if l % 2:
            c = -c
        bb = falling_bal(2 * l + 1, l + 1).exact_div(qint_bal(1))
        out.append((c * bb).exact_div(pochhammer(l)))
    return HabiroElem(N, out)


def poincare_series(N=DEFAULT_DEPTH):
    """J of the Poincare homology sphere as the one-variable series
    sum_n q^n (1-q^(n+1))...(1-q^(2n+1))/(1-q)."""
    out = []
    for n in range(N):
        prod = ONE
        for i in range(n + 1, 2 * n + 2):
            prod = prod * (1 - q_pow(i))
        c = (q_pow(n) * prod).exact_div(ONE - q_pow(1))
        out.append(c.exact_div(pochhammer(n)))
    return HabiroElem(N, out)


def mirror(x):
    """J of the orientation-reversed manifold: the bar involution."""
    return x.conj()


def connected_sum(x, y):
    return x * y


# -- the two-variable knot invariant ------------------------------------------


class TwoVarKnot:
    """Truncation of the two-variable knot invariant in the sigma basis:
    coefficient n is the knot's value on P''_n, a Laurent polynomial."""

    __slots__ = ("depth", "coeffs")

    def __init__(self, depth, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != depth:
            raise ValueError("coefficient count does not match depth")
        self.depth = depth
        self.coeffs = tuple(coeffs)

    def coeff(self, n):
        return self.coeffs[n]

    def __eq__(self, other):
        return (isinstance(other, TwoVarKnot) and self.depth == other.depth
                and self.coeffs == other.coeffs)

    def __repr__(self):
        bits = [f"({c.to_str()})*s_{n}" for n, c in enumerate(self.coeffs)
                if not c.is_zero()]
        return f"TwoVarKnot[depth {self.depth}](" + (" + ".join(bits) or "0") \
            + ")"

    def to_json(self):
        return {"depth": self.depth,
                "coeffs": [c.to_json() for c in self.coeffs]}


def knot_borromean(i, j, N=DEFAULT_DEPTH):
    """The knot K_{i,j} (from the Borromean rings by -1/i and -1/j
    surgery on two components): coefficient l is (-1)^l w_{i,l} w_{j,l}."""
    out = []
    for l in range(N):
        c = omega_coeff(i, l) * omega_coeff(j, l)
        if l % 2:
            c = -c
        out.append(c)
    return TwoVarKnot(N, out)


def reduced_jones(d, N=DEFAULT_DEPTH):
    """Two-variable invariant of a knot diagram, framing-corrected to 0."""
    if d.component_count != 1:
        raise NotAKnot(f"{d.component_count} components")
    w = linking_data(d)[0][0]
    out = []
    for n in range(N):
        acc = ZERO
        for a, c in sorted(_p_in_v(n).items()):
            acc = acc + c * colored_jones(d, (a,)) * twist_eigen(a, -w)
        out.append(acc.exact_div(falling_bal(2 * n + 1, 2 * n)))
    return TwoVarKnot(N, out)


def theta(x, i):
    """Specialization t -> q^i: the normalized (i-1)-colored Jones
    polynomial.  Symmetric in i -> -i; i must be nonzero."""
    if i == 0:
        raise ValueError("use theta0 for the i = 0 specialization")
    a = abs(i)
    if a > x.depth:
        raise DepthExceeded(f"depth {x.depth} < |i| = {a}")
    acc = ZERO
    fac = ONE
    for k in range(a):
        if k:
            fac = fac * (q_pow(i) + q_pow(-i) - q_pow(k) - q_pow(-k))
        acc = acc + x.coeffs[k] * fac
    return acc


def theta0(x):
    """The unified Kashaev invariant: t -> 1, with the k-th sigma value
    (-1)^k q^(-k(k+1)/2) (q)_k^2 contributing one (q)_k to slot k."""
    out = []
    for k, c in enumerate(x.coeffs):
        c = c * pochhammer(k) * q_pow(-k * (k + 1) // 2)
        if k % 2:
            c = -c
        out.append(c)
    return HabiroElem(x.depth, out)


# -- WRT invariants at roots of unity -----------------------------------------


def _phi_poly_coeffs(r):
    phi = cyclotomic(r)
    return tuple(phi.q_coeff(k) for k in range(phi.max // 4 + 1))


@lru_cache(maxsize=None)
def _unknot_I(r, sign):
    """sum_c [c+1]^2 * (twist on V_c)^sign, reduced mod Phi_4r over Q."""
    acc = ZERO
    for c in range(r - 1):
        acc = acc + qnum(c + 1) * qnum(c + 1) * twist_eigen(c, sign)
    return reduce_mod(acc, _phi_poly_coeffs(4 * r), QQ, "u")


def _solve_rational(cols, target, rows, nvars):
    """Solve sum_j cols[j] * t_j = target over Q; None if inconsistent."""
    a = [[Fraction(cols[j][i]) for j in range(nvars)] + [Fraction(target[i])]
         for i in range(rows)]
    pivots = []
    rank = 0
    for col in range(nvars):
        piv = next((r for r in range(rank, rows) if a[r][col] != 0), None)
        if piv is None:
            pivots.append(None)
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for rr in range(rows):
            if rr != rank and a[rr][col] != 0:
                f = a[rr][col]
                a[rr] = [x - f * y for x, y in zip(a[rr], a[rank])]
        pivots.append(rank)
        rank += 1
    for r in range(rows):
        if all(a[r][j] == 0 for j in range(nvars)) and a[r][nvars] != 0:
            return None
    sol = [Fraction(0)] * nvars
    for col, pr in enumerate(pivots):
        if pr is not None:
            sol[col] = a[pr][nvars]
    return sol


def wrt(pres, r):
    """The WRT invariant at a primitive r-th root of unity.

    Computed exactly in Q[x]/(Phi_4r(x)) with x standing for q^(1/4),
    then rewritten as an element of Q[q]/(Phi_r(q)) through q = x^4;
    failure of that rewriting raises NotInQSubring.  r = 1 gives 1.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if r == 1:
        return 1
    d, fr = _diagram_form(pres)
    _check_admissible(d, fr)
    mod4 = list(_phi_poly_coeffs(4 * r))
    if d is None:
        tau = ModPoly.constant(QQ, mod4, 1)
    else:
        total = ZERO
        for colors in product(range(r - 1), repeat=d.component_count):
            w = ONE
            for c, f in zip(colors, fr):
                w = w * qnum(c + 1) * twist_eigen(c, f)
            total = total + w * colored_jones(d, colors)
        tau = reduce_mod(total, mod4, QQ, "u")
    plus = sum(1 for f in fr if f == 1)
    minus = len(fr) - plus
    for count, sign in ((plus, 1), (minus, -1)):
        if not count:
            continue
        uval = _unknot_I(r, sign)
        if uval.is_zero():
            raise ZeroDenominator(
                f"framed unknot value vanishes mod Phi_{4 * r}")
        tau = tau * (uval.inverse() ** count)
    return _to_q_subring(tau, r)


def _to_q_subring(tau, r):
    """Rewrite an element of Q[x]/(Phi_4r) as a polynomial in q = x^4."""
    mod4 = tau.modulus
    rows = len(mod4) - 1
    phir = _phi_poly_coeffs(r)
    nvars = len(phir) - 1
    x4 = ModPoly.variable(QQ, mod4) ** 4
    cols = []
    p = ModPoly.constant(QQ, mod4, 1)
    for _ in range(nvars):
        cols.append(p.coeffs)
        p = p * x4
    sol = _solve_rational(cols, tau.coeffs, rows, nvars)
    if sol is None:
        raise NotInQSubring("value is not a polynomial in q = x^4")
    return ModPoly(QQ, phir, sol)


def eval_root_q(x, r):
    """eval_root lifted to the same ring wrt returns, for comparisons."""
    val = eval_root(x, r)
    if r == 1:
        return ModPoly(QQ, _phi_poly_coeffs(1), [val])
    return ModPoly(QQ, _phi_poly_coeffs(r), list(val.coeffs))


# -- Ohtsuki series and congruences -------------------------------------------


def ohtsuki(x, d):
    """The first d coefficients of the Taylor expansion at q = 1,
    as plain integers (lambda_0 = 1, lambda_1, ...)."""
    return [c.as_integer() for c in taylor(x, 1, d)]


def _inverse_series(denom, n):
    """First n coefficients of 1/denom(h) as exact rationals."""
    out = [Fraction(1, denom[0])]
    for k in range(1, n):
        s = Fraction(0)
        for i in range(1, min(k, len(denom) - 1) + 1):
            s += denom[i] * out[k - i]
        out.append(-s / denom[0])
    return out


def _binom(n, k):
    """Binomial coefficient for any integer n (generalized, exact)."""
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def congruence_report(lams):
    """Integrality and congruence relations satisfied by Ohtsuki
    coefficients of integral homology spheres.

    Takes the sequence lambda_0, lambda_1, ... (length >= 5) and reports
    pass/fail per relation without asserting anything.
    """
    lams = list(lams)
    if len(lams) < 5:
        raise ValueError("need at least 5 coefficients")
    l1, l2 = lams[1], lams[2]
    a = _inverse_series([6, 9, 5, 1], len(lams))
    b = _inverse_series([12, 30, 34, 21, 7, 1], len(lams))
    report = {"a": a[:4], "b": b[:4], "r68": [], "r70": []}
    for k in range(len(lams) - 1):
        s = sum((a[i] * lams[k - i + 1] for i in range(k + 1)), Fraction(0))
        report["r68"].append((k, s.denominator == 1))
    lp = {kk: lams[kk] - _binom(l1, kk) for kk in range(2, len(lams))}
    for k in range(len(lams) - 2):
        s = sum((b[i] * lp[k - i + 2] for i in range(k + 1)), Fraction(0))
        report["r70"].append((k, s.denominator == 1))
    report["lambda1_mod6"] = l1 % 6 == 0
    report["lambda2_half_lambda1_mod6"] = (l1 % 2 == 0
                                           and (l2 - l1 // 2) % 6 == 0)
    report["lambda2_3casson_mod12"] = (l1 % 6 == 0
                                       and (l2 - 3 * (l1 // 6)) % 12 == 0)
    report["all_pass"] = (all(ok for _, ok in report["r68"])
                          and all(ok for _, ok in report["r70"])
                          and report["lambda1_mod6"]
                          and report["lambda2_half_lambda1_mod6"]
                          and report["lambda2_3casson_mod12"])
    return report


# 2(z-1)Z[z] at a primitive 8th root z, in the basis (1, z, z^2, z^3):
# the columns are 4, 2*sqrt2 = 2z - 2z^3, 2 + 2i = 2 + 2z^2, and
# 2 + sqrt2 + sqrt(-2) = 2 + 2z.
_TAU8_LATTICE = ((4, 0, 0, 0), (0, 2, 0, -2), (2, 0, 2, 0), (2, 2, 0, 0))


def tilde_tau8_check(x, lam1):
    """Check the order-8 value against its known lattice constraint.

    Evaluates q^(-lambda_1) x at a primitive 8th root of unity, subtracts
    1 and reports whether the difference lies in the rank-4 lattice
    2(z-1)Z[z] (a theorem) and in the smaller span of 4 and 2*sqrt2
    (a conjecture; reported, never asserted).
    """
    if x.depth < 8:
        raise DepthExceeded(f"depth {x.depth} < 8")
    val = eval_root(x * q_pow(-lam1), 8)
    diff = [int(c) for c in val.coeffs]
    diff[0] -= 1
    coords = _solve_rational([list(g) for g in _TAU8_LATTICE], diff, 4, 4)
    in_lattice = coords is not None and all(c.denominator == 1
                                            for c in coords)
    in_span = (diff[2] == 0 and diff[1] == -diff[3]
               and diff[1] % 2 == 0 and diff[0] % 4 == 0)
    return {"difference": diff,
            "coords": coords if in_lattice else None,
            "in_lattice": in_lattice,
            "conjectured_span": in_span}
