"""Interpolation, products, Chevalley-Monk, transition, localization, and the
formal identity checks (invariance, decomposition).

The Schubert polynomials form a basis of Lambda[x,y] over Z[y]; coefficients
are recovered by a_w = eta(del_w^x f).  The support is discovered by a DFS
through the nonvanishing images del_w f (the operators compose in the
nil-Coxeter monoid, so each node is path-independent and children with zero
image prune exactly).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .basepoly import BasePoly, Var
from .lambdapoly import (ChernSeries, LambdaPoly, eta, gamma_poly, omega,
                         schur_det, series_a, substitute, theta)
from .permutations import (Permutation, bruhat_covers_right, bruhat_leq,
                           is_vexillary, perm_to_triple, transition_data)
from .schubert import (classical_xminusy, del_x, del_y, schubert,
                       schubert_vexillary, twisted)


# ---------------------------------------------------------------------------
# Interpolation
# ---------------------------------------------------------------------------

def _letter_candidates(g: LambdaPoly) -> set[int]:
    """Indices i with del_i^x(g) possibly nonzero."""
    out: set[int] = set()
    xs = g.indices("x")
    for i in xs:
        out.add(i)
        out.add(i - 1)
    if g.has_c():
        out.add(0)
    return out


def interpolate(f: LambdaPoly, verify: str = "auto") -> dict[Permutation, BasePoly]:
    """Coefficients a_w(y) with f = sum a_w * S_w; a_w = eta(del_w^x f).

    verify: 'full' re-checks the identity with the enriched polynomials,
    'classical' checks the two classical specializations that determine f,
    'auto' = 'full' (kept as a knob), 'off' skips (the DFS is exhaustive).
    """
    coeffs: dict[Permutation, BasePoly] = {}
    seen: set[Permutation] = set()
    stack = [(Permutation.identity(), f)]
    seen.add(Permutation.identity())
    while stack:
        w, g = stack.pop()
        a = eta(g)
        if a:
            coeffs[w] = a
        for i in _letter_candidates(g):
            nw = w.left_s(i)
            if nw in seen or nw.length() < w.length():
                continue
            ng = del_x(i, g)
            if ng:
                seen.add(nw)
                stack.append((nw, ng))
    if verify == "auto":
        verify = "full"
    if verify == "full":
        total = LambdaPoly.zero()
        for w, a in coeffs.items():
            total = total + schubert(w) * a
        if total != f:
            raise AssertionError("interpolation expansion failed to reproduce f")
    elif verify == "classical":
        _verify_classical(f, coeffs)
    elif verify != "off":
        raise ValueError(f"unknown verify mode {verify!r}")
    return coeffs


def _classical_image(f: LambdaPoly, m: int) -> BasePoly:
    """gamma^m followed by c -> 0: c_k goes to [prod (1+y_j)/(1-x_i)]_k over
    m shifted variables, x_i -> x_{i+m}, y_j -> y_{j+m}."""
    bound = max(f.max_c_weight(), 0)
    ser = series_a(m, m, bound)
    shifted: dict[Var, BasePoly] = {}
    for i in f.indices("x"):
        shifted[("x", i)] = BasePoly.x(i + m)
    for j in f.indices("y"):
        shifted[("y", j)] = BasePoly.y(j + m)
    return substitute(f, ser, shifted).to_base()


def _verify_classical(f: LambdaPoly, coeffs: dict[Permutation, BasePoly]):
    """Check the expansion under the faithful classical specializations.

    With m at least deg(f)/2 and large enough that every support permutation
    shifts into S_+, the map gamma^m . (c -> 0) is injective in the relevant
    degrees, and on Schubert polynomials it evaluates to classical double
    Schubert polynomials; two consecutive m are checked.
    """
    d = max(f.degree(), 0)
    min_supp = min((w.lo for w in coeffs if not w.is_identity()), default=1)
    min_supp = min(min_supp, *(list(f.indices("x")) + [1]))
    m0 = max((d + 1) // 2, 1 - min_supp, 1)
    for m in (m0, m0 + 1):
        lhs = _classical_image(f, m)
        rhs = BasePoly.zero()
        for w, a in coeffs.items():
            wa = a.shift_indices(m, kinds=("y",))
            rhs = rhs + classical_xminusy(w.gamma(m)) * wa
        if lhs != rhs:
            raise AssertionError(
                f"interpolation expansion failed the classical check at shift {m}")


def product_structure(u: Permutation, v: Permutation,
                      verify: str = "auto") -> dict[Permutation, BasePoly]:
    """Structure constants: S_u * S_v = sum c_{uv}^w S_w with c in Z[y]."""
    return interpolate(schubert(u) * schubert(v), verify=verify)


# ---------------------------------------------------------------------------
# Chevalley-Monk
# ---------------------------------------------------------------------------

def monk(k: int, w: Permutation) -> dict[Permutation, BasePoly]:
    """S_{s_k} * S_w assembled combinatorially:
    sum of covers w t_{ij} (i <= k < j) plus (sum_{i<=k} y_i - y_{w(i)}) S_w."""
    out: dict[Permutation, BasePoly] = {}
    for (_, _, wt) in bruhat_covers_right(w, k=k):
        out[wt] = out.get(wt, BasePoly.zero()) + BasePoly.one()
    lin = BasePoly.zero()
    for i in range(w.lo, min(w.hi, k) + 1):
        if w(i) != i:
            lin = lin + BasePoly.y(i) - BasePoly.y(w(i))
    if lin:
        out[w] = out.get(w, BasePoly.zero()) + lin
    return {p: c for p, c in out.items() if c}


def monk_corollary_check(k: int, w: Permutation) -> bool:
    """(x_k + y_{w(k)}) S_w = sum_{k<j} S_{w t_{kj}} - sum_{i<k} S_{w t_{ik}}."""
    lhs = schubert(w) * (BasePoly.x(k) + BasePoly.y(w(k)))
    rhs = LambdaPoly.zero()
    for (i, j, wt) in bruhat_covers_right(w, k=k):
        if i == k:
            rhs = rhs + schubert(wt)
    for (i, j, wt) in bruhat_covers_right(w, k=k - 1):
        if j == k:
            rhs = rhs - schubert(wt)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Transition
# ---------------------------------------------------------------------------

@dataclass
class Transition:
    r: int
    s: int
    v: Permutation
    covers: list[Permutation]


def transition(w: Permutation) -> Transition:
    r, s, v, covers = transition_data(w)
    return Transition(r, s, v, covers)


def transition_check(w: Permutation) -> bool:
    """S_w = (x_r + y_{w(s)}) S_v + sum of cover polynomials, exactly."""
    t = transition(w)
    rhs = schubert(t.v) * (BasePoly.x(t.r) + BasePoly.y(w(t.s)))
    for c in t.covers:
        rhs = rhs + schubert(c)
    return schubert(w) == rhs


def transition_expand(w: Permutation, max_depth: int = 64):
    """Recursive expansion into dominant-translate leaves.

    Returns (leaves, capped) where leaves is a list of (coefficient, leaf)
    with the coefficient a product of (x_i + y_j) factors; capped reports
    whether the depth limit interrupted the recursion.
    """
    leaves: list[tuple[BasePoly, Permutation]] = []
    capped = False

    def rec(u: Permutation, coeff: BasePoly, depth: int):
        nonlocal capped
        if u.is_dominant_translate():
            leaves.append((coeff, u))
            return
        if depth >= max_depth:
            capped = True
            leaves.append((coeff, u))
            return
        r, s, v, covers = transition_data(u)
        rec(v, coeff * (BasePoly.x(r) + BasePoly.y(u(s))), depth + 1)
        for c in covers:
            rec(c, coeff, depth + 1)

    rec(w, BasePoly.one(), 0)
    return leaves, capped


def transition_value(w: Permutation, max_depth: int = 64) -> LambdaPoly:
    """Evaluate S_w through the transition tree with vexillary leaf formulas."""
    leaves, capped = transition_expand(w, max_depth)
    if capped:
        raise RuntimeError(f"transition recursion for {w} hit the depth cap")
    out = LambdaPoly.zero()
    for coeff, leaf in leaves:
        out = out + schubert_vexillary(perm_to_triple(leaf), check=False) * coeff
    return out


# ---------------------------------------------------------------------------
# Localization
# ---------------------------------------------------------------------------

def localize(v: Permutation, f: LambdaPoly) -> BasePoly:
    """phi_v: x_i -> -y_{v(i)} and c -> prod_{i<=0, i in v(Z>0)} (1+y_i)
    / prod_{j>0, j in v(Z<=0)} (1+y_j); lands in Z[y] (z passes through)."""
    upper = [v(a) for a in range(max(v.lo, 1), v.hi + 1) if v(a) <= 0]
    lower = [v(a) for a in range(v.lo, min(v.hi, 0) + 1) if v(a) >= 1]
    bound = max(f.max_c_weight(), 0)
    ser = ChernSeries.one(bound)
    for i in upper:
        ser = ser * ChernSeries.linear(BasePoly.y(i), bound)
    for j in lower:
        ser = ser * ChernSeries.linear(BasePoly.y(j), bound).inverse()
    images: dict[Var, BasePoly] = {("x", i): -BasePoly.y(v(i))
                                   for i in f.indices("x")}
    return substitute(f, ser, images).to_base()


def phi_compat_check(i: int, f: LambdaPoly, sample: list[Permutation]) -> bool:
    """A_i(Phi f) = Phi(del_i^x f) at each sampled v, with exact division by
    y_{v(i)} - y_{v(i+1)}.

    A_i(f)(v) = (f(v s_i) - f(v)) / (y_{v(i)} - y_{v(i+1)}): the reflection
    multiplies on the side that swaps the positions i, i+1 of v (matching
    the divisor; the other side fails already for f = S_{s_1} at v = s_0).
    """
    df = del_x(i, f)
    for v in sample:
        lhs_num = localize(v.right_s(i), f) - localize(v, f)
        a, b = v(i), v(i + 1)
        quotient = lhs_num.divide_exact_linear(("y", a), ("y", b))
        if quotient != localize(v, df):
            return False
    return True


# ---------------------------------------------------------------------------
# Twisted invariance
# ---------------------------------------------------------------------------

def invariance_check(w: Permutation) -> bool:
    """Both invariance identities for the twisted polynomial: shifting x and
    z together fixes it, and so does twisting c by theta_{-v} while shifting
    y and z by v (the theta-form; the twist direction is forced by the
    substitution identity S_w(theta_v(c), x, y) = S_w(c, x-v, y+v))."""
    tw = twisted(w)
    v = BasePoly.var("t", 0)
    shift: dict[Var, BasePoly] = {("z", 0): BasePoly.z() + v}
    for i in tw.indices("x"):
        shift[("x", i)] = BasePoly.x(i) + v
    if substitute(tw, None, shift) != tw:
        return False
    bound = max(tw.max_c_weight(), 0)
    comps = [LambdaPoly.one()]
    for k in range(1, bound + 1):
        acc = LambdaPoly.zero()
        for i in range(1, k + 1):
            b = comb(k - 1, i - 1)
            acc = acc + LambdaPoly.schur((i,), ((-v) ** (k - i)) * b)
        comps.append(acc)
    theta_ser = ChernSeries(comps, bound)
    shift2: dict[Var, BasePoly] = {("z", 0): BasePoly.z() + v}
    for j in tw.indices("y"):
        shift2[("y", j)] = BasePoly.y(j) + v
    return substitute(tw, theta_ser, shift2) == tw


# ---------------------------------------------------------------------------
# Decomposition over formal Chern factors
# ---------------------------------------------------------------------------

def _c_expansion(f: LambdaPoly) -> dict[tuple[int, ...], BasePoly]:
    """f as a combination of c-monomials with BasePoly coefficients."""
    from .lambdapoly import jacobi_trudi
    out: dict[tuple[int, ...], BasePoly] = {}
    for lam, p in f.terms.items():
        for mono, n in jacobi_trudi(lam):
            q = out.get(mono, BasePoly.zero()) + p * n
            if q:
                out[mono] = q
            else:
                out.pop(mono, None)
    return out


def _formal_component(kinds: tuple[str, ...], k: int) -> BasePoly:
    """Component k of the product of formal series of the given kinds."""
    out = BasePoly.zero()

    def rec(rem: int, idx: int, acc: BasePoly):
        nonlocal out
        if idx == len(kinds):
            if rem == 0:
                out = out + acc
            return
        for e in range(rem + 1):
            piece = acc if e == 0 else acc * BasePoly.var(kinds[idx], e)
            rec(rem - e, idx + 1, piece)

    rec(k, 0, BasePoly.one())
    return out


def _eval_formal(f: LambdaPoly, ckinds: tuple[str, ...],
                 var_map: dict[Var, BasePoly]) -> BasePoly:
    """f with c -> product of formal series and variables substituted."""
    out = BasePoly.zero()
    for mono, p in _c_expansion(f).items():
        term = p.substitute(var_map)
        for k in mono:
            term = term * _formal_component(ckinds, k)
        out = out + term
    return out


def _length_additive_right_factors(w: Permutation) -> list[tuple[Permutation, Permutation]]:
    """All (v, u) with v * u = w and ell(v) + ell(u) = ell(w)."""
    if w.is_identity():
        return [(w, w)]
    from itertools import permutations as itp
    lo, hi = w.lo, w.hi
    n = hi - lo + 1
    out = []
    for vals in itp(range(lo, hi + 1)):
        u = Permutation(lo, vals)
        if u.length() > w.length():
            continue
        v = w * u.inverse()
        if v.length() + u.length() == w.length():
            out.append((v, u))
    return out


def decompose_check(w: Permutation) -> bool:
    """S_w(a.b, x, y) = sum_{v.u = w, lengths add} S_u(a,x,t) S_v(b,-t,y),
    with a, b independent formal Chern series; also the three-factor form."""
    lhs = _eval_formal(schubert(w), ("A", "B"), {})
    rhs = BasePoly.zero()
    for v, u in _length_additive_right_factors(w):
        fu, fv = schubert(u), schubert(v)
        mu = {("y", j): BasePoly.var("t", j) for j in fu.indices("y")}
        mv = {("x", i): -BasePoly.var("t", i) for i in fv.indices("x")}
        rhs = rhs + _eval_formal(fu, ("A",), mu) * _eval_formal(fv, ("B",), mv)
    if lhs != rhs:
        return False
    # three factors: w = v . t . u with lengths additive
    lhs3 = _eval_formal(schubert(w), ("A", "D", "B"), {})
    rhs3 = BasePoly.zero()
    for vt, u in _length_additive_right_factors(w):
        fu = schubert(u)
        mu = {("y", j): BasePoly.var("s", j) for j in fu.indices("y")}
        pu = _eval_formal(fu, ("A",), mu)
        for v, t in _length_additive_right_factors(vt):
            ft, fv = schubert(t), schubert(v)
            mt: dict[Var, BasePoly] = {("x", i): -BasePoly.var("s", i)
                                       for i in ft.indices("x")}
            mt.update({("y", j): BasePoly.var("t", j) for j in ft.indices("y")})
            mv = {("x", i): -BasePoly.var("t", i) for i in fv.indices("x")}
            rhs3 = rhs3 + pu * _eval_formal(ft, ("D",), mt) * _eval_formal(fv, ("B",), mv)
    return lhs3 == rhs3
