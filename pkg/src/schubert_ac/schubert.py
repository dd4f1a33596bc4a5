"""Enriched Schubert polynomials for permutations of the integers.

Divided differences del_x / del_y act on Lambda[x,y,z]; the index-0 operator
also moves the c-generators, expanding S_lam(c) over ribbon removals.  The
polynomial of w is built from the longest element of its support window
(dominant, hence vexillary, with a determinantal seed) by applying x-divided
differences; results are cached with one derivation per translation orbit.
"""
from __future__ import annotations

import hashlib
import json
import os
from functools import lru_cache

from .basepoly import BasePoly, Var
from .lambdapoly import (ChernSeries, LambdaPoly, gamma_poly, omega,
                         schur_det, series_a, substitute)
from .partitions import Partition, check_partition, conjugate, ribbon_removals
from .permutations import (Permutation, TripleA, is_vexillary, perm_to_triple,
                           transition_data, triple_to_partition,
                           triple_to_perm, w_lambda)

# ---------------------------------------------------------------------------
# Divided difference operators
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _del0_schur(lam: Partition, kind: str, twisted: bool) -> LambdaPoly:
    """Index-0 divided difference of S_lam(c): ribbon-removal expansion.

    For the x-operator the removed ribbon contributes
    x_1^v (-x_0)^h (x_1-x_0)^{k-1}; in twisted mode x_1 -> x_1 - z and
    -x_0 -> z - x_0.  The y-operator is conjugate to the x-operator by the
    duality map (omega on c, x <-> y), which exchanges the roles of v and h:
    the coefficient is y_1^h (-y_0)^v (y_1-y_0)^{k-1}, and the twist leaves
    it unchanged (x -> x - z commutes with every del^y).
    """
    v1 = BasePoly.var(kind, 1)
    v0 = BasePoly.var(kind, 0)
    if twisted and kind == "x":
        a, b = v1 - BasePoly.z(), BasePoly.z() - v0
    else:
        a, b = v1, -v0
    diff = a + b  # equals v1 - v0 in both modes
    out = LambdaPoly.zero()
    for mu, v, h, k in ribbon_removals(lam):
        if kind == "y":
            v, h = h, v
        out = out + LambdaPoly.schur(mu, (a ** v) * (b ** h) * (diff ** (k - 1)))
    return out


def _del_general(f: LambdaPoly, i: int, kind: str, twisted: bool) -> LambdaPoly:
    if i != 0:
        return f.map_coeffs(lambda p: p.divided_difference(kind, i))
    out = LambdaPoly.zero()
    for lam, p in f.terms.items():
        dp = p.divided_difference(kind, 0)
        if dp:
            out = out + LambdaPoly.schur(lam, dp)
        if lam:
            sp = p.swap_adjacent(kind, 0)
            out = out + _del0_schur(lam, kind, twisted) * sp
    return out


def del_x(i: int, f: LambdaPoly, twisted: bool = False) -> LambdaPoly:
    """Divided difference in x_i, x_{i+1}; at i=0 the c-generators move too."""
    return _del_general(f, i, "x", twisted)


def del_y(i: int, f: LambdaPoly, twisted: bool = False) -> LambdaPoly:
    return _del_general(f, i, "y", twisted)


def del_word_x(word, f: LambdaPoly, twisted: bool = False) -> LambdaPoly:
    """Apply the full operator of a reduced word, first letter first."""
    for i in word:
        if not f:
            return f
        f = del_x(i, f, twisted)
    return f


def s0_action(f: LambdaPoly, kind: str = "x") -> LambdaPoly:
    """The ring automorphism s_0 via the defining relation s_0 = 1 - (v_0 - v_1) del_0."""
    v0, v1 = BasePoly.var(kind, 0), BasePoly.var(kind, 1)
    return f - _del_general(f, 0, kind, False) * (v0 - v1)


# ---------------------------------------------------------------------------
# Vexillary determinantal formulas
# ---------------------------------------------------------------------------

def _triple_series(tau: TripleA, bound: int) -> list[ChernSeries]:
    """The series c(k) = c * a(p_i, q_i), i minimal with k_i >= k."""
    out = []
    gen = ChernSeries.generic(bound)
    cache: dict[tuple[int, int], ChernSeries] = {}
    for k in range(1, (tau.k[-1] if len(tau) else 0) + 1):
        i = next(t for t in range(len(tau)) if tau.k[t] >= k)
        pq = (tau.p[i], tau.q[i])
        if pq not in cache:
            cache[pq] = gen * series_a(pq[0], pq[1], bound)
        out.append(cache[pq])
    return out


def _a_series(tau: TripleA, bound: int) -> list[ChernSeries]:
    out = []
    cache: dict[tuple[int, int], ChernSeries] = {}
    for k in range(1, (tau.k[-1] if len(tau) else 0) + 1):
        i = next(t for t in range(len(tau)) if tau.k[t] >= k)
        pq = (tau.p[i], tau.q[i])
        if pq not in cache:
            cache[pq] = series_a(pq[0], pq[1], bound)
        out.append(cache[pq])
    return out


def vexillary_det(tau: TripleA) -> LambdaPoly:
    """S_{lam(tau)}(c(1), ..., c(k_s)): the determinantal formula."""
    lam = triple_to_partition(tau)
    if not lam:
        return LambdaPoly.one()
    bound = lam[0] + len(lam)
    return schur_det(_triple_series(tau, bound), lam)


def vexillary_skew(tau: TripleA) -> LambdaPoly:
    """Skew expansion sum_mu S_{lam/mu}(a(1),...) S_mu(c)."""
    from .partitions import subpartitions
    lam = triple_to_partition(tau)
    if not lam:
        return LambdaPoly.one()
    bound = lam[0] + len(lam)
    aser = _a_series(tau, bound)
    out = LambdaPoly.zero()
    for mu in subpartitions(lam):
        coeff = schur_det(aser, lam, mu)
        if coeff:
            out = out + LambdaPoly.schur(mu, coeff.to_base())
    return out


def schubert_vexillary(tau: TripleA, check: bool = True) -> LambdaPoly:
    """Vexillary Schubert polynomial; determinant and skew routes must agree."""
    det = vexillary_det(tau)
    if check:
        skew = vexillary_skew(tau)
        if det != skew:
            raise AssertionError(f"determinant and skew expansion differ for {tau}")
    return det


def multivariate_schur(lam) -> LambdaPoly:
    """Schubert polynomial of w_lam (all p_i = 0); lies in Lambda[y]."""
    lam = check_partition(lam)
    if not lam:
        return LambdaPoly.one()
    tau = perm_to_triple(w_lambda(lam))
    assert all(p == 0 for p in tau.p)
    out = schubert_vexillary(tau)
    assert substitute(out, None, {("y", j): BasePoly.zero()
                                  for j in out.indices("y")}) == LambdaPoly.schur(lam)
    return out


# ---------------------------------------------------------------------------
# The Schubert polynomial engine
# ---------------------------------------------------------------------------

# Windows up to this size use the longest-element seed + divided differences;
# wider supports (reached through interpolation of large products) use the
# determinantal formula when vexillary and the transition recursion otherwise,
# since the seed there would have length O(window^2).
_MAX_SEED_WINDOW = 5

_cache: dict[Permutation, LambdaPoly] = {}


def clear_cache():
    _cache.clear()


def _disk_cache_dir() -> str | None:
    return os.environ.get("SCHUBERT_CACHE_DIR") or None


def _disk_key(w: Permutation) -> str:
    return hashlib.sha256(f"schubert:{w.lo}:{w.vals}".encode()).hexdigest()


def _disk_load(w: Permutation) -> LambdaPoly | None:
    d = _disk_cache_dir()
    if not d:
        return None
    path = os.path.join(d, _disk_key(w) + ".json")
    try:
        with open(path) as fh:
            obj = json.load(fh)
        if obj.get("key") != f"{w.lo}:{list(w.vals)}":
            return None
        from .serialize import poly_from_obj
        return poly_from_obj(obj["poly"])
    except (OSError, ValueError, KeyError):
        return None


def _disk_store(w: Permutation, f: LambdaPoly):
    d = _disk_cache_dir()
    if not d:
        return
    try:
        os.makedirs(d, exist_ok=True)
        from .serialize import poly_to_obj
        path = os.path.join(d, _disk_key(w) + ".json")
        tmp = path + f".tmp{os.getpid()}"
        with open(tmp, "w") as fh:
            json.dump({"key": f"{w.lo}:{list(w.vals)}",
                       "poly": poly_to_obj(f)}, fh)
        os.replace(tmp, path)
    except OSError:
        pass


def longest_element(lo: int, hi: int) -> Permutation:
    return Permutation(lo, tuple(range(hi, lo - 1, -1)))


def schubert_direct(w: Permutation, cache: dict | None = None) -> LambdaPoly:
    """Seed-and-descend construction inside w's own support window, with no
    translation normalization (used to keep back-stability tests honest)."""
    if cache is None:
        cache = {}
    return _window_route(w, cache)


def _window_route(w: Permutation, cache: dict) -> LambdaPoly:
    got = cache.get(w)
    if got is not None:
        return got
    if w.is_identity():
        return LambdaPoly.one()
    lo, hi = w.lo, w.hi
    w0 = longest_element(lo, hi)
    if w == w0:
        val = vexillary_det(perm_to_triple(w))
    else:
        i = next(i for i in range(lo, hi) if w(i) < w(i + 1))
        val = del_x(i, _window_route(w.right_s(i), cache))
    cache[w] = val
    return val


def _transition_route(w: Permutation) -> LambdaPoly:
    """Descend by transition steps to vexillary leaves (wide sparse windows).

    The skew-expansion form of the leaf formula is used: its determinants
    have pure x,y entries, which stay small even for wide supports.
    """
    if is_vexillary(w):
        return vexillary_skew(perm_to_triple(w))
    r, s, v, covers = transition_data(w)
    lin = BasePoly.x(r) + BasePoly.y(w(s))
    out = schubert(v) * lin
    for c in covers:
        out = out + schubert(c)
    return out


def schubert(w: Permutation) -> LambdaPoly:
    """The Schubert polynomial of w, homogeneous of degree ell(w)."""
    got = _cache.get(w)
    if got is not None:
        return got
    if w.is_identity():
        return LambdaPoly.one()
    narrow = w.hi - w.lo + 1 <= _MAX_SEED_WINDOW
    m = w.lo - 1  # translation with support starting at 1
    if narrow and m != 0:
        # one seed derivation per translation orbit; translate the result
        base = schubert(w.gamma(-m))
        val = gamma_poly(base, m)
    else:
        val = _disk_load(w)
        if val is None:
            val = _window_route(w, _cache) if narrow else _transition_route(w)
            _disk_store(w, val)
    _cache[w] = val
    return val


def twisted(w: Permutation) -> LambdaPoly:
    """The twisted polynomial: every x_i replaced by x_i - z."""
    f = schubert(w)
    images: dict[Var, BasePoly] = {("x", i): BasePoly.x(i) - BasePoly.z()
                                   for i in f.indices("x")}
    return substitute(f, None, images)


def stanley(w: Permutation) -> LambdaPoly:
    """All x and y variables set to 0; an element of Lambda."""
    f = schubert(w)
    images: dict[Var, BasePoly] = {}
    for i in f.indices("x"):
        images[("x", i)] = BasePoly.zero()
    for j in f.indices("y"):
        images[("y", j)] = BasePoly.zero()
    return substitute(f, None, images)


# ---------------------------------------------------------------------------
# Stanley coefficients by tableau enumeration
# ---------------------------------------------------------------------------

def _word_to_perm(word) -> Permutation | None:
    """Evaluate letters as a functional product s_{i_1} o ... o s_{i_l},
    returning None if the word is not reduced."""
    w = Permutation.identity()
    n = 0
    for i in reversed(word):
        w = Permutation.s(i) * w
        n += 1
        if w.length() != n:
            return None
    return w


def fgrs_coefficients(w: Permutation) -> dict[Partition, int]:
    """j_lam^w: tableaux of shape lam, strictly increasing in rows and
    columns, whose row reading word (rows top to bottom, each right to left)
    is a reduced word for w."""
    from .partitions import partitions_of
    n = w.length()
    if n == 0:
        return {(): 1}
    letters = list(range(w.lo, w.hi))
    out: dict[Partition, int] = {}
    for lam in partitions_of(n):
        count = 0
        boxes = [(i, j) for i, a in enumerate(lam) for j in range(a)]

        def rec(idx: int, filling: dict):
            nonlocal count
            if idx == len(boxes):
                word = []
                for i, a in enumerate(lam):
                    word.extend(filling[(i, j)] for j in range(a - 1, -1, -1))
                if _word_to_perm(word) == w:
                    count += 1
                return
            (i, j) = boxes[idx]
            lo = w.lo
            if j > 0:
                lo = max(lo, filling[(i, j - 1)] + 1)
            if i > 0:
                lo = max(lo, filling[(i - 1, j)] + 1)
            for a in letters:
                if a < lo:
                    continue
                filling[(i, j)] = a
                rec(idx + 1, filling)
                del filling[(i, j)]

        rec(0, {})
        if count:
            out[lam] = count
    total = LambdaPoly.zero()
    for lam, c in out.items():
        total = total + LambdaPoly.schur(lam, c)
    if total != stanley(w):
        raise AssertionError(f"tableau expansion disagrees with F_w for {w}")
    return out


# ---------------------------------------------------------------------------
# Classical double Schubert polynomials (c = 0 specializations)
# ---------------------------------------------------------------------------

_classical_cache: dict[Permutation, BasePoly] = {}


def _classical_pos(w: Permutation) -> BasePoly:
    """Classical double Schubert polynomial in Z[x_+, y_+] for w in S_+,
    by transition recursion with dominant leaves (convention S_{s_1}=x_1-y_1)."""
    got = _classical_cache.get(w)
    if got is not None:
        return got
    if w.is_identity():
        return BasePoly.one()
    assert w.lo >= 1
    if w.lo == 1 and w.is_dominant_translate():
        # genuinely dominant: the polynomial is the diagram product
        val = BasePoly.one()
        code = w.code()
        for t, c in enumerate(code):
            i = w.lo + t
            for j in range(1, c + 1):
                val = val * (BasePoly.x(i) - BasePoly.y(j))
    else:
        r, s, v, covers = transition_data(w)
        val = _classical_pos(v) * (BasePoly.x(r) - BasePoly.y(w(s)))
        for cv in covers:
            if cv.lo >= 1:
                val = val + _classical_pos(cv)
    _classical_cache[w] = val
    return val


def classical_double(w: Permutation) -> BasePoly:
    """Classical double Schubert polynomial of w in S_- x S_+ (Z[x, y]).

    The negative part is carried over by the involution x_i -> -x_{1-i},
    y_i -> -y_{1-i} from its positive mirror.
    """
    if not w.in_s_nonzero():
        raise ValueError(f"{w} moves the 0|1 cut; no classical polynomial")
    pos_map = {i: w(i) for i in range(max(w.lo, 1), w.hi + 1) if w(i) != i}
    neg_map = {i: w(i) for i in range(w.lo, min(w.hi, 0) + 1) if w(i) != i}
    v = Permutation.from_map(pos_map)
    u = Permutation.from_map(neg_map)
    val = _classical_pos(v)
    if not u.is_identity():
        mirror = _classical_pos(u.omega_inv())
        images: dict[Var, BasePoly] = {}
        for i in mirror.indices("x"):
            images[("x", i)] = -BasePoly.x(1 - i)
        for j in mirror.indices("y"):
            images[("y", j)] = -BasePoly.y(1 - j)
        val = val * mirror.substitute(images)
    return val


def classical_xminusy(w: Permutation) -> BasePoly:
    """Classical polynomial with y negated: the c=0 image of the enriched one."""
    f = classical_double(w)
    return f.substitute({("y", j): -BasePoly.y(j) for j in f.indices("y")})


def specialize_c_zero(f: LambdaPoly) -> BasePoly:
    """Set every c_k to 0."""
    return f.base_part()
