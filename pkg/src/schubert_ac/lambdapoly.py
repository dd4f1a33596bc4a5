"""The graded ring Lambda[x,y,z] with Lambda = Z[c_1,c_2,...] in Schur basis.

An element is stored as a finite sum  sum_lam p_lam(x,y,z) * S_lam(c)  with
BasePoly coefficients and no zero terms.  S_lam(c) = Det(c_{lam_i+j-i}) is
the Schur determinant in the generators c_k; products are computed by
expanding one factor into c-monomials (Jacobi-Trudi) and applying the Pieri
rule repeatedly, so the canonical Schur form is maintained exactly.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _itperms
from typing import Mapping, Sequence

from .basepoly import BasePoly, Var
from .partitions import (Partition, check_partition, conjugate, contains,
                         horizontal_strips, part, ribbon_removals)


class DegreeBoundError(ValueError):
    """A series operation was asked beyond its degree bound."""


def pieri(k: int, lam) -> list[Partition]:
    """Partitions nu with nu/lam a horizontal strip of size k (c_k * S_lam)."""
    if k < 1:
        raise ValueError("pieri needs k >= 1")
    return list(horizontal_strips(check_partition(lam), k))


@lru_cache(maxsize=None)
def jacobi_trudi(lam: Partition) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Expansion of S_lam as a Z-combination of c-monomials.

    Returns ((parts, coeff), ...) where parts is a sorted (desc) tuple of
    positive c-subscripts.  Leibniz expansion of Det(c_{lam_i+j-i}).
    """
    n = len(lam)
    if n == 0:
        return (((), 1),)
    out: dict[tuple[int, ...], int] = {}
    for sigma in _itperms(range(n)):
        parts = []
        ok = True
        sign = 1
        # parity of sigma
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            clen = 0
            jj = start
            while not seen[jj]:
                seen[jj] = True
                jj = sigma[jj]
                clen += 1
            if clen % 2 == 0:
                sign = -sign
        for i in range(n):
            e = lam[i] + sigma[i] - i
            if e < 0:
                ok = False
                break
            if e > 0:
                parts.append(e)
        if not ok:
            continue
        key = tuple(sorted(parts, reverse=True))
        out[key] = out.get(key, 0) + sign
    return tuple((m, c) for m, c in out.items() if c)


@lru_cache(maxsize=None)
def cmono_to_schur(parts: tuple[int, ...]) -> tuple[tuple[Partition, int], ...]:
    """Expand the c-monomial c_{parts[0]}...c_{parts[-1]} in the Schur basis."""
    acc: dict[Partition, int] = {(): 1}
    for k in parts:
        nxt: dict[Partition, int] = {}
        for lam, c in acc.items():
            for nu in horizontal_strips(lam, k):
                nxt[nu] = nxt.get(nu, 0) + c
        acc = nxt
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def schur_mult(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """S_lam * S_mu in the Schur basis (Littlewood-Richardson numbers)."""
    if sum(lam) > sum(mu):
        lam, mu = mu, lam
    out: dict[Partition, int] = {}
    for parts, coeff in jacobi_trudi(lam):
        acc: dict[Partition, int] = {mu: coeff}
        for k in parts:
            nxt: dict[Partition, int] = {}
            for shape, c in acc.items():
                for nu in horizontal_strips(shape, k):
                    nxt[nu] = nxt.get(nu, 0) + c
            acc = nxt
        for nu, c in acc.items():
            n = out.get(nu, 0) + c
            if n:
                out[nu] = n
            else:
                del out[nu]
    return tuple(sorted(out.items()))


class LambdaPoly:
    """Element of Lambda[x,y,z]; immutable; zero coefficients never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, BasePoly] | None = None, *, _trusted=False):
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = dict(terms)
        else:
            self.terms = {check_partition(l): p for l, p in terms.items() if p}

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "LambdaPoly":
        return _LZERO

    @staticmethod
    def one() -> "LambdaPoly":
        return _LONE

    @staticmethod
    def const(n: int) -> "LambdaPoly":
        return LambdaPoly.from_base(BasePoly.const(n))

    @staticmethod
    def from_base(p: BasePoly) -> "LambdaPoly":
        if not p:
            return _LZERO
        return LambdaPoly({(): p}, _trusted=True)

    @staticmethod
    def schur(lam, coeff: BasePoly | int = 1) -> "LambdaPoly":
        if isinstance(coeff, int):
            coeff = BasePoly.const(coeff)
        if not coeff:
            return _LZERO
        return LambdaPoly({check_partition(lam): coeff}, _trusted=True)

    @staticmethod
    def c(k: int) -> "LambdaPoly":
        """The generator c_k = S_(k); c_0 = 1."""
        if k < 0:
            return _LZERO
        if k == 0:
            return _LONE
        return LambdaPoly.schur((k,))

    # -- basics ------------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, BasePoly)):
            other = LambdaPoly.from_base(
                BasePoly.const(other) if isinstance(other, int) else other)
        return isinstance(other, LambdaPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((l, hash(p)) for l, p in self.terms.items()))

    def __repr__(self) -> str:
        from .serialize import poly_text
        return f"LambdaPoly({poly_text(self)})"

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> "LambdaPoly":
        other = _coerce(other)
        out = dict(self.terms)
        for l, p in other.terms.items():
            q = out.get(l)
            s = p if q is None else q + p
            if s:
                out[l] = s
            else:
                out.pop(l, None)
        return LambdaPoly(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly({l: -p for l, p in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> "LambdaPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LambdaPoly":
        return (-self) + _coerce(other)

    def __mul__(self, other) -> "LambdaPoly":
        if isinstance(other, int):
            if other == 0:
                return _LZERO
            return LambdaPoly({l: p * other for l, p in self.terms.items()}, _trusted=True)
        if isinstance(other, BasePoly):
            if not other:
                return _LZERO
            return LambdaPoly({l: p * other for l, p in self.terms.items()}, _trusted=True)
        out: dict[Partition, BasePoly] = {}
        for l1, p1 in self.terms.items():
            for l2, p2 in other.terms.items():
                base = p1 * p2
                if not base:
                    continue
                if not l1 and not l2:
                    expansion = (((), 1),)
                elif not l1:
                    expansion = ((l2, 1),)
                elif not l2:
                    expansion = ((l1, 1),)
                else:
                    expansion = schur_mult(l1, l2)
                for nu, m in expansion:
                    q = out.get(nu)
                    s = base * m if q is None else q + base * m
                    if s:
                        out[nu] = s
                    else:
                        out.pop(nu, None)
        return LambdaPoly(out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LambdaPoly":
        if n < 0:
            raise ValueError("negative power")
        result = _LONE
        for _ in range(n):
            result = result * self
        return result

    # -- structure ---------------------------------------------------------
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(l) + p.degree() for l, p in self.terms.items())

    def is_homogeneous(self) -> bool:
        from .basepoly import mono_degree
        degs = set()
        for l, p in self.terms.items():
            w = sum(l)
            degs.update(w + mono_degree(m) for m in p.terms)
        return len(degs) <= 1

    def homogeneous_degree(self) -> int:
        """Degree if homogeneous and nonzero, else raises."""
        if not self.terms or not self.is_homogeneous():
            raise ValueError("not a nonzero homogeneous element")
        return self.degree()

    def base_part(self) -> BasePoly:
        """Coefficient of S_(), i.e. the image under 'forget c-terms'."""
        return self.terms.get((), BasePoly.zero())

    def to_base(self) -> BasePoly:
        """The element as a BasePoly; raises if any S_lam (lam != ()) remains."""
        if any(l for l in self.terms):
            raise ValueError("element has nontrivial Schur terms")
        return self.base_part()

    def has_c(self) -> bool:
        return any(l for l in self.terms)

    def max_c_weight(self) -> int:
        return max((sum(l) for l in self.terms), default=0)

    def map_coeffs(self, fn) -> "LambdaPoly":
        """Apply fn to every coefficient (must be Z[x,y,z]-algebra-ish map)."""
        out = {l: fn(p) for l, p in self.terms.items()}
        return LambdaPoly({l: p for l, p in out.items() if p}, _trusted=True)

    def indices(self, kind: str) -> set[int]:
        out: set[int] = set()
        for p in self.terms.values():
            out |= p.indices(kind)
        return out


def _coerce(v) -> LambdaPoly:
    if isinstance(v, LambdaPoly):
        return v
    if isinstance(v, BasePoly):
        return LambdaPoly.from_base(v)
    if isinstance(v, int):
        return LambdaPoly.const(v)
    raise TypeError(f"cannot coerce {type(v)} to LambdaPoly")


_LZERO = LambdaPoly({}, _trusted=True)
_LONE = LambdaPoly({(): BasePoly.one()}, _trusted=True)


# ---------------------------------------------------------------------------
# Chern series
# ---------------------------------------------------------------------------

class ChernSeries:
    """Degree-truncated multiplicative series 1 + g_1 + ... + g_D.

    Components are homogeneous LambdaPoly of the indicated degree.  Asking
    for a component beyond the bound D raises DegreeBoundError rather than
    silently truncating.
    """

    __slots__ = ("comps", "bound")

    def __init__(self, comps: Sequence[LambdaPoly], bound: int | None = None):
        comps = list(comps)
        if bound is None:
            bound = len(comps) - 1
        if not comps or comps[0] != LambdaPoly.one():
            raise ValueError("a Chern series starts with component 1")
        while len(comps) <= bound:
            comps.append(LambdaPoly.zero())
        self.comps = tuple(comps[: bound + 1])
        self.bound = bound

    def component(self, k: int) -> LambdaPoly:
        if k < 0:
            return LambdaPoly.zero()
        if k > self.bound:
            raise DegreeBoundError(
                f"component {k} beyond series degree bound {self.bound}")
        return self.comps[k]

    @staticmethod
    def one(bound: int) -> "ChernSeries":
        return ChernSeries([LambdaPoly.one()], bound)

    @staticmethod
    def generic(bound: int) -> "ChernSeries":
        """The series c = 1 + c_1 + c_2 + ... of the Lambda generators."""
        return ChernSeries([LambdaPoly.c(k) for k in range(bound + 1)], bound)

    @staticmethod
    def linear(v: BasePoly, bound: int) -> "ChernSeries":
        """The series 1 + v for a degree-1 polynomial v."""
        return ChernSeries([LambdaPoly.one(), LambdaPoly.from_base(v)], bound)

    def __mul__(self, other: "ChernSeries") -> "ChernSeries":
        bound = min(self.bound, other.bound)
        comps = []
        for k in range(bound + 1):
            acc = LambdaPoly.zero()
            for i in range(k + 1):
                a, b = self.comps[i], other.comps[k - i]
                if a and b:
                    acc = acc + a * b
            comps.append(acc)
        return ChernSeries(comps, bound)

    def inverse(self) -> "ChernSeries":
        comps = [LambdaPoly.one()]
        for k in range(1, self.bound + 1):
            acc = LambdaPoly.zero()
            for i in range(1, k + 1):
                if self.comps[i]:
                    acc = acc + self.comps[i] * comps[k - i]
            comps.append(-acc)
        return ChernSeries(comps, self.bound)

    def __pow__(self, n: int) -> "ChernSeries":
        s = ChernSeries.one(self.bound)
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            s = s * base
        return s

    def __eq__(self, other) -> bool:
        return (isinstance(other, ChernSeries) and self.bound == other.bound
                and self.comps == other.comps)

    def is_base_only(self) -> bool:
        return not any(g.has_c() for g in self.comps)


def series_a(p: int, q: int, bound: int) -> ChernSeries:
    """The series prod_{i=p+1}^0 (1-x_i) prod_{j=1}^q (1+y_j)
    / [prod_{i=1}^p (1-x_i) prod_{j=q+1}^0 (1+y_j)], one product per sign."""
    s = ChernSeries.one(bound)
    if p > 0:
        for i in range(1, p + 1):
            s = s * ChernSeries.linear(-BasePoly.x(i), bound).inverse()
    else:
        for i in range(p + 1, 1):
            s = s * ChernSeries.linear(-BasePoly.x(i), bound)
    if q > 0:
        for j in range(1, q + 1):
            s = s * ChernSeries.linear(BasePoly.y(j), bound)
    else:
        for j in range(q + 1, 1):
            s = s * ChernSeries.linear(BasePoly.y(j), bound).inverse()
    return s


def schur_det(series: Sequence[ChernSeries], lam, mu=()) -> LambdaPoly:
    """Schur determinant Det(c(k)_{lam_k - mu_l + l - k}) for the given series.

    Row k of the n x n matrix draws its entries from series[k-1]; lam may
    have length at most n (shorter shapes are padded with zero parts).
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    n = len(series)
    if len(lam) > n:
        raise ValueError(f"shape has {len(lam)} rows but only {n} series given")
    if not contains(lam, mu):
        raise ValueError("mu must be contained in lam")
    if n == 0:
        return LambdaPoly.one()

    entries: list[list[LambdaPoly]] = []
    for k in range(1, n + 1):
        row = []
        for l in range(1, n + 1):
            d = part(lam, k) - part(mu, l) + l - k
            row.append(series[k - 1].component(d))
        entries.append(row)

    memo: dict[tuple[int, ...], LambdaPoly] = {}

    def minor(cols: tuple[int, ...]) -> LambdaPoly:
        if not cols:
            return LambdaPoly.one()
        got = memo.get(cols)
        if got is not None:
            return got
        row = n - len(cols)
        acc = LambdaPoly.zero()
        for t, cidx in enumerate(cols):
            e = entries[row][cidx]
            if not e:
                continue
            sub = minor(cols[:t] + cols[t + 1:])
            if sub:
                term = e * sub
                acc = acc + (term if t % 2 == 0 else -term)
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


# ---------------------------------------------------------------------------
# Ring maps
# ---------------------------------------------------------------------------

def omega(f: LambdaPoly, variables: bool = False) -> LambdaPoly:
    """The involution S_lam -> S_lam'; with variables=True also
    x_i -> -x_{1-i} and y_i -> -y_{1-i} (z is fixed)."""
    out: dict[Partition, BasePoly] = {}
    for lam, p in f.terms.items():
        if variables:
            images: dict[Var, BasePoly] = {}
            for i in p.indices("x"):
                images[("x", i)] = -BasePoly.x(1 - i)
            for i in p.indices("y"):
                images[("y", i)] = -BasePoly.y(1 - i)
            p = p.substitute(images)
        lc = conjugate(lam)
        q = out.get(lc)
        s = p if q is None else q + p
        if s:
            out[lc] = s
        else:
            out.pop(lc, None)
    return LambdaPoly(out, _trusted=True)


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    from math import comb
    return comb(n, k)


def theta(f: LambdaPoly, v: BasePoly) -> LambdaPoly:
    """Substitution c_k -> sum_i binom(k-1, i-1) v^{k-i} c_i, fixing x,y,z."""
    if not (v and v.is_homogeneous() and v.degree() == 1):
        raise ValueError("theta twist requires a homogeneous linear form")
    # Jacobi-Trudi entries reach subscript lam_1 + len(lam) - 1
    maxk = max((l[0] + len(l) - 1 for l in f.terms if l), default=0)
    vpow = [BasePoly.one()]
    for _ in range(maxk):
        vpow.append(vpow[-1] * v)
    c_img = [LambdaPoly.one()]
    for k in range(1, maxk + 1):
        acc = LambdaPoly.zero()
        for i in range(1, k + 1):
            b = _binom(k - 1, i - 1)
            if b:
                acc = acc + LambdaPoly.schur((i,), vpow[k - i] * b)
        c_img.append(acc)

    schur_cache: dict[Partition, LambdaPoly] = {}

    def image_of_schur(lam: Partition) -> LambdaPoly:
        got = schur_cache.get(lam)
        if got is not None:
            return got
        acc = LambdaPoly.zero()
        for parts, coeff in jacobi_trudi(lam):
            term = LambdaPoly.const(coeff)
            for k in parts:
                term = term * c_img[k]
            acc = acc + term
        schur_cache[lam] = acc
        return acc

    out = LambdaPoly.zero()
    for lam, p in f.terms.items():
        out = out + image_of_schur(lam) * p
    return out


@lru_cache(maxsize=None)
def _tomega_schur(lam: Partition) -> LambdaPoly:
    return theta(LambdaPoly.schur(conjugate(lam)), BasePoly.z())


def tomega(f: LambdaPoly, variables: bool = False) -> LambdaPoly:
    """The lifted involution of Lambda[z]: c_k -> sum binom(k-1,i-1)(-z)^{k-i} S_{1^i},
    realized as S_lam -> theta_z(S_lam').  With variables=True also
    x_i -> z - x_{1-i} and y_j -> z - y_{1-j}."""
    out = LambdaPoly.zero()
    for lam, p in f.terms.items():
        if variables:
            images: dict[Var, BasePoly] = {}
            for i in p.indices("x"):
                images[("x", i)] = BasePoly.z() - BasePoly.x(1 - i)
            for j in p.indices("y"):
                images[("y", j)] = BasePoly.z() - BasePoly.y(1 - j)
            p = p.substitute(images)
        out = out + _tomega_schur(lam) * p
    return out


def substitute(f: LambdaPoly, c_image: ChernSeries | None,
               var_images: Mapping[Var, BasePoly] | None = None) -> LambdaPoly:
    """Ring homomorphism sending the generic series c to `c_image` (None = keep)
    and the listed variables to the given BasePoly values."""
    det_cache: dict[Partition, LambdaPoly] = {}

    def schur_image(lam: Partition) -> LambdaPoly:
        if c_image is None:
            return LambdaPoly.schur(lam)
        got = det_cache.get(lam)
        if got is None:
            if sum(lam) > c_image.bound:
                raise DegreeBoundError(
                    f"series bound {c_image.bound} too small for |lam|={sum(lam)}")
            got = schur_det([c_image] * max(len(lam), 1), lam) if lam else LambdaPoly.one()
            det_cache[lam] = got
        return got

    out = LambdaPoly.zero()
    for lam, p in f.terms.items():
        if var_images:
            p = p.substitute(var_images)
        if not p:
            continue
        out = out + schur_image(lam) * p
    return out


def eta(f: LambdaPoly) -> BasePoly:
    """Evaluation c_i -> 0, x_i -> -y_i: the interpolation functional."""
    p = f.base_part()
    if not p:
        return BasePoly.zero()
    images = {("x", i): -BasePoly.y(i) for i in p.indices("x")}
    return p.substitute(images)


@lru_cache(maxsize=None)
def _gamma_schur(lam: Partition, m: int) -> LambdaPoly:
    """S_lam(gamma^m(c)) with gamma^m(c) = c * a(m, m)."""
    if not lam:
        return LambdaPoly.one()
    bound = sum(lam)
    series = ChernSeries.generic(bound) * series_a(m, m, bound)
    return schur_det([series] * len(lam), lam)


def gamma_poly(f: LambdaPoly, m: int) -> LambdaPoly:
    """Translation automorphism: x_i -> x_{i+m}, y_i -> y_{i+m},
    c -> c * prod (1+y_i)/(1-x_i) over the shifted range."""
    if m == 0:
        return f
    out = LambdaPoly.zero()
    for lam, p in f.terms.items():
        out = out + _gamma_schur(lam, m) * p.shift_indices(m)
    return out


def gamma_schur_tableaux(lam, m: int) -> LambdaPoly:
    """gamma^m(S_lam) for m >= 1 by direct tableau enumeration.

    Tableaux on lam/mu use the alphabet 1' < 1 < 2' < 2 < ... < m' < m,
    weakly increasing along rows and down columns, no unprimed letter
    repeated in a column, no primed letter repeated in a row; each unprimed
    k contributes x_k, each primed k contributes y_k.
    """
    lam = check_partition(lam)
    if m < 1:
        raise ValueError("tableau form needs m >= 1")
    from .partitions import subpartitions, cells
    out = LambdaPoly.zero()
    # letters encoded as 2k-1 for k', 2k for k (so natural order works)
    letters = list(range(1, 2 * m + 1))

    def letter_weight(a: int) -> BasePoly:
        k = (a + 1) // 2
        return BasePoly.y(k) if a % 2 else BasePoly.x(k)

    for mu in subpartitions(lam):
        shape = cells(lam, mu)
        if not shape:
            out = out + LambdaPoly.schur(mu)
            continue
        shape.sort()
        total = LambdaPoly.zero()

        def rec(idx: int, filling: dict[tuple[int, int], int], weight: BasePoly):
            nonlocal total
            if idx == len(shape):
                total = total + LambdaPoly.schur(mu, weight)
                return
            (i, j) = shape[idx]
            lo = 1
            left = filling.get((i, j - 1))
            up = filling.get((i - 1, j))
            if left is not None:
                lo = max(lo, left)
            if up is not None:
                lo = max(lo, up)
            for a in letters:
                if a < lo:
                    continue
                if a % 2:  # primed: strictly increases along rows
                    if left == a:
                        continue
                else:      # unprimed: strictly increases down columns
                    if up == a:
                        continue
                filling[(i, j)] = a
                rec(idx + 1, filling, weight * letter_weight(a))
                del filling[(i, j)]

        rec(0, {}, BasePoly.one())
        out = out + total
    return out
