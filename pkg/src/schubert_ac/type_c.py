"""The twisted type C coefficient ring and its vexillary Schubert polynomials.

Gamma = Z[z,c] / (C_11, C_22, ...) where
C_pq = sum_{0<=i<=j<=q} (-1)^j (binom(j,i)+binom(j-1,i)) z^i c_{p+j-i} c_{q-j}.
As a Z[z]-module it is free on the pfaffians Q_mu(c) over strict mu; normal
forms are computed degree by degree with exact linear algebra, which also
certifies independence and spanning of the basis.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .basepoly import BasePoly, Var
from .lambdapoly import ChernSeries, LambdaPoly, jacobi_trudi, tomega
from .linalg import ExactSolver, rank_of
from .partitions import (Partition, check_partition, is_strict, partitions_of,
                         strict_partitions_of)

CMono = tuple[int, ...]          # sorted (desc) c-subscripts
ZCKey = tuple[int, CMono]        # (z-exponent, c-monomial)


class ZCPoly:
    """Sparse element of Z[z, c_1, c_2, ...]."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, *, _trusted=False):
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = dict(terms)
        else:
            self.terms = {k: v for k, v in terms.items() if v}

    @staticmethod
    def zero() -> "ZCPoly":
        return ZCPoly()

    @staticmethod
    def one() -> "ZCPoly":
        return ZCPoly({(0, ()): 1}, _trusted=True)

    @staticmethod
    def c(k: int) -> "ZCPoly":
        if k == 0:
            return ZCPoly.one()
        if k < 0:
            return ZCPoly.zero()
        return ZCPoly({(0, (k,)): 1}, _trusted=True)

    @staticmethod
    def z(exp: int = 1) -> "ZCPoly":
        return ZCPoly({(exp, ()): 1}, _trusted=True)

    @staticmethod
    def term(zexp: int, mono: CMono, coeff: int = 1) -> "ZCPoly":
        if not coeff:
            return ZCPoly.zero()
        return ZCPoly({(zexp, tuple(sorted(mono, reverse=True))): coeff},
                      _trusted=True)

    @staticmethod
    def from_base_zpoly(p: BasePoly) -> "ZCPoly":
        """Embed an integer polynomial in z alone."""
        out = {}
        for m, c in p.terms.items():
            if any(v[0] != "z" for v, _ in m):
                raise ValueError("only the variable z embeds into Z[z,c]")
            e = m[0][1] if m else 0
            out[(e, ())] = c
        return ZCPoly(out)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, ZCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        bits = []
        for (a, m), c in sorted(self.terms.items()):
            mono = "*".join([f"z^{a}"] * (a > 0) + [f"c{k}" for k in m])
            bits.append(f"{c}*{mono}" if mono else str(c))
        return "ZCPoly(" + (" + ".join(bits) or "0") + ")"

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            n = out.get(k, 0) + v
            if n:
                out[k] = n
            else:
                out.pop(k, None)
        return ZCPoly(out, _trusted=True)

    def __neg__(self):
        return ZCPoly({k: -v for k, v in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ZCPoly({k: v * other for k, v in self.terms.items()} if other else {},
                          _trusted=True)
        out: dict[ZCKey, int] = {}
        for (a1, m1), c1 in self.terms.items():
            for (a2, m2), c2 in other.terms.items():
                key = (a1 + a2, tuple(sorted(m1 + m2, reverse=True)))
                n = out.get(key, 0) + c1 * c2
                if n:
                    out[key] = n
                else:
                    del out[key]
        return ZCPoly(out, _trusted=True)

    __rmul__ = __mul__

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(a + sum(m) for (a, m) in self.terms)

    def is_homogeneous(self) -> bool:
        return len({a + sum(m) for (a, m) in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "ZCPoly":
        return ZCPoly({k: v for k, v in self.terms.items()
                       if k[0] + sum(k[1]) == d}, _trusted=True)


def lambda_to_zc(f: LambdaPoly) -> ZCPoly:
    """Expand a Lambda[z] element (no x,y allowed) into c-monomials."""
    out = ZCPoly.zero()
    for lam, p in f.terms.items():
        for m, coeff in p.terms.items():
            if any(v[0] != "z" for v, _ in m):
                raise ValueError("element has x or y variables")
            ze = m[0][1] if m else 0
            for mono, n in jacobi_trudi(lam):
                out = out + ZCPoly.term(ze, mono, coeff * n)
    return out


# ---------------------------------------------------------------------------
# Relations and pfaffians
# ---------------------------------------------------------------------------

def _cc(j: int, i: int) -> int:
    """binom(j,i) + binom(j-1,i) with binom(-1,0) = 0."""
    return comb(j, i) if j >= i >= 0 else 0


@lru_cache(maxsize=None)
def c_relation(p: int, q: int) -> ZCPoly:
    """C_pq = sum_{0<=i<=j<=q} (-1)^j (binom(j,i)+binom(j-1,i)) z^i c_{p+j-i} c_{q-j}."""
    if not (p >= q >= 0):
        raise ValueError("c_relation requires p >= q >= 0")
    out = ZCPoly.zero()
    for j in range(q + 1):
        for i in range(j + 1):
            coeff = (-1) ** j * (_cc(j, i) + _cc(j - 1, i))
            if not coeff:
                continue
            out = out + (ZCPoly.c(p + j - i) * ZCPoly.c(q - j) * ZCPoly.z(i)
                         if i else ZCPoly.c(p + j - i) * ZCPoly.c(q - j)) * coeff
    return out


def _pfaffian(entry, idx: tuple[int, ...]):
    """Pfaffian by first-row expansion; entry(i, j) for i < j."""
    if not idx:
        return None  # caller supplies the multiplicative unit
    memo: dict[tuple[int, ...], object] = {}

    def rec(ids: tuple[int, ...], one):
        if not ids:
            return one
        got = memo.get(ids)
        if got is not None:
            return got
        i0 = ids[0]
        rest = ids[1:]
        acc = None
        for t, j in enumerate(rest):
            e = entry(i0, j)
            sub = rec(tuple(r for r in rest if r != j), one)
            term = e * sub
            if t % 2 == 1:
                term = -term
            acc = term if acc is None else acc + term
        memo[ids] = acc
        return acc
    return rec


def q_pfaffian(lam) -> ZCPoly:
    """Q_lam(c): pfaffian of (C_{lam_i lam_j}), padding lam with 0 when odd."""
    lam = check_partition(lam)
    if not is_strict(lam):
        raise ValueError(f"{lam} is not strict")
    return _q_pfaffian_cached(lam)


@lru_cache(maxsize=None)
def _q_pfaffian_cached(lam: Partition) -> ZCPoly:
    if not lam:
        return ZCPoly.one()
    parts = list(lam)
    if len(parts) % 2:
        parts.append(0)

    def entry(i, j):
        return c_relation(parts[i], parts[j])

    rec = _pfaffian(entry, tuple(range(len(parts))))
    return rec(tuple(range(len(parts))), ZCPoly.one())


# ---------------------------------------------------------------------------
# Gamma normal form
# ---------------------------------------------------------------------------

def _zc_monomials(d: int) -> list[ZCKey]:
    out = []
    for a in range(d + 1):
        for lam in partitions_of(d - a):
            out.append((a, lam))
    return out


def _basis_keys(d: int) -> list[tuple[int, Partition]]:
    out = []
    for a in range(d + 1):
        for mu in strict_partitions_of(d - a):
            out.append((a, mu))
    return out


@lru_cache(maxsize=None)
def _degree_solver(d: int):
    """Solver for [basis columns | ideal columns] = monomial vectors at degree d."""
    monos = _zc_monomials(d)
    index = {m: i for i, m in enumerate(monos)}
    cols: list[dict[int, int]] = []
    basis = _basis_keys(d)
    for (a, mu) in basis:
        q = q_pfaffian(mu)
        col = {}
        for (za, m), c in q.terms.items():
            col[index[(za + a, m)]] = c
        cols.append(col)
    gens: list[ZCPoly] = []
    for k in range(1, d // 2 + 1):
        rel = c_relation(k, k)
        for (a, lam) in _zc_monomials(d - 2 * k):
            gens.append(rel * ZCPoly.term(a, lam))
    for g in gens:
        col = {}
        for (za, m), c in g.terms.items():
            col[index[(za, m)]] = c
        cols.append(col)
    solver = ExactSolver(cols, len(monos))
    return solver, basis, index, len(gens)


class GammaPoly:
    """Element of Gamma[x,y]: strict partitions mu -> BasePoly coefficients,
    meaning sum p_mu(x,y,z) Q_mu(c) in normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, *, _trusted=False):
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = dict(terms)
        else:
            canon = {}
            for mu, p in terms.items():
                mu = check_partition(mu)
                if not is_strict(mu):
                    raise ValueError(f"{mu} is not strict")
                if p:
                    canon[mu] = p
            self.terms = canon

    @staticmethod
    def zero() -> "GammaPoly":
        return GammaPoly()

    @staticmethod
    def q(mu, coeff: BasePoly | int = 1) -> "GammaPoly":
        if isinstance(coeff, int):
            coeff = BasePoly.const(coeff)
        return GammaPoly({check_partition(mu): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, GammaPoly) and self.terms == other.terms

    def __repr__(self):
        from .serialize import gamma_text
        return f"GammaPoly({gamma_text(self)})"

    def __add__(self, other):
        out = dict(self.terms)
        for mu, p in other.terms.items():
            q = out.get(mu)
            sp = p if q is None else q + p
            if sp:
                out[mu] = sp
            else:
                out.pop(mu, None)
        return GammaPoly(out, _trusted=True)

    def __neg__(self):
        return GammaPoly({m: -p for m, p in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Multiply by a BasePoly/int scalar, or by another GammaPoly
        (lift to Z[z,c], multiply, renormalize)."""
        if isinstance(other, (int, BasePoly)):
            return GammaPoly({m: p * other for m, p in self.terms.items()
                              if p * other}, _trusted=True)
        out = GammaPoly.zero()
        for mu1, p1 in self.terms.items():
            for mu2, p2 in other.terms.items():
                prod = q_pfaffian(mu1) * q_pfaffian(mu2)
                out = out + zc_to_gamma(prod) * (p1 * p2)
        return out

    __rmul__ = __mul__

    def pure_z(self) -> bool:
        return all(p.uses_only_kinds(("z",)) for p in self.terms.values())

    def is_homogeneous(self) -> bool:
        from .basepoly import mono_degree
        degs = set()
        for mu, p in self.terms.items():
            degs.update(sum(mu) + mono_degree(m) for m in p.terms)
        return len(degs) <= 1

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(mu) + p.degree() for mu, p in self.terms.items())


def normal_form(f: ZCPoly, bound: int | None = None) -> GammaPoly:
    """The unique expression of f modulo (C_11, C_22, ...) on the basis
    {z^a Q_mu}; integer coordinates are certified."""
    if not f:
        return GammaPoly.zero()
    if bound is not None and f.degree() > bound:
        raise ValueError(f"degree {f.degree()} exceeds stated bound {bound}")
    out = GammaPoly.zero()
    for d in sorted({a + sum(m) for (a, m) in f.terms}):
        part = f.homogeneous_part(d)
        out = out + _normal_form_homogeneous(part, d)
    return out


@lru_cache(maxsize=None)
def _nf_monomial(key: ZCKey) -> GammaPoly:
    d = key[0] + sum(key[1])
    return _normal_form_homogeneous(ZCPoly({key: 1}, _trusted=True), d)


def _normal_form_homogeneous(f: ZCPoly, d: int) -> GammaPoly:
    solver, basis, index, ngens = _degree_solver(d)
    vec = {index[k]: v for k, v in f.terms.items()}
    x = solver.solve(vec)
    if x is None:
        raise AssertionError("relation slice failed to express the element")
    out: dict[Partition, BasePoly] = {}
    for t, (a, mu) in enumerate(basis):
        val = x[t]
        if val:
            if val.denominator != 1:
                raise AssertionError("basis coordinates came out non-integral")
            coeff = BasePoly.var("z", 0, a, int(val)) if a else BasePoly.const(int(val))
            got = out.get(mu)
            out[mu] = coeff if got is None else got + coeff
    return GammaPoly(out, _trusted=True)


def zc_to_gamma(f: ZCPoly) -> GammaPoly:
    return normal_form(f)


def gamma_basis_check(d: int) -> bool:
    """At degree d: {z^a Q_mu} is independent modulo the ideal slice and,
    together with the slice, spans all of Z[z,c]_d (by exact ranks)."""
    solver, basis, index, ngens = _degree_solver(d)
    nmono = len(index)
    full_rank = solver.rank
    if full_rank != nmono:
        return False  # not spanning
    gcols = []
    monos = _zc_monomials(d)
    midx = {m: i for i, m in enumerate(monos)}
    for k in range(1, d // 2 + 1):
        rel = c_relation(k, k)
        for (a, lam) in _zc_monomials(d - 2 * k):
            g = rel * ZCPoly.term(a, lam)
            gcols.append({midx[key]: v for key, v in g.terms.items()})
    grank = rank_of(gcols, nmono)
    # independence mod the ideal: basis columns add full new rank
    return grank + len(basis) == nmono


# ---------------------------------------------------------------------------
# Pfaffians of Chern series and vexillary polynomials
# ---------------------------------------------------------------------------

def pf_lambda(series: list[ChernSeries], lam) -> LambdaPoly:
    """Pf_lam(c(1),...,c(r)): pfaffian of the alternating matrix with (k,l)
    entry sum (-1)^j (binom(j,i)+binom(j-1,i)) z^i c(k)_{lam_k+j-i} c(l)_{lam_l-j},
    the series-decorated C_{lam_k lam_l} (so every entry is homogeneous of
    degree lam_k + lam_l and the generic series recover Q_lam)."""
    lam = check_partition(lam)
    if not is_strict(lam):
        raise ValueError(f"{lam} is not strict")
    if not lam:
        return LambdaPoly.one()
    if len(lam) > len(series):
        raise ValueError("need one series per row of lam")
    parts = list(lam)
    ser = list(series[: len(parts)])
    if len(parts) % 2:
        parts.append(0)
        ser.append(ser[-1])
    zpoly = BasePoly.z()

    def entry(k, l):
        lk, ll = parts[k], parts[l]
        acc = LambdaPoly.zero()
        for j in range(ll + 1):
            for i in range(j + 1):
                coeff = (-1) ** j * (_cc(j, i) + _cc(j - 1, i))
                if not coeff:
                    continue
                a = ser[k].component(lk + j - i)
                if not a:
                    continue
                b = ser[l].component(ll - j)
                if not b:
                    continue
                term = a * b * coeff
                if i:
                    term = term * zpoly ** i
                acc = acc + term
        return acc

    rec = _pfaffian(entry, tuple(range(len(parts))))
    return rec(tuple(range(len(parts))), LambdaPoly.one())


# ---------------------------------------------------------------------------
# Type C triples
# ---------------------------------------------------------------------------

class TripleC:
    """k strictly increasing positive; p, q weakly decreasing positive;
    (p_i - p_{i+1}) + (q_i - q_{i+1}) > k_{i+1} - k_i."""

    __slots__ = ("k", "p", "q")

    def __init__(self, k, p, q):
        self.k = tuple(k)
        self.p = tuple(p)
        self.q = tuple(q)
        if not (len(self.k) == len(self.p) == len(self.q)):
            raise ValueError("triple components must share a length")
        if any(a <= 0 for a in self.k + self.p + self.q):
            raise ValueError("all entries must be positive")
        if any(self.k[i] >= self.k[i + 1] for i in range(len(self.k) - 1)):
            raise ValueError("k must increase strictly")
        if any(self.p[i] < self.p[i + 1] for i in range(len(self.p) - 1)):
            raise ValueError("p must decrease weakly")
        if any(self.q[i] < self.q[i + 1] for i in range(len(self.q) - 1)):
            raise ValueError("q must decrease weakly")
        for i in range(len(self.k) - 1):
            if (self.p[i] - self.p[i + 1]) + (self.q[i] - self.q[i + 1]) \
                    <= self.k[i + 1] - self.k[i]:
                raise ValueError("triple fails the corner-gap condition")

    def __len__(self):
        return len(self.k)

    def __eq__(self, other):
        return (isinstance(other, TripleC)
                and (self.k, self.p, self.q) == (other.k, other.p, other.q))

    def __repr__(self):
        return f"TripleC({self.k}, {self.p}, {self.q})"


def triple_c_partition(tau: TripleC) -> Partition:
    """Minimal strict partition with lam_{k_i} = p_i + q_i - 1."""
    if len(tau) == 0:
        return ()
    lam = []
    for row in range(1, tau.k[-1] + 1):
        i = next(t for t in range(len(tau)) if tau.k[t] >= row)
        lam.append(tau.p[i] + tau.q[i] - 1 + tau.k[i] - row)
    lam = tuple(lam)
    if not is_strict(lam) or (lam and lam[-1] <= 0):
        raise ValueError(f"triple {tau} does not produce a strict shape")
    return lam


def schubert_c_vexillary(tau: TripleC) -> GammaPoly:
    """Pf_{lam(tau)}(c(1), ..., c(k_s)) with c(k) = c * prod_{a<p_i}(1+x_a)
    * prod_{b<q_i}(1+y_b), reduced to the Q_mu normal form."""
    lam = triple_c_partition(tau)
    if not lam:
        return GammaPoly.q(())
    bound = lam[0] + len(lam) + 1
    gen = ChernSeries.generic(bound)
    cache: dict[tuple[int, int], ChernSeries] = {}
    series = []
    for k in range(1, tau.k[-1] + 1):
        i = next(t for t in range(len(tau)) if tau.k[t] >= k)
        pq = (tau.p[i], tau.q[i])
        if pq not in cache:
            s = gen
            for a in range(1, pq[0]):
                s = s * ChernSeries.linear(BasePoly.x(a), bound)
            for b in range(1, pq[1]):
                s = s * ChernSeries.linear(BasePoly.y(b), bound)
            cache[pq] = s
        series.append(cache[pq])
    raw = pf_lambda(series, lam)
    out = lambda_to_gamma(raw)
    if out.degree() != sum(lam) or not out.is_homogeneous():
        raise AssertionError("vexillary pfaffian is not homogeneous of |lam|")
    return out


def lambda_to_gamma(f: LambdaPoly) -> GammaPoly:
    """Rewrite the Lambda[z]-part of f on the Gamma basis {z^a Q_mu}."""
    out = GammaPoly.zero()
    for lam, p in f.terms.items():
        for m, coeff in p.terms.items():
            zexp = 0
            rest = []
            for v, e in m:
                if v[0] == "z":
                    zexp = e
                else:
                    rest.append((v, e))
            xy = BasePoly({tuple(rest): coeff}, _trusted=True)
            for mono, n in jacobi_trudi(lam):
                red = _nf_monomial((zexp, mono))
                out = out + red * (xy * n)
    return out


def project_a_to_c(f: LambdaPoly) -> GammaPoly:
    """Canonical Z[z]-algebra map to Gamma[x_+, y_+]: c_k -> c_k, variables
    fixed; only positive-index x, y are allowed."""
    for kind in ("x", "y"):
        bad = [i for i in f.indices(kind) if i < 1]
        if bad:
            raise ValueError(f"negative or zero {kind}-indices {bad} do not project")
    return lambda_to_gamma(f)


def symmetric_locus_class(k: int) -> ZCPoly:
    """Q_{(k, k-1, ..., 1)}(c): the staircase pfaffian of degree k(k+1)/2."""
    if k < 1:
        raise ValueError("need k >= 1")
    return q_pfaffian(tuple(range(k, 0, -1)))


# ---------------------------------------------------------------------------
# Divided differences on Gamma[x_+, y_+] (positive indices only)
# ---------------------------------------------------------------------------

def del_x_gamma(i: int, g: GammaPoly) -> GammaPoly:
    if i < 1:
        raise ValueError("only positive-index operators act on Gamma[x+,y+]")
    return GammaPoly({mu: p.divided_difference("x", i)
                      for mu, p in g.terms.items()
                      if p.divided_difference("x", i)}, _trusted=True)


def del_y_gamma(i: int, g: GammaPoly) -> GammaPoly:
    if i < 1:
        raise ValueError("only positive-index operators act on Gamma[x+,y+]")
    return GammaPoly({mu: p.divided_difference("y", i)
                      for mu, p in g.terms.items()
                      if p.divided_difference("y", i)}, _trusted=True)


def swap_xy_gamma(g: GammaPoly) -> GammaPoly:
    out = {}
    for mu, p in g.terms.items():
        images: dict[Var, BasePoly] = {}
        for i in p.indices("x"):
            images[("x", i)] = BasePoly.y(i)
        for j in p.indices("y"):
            images[("y", j)] = BasePoly.x(j)
        out[mu] = p.substitute(images)
    return GammaPoly(out)


def tomega_collapse_check(f: LambdaPoly) -> bool:
    """c and its lifted-involution image project equally into Gamma."""
    return project_a_to_c(f) == project_a_to_c(tomega(f))


# ---------------------------------------------------------------------------
# Signed permutations (minimal support: rank conditions and lengths)
# ---------------------------------------------------------------------------

class SignedPermutation:
    """Signed permutation of {1..n}: w(a) = images[a-1], |w| a permutation."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)
        if sorted(abs(v) for v in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("absolute values must permute 1..n")

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"SignedPermutation({self.images})"

    def length(self) -> int:
        """Weyl group length: inversions plus #{i <= j : w(i) + w(j) < 0}."""
        n = len(self.images)
        inv = sum(1 for i in range(n) for j in range(i + 1, n)
                  if self.images[i] > self.images[j])
        neg = sum(1 for i in range(n) for j in range(i, n)
                  if self.images[i] + self.images[j] < 0)
        return inv + neg

    def rank_count(self, p: int, q: int) -> int:
        """#{a >= p : -w(a) >= q} (a within 1..n)."""
        return sum(1 for a in range(p, len(self.images) + 1) if -self(a) >= q)


def signed_perm_for_triple(tau: TripleC, n: int) -> SignedPermutation:
    """Brute-force minimal-length signed permutation satisfying tau's rank
    conditions inside {1..n}; small n only (validation use)."""
    from itertools import permutations as itp, product
    best = None
    for perm in itp(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            w = SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))
            if all(w.rank_count(tau.p[i], tau.q[i]) == tau.k[i]
                   for i in range(len(tau))):
                if best is None or w.length() < best.length():
                    best = w
    if best is None:
        raise ValueError(f"no signed permutation in rank {n} satisfies {tau}")
    return best
