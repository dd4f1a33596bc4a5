"""Finitely supported permutations of the integers and their combinatorics.

One-line data is stored as (lo, vals) with w(lo + t) = vals[t]; the window is
trimmed so that neither end is a fixed point, which makes the representation
canonical (the identity is lo=0 with an empty window).

Words: reduced_word(w) returns letters (i_1, ..., i_l) such that multiplying
simple transpositions on the left in that order builds w, i.e.
w = s_{i_l} ∘ ... ∘ s_{i_1} as functions.  This matches the convention used
by the divided-difference recursions, where applying the operators in word
order computes the full operator for w.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, check_partition


class Permutation:
    __slots__ = ("lo", "vals", "_hash")

    def __init__(self, lo: int, vals):
        vals = tuple(vals)
        if sorted(vals) != list(range(lo, lo + len(vals))):
            raise ValueError(f"not a window permutation: start {lo}, values {vals}")
        while vals and vals[0] == lo:
            vals = vals[1:]
            lo += 1
        while vals and vals[-1] == lo + len(vals) - 1:
            vals = vals[:-1]
        if not vals:
            lo = 0
        self.lo = lo
        self.vals = vals
        self._hash = hash((lo, vals))

    # -- constructors --------------------------------------------------------
    @staticmethod
    def identity() -> "Permutation":
        return _ID

    @staticmethod
    def s(i: int) -> "Permutation":
        return Permutation(i, (i + 1, i))

    @staticmethod
    def t(i: int, j: int) -> "Permutation":
        if i == j:
            return _ID
        if i > j:
            i, j = j, i
        vals = [j] + list(range(i + 1, j)) + [i]
        return Permutation(i, vals)

    @staticmethod
    def from_map(mapping: dict[int, int]) -> "Permutation":
        if not mapping:
            return _ID
        lo, hi = min(mapping), max(mapping)
        return Permutation(lo, [mapping.get(i, i) for i in range(lo, hi + 1)])

    @staticmethod
    def cycle_free_window(lo: int, hi: int, fn) -> "Permutation":
        return Permutation(lo, [fn(i) for i in range(lo, hi + 1)])

    @staticmethod
    def from_word_left(word) -> "Permutation":
        """Evaluate a word by successive left multiplications."""
        w = _ID
        for i in word:
            w = Permutation.s(i) * w
        return w

    # -- basics --------------------------------------------------------------
    @property
    def hi(self) -> int:
        return self.lo + len(self.vals) - 1

    def is_identity(self) -> bool:
        return not self.vals

    def __call__(self, i: int) -> int:
        if self.lo <= i <= self.hi:
            return self.vals[i - self.lo]
        return i

    def __eq__(self, other) -> bool:
        return (isinstance(other, Permutation) and self.lo == other.lo
                and self.vals == other.vals)

    def __hash__(self):
        return self._hash

    def __repr__(self) -> str:
        if self.is_identity():
            return "Permutation.identity()"
        return f"Permutation({self.lo}, {self.vals})"

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Functional composition: (u * v)(i) = u(v(i))."""
        if self.is_identity():
            return other
        if other.is_identity():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return Permutation(lo, [self(other(i)) for i in range(lo, hi + 1)])

    def inverse(self) -> "Permutation":
        if self.is_identity():
            return self
        m = {v: self.lo + t for t, v in enumerate(self.vals)}
        return Permutation.from_map(m)

    def right_s(self, i: int) -> "Permutation":
        """w ∘ s_i: swap the images at positions i and i+1."""
        lo = min(self.lo, i)
        hi = max(self.hi, i + 1)
        vals = [self(t) for t in range(lo, hi + 1)]
        a = i - lo
        vals[a], vals[a + 1] = vals[a + 1], vals[a]
        return Permutation(lo, vals)

    def left_s(self, i: int) -> "Permutation":
        """s_i ∘ w: swap the values i and i+1."""
        return Permutation.s(i) * self

    def right_t(self, i: int, j: int) -> "Permutation":
        """w ∘ t_{ij}: swap the images at positions i and j."""
        if i > j:
            i, j = j, i
        lo = min(self.lo, i)
        hi = max(self.hi, j)
        vals = [self(t) for t in range(lo, hi + 1)]
        vals[i - lo], vals[j - lo] = vals[j - lo], vals[i - lo]
        return Permutation(lo, vals)

    def gamma(self, m: int) -> "Permutation":
        if m == 0 or self.is_identity():
            return self
        return Permutation(self.lo + m, tuple(v + m for v in self.vals))

    def omega_inv(self) -> "Permutation":
        """The involution s_i -> s_{-i}: one-line w_1..w_n -> 1-w_norm..."""
        if self.is_identity():
            return self
        return Permutation(1 - self.hi, tuple(1 - v for v in reversed(self.vals)))

    # -- Coxeter data ----------------------------------------------------------
    def length(self) -> int:
        v = self.vals
        n = len(v)
        return sum(1 for a in range(n) for b in range(a + 1, n) if v[a] > v[b])

    def descents(self) -> list[int]:
        """All i with w(i) > w(i+1); contained in [lo, hi-1]."""
        out = []
        for i in range(self.lo, self.hi):
            if self(i) > self(i + 1):
                out.append(i)
        return out

    def reduced_word(self) -> tuple[int, ...]:
        """Deterministic word (smallest descent first); left-evaluation order."""
        w = self
        word = []
        while not w.is_identity():
            i = w.descents()[0]
            w = w.right_s(i)
            word.append(i)
        return tuple(word)

    def code(self) -> tuple[int, ...]:
        """Lehman code over the window: #{j > i : w(j) < w(i)} for window i."""
        if self.is_identity():
            return ()
        return tuple(sum(1 for j in range(i + 1, self.hi + 1) if self(j) < self(i))
                     for i in range(self.lo, self.hi + 1))

    def is_dominant_translate(self) -> bool:
        c = self.code()
        return all(c[t] >= c[t + 1] for t in range(len(c) - 1))

    def support(self) -> tuple[int, int] | None:
        """Smallest interval [a, b] containing all non-fixed points, or None."""
        if self.is_identity():
            return None
        return (self.lo, self.hi)

    def in_s_plus(self) -> bool:
        return self.is_identity() or self.lo >= 1

    def in_s_nonzero(self) -> bool:
        """Member of S_- x S_+ (the positive integers are stable)."""
        return all(self(i) >= 1 for i in range(max(self.lo, 1), self.hi + 1))


_ID = Permutation(0, ())


def k_rank(w: Permutation, p: int, q: int) -> int:
    """k_w(p, q) = #{a <= p : w(a) > q}."""
    if w.is_identity():
        return max(0, p - q) if p > q else 0
    count = 0
    lo = w.lo
    head = min(p, lo - 1)
    if head > q:
        count += head - q
    for a in range(lo, min(p, w.hi) + 1):
        if w(a) > q:
            count += 1
    if p > w.hi:
        count += max(0, p - max(w.hi, q))
    return count


@lru_cache(maxsize=None)
def _vexillary_cached(lo: int, vals: tuple[int, ...]) -> bool:
    n = len(vals)
    for b in range(n):
        for a in range(b):
            if vals[a] <= vals[b]:
                continue
            # looking for pattern w(b) < w(a) < w(d) < w(c) at a<b<c<d
            for c in range(b + 1, n):
                if vals[c] <= vals[a]:
                    continue
                for d in range(c + 1, n):
                    if vals[a] < vals[d] < vals[c]:
                        return False
    return True


def is_vexillary(w: Permutation) -> bool:
    """True iff w avoids the pattern 2 1 4 3."""
    return _vexillary_cached(w.lo, w.vals)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Bruhat order via rank functions: u <= w iff k_u <= k_w pointwise."""
    if u.is_identity():
        return True
    if u == w:
        return True
    los = [x.lo for x in (u, w) if not x.is_identity()]
    his = [x.hi for x in (u, w) if not x.is_identity()]
    lo, hi = min(los) - 1, max(his) + 1
    for p in range(lo, hi + 1):
        for q in range(lo - 1, hi + 1):
            if k_rank(u, p, q) > k_rank(w, p, q):
                return False
    return True


def bruhat_covers_right(w: Permutation, window: tuple[int, int] | None = None,
                        k: int | None = None) -> list[tuple[int, int, Permutation]]:
    """Transpositions t_{ij} with ell(w t_{ij}) = ell(w) + 1.

    The search runs over the bounding window (default: support of w padded by
    one, always containing k and k+1 when the Monk filter `k` is given); with
    the filter only pairs i <= k < j are returned.
    """
    if window is None:
        pts = [w.lo, w.hi] if not w.is_identity() else []
        if k is not None:
            pts += [k, k + 1]
        if not pts:
            pts = [0, 1]
        window = (min(pts) - 1, max(pts) + 1)
    lo, hi = window
    out = []
    for i in range(lo, hi + 1):
        for j in range(i + 1, hi + 1):
            if k is not None and not (i <= k < j):
                continue
            wi, wj = w(i), w(j)
            if wi >= wj:
                continue
            if any(wi < w(l) < wj for l in range(i + 1, j)):
                continue
            out.append((i, j, w.right_t(i, j)))
    return out


# ---------------------------------------------------------------------------
# Type A triples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TripleA:
    """Rank-condition data (k, p, q): k strictly increasing positive,
    p weakly increasing, q weakly decreasing, with l_i = q_i - p_i + k_i
    strictly decreasing and positive."""
    k: tuple[int, ...]
    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self):
        k, p, q = self.k, self.p, self.q
        if not (len(k) == len(p) == len(q)):
            raise ValueError("triple components must share a length")
        if any(k[i] <= 0 for i in range(len(k))):
            raise ValueError("k entries must be positive")
        if any(k[i] >= k[i + 1] for i in range(len(k) - 1)):
            raise ValueError("k must increase strictly")
        if any(p[i] > p[i + 1] for i in range(len(p) - 1)):
            raise ValueError("p must increase weakly")
        if any(q[i] < q[i + 1] for i in range(len(q) - 1)):
            raise ValueError("q must decrease weakly")
        l = self.l()
        if any(l[i] <= l[i + 1] for i in range(len(l) - 1)) or (l and l[-1] <= 0):
            raise ValueError("l = q - p + k must decrease strictly to > 0")

    def __len__(self) -> int:
        return len(self.k)

    def l(self) -> tuple[int, ...]:
        return tuple(q - p + k for k, p, q in zip(self.k, self.p, self.q))

    def translate(self, m: int) -> "TripleA":
        return TripleA(self.k, tuple(a + m for a in self.p),
                       tuple(a + m for a in self.q))

    def conjugate(self) -> "TripleA":
        l = self.l()
        return TripleA(tuple(reversed(l)), tuple(reversed(self.q)),
                       tuple(reversed(self.p)))

    def opposite(self) -> "TripleA":
        return TripleA(self.k, tuple(-a for a in self.q),
                       tuple(-a for a in self.p))


def triple_to_partition(tau: TripleA) -> Partition:
    """The shape with corners at (k_i, l_i)."""
    if len(tau) == 0:
        return ()
    k, l = tau.k, tau.l()
    lam = []
    for row in range(1, k[-1] + 1):
        i = next(t for t in range(len(k)) if k[t] >= row)
        lam.append(l[i])
    return check_partition(lam)


def triple_to_perm(tau: TripleA) -> Permutation:
    """The minimal-length w with #{a <= p_i : w(a) > q_i} = k_i for all i.

    Built greedily: for each condition in order, the missing count is placed
    on the rightmost free positions <= p_i using the smallest free values
    > q_i in increasing order; the remaining integers are matched
    order-preservingly.  The rank and length postconditions are verified.
    """
    if len(tau) == 0:
        return Permutation.identity()
    placed: dict[int, int] = {}
    used_pos: set[int] = set()
    used_val: set[int] = set()
    prev_k = 0
    for i in range(len(tau)):
        need = tau.k[i] - prev_k
        prev_k = tau.k[i]
        positions = []
        a = tau.p[i]
        while len(positions) < need:
            if a not in used_pos:
                positions.append(a)
            a -= 1
        positions.reverse()
        values = []
        v = tau.q[i] + 1
        while len(values) < need:
            if v not in used_val:
                values.append(v)
            v += 1
        for pos, val in zip(positions, values):
            placed[pos] = val
            used_pos.add(pos)
            used_val.add(val)
    lo = min(min(used_pos), min(used_val))
    hi = max(max(used_pos), max(used_val))
    free_pos = [a for a in range(lo, hi + 1) if a not in used_pos]
    free_val = [v for v in range(lo, hi + 1) if v not in used_val]
    for pos, val in zip(free_pos, free_val):
        placed[pos] = val
    w = Permutation.from_map(placed)
    for i in range(len(tau)):
        if k_rank(w, tau.p[i], tau.q[i]) != tau.k[i]:
            raise AssertionError(f"rank condition {i} failed for {tau}")
    if w.length() != sum(triple_to_partition(tau)):
        raise AssertionError(f"greedy construction not minimal for {tau}")
    return w


def diagram(w: Permutation) -> set[tuple[int, int]]:
    """Boxes (i, j) with w(i) > j and w^{-1}(j) > i; has ell(w) elements."""
    if w.is_identity():
        return set()
    winv = w.inverse()
    out = set()
    for i in range(w.lo, w.hi + 1):
        for j in range(w.lo, w.hi + 1):
            if w(i) > j and winv(j) > i:
                out.add((i, j))
    return out


def essential_corners(w: Permutation) -> list[tuple[int, int]]:
    """South-east corners of the diagram of w."""
    d = diagram(w)
    return sorted((i, j) for (i, j) in d
                  if (i + 1, j) not in d and (i, j + 1) not in d)


class NotVexillaryError(ValueError):
    pass


def perm_to_triple(w: Permutation) -> TripleA:
    """The canonical triple of a vexillary permutation, from its essential set."""
    if not is_vexillary(w):
        raise NotVexillaryError(f"{w} contains the pattern 2 1 4 3")
    if w.is_identity():
        return TripleA((), (), ())
    corners = essential_corners(w)
    conds = sorted((k_rank(w, p, q), p, q) for (p, q) in corners)
    tau = TripleA(tuple(c[0] for c in conds), tuple(c[1] for c in conds),
                  tuple(c[2] for c in conds))
    return tau


def w_lambda(lam) -> Permutation:
    """The unique permutation with w(i) < w(i+1) for all i != 0 and shape lam."""
    lam = check_partition(lam)
    if not lam:
        return Permutation.identity()
    from .partitions import conjugate, part
    lamc = conjugate(lam)
    lo = -len(lam) + 1
    hi = len(lamc)
    mapping = {}
    for i in range(lo, hi + 1):
        if i <= 0:
            mapping[i] = i + part(lam, 1 - i)
        else:
            mapping[i] = i - part(lamc, i)
    w = Permutation.from_map(mapping)
    for i in range(w.lo - 1, w.hi + 1):
        if i != 0 and not w(i) < w(i + 1):
            raise AssertionError("ascent condition failed in w_lambda")
    return w


# ---------------------------------------------------------------------------
# Transition data
# ---------------------------------------------------------------------------

def transition_data(w: Permutation):
    """The transition step (r, s, v, covers) for w != id.

    r is the last descent, s the largest position past r with w(s) < w(r),
    v = w t_{rs}; covers lists all v t_{ir} with i < r covering v.
    """
    if w.is_identity():
        raise ValueError("transition undefined for the identity")
    r = w.descents()[-1]
    s = None
    for j in range(w.hi + 1, r, -1):
        if w(j) < w(r):
            s = j
            break
    v = w.right_t(r, s)
    assert v.length() == w.length() - 1
    covers = []
    # below this floor every candidate i is blocked by the fixed value i+1
    floor = (min(v.lo, r) if not v.is_identity() else r) - 1
    for i in range(r - 1, floor - 1, -1):
        vi, vr = v(i), v(r)
        if vi >= vr:
            continue
        if any(vi < v(l) < vr for l in range(i + 1, r)):
            continue
        covers.append(v.right_t(i, r))
    return r, s, v, covers
