"""Sparse exact polynomials over Z in the degree-1 variables x_i, y_j, z.

Monomials are sorted tuples of ((kind, index), exponent) pairs.  Besides the
serializable kinds 'x', 'y', 'z' there are auxiliary kinds used only inside
identity checks: 't' and 's' (fresh degree-1 variables) and the graded kinds
'A', 'B', 'D' whose index k is their degree (formal Chern components a_k,
b_k, d_k).  Coefficients are Python ints, so all arithmetic is exact.
"""
from __future__ import annotations

from typing import Callable, Iterable, Mapping

Var = tuple[str, int]
Mono = tuple[tuple[Var, int], ...]

# Monomials are stored sorted by plain tuple order of the variables; the
# x < y < z serialization order is applied only when emitting.
_KIND_ORDER = {"x": 0, "y": 1, "z": 2, "t": 3, "s": 4, "A": 5, "B": 6, "D": 7}
_GRADED_KINDS = ("A", "B", "D")


def var_key(v: Var) -> tuple[int, int]:
    return (_KIND_ORDER[v[0]], v[1])


def var_degree(v: Var) -> int:
    return v[1] if v[0] in _GRADED_KINDS else 1


def mono_degree(m: Mono) -> int:
    return sum(var_degree(v) * e for v, e in m)


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_sort_key(m: Mono) -> tuple:
    """Deterministic ordering: total degree, then lexicographic by variables."""
    return (mono_degree(m), tuple((var_key(v), e) for v, e in m))


class BasePoly:
    """Immutable sparse polynomial; zero coefficients never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, int] | None = None, *, _trusted=False):
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = dict(terms)
        else:
            self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "BasePoly":
        return _ZERO

    @staticmethod
    def one() -> "BasePoly":
        return _ONE

    @staticmethod
    def const(n: int) -> "BasePoly":
        if n == 0:
            return _ZERO
        return BasePoly({(): n}, _trusted=True)

    @staticmethod
    def var(kind: str, index: int = 0, exp: int = 1, coeff: int = 1) -> "BasePoly":
        if coeff == 0:
            return _ZERO
        if exp == 0:
            return BasePoly.const(coeff)
        return BasePoly({(((kind, index), exp),): coeff}, _trusted=True)

    @staticmethod
    def x(i: int) -> "BasePoly":
        return BasePoly.var("x", i)

    @staticmethod
    def y(i: int) -> "BasePoly":
        return BasePoly.var("y", i)

    @staticmethod
    def z() -> "BasePoly":
        return BasePoly.var("z", 0)

    # -- basics ------------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BasePoly.const(other)
        return isinstance(other, BasePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        from .serialize import base_text
        return f"BasePoly({base_text(self)})"

    def copy_terms(self) -> dict[Mono, int]:
        return dict(self.terms)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> "BasePoly":
        if isinstance(other, int):
            other = BasePoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            n = out.get(m, 0) + c
            if n:
                out[m] = n
            else:
                out.pop(m, None)
        return BasePoly(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "BasePoly":
        return BasePoly({m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> "BasePoly":
        if isinstance(other, int):
            other = BasePoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "BasePoly":
        return (-self) + other

    def __mul__(self, other) -> "BasePoly":
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            if other == 1:
                return self
            return BasePoly({m: c * other for m, c in self.terms.items()}, _trusted=True)
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                n = out.get(m, 0) + c1 * c2
                if n:
                    out[m] = n
                else:
                    del out[m]
        return BasePoly(out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BasePoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure ---------------------------------------------------------
    def degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "BasePoly":
        return BasePoly({m: c for m, c in self.terms.items() if mono_degree(m) == d},
                        _trusted=True)

    def constant(self) -> int:
        return self.terms.get((), 0)

    def indices(self, kind: str) -> set[int]:
        out: set[int] = set()
        for m in self.terms:
            for (k, i), _ in m:
                if k == kind:
                    out.add(i)
        return out

    def uses_only_kinds(self, kinds: Iterable[str]) -> bool:
        ks = set(kinds)
        return all(k in ks for m in self.terms for (k, _), _ in m)

    # -- substitution and variable maps -------------------------------------
    def substitute(self, images: Mapping[Var, "BasePoly"]) -> "BasePoly":
        """Ring homomorphism: each variable in `images` replaced, rest fixed."""
        if not images:
            return self
        pow_cache: dict[tuple[Var, int], BasePoly] = {}
        out = _ZERO
        for m, c in self.terms.items():
            fixed: list[tuple[Var, int]] = []
            factor = BasePoly.const(c)
            for v, e in m:
                if v in images:
                    key = (v, e)
                    p = pow_cache.get(key)
                    if p is None:
                        p = images[v] ** e
                        pow_cache[key] = p
                    factor = factor * p
                else:
                    fixed.append((v, e))
            if fixed:
                factor = factor * BasePoly({tuple(fixed): 1}, _trusted=True)
            out = out + factor
        return out

    def rename(self, mapping: Callable[[Var], Var]) -> "BasePoly":
        """Variable renaming (must stay injective on the support)."""
        out: dict[Mono, int] = {}
        for m, c in self.terms.items():
            nm = tuple(sorted((mapping(v), e) for v, e in m))
            if nm in out:
                raise ValueError("rename is not injective on this polynomial")
            out[nm] = c
        return BasePoly(out, _trusted=True)

    def shift_indices(self, m: int, kinds: tuple[str, ...] = ("x", "y")) -> "BasePoly":
        if m == 0:
            return self
        return self.rename(lambda v: (v[0], v[1] + m) if v[0] in kinds else v)

    def swap_adjacent(self, kind: str, i: int) -> "BasePoly":
        """The transposition of variables (kind,i) <-> (kind,i+1)."""
        def mp(v: Var) -> Var:
            if v[0] == kind:
                if v[1] == i:
                    return (kind, i + 1)
                if v[1] == i + 1:
                    return (kind, i)
            return v
        return self.rename(mp)

    # -- divided differences -------------------------------------------------
    def divided_difference(self, kind: str, i: int) -> "BasePoly":
        """(f - s_i f)/(v_i - v_{i+1}) acting on the variables of `kind`."""
        va, vb = (kind, i), (kind, i + 1)
        out: dict[Mono, int] = {}
        for m, c in self.terms.items():
            a = b = 0
            rest: list[tuple[Var, int]] = []
            for v, e in m:
                if v == va:
                    a = e
                elif v == vb:
                    b = e
                else:
                    rest.append((v, e))
            if a == b:
                continue
            sign = 1
            if a < b:
                a, b = b, a
                sign = -1
            for r in range(a - b):
                ea, eb = b + r, a - 1 - r
                extra = []
                if ea:
                    extra.append((va, ea))
                if eb:
                    extra.append((vb, eb))
                nm = tuple(sorted(rest + extra))
                n = out.get(nm, 0) + sign * c
                if n:
                    out[nm] = n
                else:
                    del out[nm]
        return BasePoly(out, _trusted=True)

    def divide_exact_linear(self, va: Var, vb: Var) -> "BasePoly":
        """Exact quotient by (va - vb); raises if the division has remainder."""
        # group by the exponent of va
        layers: dict[int, dict[Mono, int]] = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for v, ex in m:
                if v == va:
                    e = ex
                else:
                    rest.append((v, ex))
            layers.setdefault(e, {})[tuple(rest)] = c
        # remainder = f with va -> vb
        rem: dict[Mono, int] = {}
        for e, terms in layers.items():
            for rest, c in terms.items():
                nm = mono_mul(rest, (((vb), e),) if e else ())
                n = rem.get(nm, 0) + c
                if n:
                    rem[nm] = n
                else:
                    del rem[nm]
        if rem:
            raise ArithmeticError("polynomial not divisible by the linear form")
        out = _ZERO
        vap = BasePoly({((va, 1),): 1}, _trusted=True)
        vbp = BasePoly({((vb, 1),): 1}, _trusted=True)
        for e, terms in layers.items():
            if e == 0:
                continue
            coeff = BasePoly(terms)
            geo = _ZERO
            for j in range(e):
                geo = geo + (vap ** j) * (vbp ** (e - 1 - j))
            out = out + coeff * geo
        return out


_ZERO = BasePoly({}, _trusted=True)
_ONE = BasePoly({(): 1}, _trusted=True)
