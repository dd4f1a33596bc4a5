"""Canonical JSON / LaTeX / text emission and the small expression grammar.

JSON for a Lambda[x,y,z] element: a list of {"lambda": [...], "coeff":
[{"m": {"x1": 2, "y-1": 1, "z": 3}, "c": -4}, ...]} with groups ordered by
(|lambda|, lambda) and monomials by (degree, variable order x < y < z,
index).  Identical elements always serialize to identical bytes.

The text format is an expression the parser accepts back: atoms are
integers, x<i>, y<i>, z, c<k> (= S{k}), S{a,b,...} and Q{a,b,...}, combined
with + - * ^ and parentheses.
"""
from __future__ import annotations

import json
from typing import Callable

from .basepoly import BasePoly, Mono, mono_sort_key, var_key
from .lambdapoly import LambdaPoly
from .permutations import Permutation, TripleA


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

_JSON_KINDS = {"x", "y", "z"}


def _var_name(v) -> str:
    kind, idx = v
    if kind == "z":
        return "z"
    if kind in _JSON_KINDS:
        return f"{kind}{idx}"
    raise ValueError(f"variable kind {kind!r} is internal and not serializable")


def _mono_obj(m: Mono) -> dict:
    return {_var_name(v): e for v, e in m}


def base_to_obj(p: BasePoly) -> list:
    items = sorted(p.terms.items(), key=lambda t: mono_sort_key(t[0]))
    return [{"m": _mono_obj(m), "c": c} for m, c in items]


def poly_to_obj(f: LambdaPoly) -> list:
    groups = sorted(f.terms.items(), key=lambda t: (sum(t[0]), t[0]))
    return [{"lambda": list(lam), "coeff": base_to_obj(p)} for lam, p in groups]


def gamma_to_obj(g) -> list:
    groups = sorted(g.terms.items(), key=lambda t: (sum(t[0]), t[0]))
    return [{"mu_strict": list(mu), "coeff": base_to_obj(p)} for mu, p in groups]


def _parse_var_name(name: str):
    if name == "z":
        return ("z", 0)
    kind = name[0]
    if kind not in ("x", "y") or not name[1:].lstrip("-").isdigit():
        raise ValueError(f"bad variable name {name!r}")
    return (kind, int(name[1:]))


def base_from_obj(obj) -> BasePoly:
    terms = {}
    for entry in obj:
        mono = tuple(sorted((_parse_var_name(n), int(e))
                            for n, e in entry["m"].items() if int(e) != 0))
        terms[mono] = int(entry["c"])
    return BasePoly(terms)


def poly_from_obj(obj) -> LambdaPoly:
    terms = {}
    for entry in obj:
        lam = tuple(int(a) for a in entry["lambda"])
        terms[lam] = base_from_obj(entry["coeff"])
    return LambdaPoly(terms)


def gamma_from_obj(obj):
    from .type_c import GammaPoly
    terms = {}
    for entry in obj:
        mu = tuple(int(a) for a in entry["mu_strict"])
        terms[mu] = base_from_obj(entry["coeff"])
    return GammaPoly(terms)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


# ---------------------------------------------------------------------------
# Text / LaTeX
# ---------------------------------------------------------------------------

def _mono_text(m: Mono, coeff: int, tex: bool) -> str:
    bits = []
    for v, e in sorted(m, key=lambda t: var_key(t[0])):
        kind, idx = v
        name = "z" if kind == "z" else (
            f"{kind}_{{{idx}}}" if tex else f"{kind}{idx}")
        if e == 1:
            bits.append(name)
        else:
            bits.append(f"{name}^{{{e}}}" if tex else f"{name}^{e}")
    if abs(coeff) != 1 or not bits:
        bits.insert(0, str(abs(coeff)))
    return ("\\," if tex else "*").join(bits)


def _base_text_signed(p: BasePoly, tex: bool) -> list[tuple[int, str]]:
    out = []
    for m, c in sorted(p.terms.items(), key=lambda t: mono_sort_key(t[0])):
        out.append((1 if c > 0 else -1, _mono_text(m, c, tex)))
    return out


def base_text(p: BasePoly, tex: bool = False) -> str:
    if not p:
        return "0"
    parts = _base_text_signed(p, tex)
    s = ""
    for sign, txt in parts:
        if not s:
            s = ("-" if sign < 0 else "") + txt
        else:
            s += (" - " if sign < 0 else " + ") + txt
    return s


def _group_text(lam, p: BasePoly, tex: bool, symbol: str) -> str:
    if tex:
        sym = f"{symbol}_{{{','.join(map(str, lam))}}}"
    else:
        sym = f"{symbol}{{{','.join(map(str, lam))}}}"
    inner = base_text(p, tex)
    if not lam:
        return inner
    if p == BasePoly.one():
        return sym
    sep = "\\," if tex else "*"
    if len(p.terms) == 1:
        return f"{inner}{sep}{sym}"
    return f"\\left( {inner} \\right) {sym}" if tex else f"({inner})*{sym}"


def _sum_text(groups, tex: bool, symbol: str) -> str:
    if not groups:
        return "0"
    bits = [_group_text(lam, p, tex, symbol) for lam, p in groups]
    return " + ".join(bits)


def poly_text(f: LambdaPoly) -> str:
    return _sum_text(sorted(f.terms.items(), key=lambda t: (sum(t[0]), t[0])),
                     False, "S")


def poly_latex(f: LambdaPoly) -> str:
    return _sum_text(sorted(f.terms.items(), key=lambda t: (sum(t[0]), t[0])),
                     True, "S")


def gamma_text(g) -> str:
    return _sum_text(sorted(g.terms.items(), key=lambda t: (sum(t[0]), t[0])),
                     False, "Q")


def gamma_latex(g) -> str:
    return _sum_text(sorted(g.terms.items(), key=lambda t: (sum(t[0]), t[0])),
                     True, "Q")


# ---------------------------------------------------------------------------
# Expression parser
# ---------------------------------------------------------------------------

class _Parser:
    """Recursive descent over: expr := term (('+'|'-') term)*;
    term := factor ('*' factor)*; factor := atom ('^' INT)?;
    atom := INT | var | c<k> | S{...} | Q{...} | '(' expr ')' | '-' factor."""

    def __init__(self, s: str, schur: Callable, qbasis: Callable | None,
                 wrap: Callable | None = None):
        self.s = s
        self.i = 0
        self.schur = schur
        self.q = qbasis
        if wrap is not None:
            self.wrap = wrap

    def error(self, msg: str):
        raise ParseError(msg, self.i)

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def take_int(self) -> int:
        self.ws()
        j = self.i
        if j < len(self.s) and self.s[j] == "-":
            j += 1
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i or self.s[self.i:j] == "-":
            self.error("expected an integer")
        n = int(self.s[self.i:j])
        self.i = j
        return n

    def parse(self):
        v = self.expr()
        self.ws()
        if self.i != len(self.s):
            self.error("unexpected trailing input")
        return v

    def expr(self):
        v = self.term()
        while True:
            c = self.peek()
            if c == "+":
                self.i += 1
                v = v + self.term()
            elif c == "-":
                self.i += 1
                v = v - self.term()
            else:
                return v

    def term(self):
        v = self.factor()
        while self.peek() == "*":
            self.i += 1
            v = v * self.factor()
        return v

    def factor(self):
        v = self.atom()
        if self.peek() == "^":
            self.i += 1
            n = self.take_int()
            if n < 0:
                self.error("negative exponent")
            v = v ** n
        return v

    def shape(self) -> tuple[int, ...]:
        self.ws()
        if self.peek() != "{":
            self.error("expected '{'")
        self.i += 1
        parts = []
        if self.peek() != "}":
            parts.append(self.take_int())
            while self.peek() == ",":
                self.i += 1
                parts.append(self.take_int())
        if self.peek() != "}":
            self.error("expected '}'")
        self.i += 1
        return tuple(parts)

    def atom(self):
        c = self.peek()
        if c == "(":
            self.i += 1
            v = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.i += 1
            return v
        if c == "-":
            self.i += 1
            return -self.factor()
        if c.isdigit():
            return self.wrap(BasePoly.const(self.take_int()))
        if c == "z":
            self.i += 1
            return self.wrap(BasePoly.z())
        if c in ("x", "y"):
            self.i += 1
            return self.wrap(BasePoly.var(c, self.take_int()))
        if c == "c":
            self.i += 1
            k = self.take_int()
            if k < 0:
                self.error("c subscript must be nonnegative")
            return self.schur((k,) if k else ())
        if c == "S":
            self.i += 1
            return self.schur(self.shape())
        if c == "Q" and self.q is not None:
            self.i += 1
            return self.q(self.shape())
        self.error(f"unexpected character {c!r}")

    def wrap(self, p: BasePoly):
        raise NotImplementedError


def parse_poly(s: str) -> LambdaPoly:
    p = _Parser(s, lambda lam: LambdaPoly.schur(lam) if lam else LambdaPoly.one(),
                None, wrap=LambdaPoly.from_base)
    return p.parse()


def parse_base(s: str) -> BasePoly:
    f = parse_poly(s)
    return f.to_base()


def parse_zc(s: str):
    """Parse an expression in z and the c-generators into Z[z,c]."""
    from .type_c import ZCPoly

    def schur_as_c(lam):
        if len(lam) > 1:
            raise ValueError("only c<k> generators allowed in a z,c-expression")
        return ZCPoly.c(lam[0]) if lam else ZCPoly.one()

    p = _Parser(s, schur_as_c, None, wrap=ZCPoly.from_base_zpoly)
    return p.parse()


# ---------------------------------------------------------------------------
# Permutations and triples
# ---------------------------------------------------------------------------

def format_perm(w: Permutation) -> str:
    if w.is_identity():
        return "w@0:0"
    return f"w@{w.lo}:" + ",".join(map(str, w.vals))


def parse_perm(s: str) -> Permutation:
    s = s.strip()
    if not s.startswith("w@"):
        raise ParseError("permutation must look like w@p:v1,v2,...", 0)
    body = s[2:]
    if ":" not in body:
        raise ParseError("missing ':' in permutation", 2)
    head, _, tail = body.partition(":")
    try:
        lo = int(head)
    except ValueError:
        raise ParseError(f"bad window start {head!r}", 2) from None
    try:
        vals = [int(t) for t in tail.split(",")] if tail else []
    except ValueError:
        raise ParseError(f"bad value list {tail!r}", 3 + len(head)) from None
    try:
        return Permutation(lo, vals)
    except ValueError as e:
        raise ParseError(str(e), 0) from None


def _parse_intseq(s: str, what: str) -> tuple[int, ...]:
    s = s.strip()
    if not s:
        return ()
    try:
        return tuple(int(t) for t in s.split(","))
    except ValueError:
        raise ParseError(f"bad {what} sequence {s!r}", 0) from None


def parse_triple_a(s: str) -> TripleA:
    """Format: k=2,3,5;p=1,1,3;q=2,0,-1"""
    fields = {}
    for chunk in s.strip().split(";"):
        if "=" not in chunk:
            raise ParseError(f"triple field {chunk!r} needs '='", 0)
        name, _, val = chunk.partition("=")
        fields[name.strip()] = _parse_intseq(val, name)
    missing = {"k", "p", "q"} - set(fields)
    if missing:
        raise ParseError(f"triple is missing {sorted(missing)}", 0)
    try:
        return TripleA(fields["k"], fields["p"], fields["q"])
    except ValueError as e:
        raise ParseError(str(e), 0) from None


def parse_triple_c(s: str):
    from .type_c import TripleC
    fields = {}
    for chunk in s.strip().split(";"):
        if "=" not in chunk:
            raise ParseError(f"triple field {chunk!r} needs '='", 0)
        name, _, val = chunk.partition("=")
        fields[name.strip()] = _parse_intseq(val, name)
    missing = {"k", "p", "q"} - set(fields)
    if missing:
        raise ParseError(f"triple is missing {sorted(missing)}", 0)
    try:
        return TripleC(fields["k"], fields["p"], fields["q"])
    except ValueError as e:
        raise ParseError(str(e), 0) from None


def parse_partition(s: str) -> tuple[int, ...]:
    from .partitions import check_partition
    try:
        return check_partition(_parse_intseq(s, "partition"))
    except ValueError as e:
        raise ParseError(str(e), 0) from None
