"""Golden table: expanded Schubert polynomials of the [0,3] window.

The expected values live in data/table_window_0_3.json as expression
strings, kept as data (not regenerated) so a transcription slip stays
distinguishable from an engine bug.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .lambdapoly import LambdaPoly
from .permutations import Permutation


@lru_cache(maxsize=None)
def load_table() -> tuple[tuple[Permutation, LambdaPoly], ...]:
    from .serialize import parse_perm, parse_poly
    text = resources.files("schubert_ac").joinpath(
        "data/table_window_0_3.json").read_text()
    obj = json.loads(text)
    rows = []
    for row in obj["rows"]:
        rows.append((parse_perm(row["w"]), parse_poly(row["poly"])))
    return tuple(rows)


def verify_table(compute=None) -> list[tuple[Permutation, bool]]:
    """Compare every expected row against the engine; returns per-row flags."""
    from .schubert import schubert
    if compute is None:
        compute = schubert
    out = []
    for w, expected in load_table():
        out.append((w, compute(w) == expected))
    return out
