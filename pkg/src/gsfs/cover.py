"""
Invariants of the canonical double branched cover of a non-manifold GSFS.

The cover is a Seifert manifold over a base of doubled genus: ``b`` and
``eps`` are unchanged, ``iota`` drops to 0, and every exceptional fiber lifts
to two copies of itself.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable

from .errors import InvalidSymbol, NotBranched
from .symbols import GsfsSymbol, Violation, normalize_gsfs, sing_count, validate_gsfs

__all__ = ["double_cover", "check_cover_consistency"]


def _branched_input(s: GsfsSymbol) -> GsfsSymbol:
    problems = validate_gsfs(s)
    if problems:
        raise InvalidSymbol(f"inadmissible symbol {s}", problems)
    if s.iota == 0:
        raise NotBranched()
    # Pair ranges must be reduced before doubling: a carry absorbed by the
    # b = 0 rule on the singular space would otherwise survive (twice) upstairs.
    return normalize_gsfs(s)


def double_cover(s: GsfsSymbol) -> GsfsSymbol:
    """Canonical symbol of the double branched cover of ``s``.

    >>> from .notation import parse_gsfs
    >>> str(double_cover(parse_gsfs("GSFS(b=0;eps=o1;g=1;i=1;(3,1),(5,2))")))
    'GSFS(b=0;eps=o1;g=2;i=0;(3,1),(3,1),(5,2),(5,2))'
    """
    base = _branched_input(s)
    doubled = [p for p in base.pairs for _ in range(2)]
    return normalize_gsfs(GsfsSymbol(base.b, base.epsilon, 2 * base.g, 0, doubled))


def check_cover_consistency(
    s: GsfsSymbol,
    cover: Callable[[GsfsSymbol], GsfsSymbol] = double_cover,
) -> list[Violation]:
    """Compare ``cover(s)`` against the expected invariants of the cover.

    ``cover`` is injectable so that a faulty routine can be checked against
    the same rules.
    """
    base = _branched_input(s)
    out = cover(s)
    problems: list[Violation] = []

    for v in validate_gsfs(out):
        problems.append(Violation("cover-admissible", v.field, v.value,
                                  f"cover is inadmissible: {v.message}"))
    if out.epsilon is not base.epsilon:
        problems.append(Violation("cover-eps", "epsilon", out.epsilon.value,
                                  f"cover eps {out.epsilon.value} != {base.epsilon.value}"))
    if out.g != 2 * base.g:
        problems.append(Violation("cover-genus", "g", out.g,
                                  f"cover genus {out.g} != 2g = {2 * base.g}"))
    if out.b != base.b:
        problems.append(Violation("cover-b", "b", out.b, f"cover b {out.b} != b = {base.b}"))
    expected = Counter({p: 2 * m for p, m in Counter(base.pairs).items()})
    if Counter(out.pairs) != expected:
        problems.append(Violation("cover-pairs", "pairs", out.pairs,
                                  "cover pairs are not the original pairs with doubled multiplicity"))
    if sing_count(out) != 0:
        problems.append(Violation("cover-sing", "iota", out.iota,
                                  f"cover has {sing_count(out)} singular points, expected 0"))
    return problems
