"""
Local circle action invariants and the bridge to GSFS symbols.

The tuple is ``{b; eps, g, (f,k1), (t,k2), (s,k3); pairs; r; q}`` where
``f``/``t``/``s`` count F-, SE- and SF-blocks, ``k1``/``k2``/``k3`` count the
twisted ones among them, and ``r``/``q`` hold the (even) numbers of singular
points in the simple and twisted SF-blocks.

A GSFS with ``iota`` interval fibers corresponds to the manifold obtained by
replacing each interval-fiber neighborhood with a twisted F-block, i.e. to
``f = k1 = iota`` and ``t = s = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import InvalidSymbol, NotInImage
from .symbols import (
    Epsilon,
    GsfsSymbol,
    SeifertPair,
    Violation,
    _as_pairs,
    b_domain,
    b_reason,
    b_violations,
    genus_violations,
    normalize_terms,
    pair_violations,
    validate_gsfs,
)

__all__ = [
    "LocalActionSymbol",
    "validate_local",
    "normalize_local",
    "equivalent_local",
    "to_local_action",
    "from_local_action",
    "local_sing_count",
]


@dataclass(frozen=True)
class LocalActionSymbol:
    b: int
    epsilon: Epsilon
    g: int
    f: int = 0
    k1: int = 0
    t: int = 0
    k2: int = 0
    s: int = 0
    k3: int = 0
    pairs: tuple[SeifertPair, ...] = field(default=())
    r: tuple[int, ...] = field(default=())
    q: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Epsilon(self.epsilon))
        object.__setattr__(self, "pairs", _as_pairs(self.pairs))
        object.__setattr__(self, "r", tuple(self.r))
        object.__setattr__(self, "q", tuple(self.q))

    @property
    def k(self) -> int:
        """Total number of twisted blocks; classifies the R-fiber bundle with eps."""
        return self.k1 + self.k2 + self.k3

    def __str__(self) -> str:
        from .notation import render_local

        return render_local(self)


def _count_violations(s: LocalActionSymbol) -> list[Violation]:
    out = []
    for name in ("f", "k1", "t", "k2", "s", "k3"):
        v = getattr(s, name)
        if v < 0:
            out.append(Violation(f"{name}-nonnegative", name, v, f"{name} must be >=0, got {v}"))
    for twisted, total in (("k1", "f"), ("k2", "t"), ("k3", "s")):
        tv, fv = getattr(s, twisted), getattr(s, total)
        if tv > fv:
            out.append(Violation(f"{twisted}<={total}", twisted, tv,
                                 f"{twisted} must be <= {total} ({twisted}={tv}, {total}={fv})"))
    return out


def _tuple_violations(s: LocalActionSymbol) -> list[Violation]:
    out = []
    if len(s.r) != s.s - s.k3:
        out.append(Violation("r-length", "r", s.r,
                             f"r must have s-k3={s.s - s.k3} entries, got {len(s.r)}"))
    if len(s.q) != s.k3:
        out.append(Violation("q-length", "q", s.q,
                             f"q must have k3={s.k3} entries, got {len(s.q)}"))
    for name, values in (("r", s.r), ("q", s.q)):
        for i, v in enumerate(values):
            if v < 0 or v % 2:
                out.append(Violation("even", f"{name}[{i}]", v,
                                     f"{name} entries must be non-negative and even, got {v}"))
    return out


def validate_local(s: LocalActionSymbol) -> list[Violation]:
    out = genus_violations(s.epsilon, s.g)
    out += _count_violations(s)
    forced = s.f + s.t > 0
    domain = b_domain(s.epsilon, forced, (p.alpha for p in s.pairs))
    out += b_violations(s.b, domain, b_reason(s.epsilon, forced, "f+t>0", domain))
    out += pair_violations(s.pairs)
    out += _tuple_violations(s)
    return out


def normalize_local(s: LocalActionSymbol) -> LocalActionSymbol:
    """Canonical form: GSFS pair rules, then ``r`` and ``q`` sorted ascending."""
    probe = s
    if s.f + s.t <= 0 and s.epsilon.z2_b:
        probe = replace(s, b=s.b % 2)
    problems = validate_local(probe)
    if problems:
        raise InvalidSymbol("cannot normalize inadmissible local-action symbol", problems)
    b, pairs = normalize_terms(s.b, s.epsilon, s.pairs, s.f + s.t > 0)
    return replace(s, b=b, pairs=pairs, r=sorted(s.r), q=sorted(s.q))


def _require_admissible(s: LocalActionSymbol, what: str) -> None:
    problems = validate_local(s)
    if problems:
        raise InvalidSymbol(f"{what}: inadmissible local-action symbol {s}", problems)


def equivalent_local(a: LocalActionSymbol, b: LocalActionSymbol) -> bool:
    _require_admissible(a, "equivalent_local")
    _require_admissible(b, "equivalent_local")
    return normalize_local(a) == normalize_local(b)


def to_local_action(s: GsfsSymbol) -> LocalActionSymbol:
    problems = validate_gsfs(s)
    if problems:
        raise InvalidSymbol(f"to_local_action: inadmissible symbol {s}", problems)
    return LocalActionSymbol(s.b, s.epsilon, s.g, f=s.iota, k1=s.iota, pairs=s.pairs)


def from_local_action(s: LocalActionSymbol) -> GsfsSymbol:
    """Inverse of :func:`to_local_action`.

    Only symbols whose fixed-point blocks are all twisted F-blocks (no SE or
    SF blocks) come from a GSFS; otherwise NotInImage names the first failing
    condition.
    """
    if s.t != 0:
        raise NotInImage("t!=0")
    if s.s != 0:
        raise NotInImage("s!=0")
    if s.k1 != s.f:
        raise NotInImage("k1!=f")
    _require_admissible(s, "from_local_action")
    return GsfsSymbol(s.b, s.epsilon, s.g, s.f, s.pairs)


def local_sing_count(s: LocalActionSymbol) -> int:
    return sum(s.r) + sum(s.q)
