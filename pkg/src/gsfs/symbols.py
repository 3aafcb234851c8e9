"""
GSFS invariant tuples: admissibility, canonical normal form and equivalence.

A generalized Seifert fiber space is recorded by ``{b, eps, g, iota, pairs}``
where ``iota`` counts interval fibers and ``pairs`` are the Seifert invariants
of the exceptional circle fibers.  Symbols are plain immutable values; none
of the constructors validate, so unnormalized and even inadmissible symbols
can be represented, rendered and reported on.

Canonical form conventions (chosen so canonical forms compare bytewise):

1. ``(alpha, beta)`` with ``alpha >= 2`` becomes ``(alpha, beta mod alpha)``
   and ``beta // alpha`` is carried into ``b``.
2. ``(1, beta)`` pairs are dropped and ``beta`` is carried into ``b``.
3. In the Z2-b classes ``{o2, n1, n3, n4}`` each pair becomes
   ``(alpha, min(beta, alpha - beta))`` and ``b`` is reduced mod 2.
4. Pairs are sorted lexicographically.
5. Wherever the b-domain rule forces ``b = 0`` the accumulated carry is
   discarded (the obstruction is not an invariant there).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, NamedTuple

from .errors import InvalidSymbol

__all__ = [
    "Epsilon",
    "SeifertPair",
    "GsfsSymbol",
    "Violation",
    "OrientationPolicy",
    "BDomain",
    "b_domain",
    "pair_violations",
    "validate_gsfs",
    "is_admissible",
    "normalize_gsfs",
    "is_normalized",
    "reverse_orientation",
    "equivalent",
    "sing_count",
    "is_manifold",
]


class Epsilon(str, enum.Enum):
    O1 = "o1"
    O2 = "o2"
    N1 = "n1"
    N2 = "n2"
    N3 = "n3"
    N4 = "n4"

    @property
    def orientable_base(self) -> bool:
        return self.value[0] == "o"

    @property
    def z2_b(self) -> bool:
        """True for the classes in which ``b`` is an integer mod 2."""
        return self in _Z2_B

    def __str__(self) -> str:
        return self.value


_Z2_B = frozenset({Epsilon.O2, Epsilon.N1, Epsilon.N3, Epsilon.N4})


class SeifertPair(NamedTuple):
    alpha: int
    beta: int

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta})"


def _as_pairs(pairs: Iterable) -> tuple[SeifertPair, ...]:
    return tuple(p if isinstance(p, SeifertPair) else SeifertPair(*p) for p in pairs)


@dataclass(frozen=True)
class GsfsSymbol:
    """The invariant tuple ``{b, eps, g, iota, pairs}``.

    ``pairs`` keeps the order it was given in; only normalization sorts.
    """

    b: int
    epsilon: Epsilon
    g: int
    iota: int
    pairs: tuple[SeifertPair, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Epsilon(self.epsilon))
        object.__setattr__(self, "pairs", _as_pairs(self.pairs))

    def __str__(self) -> str:
        from .notation import render_gsfs

        return render_gsfs(self)


@dataclass(frozen=True)
class Violation:
    """One failed admissibility rule.  Violations are data, never raised."""

    rule: str
    field: str
    value: object
    message: str

    def __str__(self) -> str:
        return self.message


class OrientationPolicy(str, enum.Enum):
    STRICT = "strict"
    UP_TO_ORIENTATION = "up-to-orientation"


class BDomain(enum.Enum):
    ZERO = "zero"  # b must be 0
    Z2 = "z2"  # b in {0, 1}
    INTEGER = "integer"  # b arbitrary


def b_domain(epsilon: Epsilon, forced_zero: bool, alphas: Iterable[int]) -> BDomain:
    """Where ``b`` lives, given the class, the "f + t > 0" flag and the multiplicities.

    ``forced_zero`` is ``iota > 0`` for GSFS symbols and ``f + t > 0`` for
    local-action symbols.
    """
    if forced_zero:
        return BDomain.ZERO
    if Epsilon(epsilon).z2_b:
        if any(a == 2 for a in alphas):
            return BDomain.ZERO
        return BDomain.Z2
    return BDomain.INTEGER


def pair_violations(pairs: Iterable[SeifertPair]) -> list[Violation]:
    out = []
    for i, (alpha, beta) in enumerate(pairs):
        where = f"pairs[{i}]"
        if alpha < 1:
            out.append(Violation("alpha-positive", where, (alpha, beta),
                                 f"alpha must be >=1 in pair ({alpha},{beta})"))
        elif math.gcd(alpha, beta % alpha) != 1:
            out.append(Violation("coprime", where, (alpha, beta),
                                 f"gcd({alpha},{beta % alpha})!=1 in pair ({alpha},{beta})"))
    return out


def genus_violations(epsilon: Epsilon, g: int) -> list[Violation]:
    if g < 0:
        return [Violation("g-nonnegative", "g", g, f"g must be >=0, got {g}")]
    if not epsilon.orientable_base and g < 1:
        return [Violation("n-genus", "g", g, f"n-class {epsilon.value} requires g>=1")]
    return []


def b_violations(b: int, domain: BDomain, reason: str) -> list[Violation]:
    if domain is BDomain.ZERO and b != 0:
        return [Violation("b-zero", "b", b, f"b must be 0 when {reason}")]
    if domain is BDomain.Z2 and b not in (0, 1):
        return [Violation("b-z2", "b", b, f"b must be 0 or 1 when {reason}")]
    return []


def b_reason(epsilon: Epsilon, forced_zero: bool, forced_text: str, domain: BDomain) -> str:
    if forced_zero:
        return forced_text
    if domain is BDomain.ZERO:
        return "eps in {o2,n1,n3,n4} and some alpha=2"
    return "eps in {o2,n1,n3,n4} and all alpha!=2"


def validate_gsfs(s: GsfsSymbol) -> list[Violation]:
    """Return every admissibility rule ``s`` breaks (empty when admissible).

    Unreduced ``beta`` and ``alpha = 1`` pairs are accepted; coprimality is
    still checked.
    """
    out: list[Violation] = []
    out += genus_violations(s.epsilon, s.g)
    if s.iota < 0:
        out.append(Violation("iota-nonnegative", "iota", s.iota,
                             f"iota must be >=0, got {s.iota}"))
    forced = s.iota > 0
    domain = b_domain(s.epsilon, forced, (p.alpha for p in s.pairs))
    out += b_violations(s.b, domain, b_reason(s.epsilon, forced, "iota>0", domain))
    out += pair_violations(s.pairs)
    return out


def is_admissible(s: GsfsSymbol) -> bool:
    return not validate_gsfs(s)


def normalize_terms(b: int, epsilon: Epsilon, pairs: Iterable[SeifertPair],
                    forced_zero: bool) -> tuple[int, tuple[SeifertPair, ...]]:
    """Apply the canonical-form rules to ``(b, pairs)``; shared with local actions."""
    z2 = epsilon.z2_b
    kept = []
    for alpha, beta in pairs:
        carry, beta = divmod(beta, alpha)
        b += carry
        if alpha == 1:
            continue
        if z2:
            beta = min(beta, alpha - beta)
        kept.append(SeifertPair(alpha, beta))
    kept.sort()
    domain = b_domain(epsilon, forced_zero, (p.alpha for p in kept))
    if domain is BDomain.ZERO:
        b = 0
    elif domain is BDomain.Z2:
        b %= 2
    return b, tuple(kept)


def _normalizable(s: GsfsSymbol) -> list[Violation]:
    # In Z2-b classes b is read mod 2, so b=3 with eps=o2 is acceptable input.
    if s.iota <= 0 and s.epsilon.z2_b:
        s = replace(s, b=s.b % 2)
    return validate_gsfs(s)


def normalize_gsfs(s: GsfsSymbol) -> GsfsSymbol:
    """Return the canonical representative of the class of ``s``.

    Raises InvalidSymbol when ``s`` is inadmissible for reasons other than
    pair ranges, ``alpha = 1`` pairs, or (in Z2-b classes) ``b`` outside
    ``{0, 1}``.
    """
    problems = _normalizable(s)
    if problems:
        raise InvalidSymbol("cannot normalize inadmissible symbol", problems)
    b, pairs = normalize_terms(s.b, s.epsilon, s.pairs, s.iota > 0)
    return GsfsSymbol(b, s.epsilon, s.g, s.iota, pairs)


def is_normalized(s: GsfsSymbol) -> bool:
    try:
        return normalize_gsfs(s) == s
    except InvalidSymbol:
        return False


def reverse_orientation(s: GsfsSymbol) -> GsfsSymbol:
    """Orientation reverse of a normalized symbol.

    Only ``o1`` symbols without interval fibers change: ``b -> -b - n`` and
    ``beta -> alpha - beta``.  Everything else is returned unchanged.
    """
    if not is_normalized(s):
        raise InvalidSymbol(f"reverse_orientation needs a normalized symbol, got {s}")
    if s.epsilon is not Epsilon.O1 or s.iota != 0:
        return s
    flipped = GsfsSymbol(-s.b - len(s.pairs), s.epsilon, s.g, s.iota,
                         [(a, a - beta) for a, beta in s.pairs])
    return normalize_gsfs(flipped)


def _require_admissible(s: GsfsSymbol, what: str) -> None:
    problems = validate_gsfs(s)
    if problems:
        raise InvalidSymbol(f"{what}: inadmissible symbol {s}", problems)


def equivalent(a: GsfsSymbol, b: GsfsSymbol,
               policy: OrientationPolicy = OrientationPolicy.STRICT) -> bool:
    _require_admissible(a, "equivalent")
    _require_admissible(b, "equivalent")
    na, nb = normalize_gsfs(a), normalize_gsfs(b)
    if na == nb:
        return True
    if OrientationPolicy(policy) is OrientationPolicy.UP_TO_ORIENTATION:
        return na == reverse_orientation(nb)
    return False


def sing_count(s: GsfsSymbol) -> int:
    """Topologically singular points: each interval fiber carries two."""
    return 2 * s.iota


def is_manifold(s: GsfsSymbol) -> bool:
    return s.iota == 0
