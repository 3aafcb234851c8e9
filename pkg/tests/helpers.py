"""Shared test oracles and generators.

Nothing here calls into the normalization code: the rule transcription and
the class-member generator are written from the admissibility rules and the
canonical-form conventions directly so they can check the package.
"""

import math
import random

from gsfs import EnumBounds, GsfsSymbol, enumerate_symbols

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1
EPS_TAGS = ("o1", "o2", "n1", "n2", "n3", "n4")
Z2_TAGS = ("o2", "n1", "n3", "n4")

CRITERION1_BOUNDS = EnumBounds(max_g=2, max_iota=2, max_pairs=2, max_alpha=5, b_lo=-2, b_hi=2)

_census_cache = {}


def census(bounds=CRITERION1_BOUNDS):
    if bounds not in _census_cache:
        _census_cache[bounds] = enumerate_symbols(bounds)
    return _census_cache[bounds]


def rules_admissible(b, eps, g, iota, pairs):
    """Straight-line transcription of the admissibility rules."""
    if g < 0 or iota < 0:
        return False
    if eps.startswith("n") and g < 1:
        return False
    for alpha, beta in pairs:
        if alpha < 1:
            return False
        if math.gcd(alpha, beta % alpha) != 1:
            return False
    if iota > 0:
        return b == 0
    if eps in Z2_TAGS:
        if any(alpha == 2 for alpha, _ in pairs):
            return b == 0
        return b in (0, 1)
    return True


def scramble(canon: GsfsSymbol, rng: random.Random) -> GsfsSymbol:
    """A random admissible, generally unnormalized, member of the class of ``canon``.

    Moves used: shift beta by multiples of alpha, insert (1, m) pairs, flip
    beta -> alpha - beta in Z2-b classes, shuffle; b is compensated by hand.
    """
    eps = canon.epsilon.value
    z2 = eps in Z2_TAGS
    carry = 0
    pairs = []
    for alpha, beta in canon.pairs:
        if z2 and rng.random() < 0.5:
            beta = alpha - beta
        k = rng.randint(-2, 2)
        pairs.append((alpha, beta + k * alpha))
        carry += k
    for _ in range(rng.randint(0, 2)):
        m = rng.randint(-3, 3)
        pairs.append((1, m))
        carry += m
    rng.shuffle(pairs)
    if canon.iota > 0 or (z2 and any(a == 2 for a, _ in canon.pairs)):
        b = 0
    elif z2:
        b = (canon.b - carry) % 2
    else:
        b = canon.b - carry
    return GsfsSymbol(b, eps, canon.g, canon.iota, pairs)


def random_symbol(rng: random.Random) -> GsfsSymbol:
    """Arbitrary symbol within the notation's integer ranges (usually inadmissible)."""
    def big_int():
        return rng.choice([rng.randint(-5, 5), rng.randint(INT64_MIN, INT64_MAX),
                           INT64_MIN, INT64_MAX])

    def big_uint():
        return rng.choice([rng.randint(0, 6), rng.randint(0, INT64_MAX), INT64_MAX])

    pairs = [(big_uint(), big_int()) for _ in range(rng.randint(0, 4))]
    return GsfsSymbol(big_int(), rng.choice(EPS_TAGS), big_uint(), big_uint(), pairs)


def closed_form_count(max_g, max_iota, max_pairs, max_alpha, b_lo, b_hi, eps_set=EPS_TAGS):
    """Census cardinality by counting rather than listing.

    Hand-derived: count canonical pair multisets per class and multiply by the
    number of admissible b values and (g, iota) choices.
    """
    def multisets(n_items, k):
        if n_items == 0:
            return 1 if k == 0 else 0
        return math.comb(n_items + k - 1, k)

    total = 0
    for eps in eps_set:
        z2 = eps in Z2_TAGS
        pool = [(a, bt) for a in range(2, max_alpha + 1) for bt in range(1, a)
                if math.gcd(a, bt) == 1 and (not z2 or 2 * bt <= a)]
        n_all = sum(multisets(len(pool), k) for k in range(max_pairs + 1))
        n_no2 = sum(multisets(len(pool) - 1, k) for k in range(max_pairs + 1))
        genera = max_g + 1 if eps.startswith("o") else max_g
        b_int = b_hi - b_lo + 1
        b_z2 = sum(1 for b in (0, 1) if b_lo <= b <= b_hi)
        if z2:
            manifold = n_no2 * b_z2 + (n_all - n_no2)
        else:
            manifold = n_all * b_int
        total += genera * (manifold + max_iota * n_all)
    return total
