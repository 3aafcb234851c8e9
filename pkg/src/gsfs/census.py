"""
Bounded census of canonical GSFS symbols and its text file format.

The enumerator builds canonical forms directly.  :func:`oracle_census`
reaches the same set the slow way (raw tuples, validate, normalize, dedupe)
and exists to cross-check it.

File format (UTF-8, LF)::

    # gsfs-census v1 g<=G i<=I n<=N a<=A b=[lo,hi] eps=o1,o2,...
    <symbol>\\tsing=<n>\\tmanifold=<true|false>[\\tcover=<symbol>]
"""

from __future__ import annotations

import io
import itertools
import math
import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .cover import double_cover
from .errors import BoundsError, FormatError, InvalidSymbol, ParseError
from .notation import parse_gsfs, render_gsfs
from .symbols import (
    BDomain,
    Epsilon,
    GsfsSymbol,
    SeifertPair,
    b_domain,
    is_manifold,
    normalize_gsfs,
    sing_count,
    validate_gsfs,
)

__all__ = [
    "EnumBounds",
    "CensusRecord",
    "enumerate_symbols",
    "oracle_census",
    "make_record",
    "build_census",
    "write_census",
    "read_census",
    "load_census",
    "render_census",
]

ALL_EPSILON = tuple(Epsilon)
_MAGIC = "# gsfs-census v1 "


@dataclass(frozen=True)
class EnumBounds:
    max_g: int
    max_iota: int
    max_pairs: int
    max_alpha: int
    b_lo: int = 0
    b_hi: int = 0
    eps_set: tuple[Epsilon, ...] = ALL_EPSILON

    def __post_init__(self):
        # Store eps in the fixed o1,o2,n1,... order so headers are canonical.
        try:
            chosen = {Epsilon(e) for e in self.eps_set}
        except ValueError as exc:
            raise BoundsError(str(exc)) from None
        object.__setattr__(self, "eps_set", tuple(e for e in ALL_EPSILON if e in chosen))

    def check(self) -> None:
        for name in ("max_g", "max_iota", "max_pairs"):
            if getattr(self, name) < 0:
                raise BoundsError(f"{name} must be >=0, got {getattr(self, name)}")
        if self.max_alpha < 2:
            raise BoundsError(f"max_alpha must be >=2, got {self.max_alpha}")
        if not self.b_lo <= 0 <= self.b_hi:
            raise BoundsError(f"b range [{self.b_lo},{self.b_hi}] must contain 0")
        if not self.eps_set:
            raise BoundsError("eps set must be non-empty")

    def contains(self, s: GsfsSymbol) -> bool:
        """Whether a canonical symbol lies within these bounds."""
        return (
            s.epsilon in self.eps_set
            and s.g <= self.max_g
            and s.iota <= self.max_iota
            and len(s.pairs) <= self.max_pairs
            and all(p.alpha <= self.max_alpha for p in s.pairs)
            and self.b_lo <= s.b <= self.b_hi
        )

    def header(self) -> str:
        eps = ",".join(e.value for e in self.eps_set)
        return (f"{_MAGIC}g<={self.max_g} i<={self.max_iota} n<={self.max_pairs} "
                f"a<={self.max_alpha} b=[{self.b_lo},{self.b_hi}] eps={eps}")

    @classmethod
    def from_header(cls, line: str) -> "EnumBounds":
        m = _HEADER_RE.fullmatch(line)
        if m is None:
            raise FormatError(1, f"bad census header {line!r}")
        try:
            eps = tuple(Epsilon(e) for e in m["eps"].split(","))
        except ValueError as exc:
            raise FormatError(1, str(exc)) from None
        bounds = cls(int(m["g"]), int(m["i"]), int(m["n"]), int(m["a"]),
                     int(m["lo"]), int(m["hi"]), eps)
        if bounds.header() != line:
            raise FormatError(1, f"census header is not canonical: {line!r}")
        return bounds


_HEADER_RE = re.compile(
    re.escape(_MAGIC)
    + r"g<=(?P<g>\d+) i<=(?P<i>\d+) n<=(?P<n>\d+) a<=(?P<a>\d+) "
    r"b=\[(?P<lo>-?\d+),(?P<hi>-?\d+)\] eps=(?P<eps>[a-z0-9,]+)"
)


@dataclass(frozen=True)
class CensusRecord:
    symbol: GsfsSymbol
    sing: int
    manifold: bool
    cover: GsfsSymbol | None = None

    def to_line(self) -> str:
        fields = [render_gsfs(self.symbol), f"sing={self.sing}",
                  f"manifold={'true' if self.manifold else 'false'}"]
        if self.cover is not None:
            fields.append(f"cover={render_gsfs(self.cover)}")
        return "\t".join(fields)


def make_record(s: GsfsSymbol) -> CensusRecord:
    s = normalize_gsfs(s)
    cover = double_cover(s) if s.iota > 0 else None
    return CensusRecord(s, sing_count(s), is_manifold(s), cover)


# -- enumeration -------------------------------------------------------------

def canonical_pairs(max_alpha: int, z2: bool) -> list[SeifertPair]:
    """All normalized pairs with ``alpha <= max_alpha``, sorted."""
    out = []
    for alpha in range(2, max_alpha + 1):
        top = alpha // 2 if z2 else alpha - 1
        out.extend(SeifertPair(alpha, beta) for beta in range(1, top + 1)
                   if math.gcd(alpha, beta) == 1)
    return out


def _b_values(bounds: EnumBounds, domain: BDomain) -> Iterable[int]:
    if domain is BDomain.ZERO:
        return (0,)
    if domain is BDomain.Z2:
        return [b for b in (0, 1) if bounds.b_lo <= b <= bounds.b_hi]
    return range(bounds.b_lo, bounds.b_hi + 1)


def _generate(bounds: EnumBounds) -> Iterator[GsfsSymbol]:
    for eps in bounds.eps_set:
        pool = canonical_pairs(bounds.max_alpha, eps.z2_b)
        multisets = [c for n in range(bounds.max_pairs + 1)
                     for c in itertools.combinations_with_replacement(pool, n)]
        for g in range(0 if eps.orientable_base else 1, bounds.max_g + 1):
            for iota in range(bounds.max_iota + 1):
                for pairs in multisets:
                    domain = b_domain(eps, iota > 0, (p.alpha for p in pairs))
                    for b in _b_values(bounds, domain):
                        yield GsfsSymbol(b, eps, g, iota, pairs)


def enumerate_symbols(bounds: EnumBounds) -> list[GsfsSymbol]:
    """Every admissible canonical symbol within ``bounds``, ordered by rendering."""
    bounds.check()
    return sorted(_generate(bounds), key=render_gsfs)


def _raw_pairs(max_alpha: int) -> list[SeifertPair]:
    # alpha = 1 and unreduced beta are deliberately included.
    return [SeifertPair(a, beta) for a in range(1, max_alpha + 1) for beta in range(-a, 2 * a)]


def oracle_census(bounds: EnumBounds, raw_b: Sequence[int] | None = None) -> set[GsfsSymbol]:
    """Brute-force reference: raw tuples -> validate -> normalize -> dedupe.

    Raw pair lists are ordered and contain unreduced and ``alpha = 1`` pairs;
    only canonical images inside ``bounds`` are kept.
    """
    bounds.check()
    raw_b = range(bounds.b_lo, bounds.b_hi + 1) if raw_b is None else raw_b
    pool = _raw_pairs(bounds.max_alpha)
    lists = [p for n in range(bounds.max_pairs + 1) for p in itertools.product(pool, repeat=n)]
    seen: set[GsfsSymbol] = set()
    for eps, g, iota, b in itertools.product(bounds.eps_set, range(bounds.max_g + 1),
                                             range(bounds.max_iota + 1), raw_b):
        for pairs in lists:
            raw = GsfsSymbol(b, eps, g, iota, pairs)
            if validate_gsfs(raw):
                continue
            canon = normalize_gsfs(raw)
            if bounds.contains(canon):
                seen.add(canon)
    return seen


def raw_tuple_count(bounds: EnumBounds) -> int:
    pool = len(_raw_pairs(bounds.max_alpha))
    lists = sum(pool ** n for n in range(bounds.max_pairs + 1))
    return (len(bounds.eps_set) * (bounds.max_g + 1) * (bounds.max_iota + 1)
            * (bounds.b_hi - bounds.b_lo + 1) * lists)


def build_census(bounds: EnumBounds) -> list[CensusRecord]:
    return [make_record(s) for s in enumerate_symbols(bounds)]


# -- persistence -------------------------------------------------------------

def render_census(records: Iterable[CensusRecord], bounds: EnumBounds) -> str:
    lines = [r.to_line() for r in sorted(records, key=lambda r: render_gsfs(r.symbol))]
    return "\n".join([bounds.header(), *lines]) + "\n"


def write_census(records: Iterable[CensusRecord], destination, bounds: EnumBounds) -> None:
    """Write records (sorted by symbol rendering) to a path or text stream."""
    text = render_census(records, bounds)
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        destination.write(text)


def _parse_record(line: str, lineno: int) -> CensusRecord:
    fields = line.split("\t")
    if len(fields) not in (3, 4):
        raise FormatError(lineno, f"expected 3 or 4 tab-separated fields, got {len(fields)}")
    try:
        symbol = parse_gsfs(fields[0])
        cover = None
        if len(fields) == 4:
            if not fields[3].startswith("cover="):
                raise FormatError(lineno, f"expected cover=..., got {fields[3]!r}")
            cover = parse_gsfs(fields[3][len("cover="):])
    except (ParseError, OverflowError) as exc:
        raise FormatError(lineno, str(exc)) from None
    m = re.fullmatch(r"sing=(\d+)", fields[1])
    if m is None:
        raise FormatError(lineno, f"expected sing=<uint>, got {fields[1]!r}")
    if fields[2] not in ("manifold=true", "manifold=false"):
        raise FormatError(lineno, f"expected manifold=<true|false>, got {fields[2]!r}")
    record = CensusRecord(symbol, int(m[1]), fields[2] == "manifold=true", cover)
    try:
        expected = make_record(symbol)
    except InvalidSymbol as exc:
        raise FormatError(lineno, str(exc)) from None
    if expected != record:
        raise FormatError(lineno, f"record is inconsistent with its symbol; expected {expected.to_line()!r}")
    return record


def load_census(source) -> tuple[EnumBounds, list[CensusRecord]]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8", newline="") as fh:
            text = fh.read()
    else:
        text = source.read()
    if not text.endswith("\n"):
        raise FormatError(max(1, text.count("\n") + 1), "file must end with LF")
    lines = text[:-1].split("\n")
    bounds = EnumBounds.from_header(lines[0])
    records = []
    previous = None
    for lineno, line in enumerate(lines[1:], start=2):
        if line != line.rstrip() or "\r" in line:
            raise FormatError(lineno, "trailing whitespace or CR")
        record = _parse_record(line, lineno)
        key = line.split("\t", 1)[0]
        if previous is not None and key <= previous:
            raise FormatError(lineno, "records are not strictly sorted by symbol")
        previous = key
        records.append(record)
    return bounds, records


def read_census(source) -> list[CensusRecord]:
    return load_census(source)[1]


def census_text(bounds: EnumBounds) -> str:
    buf = io.StringIO()
    write_census(build_census(bounds), buf, bounds)
    return buf.getvalue()
