"""
Text notation for GSFS and local-action symbols.

Grammar (terminals are literal ASCII)::

    gsfs  = "GSFS(" "b=" int ";" "eps=" eps ";" "g=" uint ";" "i=" uint [";" pairs] ")"
    lsa   = "LSA(" "b=" int ";" "eps=" eps ";" "g=" uint ";" "f=" uint "/" uint ";"
            "t=" uint "/" uint ";" "s=" uint "/" uint ";" [pairs] ";"
            "r=" list ";" "q=" list ")"
    pairs = pair { "," pair }
    pair  = "(" uint "," int ")"
    list  = "[" [ uint { "," uint } ] "]"
    eps   = "o1" | "o2" | "n1" | "n2" | "n3" | "n4"

Whitespace is allowed between tokens on input.  Rendering never emits any,
and for a normalized symbol the rendering is its canonical text.

    >>> s = parse_gsfs("GSFS(b=0; eps=o1; g=1; i=2; (5,2), (3,1))")
    >>> render_gsfs(s)
    'GSFS(b=0;eps=o1;g=1;i=2;(5,2),(3,1))'
"""

from __future__ import annotations

from .errors import IntegerOverflow, ParseError
from .local_action import LocalActionSymbol
from .symbols import Epsilon, GsfsSymbol, SeifertPair

__all__ = [
    "INT64_MIN",
    "INT64_MAX",
    "parse_gsfs",
    "render_gsfs",
    "parse_local",
    "render_local",
    "parse_symbol",
    "render_symbol",
]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

_WS = " \t\r\n"
_DIGITS = "0123456789"
_EPS_TAGS = {e.value: e for e in Epsilon}
_EPS_EXPECTED = "one of " + ",".join(_EPS_TAGS)


class _Scanner:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected: str, at: int | None = None) -> ParseError:
        at = self.pos if at is None else at
        found = self.text[at:at + 8] if at < len(self.text) else "end of input"
        return ParseError(self._byte_offset(at), expected, found)

    def _byte_offset(self, index: int) -> int:
        return len(self.text[:index].encode("utf-8", "surrogatepass"))

    def skip_ws(self) -> None:
        text, pos = self.text, self.pos
        while pos < len(text) and text[pos] in _WS:
            pos += 1
        self.pos = pos

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise self.error(repr(literal))
        self.pos += len(literal)

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        text, pos = self.text, self.pos
        while pos < len(text) and text[pos] in _DIGITS:
            pos += 1
        if pos == start:
            raise self.error("unsigned integer")
        self.pos = pos
        value = int(text[start:pos])
        if value > INT64_MAX:
            raise IntegerOverflow(self._byte_offset(start), text[start:pos])
        return value

    def int_(self) -> int:
        self.skip_ws()
        start = self.pos
        negative = self.text.startswith("-", start)
        if negative:
            self.pos += 1
            if not (self.pos < len(self.text) and self.text[self.pos] in _DIGITS):
                raise self.error("digits after '-'")
        try:
            value = self.uint()
        except IntegerOverflow as exc:
            if negative and int(exc.literal) == -INT64_MIN:
                return INT64_MIN
            raise IntegerOverflow(self._byte_offset(start), self.text[start:self.pos]) from None
        return -value if negative else value

    def eps(self) -> Epsilon:
        self.skip_ws()
        tag = self.text[self.pos:self.pos + 2]
        if tag not in _EPS_TAGS:
            raise self.error(_EPS_EXPECTED)
        self.pos += 2
        return _EPS_TAGS[tag]

    def pairs(self) -> list[SeifertPair]:
        out = [self.pair()]
        while self.peek(","):
            self.expect(",")
            out.append(self.pair())
        return out

    def pair(self) -> SeifertPair:
        self.expect("(")
        alpha = self.uint()
        self.expect(",")
        beta = self.int_()
        self.expect(")")
        return SeifertPair(alpha, beta)

    def uint_list(self) -> list[int]:
        self.expect("[")
        out = []
        if not self.peek("]"):
            out.append(self.uint())
            while self.peek(","):
                self.expect(",")
                out.append(self.uint())
        self.expect("]")
        return out

    def slash_pair(self, key: str) -> tuple[int, int]:
        self.expect(key)
        total = self.uint()
        self.expect("/")
        return total, self.uint()

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("end of input")


def _scanner(text: str | bytes) -> _Scanner:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(exc.start, "valid UTF-8", repr(bytes(text[exc.start:exc.start + 1]))) from None
    return _Scanner(text)


def _header(sc: _Scanner) -> tuple[int, Epsilon, int]:
    sc.expect("b=")
    b = sc.int_()
    sc.expect(";")
    sc.expect("eps=")
    eps = sc.eps()
    sc.expect(";")
    sc.expect("g=")
    g = sc.uint()
    sc.expect(";")
    return b, eps, g


def parse_gsfs(text: str | bytes) -> GsfsSymbol:
    """Parse GSFS notation.  No admissibility checks are made."""
    sc = _scanner(text)
    sc.expect("GSFS(")
    b, eps, g = _header(sc)
    sc.expect("i=")
    iota = sc.uint()
    pairs: list[SeifertPair] = []
    if sc.peek(";"):
        sc.expect(";")
        pairs = sc.pairs()
    sc.expect(")")
    sc.end()
    return GsfsSymbol(b, eps, g, iota, pairs)


def parse_local(text: str | bytes) -> LocalActionSymbol:
    """Parse local-action notation.  No admissibility checks are made."""
    sc = _scanner(text)
    sc.expect("LSA(")
    b, eps, g = _header(sc)
    f, k1 = sc.slash_pair("f=")
    sc.expect(";")
    t, k2 = sc.slash_pair("t=")
    sc.expect(";")
    s, k3 = sc.slash_pair("s=")
    sc.expect(";")
    pairs: list[SeifertPair] = []
    if sc.peek("("):
        pairs = sc.pairs()
    sc.expect(";")
    sc.expect("r=")
    r = sc.uint_list()
    sc.expect(";")
    sc.expect("q=")
    q = sc.uint_list()
    sc.expect(")")
    sc.end()
    return LocalActionSymbol(b, eps, g, f, k1, t, k2, s, k3, pairs, r, q)


def _render_pairs(pairs) -> str:
    return ",".join(f"({a},{b})" for a, b in pairs)


def render_gsfs(s: GsfsSymbol) -> str:
    head = f"GSFS(b={s.b};eps={s.epsilon.value};g={s.g};i={s.iota}"
    if s.pairs:
        return f"{head};{_render_pairs(s.pairs)})"
    return head + ")"


def render_local(s: LocalActionSymbol) -> str:
    return (
        f"LSA(b={s.b};eps={s.epsilon.value};g={s.g};"
        f"f={s.f}/{s.k1};t={s.t}/{s.k2};s={s.s}/{s.k3};"
        f"{_render_pairs(s.pairs)};"
        f"r=[{','.join(map(str, s.r))}];q=[{','.join(map(str, s.q))}])"
    )


def parse_symbol(text: str | bytes) -> GsfsSymbol | LocalActionSymbol:
    """Parse either notation, dispatching on the leading keyword."""
    sc = _scanner(text)
    if sc.peek("LSA("):
        return parse_local(sc.text)
    return parse_gsfs(sc.text)


def render_symbol(s: GsfsSymbol | LocalActionSymbol) -> str:
    if isinstance(s, LocalActionSymbol):
        return render_local(s)
    return render_gsfs(s)
