"""Exact arithmetic in the mapping-torus group of a braid.

For a braid beta on n strands, the complement of its closure inside the
solid torus has fundamental group F_n x|_beta Z with presentation

    < x_1, ..., x_n, t  |  t^-1 x_i t = beta(x_i) >.

Every element has a unique normal form t^m * z with z a reduced word in
the x_i, and

    (m1, z1) * (m2, z2) = (m1 + m2, beta^m2(z1) * z2).

Elements carry no reference to the braid; arithmetic takes the braid as an
explicit context argument, and the powers of its automorphism are memoized
per braid (idempotent cache, safe under concurrent use).

Text form of an element: ``t^<m> | <word>``, e.g. ``t^2 | x1 x2``; the
identity tail leaves nothing after the bar.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .braid import Braid, artin_endo, closure_info
from .errors import (
    BudgetExceeded,
    CoreMismatch,
    DomainError,
    IndexOutOfRank,
    NotAKnot,
    ParseError,
)
from .freegroup import (
    FreeEndo,
    Word,
    apply_endo,
    compose,
    cyclic_decompose,
    parse_word,
    word_text,
)
from .presentations import PeripheralPair, Presentation

__all__ = [
    "TorusElement",
    "DEFAULT_ENUMERATION_BUDGET",
    "apply_power",
    "mt_multiply",
    "mt_invert",
    "mt_pow",
    "solid_torus_presentation",
    "closure_meridian",
    "meridian_conjugator",
    "centralizer_generators",
    "power_identity_check",
    "centralizer_enumeration_oracle",
    "enumeration_size",
    "parse_torus_element",
    "torus_element_text",
    "clear_power_cache",
]

DEFAULT_ENUMERATION_BUDGET = 10**6


@dataclass(frozen=True)
class TorusElement:
    """Normal form t^texp * tail."""

    texp: int
    tail: Word

    def __str__(self) -> str:
        return torus_element_text(self)


class _BraidPowers:
    """Memoized powers-of-two of a braid's automorphism (both signs).

    The cache fill is idempotent (setdefault), so racing threads may waste
    work but always observe the same values."""

    def __init__(self, braid: Braid):
        self.rank = braid.strands
        self._cache: dict[tuple[int, int], FreeEndo] = {
            (1, 0): artin_endo(braid),
            (-1, 0): artin_endo(braid.inverse()),
        }

    def _pow2(self, sign: int, j: int) -> FreeEndo:
        e = self._cache.get((sign, j))
        if e is None:
            prev = self._pow2(sign, j - 1)
            e = self._cache.setdefault((sign, j), compose(prev, prev))
        return e

    def apply(self, m: int, w: Word) -> Word:
        sign = 1 if m > 0 else -1
        m = abs(m)
        j = 0
        while m:
            if m & 1:
                w = apply_endo(self._pow2(sign, j), w)
            m >>= 1
            j += 1
        return w


_powers: dict[Braid, _BraidPowers] = {}


def _powers_for(beta: Braid) -> _BraidPowers:
    ctx = _powers.get(beta)
    if ctx is None:
        ctx = _powers.setdefault(beta, _BraidPowers(beta))
    return ctx


def clear_power_cache() -> None:
    _powers.clear()


def apply_power(beta: Braid, m: int, w: Word) -> Word:
    """beta^m applied to w, for any integer m (negative uses the inverse
    braid's automorphism, which composes with the forward one to the
    identity)."""
    if w.max_index() > beta.strands:
        raise IndexOutOfRank(f"word uses generator above rank {beta.strands}")
    if m == 0 or not w:
        return w
    return _powers_for(beta).apply(m, w)


def mt_multiply(a: TorusElement, b: TorusElement, beta: Braid) -> TorusElement:
    """(m1, z1)(m2, z2) = (m1 + m2, beta^m2(z1) z2), reduced."""
    if b.tail.max_index() > beta.strands:
        raise IndexOutOfRank(f"word uses generator above rank {beta.strands}")
    return TorusElement(a.texp + b.texp, apply_power(beta, b.texp, a.tail) * b.tail)


def mt_invert(a: TorusElement, beta: Braid) -> TorusElement:
    return TorusElement(-a.texp, apply_power(beta, -a.texp, ~a.tail))


def mt_pow(a: TorusElement, k: int, beta: Braid) -> TorusElement:
    if k < 0:
        return mt_pow(mt_invert(a, beta), -k, beta)
    out = TorusElement(0, Word())
    for _ in range(k):
        # left-multiply so the power application always hits the short tail
        out = mt_multiply(a, out, beta)
    return out


def solid_torus_presentation(beta: Braid) -> Presentation:
    """The n+1 generator presentation above, with peripheral data for the
    outer boundary torus: meridian x_1...x_n, longitude t.  The meridian of
    the closed-braid boundary is always x_1 (see :func:`closure_meridian`).
    """
    n = beta.strands
    e = artin_endo(beta)
    t = n + 1
    gens = tuple(f"x{i}" for i in range(1, n + 1)) + ("t",)
    relators = tuple(
        Word([-t, i, t]) * ~e.images[i - 1] for i in range(1, n + 1)
    )
    peripheral = PeripheralPair(Word(range(1, n + 1)), Word([t]))
    return Presentation(gens, relators, peripheral)


def closure_meridian(beta: Braid) -> Word:
    """Meridian of the closed braid inside the solid torus: x_1."""
    return Word([1])


def _require_knot(beta: Braid) -> None:
    info = closure_info(beta)
    if not info.is_knot:
        raise NotAKnot(f"closure has {info.components} components")


def meridian_conjugator(beta: Braid) -> Word:
    """The unique w with beta^n(x_1) = w x_1 w^-1 whose last letter is not
    a power of x_1 (any trailing x_1 run is absorbed into the x_1^l factor
    of the centralizer)."""
    _require_knot(beta)
    n = beta.strands
    image = apply_power(beta, n, Word([1]))
    prefix, core = cyclic_decompose(image)
    if core != Word([1]):
        raise CoreMismatch(
            f"cyclically reduced core of beta^{n}(x1) is {core}, expected x1"
        )
    s = prefix._s
    x1, X1 = chr(1), chr(254)
    while s and (s[-1] == x1 or s[-1] == X1):
        s = s[:-1]
    return Word._raw(s)


def centralizer_generators(beta: Braid) -> tuple[TorusElement, TorusElement]:
    """Generating pair (t^n w, x_1) of the centralizer of x_1; the two
    elements commute in exact normal-form arithmetic."""
    _require_knot(beta)
    return (
        TorusElement(beta.strands, meridian_conjugator(beta)),
        TorusElement(0, Word([1])),
    )


def power_identity_check(beta: Braid, k: int, k_cap: int = 8) -> bool:
    """Exact check that beta^{kn}(x_1) equals the tail of

        t^{-kn} (t^n w)^k  x_1  (t^n w)^{-k} t^{kn}

    computed in normal-form arithmetic.  True for every knot-closure braid;
    a False return means a convention bug somewhere and is reportable.
    The word sizes grow exponentially in k, hence the configurable cap."""
    _require_knot(beta)
    if abs(k) > k_cap:
        raise DomainError(f"|k| = {abs(k)} exceeds the configured cap {k_cap}")
    n = beta.strands
    w = meridian_conjugator(beta)
    lhs = apply_power(beta, k * n, Word([1]))
    a = TorusElement(n, w)
    # associate as (t^-kn a^k) x1 (t^-kn a^k)^-1; the left factor has t-degree 0
    left = mt_multiply(TorusElement(-k * n, Word()), mt_pow(a, k, beta), beta)
    rhs = mt_multiply(
        mt_multiply(left, TorusElement(0, Word([1])), beta),
        mt_invert(left, beta),
        beta,
    )
    return rhs.texp == 0 and rhs.tail == lhs


def _reduced_words(rank: int, max_len: int) -> Iterator[Word]:
    """All freely reduced words of length <= max_len, shortest first."""
    yield Word()
    alphabet = [chr(k) for k in range(1, rank + 1)]
    alphabet += [chr(255 - k) for k in range(1, rank + 1)]
    inv = {c: chr(255 - ord(c)) for c in alphabet}
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for s in frontier:
            last = s[-1] if s else None
            for c in alphabet:
                if last is not None and inv[c] == last:
                    continue
                nxt.append(s + c)
        for s in nxt:
            yield Word._raw(s)
        frontier = nxt


def enumeration_size(rank: int, max_texp: int, max_len: int) -> int:
    words = 1
    if max_len >= 1:
        run = 2 * rank
        words += run
        for _ in range(max_len - 1):
            run *= 2 * rank - 1
            words += run
    return (2 * max_texp + 1) * words


def centralizer_enumeration_oracle(
    beta: Braid,
    max_texp: int,
    max_len: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> list[TorusElement]:
    """Brute-force search for every normal form t^m z with |m| <= max_texp
    and |z| <= max_len that commutes with x_1.

    This enumeration is the independent oracle for the centralizer shape:
    it never consults the conjugator machinery.  The only pruning is a
    length bound that follows from free reduction alone (z x_1 has length
    |z| +- 1 while beta^m(x_1) z has length at least |beta^m(x_1)| - |z|,
    so no match is possible once |beta^m(x_1)| > 2 max_len + 1).
    """
    _require_knot(beta)
    size = enumeration_size(beta.strands, max_texp, max_len)
    if size > budget:
        raise BudgetExceeded(f"enumeration of {size} candidates exceeds budget {budget}")
    x1 = Word([1])
    found: list[TorusElement] = []
    candidates = list(_reduced_words(beta.strands, max_len))
    for m in range(-max_texp, max_texp + 1):
        u = apply_power(beta, m, x1)
        if len(u) > 2 * max_len + 1:
            continue
        for z in candidates:
            if z * x1 == u * z:
                found.append(TorusElement(m, z))
    found.sort(key=lambda el: (el.texp, len(el.tail), el.tail._s))
    return found


def torus_element_text(el: TorusElement) -> str:
    tail = word_text(el.tail)
    return f"t^{el.texp} | {tail}" if tail else f"t^{el.texp} |"


def parse_torus_element(text: str) -> TorusElement:
    head, sep, rest = text.partition("|")
    if not sep:
        raise ParseError("expected 't^<m> | <word>'", position=0)
    head = head.strip()
    if not head.startswith("t^"):
        raise ParseError(f"bad t-power {head!r}", position=0)
    try:
        m = int(head[2:])
    except ValueError:
        raise ParseError(f"bad t-power {head!r}", position=0) from None
    return TorusElement(m, parse_word(rest.strip()))
