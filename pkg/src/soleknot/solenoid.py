"""Classification of solenoids from their winding sequences.

An inverse limit of circles with degree-n_i covering maps (every n_i > 1)
is determined, as a topological space, by the formal product of the n_i:
a supernatural number assigning each prime an exponent in N union {inf}.
Two sequences give homeomorphic limits exactly when one can delete
finitely many entries from each to make the products match.

Only eventually periodic sequences are representable here (a finite
preperiod plus a repeating block).  That keeps equivalence decidable and
covers the constant and mixed examples in the literature.  For such
sequences the finite-deletion test collapses to comparing the infinite
parts alone:

* a prime dividing a period entry recurs forever, so its exponent is
  infinite and no finite deletion can change that;
* all other prime contributions come from the finite preperiod, and
  deleting the whole preperiod removes them.

Hence two eventually periodic sequences are equivalent iff the same set of
primes divides their period blocks.

Sequence text syntax: ``pre: 12 5 | per: 2 3`` (preperiod before the bar,
period after; preperiod may be empty).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EntryTooLarge, EntryTooSmall, ParseError

__all__ = [
    "DEFAULT_FACTOR_BOUND",
    "WindingSeq",
    "PrimeProfile",
    "Violation",
    "profile",
    "solenoids_equivalent",
    "validate_sequence",
    "parse_winding_seq",
    "winding_seq_text",
    "profile_text",
    "parse_profile",
]

DEFAULT_FACTOR_BOUND = 10**6


@dataclass(frozen=True)
class WindingSeq:
    """Eventually periodic winding sequence n_1, n_2, ...; the period block
    repeats forever after the preperiod."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]


@dataclass(frozen=True)
class PrimeProfile:
    """Supernatural number: finite prime exponents plus the set of primes
    with infinite exponent.  The two parts are disjoint."""

    finite: tuple[tuple[int, int], ...]
    infinite: frozenset[int]

    def finite_map(self) -> dict[int, int]:
        return dict(self.finite)


@dataclass(frozen=True)
class Violation:
    code: str
    where: str = ""

    def __str__(self) -> str:
        return f"{self.code} at {self.where}" if self.where else self.code


def _factor(n: int, bound: int) -> dict[int, int]:
    if n > bound:
        raise EntryTooLarge(f"entry {n} exceeds factorization bound {bound}")
    out: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def validate_sequence(seq: WindingSeq) -> list[Violation]:
    """Structural violations as data; an empty list means valid."""
    out = []
    if not seq.period:
        out.append(Violation("EmptyPeriod"))
    for kind, entries in (("preperiod", seq.preperiod), ("period", seq.period)):
        for i, n in enumerate(entries):
            if n < 2:
                out.append(Violation("EntryTooSmall", f"{kind} {i}"))
    return out


def profile(seq: WindingSeq, bound: int = DEFAULT_FACTOR_BOUND) -> PrimeProfile:
    """Supernatural number of the sequence: a prime has infinite exponent
    iff it divides some period entry; otherwise its exponent is its total
    multiplicity across the preperiod."""
    violations = validate_sequence(seq)
    if violations:
        raise EntryTooSmall("; ".join(str(v) for v in violations))
    infinite: set[int] = set()
    for n in seq.period:
        infinite.update(_factor(n, bound))
    finite: dict[int, int] = {}
    for n in seq.preperiod:
        for p, e in _factor(n, bound).items():
            if p not in infinite:
                finite[p] = finite.get(p, 0) + e
    return PrimeProfile(tuple(sorted(finite.items())), frozenset(infinite))


def solenoids_equivalent(a: WindingSeq, b: WindingSeq, bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Homeomorphism test for the two inverse limits (see module docs for
    why this reduces to equality of the infinite prime sets)."""
    return profile(a, bound).infinite == profile(b, bound).infinite


def parse_winding_seq(text: str) -> WindingSeq:
    toks = text.split()
    if not toks or toks[0] != "pre:":
        raise ParseError("expected 'pre: ... | per: ...'", position=0)
    try:
        bar = toks.index("|")
    except ValueError:
        raise ParseError("missing '|' separator", position=0) from None
    if bar + 1 >= len(toks) or toks[bar + 1] != "per:":
        raise ParseError("expected 'per:' after '|'", position=bar)
    def ints(parts: list[str], where: str) -> tuple[int, ...]:
        vals = []
        for tok in parts:
            try:
                vals.append(int(tok))
            except ValueError:
                raise ParseError(f"bad {where} entry {tok!r}", position=0) from None
        return tuple(vals)
    return WindingSeq(ints(toks[1:bar], "preperiod"), ints(toks[bar + 2:], "period"))


def winding_seq_text(seq: WindingSeq) -> str:
    toks = ["pre:", *map(str, seq.preperiod), "|", "per:", *map(str, seq.period)]
    return " ".join(toks)


def profile_text(pr: PrimeProfile) -> str:
    """Compact factor listing, e.g. ``2^2 3 5^inf``; the empty profile is 1."""
    parts = []
    entries = dict(pr.finite)
    for p in sorted(set(entries) | pr.infinite):
        if p in pr.infinite:
            parts.append(f"{p}^inf")
        elif entries[p] == 1:
            parts.append(str(p))
        else:
            parts.append(f"{p}^{entries[p]}")
    return " ".join(parts) if parts else "1"


def parse_profile(text: str) -> PrimeProfile:
    s = text.strip()
    if s == "1":
        return PrimeProfile((), frozenset())
    finite: dict[int, int] = {}
    infinite: set[int] = set()
    for tok in s.split():
        base, caret, exp = tok.partition("^")
        if not base.isdigit():
            raise ParseError(f"bad profile factor {tok!r}", position=0)
        p = int(base)
        if not caret:
            finite[p] = finite.get(p, 0) + 1
        elif exp == "inf":
            infinite.add(p)
        elif exp.isdigit():
            finite[p] = finite.get(p, 0) + int(exp)
        else:
            raise ParseError(f"bad profile exponent {tok!r}", position=0)
    return PrimeProfile(tuple(sorted(finite.items())), frozenset(infinite))
