"""
(p,q)-clans: strings of +, - and paired number labels.

A clan of type (p,q) is a tuple of n = p + q symbols in which every number
label occurs exactly twice and #plus - #minus = p - q.  Only the positions
of matching labels matter, so (1,2,1,2), (2,1,2,1) and (5,7,5,7) are the
same clan.  We keep a unique representative: labels are 1, 2, 3, ... in
order of first occurrence, and every function in this package returns
clans in that canonical form.  Equality and hashing of the plain tuples
then implement clan equality.

The counting functions ``gamma_plus``, ``gamma_minus`` and ``gamma_cross``,
the clan length and the orbit dimension are the combinatorial invariants of
the GL(p) x GL(q) orbit on the flag variety that the clan encodes.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Union

from .guards import CLAN_GUARD_ENV, DEFAULT_CLAN_GUARD, check_guard, resolve_guard

PLUS = "+"
MINUS = "-"

Symbol = Union[int, str]
Clan = tuple[Symbol, ...]


def normalize(symbols: Iterable[Symbol]) -> Clan:
    """Validate a raw symbol sequence and relabel pairs by first occurrence.

    >>> normalize((5, "+", 7, 7, 5))
    (1, '+', 2, 2, 1)
    """
    raw = tuple(symbols)
    if not raw:
        raise ValueError("a clan needs length >= 1")
    counts: dict[int, int] = {}
    for s in raw:
        if s in (PLUS, MINUS):
            continue
        if not isinstance(s, int) or s < 1:
            raise ValueError(f"bad clan symbol {s!r}; want '+', '-' or a positive integer")
        counts[s] = counts.get(s, 0) + 1
    bad = [label for label, c in counts.items() if c != 2]
    if bad:
        raise ValueError(f"unmatched pair label(s) {sorted(bad)}: each number must occur exactly twice")
    relabel: dict[int, int] = {}
    out: list[Symbol] = []
    for s in raw:
        if s in (PLUS, MINUS):
            out.append(s)
        else:
            if s not in relabel:
                relabel[s] = len(relabel) + 1
            out.append(relabel[s])
    return tuple(out)


def signature(gamma: Clan) -> tuple[int, int]:
    """The (p, q) type: p = #plus + #pairs, q = #minus + #pairs."""
    plus = sum(1 for s in gamma if s == PLUS)
    minus = sum(1 for s in gamma if s == MINUS)
    npairs = (len(gamma) - plus - minus) // 2
    return plus + npairs, minus + npairs


def parse_clan(text: str, p: int | None = None, q: int | None = None) -> Clan:
    """Parse clan text, normalizing labels.

    Accepts the parenthesized form ``(1,2,+,2,1)`` and, when every label is
    a single digit, the compact form ``12+21``.  ASCII ``-`` and the unicode
    minus sign are both fine.  If p and q are given, the clan must have that
    type.

    >>> parse_clan("(2,1,2,1)", 2, 2)
    (1, 2, 1, 2)
    """
    cleaned = text.strip()
    if cleaned.startswith("(") and cleaned.endswith(")"):
        cleaned = cleaned[1:-1]
    if "," in cleaned:
        tokens = [tok.strip() for tok in cleaned.split(",")]
    else:
        tokens = list(cleaned)
    symbols: list[Symbol] = []
    for tok in tokens:
        if tok in (PLUS, MINUS):
            symbols.append(tok)
        elif tok in ("−", "–"):  # unicode minus / en-dash
            symbols.append(MINUS)
        elif tok.isdigit() and int(tok) >= 1:
            symbols.append(int(tok))
        else:
            raise ValueError(f"bad clan token {tok!r} in {text!r}")
    gamma = normalize(symbols)
    if p is not None or q is not None:
        got = signature(gamma)
        want = (p, q)
        if (p is not None and got[0] != p) or (q is not None and got[1] != q):
            raise ValueError(f"clan {format_clan(gamma)} has type {got}, expected {want}")
    return gamma


def format_clan(gamma: Clan, compact: bool = False) -> str:
    """Render a clan as text; inverse of :func:`parse_clan`."""
    if compact:
        if any(isinstance(s, int) and s > 9 for s in gamma):
            raise ValueError("compact form needs single-digit labels")
        return "".join(str(s) for s in gamma)
    return "(" + ",".join(str(s) for s in gamma) + ")"


def pair_positions(gamma: Clan) -> dict[int, tuple[int, int]]:
    """Map each label to its (first, second) 1-indexed positions."""
    seen: dict[int, int] = {}
    pairs: dict[int, tuple[int, int]] = {}
    for pos, s in enumerate(gamma, start=1):
        if s in (PLUS, MINUS):
            continue
        if s in seen:
            pairs[s] = (seen[s], pos)
        else:
            seen[s] = pos
    return pairs


def mate(gamma: Clan, pos: int) -> int | None:
    """Position of the other endpoint of the pair at ``pos`` (1-indexed),
    or None if the symbol there is a sign."""
    s = gamma[pos - 1]
    if s in (PLUS, MINUS):
        return None
    first, second = pair_positions(gamma)[s]
    return second if pos == first else first


def gamma_plus(gamma: Clan, i: int) -> int:
    """Plus signs plus *completed* pairs among the first i symbols.

    >>> [gamma_plus((1, '+', 1, '-'), i) for i in (1, 2, 3, 4)]
    [0, 1, 2, 2]
    """
    _check_pos(gamma, i)
    prefix = gamma[:i]
    plus = sum(1 for s in prefix if s == PLUS)
    return plus + _complete_pairs(prefix)


def gamma_minus(gamma: Clan, i: int) -> int:
    """Minus signs plus completed pairs among the first i symbols.

    >>> [gamma_minus((1, '+', 1, '-'), i) for i in (1, 2, 3, 4)]
    [0, 0, 1, 2]
    """
    _check_pos(gamma, i)
    prefix = gamma[:i]
    minus = sum(1 for s in prefix if s == MINUS)
    return minus + _complete_pairs(prefix)


def gamma_cross(gamma: Clan, i: int, j: int) -> int:
    """Number of pairs straddling the window: endpoints s <= i < j < t."""
    n = len(gamma)
    if not (1 <= i < j <= n):
        raise IndexError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    return sum(
        1 for first, second in pair_positions(gamma).values() if first <= i and second > j
    )


def _check_pos(gamma: Clan, i: int) -> None:
    if not 1 <= i <= len(gamma):
        raise IndexError(f"position {i} out of range 1..{len(gamma)}")


def _complete_pairs(prefix: tuple[Symbol, ...]) -> int:
    counts: dict[int, int] = {}
    for s in prefix:
        if s not in (PLUS, MINUS):
            counts[s] = counts.get(s, 0) + 1
    return sum(1 for c in counts.values() if c == 2)


def clan_length(gamma: Clan) -> int:
    """l(gamma) = sum over pairs (i, j) of j - i - #{pairs (s, t): s < i < t < j}.

    Sign-only clans have length 0; the dense clan is the unique maximum.
    """
    pairs = list(pair_positions(gamma).values())
    total = 0
    for i, j in pairs:
        crossing = sum(1 for s, t in pairs if s < i < t < j)
        total += j - i - crossing
    return total


def orbit_dimension(gamma: Clan) -> int:
    """Dimension of the orbit: dim of the GL(p) x GL(q) flag variety plus l(gamma)."""
    p, q = signature(gamma)
    return (p * (p - 1) + q * (q - 1)) // 2 + clan_length(gamma)


def dense_clan(p: int, q: int) -> Clan:
    """The clan of the dense open orbit: (1, 2, ..., m, sign^|p-q|, m, ..., 2, 1)
    with m = min(p, q), the middle filled by p-q pluses or q-p minuses.

    >>> dense_clan(3, 2)
    (1, 2, '+', 2, 1)
    """
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p, q >= 0 with p + q >= 1")
    m = min(p, q)
    middle = [PLUS if p >= q else MINUS] * abs(p - q)
    return tuple(list(range(1, m + 1)) + middle + list(range(m, 0, -1)))


def avoids_1212(gamma: Clan) -> bool:
    """True iff no two pairs interleave, i.e. every two pairs are nested or
    disjoint.  These are exactly the clans whose orbit closures are
    Richardson varieties."""
    pairs = sorted(pair_positions(gamma).values())
    for a in range(len(pairs)):
        s1, t1 = pairs[a]
        for b in range(a + 1, len(pairs)):
            s2, t2 = pairs[b]
            if s1 < s2 < t1 < t2:
                return False
    return True


def is_sign_only(gamma: Clan) -> bool:
    """True iff gamma has no pairs; these clans mark the closed orbits."""
    return all(s in (PLUS, MINUS) for s in gamma)


def enumerate_clans(p: int, q: int, guard: int | None = None) -> list[Clan]:
    """All (p,q)-clans, canonical, each exactly once.

    Order is the lexicographic DFS order over the symbol choices
    + < - < open-new-pair < close-of-label-1 < close-of-label-2 < ...
    which keeps golden files stable.
    """
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p, q >= 0 with p + q >= 1")
    n = p + q
    limit = resolve_guard(guard, CLAN_GUARD_ENV, DEFAULT_CLAN_GUARD)
    check_guard(n, limit, f"enumeration of ({p},{q})-clans")

    out: list[Clan] = []
    symbols: list[Symbol] = []
    open_labels: list[int] = []

    def fill(pos: int, plus_used: int, minus_used: int, opened: int) -> None:
        if pos == n:
            if not open_labels and plus_used + opened == p:
                out.append(tuple(symbols))
            return
        remaining = n - pos
        if len(open_labels) > remaining:
            return
        if plus_used + opened < p:
            symbols.append(PLUS)
            fill(pos + 1, plus_used + 1, minus_used, opened)
            symbols.pop()
        if minus_used + opened < q:
            symbols.append(MINUS)
            fill(pos + 1, plus_used, minus_used + 1, opened)
            symbols.pop()
        if plus_used + opened < p and minus_used + opened < q:
            label = opened + 1
            symbols.append(label)
            open_labels.append(label)
            fill(pos + 1, plus_used, minus_used, opened + 1)
            open_labels.pop()
            symbols.pop()
        for idx in range(len(open_labels)):
            label = open_labels[idx]
            symbols.append(label)
            del open_labels[idx]
            fill(pos + 1, plus_used, minus_used, opened)
            open_labels.insert(idx, label)
            symbols.pop()

    fill(0, 0, 0, 0)
    return out


def count_clans(p: int, q: int) -> int:
    """Closed-form count: sum over k pairs of C(n,2k) (2k-1)!! C(n-2k, p-k).

    Independent of :func:`enumerate_clans`; used to cross-check it.
    """
    n = p + q
    total = 0
    for k in range(min(p, q) + 1):
        matchings = 1
        for odd in range(1, 2 * k, 2):
            matchings *= odd
        total += comb(n, 2 * k) * matchings * comb(n - 2 * k, p - k)
    return total
