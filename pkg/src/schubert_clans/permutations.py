"""
Permutations of [n] = {1, ..., n} in one-line notation.

A permutation w is a plain tuple ``(w(1), ..., w(n))`` of the values 1..n.
Values and positions are 1-indexed throughout, so ``w[i - 1]`` is w(i).
Degrees are explicit: ``(2, 1)`` and ``(2, 1, 3)`` are different objects;
use :func:`pad` and :func:`trim` to move between S_n and S_m.

Text form is the compact digit string ``"35241"`` for n <= 9 and the
comma-separated ``"3,5,2,4,1"`` for larger n; both are accepted on input.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .guards import (
    DEFAULT_PERM_GUARD,
    DEFAULT_WORD_GUARD,
    PERM_GUARD_ENV,
    WORD_GUARD_ENV,
    check_guard,
    resolve_guard,
)

Perm = tuple[int, ...]


def is_perm(values: Sequence[int]) -> bool:
    """True iff ``values`` lists each of 1..n exactly once."""
    return sorted(values) == list(range(1, len(values) + 1))


def perm(values: Iterable[int]) -> Perm:
    """Validate one-line notation and return it as a tuple.

    >>> perm([3, 1, 2])
    (3, 1, 2)
    """
    w = tuple(values)
    if not w:
        raise ValueError("a permutation needs degree n >= 1")
    if not is_perm(w):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def identity(n: int) -> Perm:
    if n < 1:
        raise ValueError("degree must be >= 1")
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """The order-reversing permutation w0, i.e. i -> n+1-i.

    >>> longest(5)
    (5, 4, 3, 2, 1)
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    return tuple(range(n, 0, -1))


def compose(a: Perm, b: Perm) -> Perm:
    """Functional composition: ``compose(a, b)(i) == a(b(i))``.

    >>> compose((5, 4, 3, 2, 1), (3, 5, 2, 4, 1))
    (3, 1, 4, 2, 5)
    """
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    return tuple(a[b[i] - 1] for i in range(len(a)))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def length(w: Perm) -> int:
    """Number of inversions, i.e. pairs i < j with w(i) > w(j)."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def rank(w: Perm, i: int, j: int) -> int:
    """The rank-matrix entry ``#{k <= i | w(k) <= j}``.

    >>> rank((2, 1, 4, 3), 2, 2)
    2
    """
    n = len(w)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"rank indices must lie in 1..{n}, got ({i}, {j})")
    return sum(1 for k in range(i) if w[k] <= j)


def rank_matrix(w: Perm) -> tuple[tuple[int, ...], ...]:
    """Full n x n rank matrix; row i, column j holds rank(w, i, j)."""
    n = len(w)
    rows = []
    prev = (0,) * n
    for i in range(1, n + 1):
        row = list(prev)
        for j in range(w[i - 1], n + 1):
            row[j - 1] += 1
        prev = tuple(row)
        rows.append(prev)
    return tuple(rows)


def bruhat_leq_rank(u: Perm, v: Perm) -> bool:
    """Bruhat order via rank matrices: u <= v iff r_u >= r_v entrywise."""
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(v)}")
    ru, rv = rank_matrix(u), rank_matrix(v)
    return all(ru[i][j] >= rv[i][j] for i in range(len(u)) for j in range(len(u)))


def bruhat_leq_prefix(u: Perm, v: Perm) -> bool:
    """Bruhat order via sorted prefixes.

    u <= v iff for every i, sorting {u(1),...,u(i)} and {v(1),...,v(i)}
    ascending makes the first list entrywise <= the second.  Agrees with
    :func:`bruhat_leq_rank` on all inputs.
    """
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(v)}")
    for i in range(1, len(u) + 1):
        for a, b in zip(sorted(u[:i]), sorted(v[:i])):
            if a > b:
                return False
    return True


def code(w: Perm) -> tuple[int, ...]:
    """Lehmer code: c_i = #{j > i | w(j) < w(i)}; the entries sum to length(w).

    >>> code((3, 1, 4, 2, 5))
    (2, 0, 1, 0, 0)
    """
    n = len(w)
    return tuple(
        sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n)
    )


def code_to_perm(c: Sequence[int]) -> Perm:
    """Inverse of :func:`code`, in the smallest symmetric group that fits.

    The degree m is minimal with m >= len(c) and c_i <= m - i, so codes with
    trailing zeros round-trip: ``code_to_perm(code(w)) == w``.

    >>> code_to_perm((2, 0, 1, 0, 0))
    (3, 1, 4, 2, 5)
    >>> code_to_perm((4, 3, 2, 1))
    (5, 4, 3, 2, 1)
    """
    c = tuple(c)
    if any(x < 0 for x in c):
        raise ValueError("code entries must be nonnegative")
    m = max([len(c), 1] + [x + i for i, x in enumerate(c, start=1)])
    full = c + (0,) * (m - len(c))
    remaining = list(range(1, m + 1))
    return tuple(remaining.pop(ci) for ci in full)


def simple(i: int, n: int) -> Perm:
    """The simple transposition s_i in S_n, swapping i and i+1."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"simple reflection index must lie in 1..{n - 1}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def right_descents(w: Perm) -> list[int]:
    """Positions i with w(i) > w(i+1)."""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def word_to_perm(word: Sequence[int], n: int) -> Perm:
    """Product s_{i_1} o s_{i_2} o ... o s_{i_k} of simple reflections in S_n."""
    w = identity(n)
    for i in word:
        w = compose(w, simple(i, n))
    return w


def reduced_word(w: Perm) -> tuple[int, ...]:
    """A canonical reduced word for w: repeatedly strip the leftmost descent.

    The returned word (i_1, ..., i_k) satisfies k == length(w) and
    ``word_to_perm(word, n) == w``.

    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    """
    cur = list(w)
    peeled = []
    while True:
        i = next((i for i in range(1, len(cur)) if cur[i - 1] > cur[i]), None)
        if i is None:
            break
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
        peeled.append(i)
    return tuple(reversed(peeled))


def all_reduced_words(w: Perm, guard: int | None = None) -> frozenset[tuple[int, ...]]:
    """The complete set of reduced words for w.

    The count explodes with length (w0 of S_5 already has 768 words), so
    lengths above the word guard are refused.
    """
    limit = resolve_guard(guard, WORD_GUARD_ENV, DEFAULT_WORD_GUARD)
    check_guard(length(w), limit, "all_reduced_words")

    memo: dict[Perm, frozenset[tuple[int, ...]]] = {}

    def words(v: Perm) -> frozenset[tuple[int, ...]]:
        got = memo.get(v)
        if got is not None:
            return got
        ds = right_descents(v)
        if not ds:
            result = frozenset({()})
        else:
            acc = set()
            for i in ds:
                shorter = list(v)
                shorter[i - 1], shorter[i] = shorter[i], shorter[i - 1]
                for word in words(tuple(shorter)):
                    acc.add(word + (i,))
            result = frozenset(acc)
        memo[v] = result
        return result

    return words(tuple(w))


def is_descending_shuffle(w: Perm, p: int) -> bool:
    """True iff the values <= p and the values > p each appear in
    descending order in the one-line notation of w."""
    if not 0 <= p <= len(w):
        raise ValueError(f"block size p must lie in 0..{len(w)}")
    low = [x for x in w if x <= p]
    high = [x for x in w if x > p]
    return low == sorted(low, reverse=True) and high == sorted(high, reverse=True)


def is_ascending_shuffle(w: Perm, p: int) -> bool:
    """True iff the values <= p and the values > p each appear in
    ascending order in the one-line notation of w."""
    if not 0 <= p <= len(w):
        raise ValueError(f"block size p must lie in 0..{len(w)}")
    low = [x for x in w if x <= p]
    high = [x for x in w if x > p]
    return low == sorted(low) and high == sorted(high)


def enumerate_by_length(n: int, k: int, guard: int | None = None) -> list[Perm]:
    """All w in S_n with length(w) == k, in lexicographic one-line order.

    Walks Lehmer codes (c_1, ..., c_n) with 0 <= c_i <= n-i summing to k;
    code order and one-line order agree, so no sort is needed.
    """
    limit = resolve_guard(guard, PERM_GUARD_ENV, DEFAULT_PERM_GUARD)
    check_guard(n, limit, f"enumerate_by_length over S_{n}")
    if k < 0 or k > n * (n - 1) // 2:
        return []

    # tail_room[i] = max inversions contributable by positions > i (0-based)
    tail_room = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        tail_room[i] = tail_room[i + 1] + (n - 1 - i)

    out: list[Perm] = []
    prefix = [0] * n

    def fill(i: int, remaining: int) -> None:
        if i == n:
            out.append(code_to_perm(tuple(prefix)))
            return
        hi = min(n - 1 - i, remaining)
        lo = max(0, remaining - tail_room[i + 1])
        for c in range(lo, hi + 1):
            prefix[i] = c
            fill(i + 1, remaining - c)
        prefix[i] = 0

    fill(0, k)
    return out


def all_perms(n: int, guard: int | None = None) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    limit = resolve_guard(guard, PERM_GUARD_ENV, DEFAULT_PERM_GUARD)
    check_guard(n, limit, f"enumeration of S_{n}")
    import itertools

    return itertools.permutations(range(1, n + 1))


def trim(w: Perm) -> Perm:
    """Drop trailing fixed points, keeping at least degree 1.

    >>> trim((2, 1, 3, 4))
    (2, 1)
    """
    n = len(w)
    while n > 1 and w[n - 1] == n:
        n -= 1
    return tuple(w[:n])


def pad(w: Perm, n: int) -> Perm:
    """Embed w into S_n by appending fixed points."""
    if n < len(w):
        raise ValueError(f"cannot pad degree {len(w)} down to {n}")
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


def parse_perm(text: str) -> Perm:
    """Parse one-line notation, compact (``35241``) or comma-separated.

    >>> parse_perm("3,5,2,4,1")
    (3, 5, 2, 4, 1)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if "," in text:
        parts = [part.strip() for part in text.split(",")]
    else:
        parts = list(text)
    try:
        values = [int(part) for part in parts]
    except ValueError:
        raise ValueError(f"cannot parse permutation from {text!r}") from None
    return perm(values)


def format_perm(w: Perm) -> str:
    """Compact digit string for n <= 9, comma-separated beyond."""
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)
