"""Balanced triples of edge types.

Edges of a ``2t``-uniform hypergraph are typed by ``|E & Y| - t``; we pick
``p`` triples whose types sum to zero while keeping usage of type ``i`` and
``-i`` equal.  The counts on one side, ``e[0..t]``, fully describe the input
because the two sides are symmetric.
"""

from __future__ import annotations

from collections import Counter

from ..errors import TripleHypothesisError

Triple = tuple[int, int, int]


def _largest_type(rem: dict[int, int], t: int) -> int:
    for s in range(t, -1, -1):
        if rem[s] > 0:
            return s
    return -1


def comp_triples(t: int, counts, p: int) -> list[Triple]:
    """Return ``p`` zero-sum type triples drawn from ``counts``.

    Requires ``counts[i] >= counts[i+1] + s`` for ``i < s`` where ``s`` is the
    largest type present, except when a single triple is requested, in which
    case ``counts[0] >= 1`` suffices.  Violations raise
    :class:`TripleHypothesisError`.
    """
    if t < 1:
        raise TripleHypothesisError("t >= 1")
    e = list(counts)
    if len(e) != t + 1:
        raise TripleHypothesisError("len(counts) == t + 1", detail=f"got {len(e)}")
    if any(v < 0 for v in e):
        raise TripleHypothesisError("counts non-negative", e.index(min(e)))
    total = e[0] + 2 * sum(e[1:])
    if p < 0 or p > total // 3:
        raise TripleHypothesisError("0 <= p <= floor(|E|/3)", detail=f"p={p}, |E|={total}")

    rem = {i: v for i, v in enumerate(e)} | {-i: v for i, v in enumerate(e) if i}
    out: list[Triple] = []

    def take(*triples: Triple):
        for tri in triples:
            for x in tri:
                rem[x] -= 1
                if rem[x] < 0:
                    raise AssertionError(f"type {x} over-used by {tri}")
            out.append(tuple(sorted(tri)))

    while p > 0:
        s = _largest_type(rem, t)
        if p == 1:
            if rem[0] < 1 or (s == 0 and rem[0] < 3):
                raise TripleHypothesisError("e_0 >= 1 for a single triple", 0,
                                            detail=f"remaining {rem[0]}")
            take((-s, 0, s))
            break
        for i in range(s):
            if rem[i] < rem[i + 1] + s:
                raise TripleHypothesisError("e_i >= e_{i+1} + s", i,
                                            detail=f"e_{i}={rem[i]}, e_{i + 1}={rem[i + 1]}, s={s}")
        if s == 0:
            # every later step is also s = 0
            take(*[(0, 0, 0)] * p)
            break
        if s == 1:
            take((-1, 0, 1))
            p -= 1
        elif s == 2 and (rem[2] == 1 or p == 2):
            take((-2, 1, 1), (2, -1, -1))
            p -= 2
        elif s == 2:
            take((-2, 0, 2), (-2, 1, 1), (2, -1, -1))
            p -= 3
        else:
            b = (s - 1) // 2 if s % 2 else s - 1
            m = min(rem[s], p // 2, b)
            start = len(out)
            for i in range(1, m + 1):
                take((-s, i, s - i), (s, -i, i - s))
            _check_usage(out[start:], s, m, b)
            p -= 2 * m
    return out


def _check_usage(step: list[Triple], s: int, m: int, b: int):
    """Assert the per-type usage of one ``s >= 3`` step."""
    d = Counter(x for tri in step for x in tri)
    if d[0] != 0 or d[s] != m or d[-s] != m:
        raise AssertionError(f"usage of types 0/±{s} off: {dict(d)}")
    lo, hi = (2 * m) // (s - 1), -((-2 * m) // (s - 1))
    for i in range(1, s):
        for sign in (1, -1):
            got = d[sign * i]
            if m == b and got * (s - 1) != 2 * b:
                raise AssertionError(f"type {sign * i} used {got} times, expected {2 * b // (s - 1)}")
            if not lo <= got <= hi:
                raise AssertionError(f"type {sign * i} used {got} times, outside [{lo}, {hi}]")


def binom_product_counts(n: int, t: int) -> list[int]:
    """``e_i = binom(n/2, t-i) * binom(n/2, t+i)`` for ``i = 0..t``."""
    from ..exactmath import binom

    h = n // 2
    return [binom(h, t - i) * binom(h, t + i) for i in range(t + 1)]


def check_e_condition(n: int, t: int) -> bool:
    """Whether ``e_i > e_{i+1} + t`` for all ``i < t`` (guaranteed when ``n >= 6t-2``)."""
    if n % 2 or t < 1:
        raise ValueError("need even n and t >= 1")
    e = binom_product_counts(n, t)
    return all(e[i] > e[i + 1] + t for i in range(t))
