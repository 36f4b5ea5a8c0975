"""Index gymnastics shared by the bracket and cochain machinery."""

from __future__ import annotations

import itertools
from fractions import Fraction


def permutation_sign(seq) -> int:
    """Sign of the sequence as a permutation of its sorted order.

    Returns 0 when an entry repeats, which is exactly what alternating
    extension wants.
    """
    s = list(seq)
    sign = 1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] == s[j]:
                return 0
            if s[i] > s[j]:
                sign = -sign
    return sign


def sort_with_sign(seq) -> tuple[tuple, int]:
    return tuple(sorted(seq)), permutation_sign(seq)


def wedge_pairs(n: int):
    """Strictly increasing index pairs (i, j) with 0 <= i < j < n."""
    return itertools.combinations(range(n), 2)


def triples(n: int):
    """Strictly increasing index triples."""
    return itertools.combinations(range(n), 3)


def shuffles(p: int, q: int) -> list[tuple[tuple, int]]:
    """All (p,q)-riffles of range(p+q) as (permutation, sign) pairs.

    The permutation lists the p rising positions then the q rising ones.
    """
    return [(left + right, sign) for left, right, sign in shuffle_splits(p, q)]


_S3 = [
    ((0, 1, 2), 1),
    ((0, 2, 1), -1),
    ((1, 0, 2), -1),
    ((1, 2, 0), 1),
    ((2, 0, 1), 1),
    ((2, 1, 0), -1),
]


def antisymmetrize3(t):
    """Totally antisymmetric part of a cubic array: (1/6) sum sgn * t^sigma.

    Idempotent; kills symmetric input.  Entries may be any scalars that
    tolerate division by 6 (Fraction, Quad, polynomials).
    """
    n = len(t)
    sixth = Fraction(1, 6)
    return tuple(
        tuple(
            tuple(
                sixth
                * sum(
                    sgn * t[(i, j, k)[p[0]]][(i, j, k)[p[1]]][(i, j, k)[p[2]]]
                    for p, sgn in _S3
                )
                for k in range(n)
            )
            for j in range(n)
        )
        for i in range(n)
    )


def alternating_extension(entries: dict, n: int):
    """Full cubic array from values given on strictly increasing triples."""
    normal: dict[tuple, object] = {}
    for key, v in entries.items():
        skey, sign = sort_with_sign(key)
        if sign == 0:
            raise ValueError(f"repeated index in {key}")
        if skey in normal:
            raise ValueError(f"duplicate triple {key}")
        normal[skey] = sign * v
    out = [[[0] * n for _ in range(n)] for _ in range(n)]
    for key, v in normal.items():
        for p, sgn in _S3:
            out[key[p[0]]][key[p[1]]][key[p[2]]] = sgn * v
    return tuple(tuple(tuple(r) for r in plane) for plane in out)


def shuffle_splits(m: int, n: int):
    """Rising splits of range(m+n) into an m-block and an n-block.

    Yields (left, right, sign) where sign is the sign of left+right as a
    permutation of 0..m+n-1.  These are the inverse images of riffle
    shuffles, which is the form every insertion sum here needs.
    """
    idx = tuple(range(m + n))
    for left in itertools.combinations(idx, m):
        taken = set(left)
        right = tuple(i for i in idx if i not in taken)
        yield left, right, permutation_sign(left + right)
