"""Littlewood-Richardson coefficients by exhaustive LR-tableau enumeration."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

Partition = tuple[int, ...]


def strip(parts) -> Partition:
    parts = tuple(int(x) for x in parts)
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def _horizontal_strips(
    shape: Partition, k: int, max_rows: Optional[int], first_row: int = 0
) -> Iterator[tuple[Partition, tuple[int, ...]]]:
    """All shapes obtained by adding a horizontal strip of k boxes in rows >= first_row.

    Yields (new shape, boxes added per row).
    """
    rows = len(shape) + 1
    if max_rows is not None:
        rows = min(rows, max_rows)
    old = list(shape) + [0] * (rows - len(shape))

    def rec(r: int, left: int, acc: list[int]):
        if r == rows:
            if left == 0:
                new = [o + a for o, a in zip(old, acc)]
                yield strip(new), tuple(acc)
            return
        cap = 0 if r < first_row else left if r == 0 else min(left, old[r - 1] - old[r])
        for a in range(cap, -1, -1):
            acc.append(a)
            yield from rec(r + 1, left - a, acc)
            acc.pop()

    yield from rec(0, k, [])


def _lattice_ok(prev: tuple[int, ...], cur: tuple[int, ...]) -> bool:
    """Yamanouchi condition between consecutive labels i (prev) and i+1 (cur).

    Rows are read top to bottom, right to left, so within a row every i+1
    is read before every i.
    """
    have_i = 0
    have_next = 0
    for r in range(max(len(prev), len(cur))):
        have_next += cur[r] if r < len(cur) else 0
        if have_next > have_i:
            return False
        have_i += prev[r] if r < len(prev) else 0
    return True


@lru_cache(maxsize=None)
def lr_coefficients(lam: Partition, mu: Partition, max_rows: Optional[int] = None) -> dict[Partition, int]:
    """Coefficients c^nu_{lam,mu} of s_lam * s_mu, optionally keeping only nu with <= max_rows rows."""
    lam, mu = strip(lam), strip(mu)
    if sum(mu) > sum(lam):
        lam, mu = mu, lam
    out: dict[Partition, int] = {}

    def rec(shape: Partition, i: int, prev_counts: Optional[tuple[int, ...]]):
        if i == len(mu):
            out[shape] = out.get(shape, 0) + 1
            return
        # an LR tableau has no entry larger than its row number
        for new, counts in _horizontal_strips(shape, mu[i], max_rows, first_row=i):
            if prev_counts is not None and not _lattice_ok(prev_counts, counts):
                continue
            rec(new, i + 1, counts)

    rec(lam, 0, None)
    return dict(sorted(out.items()))
