"""
Dehornoy handle reduction: an equality oracle for braid words that shares no code with
the Garside normal form.

A σ_i-handle is a subword s_i^e v s_i^-e in which v only uses generators s_j with j > i.
Reducing it replaces every s_{i+1}^d in v by s_{i+1}^-e s_i^d s_{i+1}^e and deletes the two
ends. Always reducing the handle whose right end comes first keeps every handle permitted,
and the process ends at the empty word exactly when the braid is trivial.
"""

from __future__ import annotations

from typing import Sequence

from .words import Family, Word, WordError

DEFAULT_BUDGET = 10**6


class HandleBudgetExceeded(RuntimeError):
    """The step budget ran out; the oracle is inconclusive (never wrong)."""

    def __init__(self, budget: int):
        super().__init__(f"handle reduction did not finish within {budget} steps")
        self.budget = budget


def reduce_signed(word: Sequence[int], rank: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Handle-reduce a signed word (s_i ↦ i, s_i^-1 ↦ -i); returns the handle-free result."""
    w = list(word)
    # last[i]: position of the latest s_i^{±1} not yet cut off by a smaller generator.
    # states[k] is `last` just before letter k; the prefix before a reduced handle is
    # untouched, so scanning resumes from the handle's left end.
    last = [-1] * (rank + 2)
    states: list[list[int]] = []
    steps = 0
    k = 0
    while k < len(w):
        x = w[k]
        i = x if x > 0 else -x
        p = last[i]
        if p >= 0 and (w[p] > 0) != (x > 0):
            steps += 1
            if steps > budget:
                raise HandleBudgetExceeded(budget)
            e = 1 if w[p] > 0 else -1
            nxt = i + 1
            middle: list[int] = []
            for y in w[p + 1:k]:
                if y == nxt or y == -nxt:
                    middle.extend((-e * nxt, i if y > 0 else -i, e * nxt))
                else:
                    middle.append(y)
            w[p:k + 1] = middle
            last = states[p]
            del states[p:]
            k = p
            continue
        states.append(last[:])
        last[i] = k
        for j in range(i + 1, rank + 1):
            last[j] = -1
        k += 1
    return w


def handle_trivial(u: Word, budget: int = DEFAULT_BUDGET) -> bool:
    if u.alphabet.family is not Family.TypeA:
        raise WordError(f"expected a type A word, got {u.alphabet}")
    return not reduce_signed(u.signed(), u.alphabet.rank, budget)
