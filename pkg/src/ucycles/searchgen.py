"""Backtracking engines: witness search, exhaustive enumeration, counting.

All engines solve the same kind of exact-cover problem: place letters so that
every window lands on a distinct member of a target key collection and the
whole collection is consumed.  The cyclic engine covers full cycle words
(wrap windows included); the linear slot filler covers a gap between two fixed
flanks and is used by the inductive construction's repair path.

Search order is deterministic, so identical inputs always yield identical
outputs and node counts.  Constrained searches (pinned positions or a custom
coverage target) try children in ascending letter order.  Unconstrained
searches order children by scarcity of the frontier overlap they would create
(fewest remaining coverable keys first, ties ascending): the tight spots get
consumed while escape routes still exist, which is what makes witness search
tractable at the sizes the doubling pipeline needs.  A node is one attempted
letter placement; searches stop with an error when the node budget runs out.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence

from .core import CanonicalClass, CycleWord, Letter, MultisetKey, canonicalize
from .verify import (
    InadmissibleError,
    admissible_multiset,
    admissible_subset,
    verify_multiset_ucycle,
    verify_subset_ucycle,
)

DEFAULT_WITNESS_BUDGET = 10_000_000
DEFAULT_COUNT_BUDGET = 100_000_000


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search finished."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


class SearchInfeasible(RuntimeError):
    """The search space was exhausted without finding a word."""


@dataclass(frozen=True)
class SearchConstraints:
    """Optional constraints for witness searches.

    ``coverage_target`` replaces the full family with an explicit key
    collection; the word length always equals the target size.
    """

    required_prefix: tuple[Letter, ...] = ()
    required_suffix: tuple[Letter, ...] = ()
    coverage_target: tuple[MultisetKey, ...] | None = None
    node_budget: int = DEFAULT_WITNESS_BUDGET


class _CoverSearch:
    """DFS over words of length k whose k cyclic t-windows cover a target set.

    ``fixed`` pins letters at given positions (prefixes, suffixes, anchors).
    ``solutions()`` yields complete words in lexicographic order of the free
    positions; ``self.nodes`` counts attempted placements.
    """

    def __init__(
        self,
        n: int,
        t: int,
        target_keys: Sequence[MultisetKey],
        fixed: dict[int, Letter],
        node_budget: int | None,
        relabel_symmetric: bool = False,
        tie_seed: int | None = None,
        max_discrepancies: int | None = None,
    ):
        self.n = n
        self.t = t
        self.k = len(target_keys)
        self.target = frozenset(target_keys)
        if len(self.target) != self.k:
            raise ValueError("coverage target holds duplicate keys")
        self.fixed = dict(fixed)
        self.node_budget = node_budget
        # Valid only when the target is closed under letter permutation and
        # pinning does not break first-occurrence order: either nothing is
        # pinned, or the pins are a leading run of ones (a rotation anchor).
        # Then some witness introduces letters in first-occurrence order, so
        # children above max_used+1 can be skipped.
        self.ones_prefix = bool(fixed) and sorted(fixed) == list(
            range(len(fixed))
        ) and set(fixed.values()) == {1}
        self.relabel_symmetric = relabel_symmetric and (
            not fixed or self.ones_prefix
        )
        # Restart jitter: reshuffles heuristic ties deterministically (used by
        # the witness portfolio; never by exhaustive enumeration).
        self.tie_seed = tie_seed
        # Limited discrepancy search: allow at most this many non-first
        # choices along any root-to-leaf path.  ``discrepancy_pruned`` records
        # whether the limit ever cut a branch; if it never did, an exhausted
        # search proved infeasibility outright.
        self.max_discrepancies = max_discrepancies
        self.discrepancy_pruned = False
        self.nodes = 0

    def solutions(self) -> Iterator[tuple[Letter, ...]]:
        n, t, k = self.n, self.t, self.k
        target = self.target
        word: list[Letter] = [0] * k
        for p, v in self.fixed.items():
            if not (0 <= p < k):
                raise ValueError("fixed position out of range")
            if not (1 <= v <= n):
                raise ValueError("fixed letter out of range")
            word[p] = v
        free = [p for p in range(k) if p not in self.fixed]
        free_set = set(free)

        # Each letter's total use is forced by the target: letter x appears
        # in sum(multiplicities over target keys) window slots, and each of
        # its positions feeds exactly t windows.
        letter_total: Counter[Letter] = Counter()
        for key in target:
            letter_total.update(key)
        bound = {}
        for letter in range(1, n + 1):
            c = letter_total.get(letter, 0)
            if c % t:
                return
            bound[letter] = c // t
        counts = Counter(v for v in self.fixed.values())
        if any(counts[letter] > bound[letter] for letter in counts):
            return

        # Window j covers positions j..j+t-1 (mod k).  It is checked at the
        # moment its last free position (in ascending fill order) is placed;
        # fully pinned windows are checked up front.
        trigger: list[list[tuple[int, ...]]] = [[] for _ in range(k)]
        used: set[MultisetKey] = set()
        for j in range(k):
            poss = tuple((j + i) % k for i in range(t))
            fr = [p for p in poss if p in free_set]
            if fr:
                trigger[max(fr)].append(poss)
            else:
                key = tuple(sorted(word[p] for p in poss))
                if key not in target or key in used:
                    return
                used.add(key)

        if not free:
            yield tuple(word)
            return

        # Chain feasibility (only with an uninterrupted frontier, i.e. no
        # pinned positions): consecutive windows share t-1 characters, so the
        # keys still to be covered must form one connected component under
        # "shares a (t-1)-sub-multiset", reachable from the frontier's last
        # t-1 letters, and the wrap seam's head letters must still have an
        # uncovered key.  Checked by bucket BFS; fired adaptively so a pure
        # greedy descent pays nothing.
        chain = not self.fixed and k >= t and t >= 2
        if chain:
            key_subs: dict[MultisetKey, tuple[MultisetKey, ...]] = {}
            bucket: defaultdict[MultisetKey, set[MultisetKey]] = defaultdict(set)
            for key in target:
                subs = tuple(
                    sorted({tuple(key[:i] + key[i + 1 :]) for i in range(t)})
                )
                key_subs[key] = subs
                for s in subs:
                    bucket[s].add(key)

            def chain_ok(p_pos: int) -> bool:
                rem = k - len(used)
                if rem == 0 or p_pos < t - 1:
                    return True
                front = tuple(sorted(word[p_pos - t + 2 : p_pos + 1]))
                back = tuple(sorted(word[0 : t - 1]))
                fb = bucket.get(front)
                if not fb or not bucket.get(back):
                    return False
                start = next(iter(fb))
                seen_keys = {start}
                seen_subs: set[MultisetKey] = set()
                stack = [start]
                while stack:
                    cur = stack.pop()
                    for s in key_subs[cur]:
                        if s in seen_subs:
                            continue
                        seen_subs.add(s)
                        for other in bucket[s]:
                            if other not in seen_keys:
                                seen_keys.add(other)
                                stack.append(other)
                return len(seen_keys) == rem

        m = len(free)
        choice = [0] * m
        cands: list[tuple[Letter, ...] | None] = [None] * m
        added: list[list[MultisetKey]] = [[] for _ in range(m)]
        maxu = [0] * m
        disc = [0] * m
        limit = self.max_discrepancies
        symmetric = self.relabel_symmetric
        budget = self.node_budget
        # with a pinned anchor run, letter 1 already occurred before any
        # free position, so first-occurrence order starts above it
        base_prev = 1 if (symmetric and self.fixed) else 0
        d = 0
        while d >= 0:
            p = free[d]
            if symmetric:
                prev = maxu[d - 1] if d else base_prev
                cap = prev + 1 if prev < n else n
            else:
                prev = 0
                cap = n
            if cands[d] is None:
                if chain and p >= t - 1:
                    base = tuple(word[p - t + 2 : p])
                    seed = self.tie_seed

                    def abundance(x: Letter) -> tuple[int, ...]:
                        room = len(bucket.get(tuple(sorted(base + (x,))), ()))
                        if seed is None:
                            return -room, x
                        return -room, hash((seed, p, x)), x

                    pool = range(1, cap + 1)
                    if d < m - 1:
                        # A frontier overlap with no coverable key left cannot
                        # be extended; skip it unless this is the last slot.
                        pool = [
                            x for x in pool
                            if bucket.get(tuple(sorted(base + (x,))))
                        ]
                    cands[d] = tuple(sorted(pool, key=abundance))
                else:
                    cands[d] = tuple(range(1, cap + 1))
            row = cands[d]
            idx = choice[d]
            cum_prev = disc[d - 1] if d else 0
            placed = False
            while idx < len(row):
                if limit is not None and cum_prev + (1 if idx else 0) > limit:
                    self.discrepancy_pruned = True
                    break
                letter = row[idx]
                self.nodes += 1
                if budget is not None and self.nodes > budget:
                    raise SearchBudgetExceeded(
                        f"node budget {budget} exhausted", self.nodes
                    )
                if counts[letter] < bound[letter]:
                    word[p] = letter
                    keys_new: list[MultisetKey] = []
                    ok = True
                    for poss in trigger[p]:
                        key = tuple(sorted(word[q] for q in poss))
                        if key in used or key not in target:
                            ok = False
                            break
                        used.add(key)
                        keys_new.append(key)
                    if ok and chain:
                        for key in keys_new:
                            for s in key_subs[key]:
                                bucket[s].discard(key)
                        if not chain_ok(p):
                            ok = False
                            for key in keys_new:
                                for s in key_subs[key]:
                                    bucket[s].add(key)
                    if ok:
                        counts[letter] += 1
                        choice[d] = idx + 1
                        added[d] = keys_new
                        disc[d] = cum_prev + (1 if idx else 0)
                        if symmetric:
                            maxu[d] = letter if letter > prev else prev
                        placed = True
                        break
                    for key in keys_new:
                        used.remove(key)
                idx += 1
            if not placed:
                choice[d] = 0
                cands[d] = None
                d -= 1
                if d >= 0:
                    counts[word[free[d]]] -= 1
                    for key in added[d]:
                        used.remove(key)
                    if chain:
                        for key in added[d]:
                            for s in key_subs[key]:
                                bucket[s].add(key)
                continue
            if d == m - 1:
                yield tuple(word)
                counts[word[p]] -= 1
                for key in added[d]:
                    used.remove(key)
                if chain:
                    for key in added[d]:
                        for s in key_subs[key]:
                            bucket[s].add(key)
                continue
            d += 1


def _full_multiset_target(n: int, t: int) -> tuple[MultisetKey, ...]:
    return tuple(combinations_with_replacement(range(1, n + 1), t))


def _full_subset_target(n: int, t: int) -> tuple[MultisetKey, ...]:
    return tuple(combinations(range(1, n + 1), t))


def _witness_search(
    n: int,
    t: int,
    target: tuple[MultisetKey, ...],
    fixed: dict[int, Letter],
    node_budget: int | None,
    symmetric: bool,
    describe: str,
) -> tuple[Letter, ...]:
    """Witness portfolio: discrepancy-limited passes, then an open pass.

    Witness runtimes are heavy-tailed in the first few decisions, so rather
    than sinking the whole budget into one depth-first dive, run passes that
    allow 0, 1, 2, ... deviations from the heuristic-first choice.  A pass
    that exhausts without ever hitting its discrepancy limit proves
    infeasibility outright.  The total node count across passes never exceeds
    ``node_budget``.
    """
    spent = 0
    passes: list[int | None] = [0, 1, 2, 3, 4, None]
    for max_disc in passes:
        if node_budget is not None:
            remaining = node_budget - spent
            if remaining <= 0:
                raise SearchBudgetExceeded(
                    f"node budget {node_budget} exhausted", spent
                )
        else:
            remaining = None
        search = _CoverSearch(
            n, t, target, fixed, remaining,
            relabel_symmetric=symmetric,
            max_discrepancies=max_disc,
        )
        try:
            return next(search.solutions())
        except SearchBudgetExceeded:
            spent += search.nodes
            raise SearchBudgetExceeded(
                f"node budget {node_budget} exhausted", spent
            ) from None
        except StopIteration:
            spent += search.nodes
            if not search.discrepancy_pruned:
                raise SearchInfeasible(describe) from None
    raise SearchInfeasible(describe)


def _triple_orbit_key(a: int, b: int, c: int, n: int) -> tuple[int, int, int]:
    # Orbit of the 3-set {a,b,c} (0-based residues) under x -> x+1 mod n,
    # keyed by the least rotation of its circular gap vector.
    x, y, z = sorted((a, b, c))
    g = (y - x, z - y, n - (z - x))
    return min(g, (g[1], g[2], g[0]), (g[2], g[0], g[1]))


def _shift_block3(
    n: int, node_budget: int | None, distinct: bool
) -> tuple[Letter, ...] | None:
    """Shift-symmetric witness search for window size 3, 3 not dividing n.

    With 3 not dividing n, every window orbit under x -> x+1 (mod n) has
    size exactly n (``distinct`` picks 3-sets or 3-multisets), so a block of
    length L = (family size)/n whose L windows (two of them across the seam
    to the +1-shifted next copy) cover each orbit once unrolls to a full
    ucycle as n shifted copies.  Letter frequencies balance automatically.

    Children are ordered by abundance of the frontier gap they create (ties
    ascending), with discrepancy-limited passes as in the general portfolio.
    Returns 1-based letters, or None when no such block exists.
    """
    total = math.comb(n, 3) if distinct else math.comb(n + 2, 3)
    L = total // n
    if L < 3:
        return None

    orbits: set[tuple[int, int, int]] = set()
    if distinct:
        for b in range(1, n - 1):
            for c in range(b + 1, n):
                orbits.add(_triple_orbit_key(0, b, c, n))
    else:
        for b in range(n):
            for c in range(b, n):
                orbits.add(_triple_orbit_key(0, b, c, n))
    # gaps run 0..n: the all-equal multiset orbit keys as (0, 0, n)
    gap_room_init = [0] * (n + 1)
    for key in orbits:
        for g in key:
            gap_room_init[g] += 1

    spent = 0
    for max_disc in (0, 1, 2, 4, 8, None):
        word = [0] * L
        used: set[tuple[int, int, int]] = set()
        gap_room = list(gap_room_init)
        nodes = 0
        pruned = False

        def place(j: int, disc_left: int | None) -> bool:
            nonlocal nodes, pruned
            if j == L:
                s1 = (word[L - 2], word[L - 1], (word[0] + 1) % n)
                s2 = (word[L - 1], (word[0] + 1) % n, (word[1] + 1) % n)
                if distinct:
                    if s1[0] == s1[1] or s1[1] == s1[2] or s1[0] == s1[2]:
                        return False
                    if s2[0] == s2[1] or s2[1] == s2[2] or s2[0] == s2[2]:
                        return False
                k1 = _triple_orbit_key(*s1, n)
                k2 = _triple_orbit_key(*s2, n)
                return k1 not in used and k2 not in used and k1 != k2
            prev = word[j - 1]
            if j >= 2:
                row = sorted(
                    range(n),
                    key=lambda x: (-gap_room[(x - prev) % n], x),
                )
            else:
                row = list(range(n))
            rank = 0
            for letter in row:
                if disc_left is not None and rank > disc_left:
                    pruned = True
                    return False
                nodes += 1
                if node_budget is not None and spent + nodes > node_budget:
                    raise SearchBudgetExceeded(
                        f"node budget {node_budget} exhausted", spent + nodes
                    )
                word[j] = letter
                if j < 2:
                    if place(j + 1, disc_left if disc_left is None else disc_left - rank):
                        return True
                    rank += 1
                    continue
                a = word[j - 2]
                if distinct and (letter == a or letter == prev or prev == a):
                    continue
                if j < L - 1 and not gap_room[(letter - prev) % n]:
                    continue
                key = _triple_orbit_key(a, prev, letter, n)
                if key not in used:
                    used.add(key)
                    for g in key:
                        gap_room[g] -= 1
                    child_disc = disc_left if disc_left is None else disc_left - rank
                    if place(j + 1, child_disc):
                        return True
                    for g in key:
                        gap_room[g] += 1
                    used.remove(key)
                    rank += 1
            return False

        # w0 = 0 loses nothing: shifting all letters maps witnesses onto
        # witnesses, and every shift class has a representative with w0 = 0.
        word[0] = 0
        if place(1, max_disc):
            return tuple(
                (word[j] + i) % n + 1 for i in range(n) for j in range(L)
            )
        spent += nodes
        if not pruned:
            return None
    return None


def _fixed_from_constraints(c: SearchConstraints, k: int) -> dict[int, Letter]:
    if len(c.required_prefix) + len(c.required_suffix) > k:
        raise ValueError("prefix and suffix longer than the word itself")
    fixed: dict[int, Letter] = {}
    for i, v in enumerate(c.required_prefix):
        fixed[i] = v
    for i, v in enumerate(c.required_suffix):
        p = k - len(c.required_suffix) + i
        if p in fixed and fixed[p] != v:
            raise ValueError("prefix and suffix conflict")
        fixed[p] = v
    return fixed


def generate_subset_ucycle(
    n: int, t: int, constraints: SearchConstraints | None = None
) -> CycleWord:
    """Depth-first witness search for a ucycle on the t-subsets of [n]."""
    if t not in (2, 3):
        raise ValueError("subset generation supports t in {2, 3}")
    if not admissible_subset(n, t):
        raise InadmissibleError(f"n={n} does not divide C({n},{t}); no subset ucycle exists")
    c = constraints or SearchConstraints()
    target = c.coverage_target if c.coverage_target is not None else _full_subset_target(n, t)
    symmetric = c.coverage_target is None and not c.required_prefix and not c.required_suffix
    letters: tuple[Letter, ...] | None = None
    if symmetric and t == 3 and n % 3:
        # Fast path: shift-symmetric witnesses cover each letter-rotation
        # orbit once with an n-fold shorter block; fall back to the general
        # portfolio when none exists in this subclass.
        letters = _shift_block3(n, c.node_budget, distinct=True)
    if letters is None:
        letters = _witness_search(
            n, t, target, _fixed_from_constraints(c, len(target)), c.node_budget,
            symmetric, f"no {t}-subset ucycle over [{n}] satisfies the constraints",
        )
    word = CycleWord(n, letters)
    if c.coverage_target is None and not verify_subset_ucycle(word, t).ok:
        raise AssertionError("internal error: emitted word failed verification")
    return word


def find_multiset_ucycle(
    n: int, t: int, constraints: SearchConstraints | None = None
) -> CycleWord:
    """Depth-first witness search for a ucycle on the t-multisets of [n]."""
    if t < 1:
        raise ValueError("window size must be positive")
    if not admissible_multiset(n, t):
        raise InadmissibleError(
            f"n={n} does not divide C({n + t - 1},{t}); no multiset ucycle exists"
        )
    c = constraints or SearchConstraints()
    target = c.coverage_target if c.coverage_target is not None else _full_multiset_target(n, t)
    if c.coverage_target is None and len(target) < t:
        # only n=1 lands here: the would-be cycle is shorter than the
        # window, so nothing can verify even though n divides the count
        raise SearchInfeasible(
            f"a cycle of length {len(target)} has no windows of size {t}"
        )
    symmetric = c.coverage_target is None and not c.required_prefix and not c.required_suffix
    fixed = _fixed_from_constraints(c, len(target))
    if symmetric:
        # full coverage includes the all-ones window; rotating it to the
        # front and relabeling costs nothing, so pin the leading run
        fixed = {i: 1 for i in range(min(t, len(target)))}
    letters: tuple[Letter, ...] | None = None
    if symmetric and t == 3:
        # admissibility already forces 3 not to divide n here, so the
        # shift-symmetric block fast path applies whenever it finds a block
        letters = _shift_block3(n, c.node_budget, distinct=False)
    if letters is None:
        letters = _witness_search(
            n, t, target, fixed, c.node_budget,
            symmetric, f"no {t}-multiset ucycle over [{n}] satisfies the constraints",
        )
    word = CycleWord(n, letters)
    if c.coverage_target is None and not verify_multiset_ucycle(word, t).ok:
        raise AssertionError("internal error: emitted word failed verification")
    return word


def fill_linear_slot(
    residual: Sequence[MultisetKey],
    left_context: Sequence[Letter],
    right_context: Sequence[Letter],
    alphabet: Sequence[Letter],
    t: int = 3,
    letter_budget: dict[Letter, int] | None = None,
    node_budget: int | None = DEFAULT_WITNESS_BUDGET,
) -> tuple[Letter, ...]:
    """Fill a gap between two fixed flanks so the gap's windows cover ``residual``.

    The flanks contribute t-1 seam windows on each side; together with the
    interior windows the slot yields exactly ``len(residual)`` windows, so the
    slot length is forced to ``len(residual) - (t - 1)``.  Children are tried
    in ascending order of ``alphabet``.
    """
    resid = frozenset(residual)
    if len(resid) != len(residual):
        raise ValueError("residual holds duplicate keys")
    length = len(resid) - (t - 1)
    if length < 1:
        raise SearchInfeasible("residual too small to fill a slot")
    if len(left_context) < t - 1 or len(right_context) < t - 1:
        raise ValueError("contexts must supply at least t-1 letters")
    left = tuple(left_context[-(t - 1) :])
    right = tuple(right_context[: t - 1])
    letters = tuple(sorted(alphabet))
    used: set[MultisetKey] = set()
    word: list[Letter] = []
    counts: Counter[Letter] = Counter()
    nodes = 0

    def close(tail: tuple[Letter, ...]) -> bool:
        seq = tail + right
        keys = [tuple(sorted(seq[i : i + t])) for i in range(t - 1)]
        if len(set(keys)) != len(keys):
            return False
        return all(key in resid and key not in used for key in keys)

    def place(depth: int, tail: tuple[Letter, ...]) -> bool:
        nonlocal nodes
        if depth == length:
            return close(tail)
        for letter in letters:
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise SearchBudgetExceeded(f"node budget {node_budget} exhausted", nodes)
            if letter_budget is not None and counts[letter] >= letter_budget.get(letter, 0):
                continue
            key = tuple(sorted(tail + (letter,)))
            if key in resid and key not in used:
                used.add(key)
                counts[letter] += 1
                word.append(letter)
                if place(depth + 1, tail[1:] + (letter,)):
                    return True
                word.pop()
                counts[letter] -= 1
                used.remove(key)
        return False

    if not place(0, left):
        raise SearchInfeasible(
            f"no slot filling covers the {len(resid)} residual keys"
        )
    return tuple(word)


@dataclass(frozen=True)
class CountResult:
    """Distinct-ucycle counts for one (n, t).

    ``count_rot_relabel`` counts classes under rotation + relabeling;
    ``count_also_reflect`` additionally folds reflection and is never larger.
    ``exhausted`` is false when some branch hit the node budget, in which case
    the counts are lower bounds.
    """

    n: int
    t: int
    count_rot_relabel: int
    count_also_reflect: int
    exhausted: bool
    nodes_visited: int

    def as_text(self) -> str:
        return (
            f"{self.n} {self.t} {self.count_rot_relabel} {self.count_also_reflect} "
            f"{'true' if self.exhausted else 'false'} {self.nodes_visited}"
        )


def _anchored_words(
    n: int, t: int, first_free: Letter | None, node_budget: int | None
) -> tuple[_CoverSearch, Iterator[tuple[Letter, ...]]]:
    # Anchoring: every multiset ucycle contains the window {1,..,1} exactly
    # once, so each rotation class has exactly one representative beginning
    # with t ones.  Enumerating those enumerates rotation classes bijectively.
    target = _full_multiset_target(n, t)
    fixed = {i: 1 for i in range(t)}
    if first_free is not None:
        fixed[t] = first_free
    search = _CoverSearch(n, t, target, fixed, node_budget)
    return search, search.solutions()


def _count_branch(args: tuple[int, int, Letter, int | None]) -> tuple[set[tuple[Letter, ...]], int, bool]:
    n, t, first, budget = args
    search, gen = _anchored_words(n, t, first, budget)
    reps: set[tuple[Letter, ...]] = set()
    exhausted = True
    try:
        for letters in gen:
            reps.add(canonicalize(CycleWord(n, letters)).representative.letters)
    except SearchBudgetExceeded:
        exhausted = False
    return reps, search.nodes, exhausted


def _fold_reflection(n: int, rep: tuple[Letter, ...]) -> tuple[Letter, ...]:
    mirrored = canonicalize(CycleWord(n, rep[::-1])).representative.letters
    return min(rep, mirrored)


def count_distinct(
    n: int,
    t: int,
    budget: int | None = DEFAULT_COUNT_BUDGET,
    workers: int | None = None,
) -> CountResult:
    """Count distinct multiset ucycles for (n, t) by exhaustive enumeration.

    The node budget applies to each top-level branch (the letter following
    the anchored run of ones); results are identical whether the branches run
    sequentially or across ``workers`` processes.
    """
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    if not admissible_multiset(n, t):
        return CountResult(n, t, 0, 0, exhausted=True, nodes_visited=0)
    if n == 1:
        # The single word "1...1" of length 1 covers the lone multiset.
        return CountResult(n, t, 1, 1, exhausted=True, nodes_visited=0)
    branch_args = [(n, t, first, budget) for first in range(1, n + 1)]
    if workers:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_count_branch, branch_args))
    else:
        results = [_count_branch(a) for a in branch_args]
    reps: set[tuple[Letter, ...]] = set()
    nodes = 0
    exhausted = True
    for branch_reps, branch_nodes, branch_done in results:
        reps |= branch_reps
        nodes += branch_nodes
        exhausted = exhausted and branch_done
    folded = {_fold_reflection(n, rep) for rep in reps}
    return CountResult(n, t, len(reps), len(folded), exhausted, nodes)


def enumerate_ucycles(
    n: int, t: int, limit: int | None = None
) -> Iterator[CanonicalClass]:
    """Yield distinct canonical classes of multiset ucycles in discovery order.

    Enumeration is unbudgeted; pass a ``limit`` to truncate (truncation is not
    an error).
    """
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    if not admissible_multiset(n, t):
        return
    if limit is not None and limit <= 0:
        return
    if n == 1:
        yield canonicalize(CycleWord(1, (1,) * math.comb(t, t)))
        return
    seen: set[tuple[Letter, ...]] = set()
    emitted = 0
    _, gen = _anchored_words(n, t, None, None)
    for letters in gen:
        cls = canonicalize(CycleWord(n, letters))
        rep = cls.representative.letters
        if rep in seen:
            continue
        seen.add(rep)
        yield cls
        emitted += 1
        if limit is not None and emitted >= limit:
            return
