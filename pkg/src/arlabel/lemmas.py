"""Local rules for building sum-distinct label sets at a single vertex.

Each predicate is a sufficient (or exact, where noted) condition; every one of
them is cross-checked against :func:`arlabel.verify.is_sum_distinct` in the
test suite.  :func:`label_matching` assigns numbers to the edges of a matching
so that no edge receives the label of either endpoint.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .errors import Infeasible, InvalidParameter, PreconditionViolated
from .verify import is_sum_distinct


def third_label_ok(x: int, y: int, z: int) -> bool:
    """Exact test for three distinct labels: ``x + y != z`` and ``|x - y| != z``.

    For sorted ``x < y < z`` only the first clause can fail.
    """
    return x + y != z and abs(x - y) != z


def three_odds_ok(x: int, y: int, z: int) -> bool:
    return len({x, y, z}) == 3 and x % 2 == 1 and y % 2 == 1 and z % 2 == 1


def ap_third_ok(x: int, d: int) -> bool:
    """Labels ``x, x+d, x+2d`` are sum-distinct iff the smallest is not ``d``."""
    if x < 1 or d < 1:
        raise InvalidParameter("x and d must be positive")
    return x != d


def _ascending_sum_distinct(a: Sequence[int], size: int) -> None:
    if len(a) != size:
        raise PreconditionViolated(f"expected {size} labels, got {len(a)}")
    if any(a[i] >= a[i + 1] for i in range(size - 1)) or a[0] < 1:
        raise PreconditionViolated(f"{list(a)} is not strictly ascending and positive")
    if not is_sum_distinct(a):
        raise PreconditionViolated(f"{list(a)} is not sum-distinct")


def forbidden_fourth(a1: int, a2: int, a3: int) -> set[int]:
    """Values ``a4`` that break sum-distinctness of ``{a1, a2, a3, a4}``.

    The ten candidate values are the positive differences and sums that let a
    subset containing ``a4`` match one without it.  Non-positive entries are
    dropped.  The result may contain ``a1, a2, a3`` themselves (reusing a label
    trivially collides); every other ``a4`` outside the set is safe.
    """
    _ascending_sum_distinct((a1, a2, a3), 3)
    cand = {
        a2 - a1,
        a3 - a2,
        a3 - a1,
        abs(a3 - (a1 + a2)),
        a3 + a1 - a2,
        a3 + a2 - a1,
        a1 + a2,
        a1 + a3,
        a2 + a3,
        a1 + a2 + a3,
    }
    return {c for c in cand if c > 0}


def forbidden_even_over_odds(a1: int, a2: int, a3: int) -> set[int]:
    """Forbidden even ``c > a3`` when ``a1 < a2 < a3`` are odd: only the pair sums."""
    if not (a1 % 2 and a2 % 2 and a3 % 2):
        raise PreconditionViolated("all three labels must be odd")
    return {a1 + a2, a1 + a3, a2 + a3}


def forbidden_odd_over_odds(a1: int, a2: int, a3: int) -> set[int]:
    """Forbidden odd ``a4 > a3`` when ``a1 < a2 < a3`` are odd."""
    if not (a1 % 2 and a2 % 2 and a3 % 2):
        raise PreconditionViolated("all three labels must be odd")
    return {a1 + a2 + a3, a2 + a3 - a1}


def forbidden_over_progression(a1: int, d: int) -> set[int]:
    """Forbidden ``a4`` (outside the triple) for ``a1, a1+d, a1+2d`` with ``a1 > d``."""
    if not a1 > d >= 1:
        raise PreconditionViolated("need a1 > d >= 1")
    a2, a3 = a1 + d, a1 + 2 * d
    return {d, 2 * d, a1 - d, a3 + d, a1 + a2, a1 + a3, a2 + a3, a1 + a2 + a3}


def fourth_label_ok(a1: int, a2: int, a3: int, a4: int) -> bool:
    """Whether ``a4`` extends the ascending sum-distinct triple, via the cheapest applicable rule."""
    if a4 in (a1, a2, a3):
        return False
    if a1 % 2 and a2 % 2 and a3 % 2 and a4 > a3:
        _ascending_sum_distinct((a1, a2, a3), 3)
        if a4 % 2 == 0:
            return a4 not in forbidden_even_over_odds(a1, a2, a3)
        return a4 not in forbidden_odd_over_odds(a1, a2, a3)
    d = a2 - a1
    if a3 - a2 == d and a1 > d:
        return a4 not in forbidden_over_progression(a1, d)
    return a4 not in forbidden_fourth(a1, a2, a3)


def shift_set(a: Sequence[int], k: int) -> list[int]:
    """Add ``k >= max(a)`` to every element of an ascending sum-distinct 4-set."""
    _ascending_sum_distinct(a, 4)
    if k < a[3]:
        raise PreconditionViolated(f"shift {k} is below the largest element {a[3]}")
    out = [k + x for x in a]
    assert is_sum_distinct(out)
    return out


def shift_set3(a: Sequence[int], k: int) -> list[int]:
    _ascending_sum_distinct(a, 3)
    if k < a[2]:
        raise PreconditionViolated(f"shift {k} is below the largest element {a[2]}")
    out = [k + x for x in a]
    assert is_sum_distinct(out)
    return out


def odd_parity_extension_ok(evens: Sequence[int], b: int) -> bool:
    """An odd label extends a sum-distinct set of even labels."""
    return all(x % 2 == 0 for x in evens) and is_sum_distinct(evens) and b % 2 == 1


def dominating_extension_ok(labels: Sequence[int], b: int) -> bool:
    """A label larger than the total of a sum-distinct set extends it."""
    if not is_sum_distinct(labels):
        raise PreconditionViolated(f"{list(labels)} is not sum-distinct")
    return b > sum(labels)


# ---------------------------------------------------------------------------
# matching labeler


@dataclass(frozen=True)
class MatchingInstance:
    """``2k`` labelled positions, ``k`` numbers, and a perfect matching on the positions."""

    vertex_labels: tuple[int, ...]
    numbers: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_labels", tuple(self.vertex_labels))
        object.__setattr__(self, "numbers", tuple(self.numbers))
        object.__setattr__(self, "matching", tuple(tuple(p) for p in self.matching))
        k = len(self.numbers)
        if len(set(self.numbers)) != k:
            raise InvalidParameter("numbers must be distinct")
        if len(self.matching) != k or len(self.vertex_labels) != 2 * k:
            raise InvalidParameter("need k pairs over 2k positions for k numbers")
        covered = sorted(p for pair in self.matching for p in pair)
        if covered != list(range(2 * k)):
            raise InvalidParameter("matching pairs must be disjoint and cover every position")

    @property
    def k(self) -> int:
        return len(self.numbers)

    @property
    def within_lemma(self) -> bool:
        """True when no label appears more than twice and ``k >= 4`` (success guaranteed)."""
        return self.k >= 4 and max(Counter(self.vertex_labels).values(), default=0) <= 2


def matching_assignment_ok(instance: MatchingInstance, assigned: Sequence[int]) -> bool:
    if sorted(assigned) != sorted(instance.numbers):
        return False
    lab = instance.vertex_labels
    return all(x != lab[a] and x != lab[b] for (a, b), x in zip(instance.matching, assigned))


def _allowed(lab, pair, x):
    return x != lab[pair[0]] and x != lab[pair[1]]


def _core_case_analysis(lab, numbers, pairs):
    """Four pairs whose eight labels are exactly the four numbers, each twice."""
    edge_of = {}
    partner = {}
    for idx, (a, b) in enumerate(pairs):
        edge_of[a] = edge_of[b] = idx
        partner[a], partner[b] = b, a
    cls = {x: [p for p in sorted(edge_of) if lab[p] == x] for x in numbers}
    out = [None] * 4

    def rest():
        return [i for i in range(4) if out[i] is None]

    x1 = numbers[0]
    v1, v2 = cls[x1]
    if partner[v1] == v2:
        x2 = numbers[1]
        v3, v4 = cls[x2]
        if partner[v3] == v4:
            x3, x4 = numbers[2], numbers[3]
            out[edge_of[v1]] = x3
            out[edge_of[v3]] = x4
            for i, x in zip(rest(), (x1, x2)):
                out[i] = x
        else:
            w3, w4 = partner[v3], partner[v4]
            if lab[w3] == lab[w4]:
                x3 = lab[w3]
                x4 = next(x for x in numbers if x not in (x1, x2, x3))
                out[edge_of[v3]] = x4
                out[edge_of[v4]] = x1
                out[edge_of[v1]] = x2
                (last,) = rest()
                out[last] = x3
            else:
                x3, x4 = lab[w3], lab[w4]
                out[edge_of[v3]] = x4
                out[edge_of[v4]] = x3
                out[edge_of[v1]] = x2
                (last,) = rest()
                out[last] = x1
    else:
        a, b = partner[v1], partner[v2]
        if lab[a] == lab[b]:
            x2 = lab[a]
            x3, x4 = [x for x in numbers if x not in (x1, x2)]
            out[edge_of[v1]] = x3
            out[edge_of[v2]] = x4
            for i, x in zip(rest(), (x1, x2)):
                out[i] = x
        else:
            x2, x3 = lab[a], lab[b]
            x4 = next(x for x in numbers if x not in (x1, x2, x3))
            out[edge_of[v1]] = x3
            out[edge_of[v2]] = x4
            v4 = next(p for p in cls[x2] if p != a)
            out[edge_of[v4]] = x1
            (last,) = rest()
            out[last] = x2
    return out


def _exhaustive(lab, numbers, pairs):
    for perm in permutations(numbers):
        if all(_allowed(lab, p, x) for p, x in zip(pairs, perm)):
            return list(perm)
    return None


def _kuhn(lab, numbers, pairs):
    match_of_number: dict[int, int] = {}

    def augment(i, seen):
        for x in numbers:
            if x in seen or not _allowed(lab, pairs[i], x):
                continue
            seen.add(x)
            if x not in match_of_number or augment(match_of_number[x], seen):
                match_of_number[x] = i
                return True
        return False

    for i in range(len(pairs)):
        if not augment(i, set()):
            return None
    out = [None] * len(pairs)
    for x, i in match_of_number.items():
        out[i] = x
    return out


def label_matching(instance: MatchingInstance) -> list[int]:
    """Assign the numbers bijectively to the matching pairs, avoiding endpoint labels.

    With ``k >= 4`` and no label used more than twice a solution always exists:
    the first ``k - 4`` pairs take the smallest allowed number, and the last
    four follow the explicit case analysis (or a permutation scan when the
    labels are not exactly the remaining numbers).  Smaller or out-of-hypothesis
    instances are solved exhaustively and may raise :class:`Infeasible`.
    """
    lab = instance.vertex_labels
    pairs = list(instance.matching)
    numbers = list(instance.numbers)
    k = instance.k

    if not instance.within_lemma:
        out = _exhaustive(lab, numbers, pairs) if k <= 7 else _kuhn(lab, numbers, pairs)
        if out is None:
            raise Infeasible("no assignment avoids the endpoint labels")
        return out

    out: list[int] = []
    pool = list(numbers)
    for pair in pairs[: k - 4]:
        x = min(x for x in pool if _allowed(lab, pair, x))
        out.append(x)
        pool.remove(x)
    tail = pairs[k - 4:]
    tail_labels = Counter(lab[p] for pair in tail for p in pair)
    if set(tail_labels) == set(pool) and all(c == 2 for c in tail_labels.values()):
        core = _core_case_analysis(lab, pool, tail)
    else:
        core = _exhaustive(lab, pool, tail)
    if core is None:
        raise Infeasible("matching core failed inside the lemma's hypotheses")
    out.extend(core)
    if not matching_assignment_ok(instance, out):
        raise Infeasible(f"internal error: assignment {out} violates an endpoint label")
    return out
