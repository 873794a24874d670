"""Perfect binary and ternary trees, and glued trees built from up to four copies.

Edge ``i`` of a perfect tree joins vertex ``i+1`` to its parent, so the edges of
one level are contiguous and ordered left to right.
"""

from __future__ import annotations

from itertools import permutations, product

from ..errors import Infeasible, InvalidParameter, UnsupportedCopies
from ..graph import Family, FamilySpec, glued_tree, perfect_tree, tree_levels
from ..verify import is_sum_distinct
from .outcome import ConstructionOutcome, finalize
from .witnesses import get_witness


def _level_edges(r: int, t: int) -> list[list[int]]:
    """Edge indices per level ``1..r`` (index 0 of the result is level 1)."""
    return [[v - 1 for v in level] for level in tree_levels(r, t)[1:]]


def binary_tree_pairs(r: int) -> list[tuple[int, int, int]]:
    """``(upper, left_pendant, right_pendant)`` edge indices for every supporting vertex."""
    levels = tree_levels(r, 2)
    out = []
    for v in levels[r - 1]:
        out.append((v - 1 if v else -1, 2 * v, 2 * v + 1))
    return out


def binary_tree_labels(r: int, repair: bool = True) -> tuple[list[int], dict[str, int], list[str]]:
    """Pendant level left to right with ``1..2^r``, then each level upward in alternating direction."""
    if r < 1:
        raise InvalidParameter("depth r must be at least 1")
    m = 2 ** (r + 1) - 2
    labels = [0] * m
    nxt = 1
    for depth in range(r, 0, -1):
        edges = _level_edges(r, 2)[depth - 1]
        if (r - depth) % 2 == 1:
            edges = edges[::-1]
        for e in edges:
            labels[e] = nxt
            nxt += 1
    trace: dict[str, int] = {"m": m}
    repairs: list[str] = []
    if repair and r >= 5 and r % 4 == 1:
        k = (2 ** r + 2 ** (r + 1) - 1) // 5
        by_pendant = {labels[a]: up for up, a, _ in binary_tree_pairs(r)}
        up1, up2 = by_pendant[k], by_pendant[k - 2]
        x1, x2 = labels[up1], labels[up2]
        labels[up1], labels[up2] = x2, x1
        trace["k"] = k
        repairs.append(f"swapped supporting-vertex labels {x1} and {x2} (pendants {k},{k + 1} and {k - 2},{k - 1})")
    return labels, trace, repairs


def ternary_tree_labels(r: int) -> list[int]:
    if r < 1:
        raise InvalidParameter("depth r must be at least 1")
    if r == 1:
        raise Infeasible("T(1,3) is the star K_{1,3}; three distinct labels from 1..3 always have 1+2=3")
    if r == 2:
        return [1, 3, 5, 2, 4, 12, 6, 7, 8, 9, 10, 11]
    labels = list(get_witness(FamilySpec.of(Family.PERFECT_TREE, r=3, t=3)))
    levels = _level_edges(r, 3)
    for depth in range(4, r + 1):
        start = len(labels) + 1
        labels.extend(range(start, start + len(levels[depth - 1])))
    return labels


def label_perfect_tree(r: int, t: int = 2) -> ConstructionOutcome:
    graph = perfect_tree(r, t)
    if t == 2:
        labels, trace, repairs = binary_tree_labels(r)
        return finalize(graph, labels, trace, repairs, what=f"binary tree r={r}")
    if t == 3:
        labels = ternary_tree_labels(r)
        notes = ["levels 1..3 from the cached T(3,3) labeling"] if r >= 3 else []
        return finalize(graph, labels, {"m": len(labels)}, what=f"ternary tree r={r}", notes=notes)
    raise InvalidParameter("t must be 2 or 3")


# ---------------------------------------------------------------------------
# glued trees


def _check_copies(copies: int) -> None:
    if copies < 2:
        raise InvalidParameter("need at least two copies")
    if copies > 4:
        raise UnsupportedCopies(f"{copies} copies: constructions cover at most 4")


def _truncated_base(r: int, t: int, copies: int) -> list[int]:
    """Smallest glued trees from the cached four-copy (or exact) labeling by dropping top copies."""
    if t == 2:
        if copies == 2:
            return [1, 2, 3, 4]
        return get_witness(FamilySpec.of(Family.GLUED_TREE, r=1, t=2, copies=copies))
    full = get_witness(FamilySpec.of(Family.GLUED_TREE, r=1, t=3, copies=4))
    return full[: 3 * copies]


def glued_binary_labels(r: int, copies: int) -> tuple[list[int], dict[str, int], list[str]]:
    _check_copies(copies)
    if r == 1:
        return _truncated_base(1, 2, copies), {"mu": 2}, []
    base, trace, repairs = binary_tree_labels(r)
    mu = len(base)
    trace = {"mu": mu, "gamma": 2 ** r + 2 ** (r - 1) - 1, **{k: v for k, v in trace.items() if k == "k"}}
    labels = list(base) + [mu + x for x in base]
    if copies >= 3:
        labels += [2 * mu + x for x in base]
    if copies == 4:
        pendant = set(_level_edges(r, 2)[r - 1])
        rotation = {1: 4, 4: 3, 3: 2, 2: 1}
        fourth = []
        for e, k in enumerate(base):
            if e not in pendant:
                fourth.append(3 * mu + k)
            elif k in rotation:
                fourth.append(3 * mu + rotation[k])
            elif k % 2:
                fourth.append(3 * mu + k + 1)
            else:
                fourth.append(3 * mu + k - 1)
        labels += fourth
        repairs = repairs + ["fourth copy: pendant labels rotated (1,4,3,2) and swapped in odd/even pairs"]
        if r == 2:
            a, b = labels.index(5), labels.index(11)
            labels[a], labels[b] = 11, 5
            repairs = repairs + ["interchanged labels 5 and 11"]
    return labels, trace, repairs


# r=2: first-copy pendant label -> labels in copies 2, 3, 4 at its quasi-leaf
_TERNARY_R2_SPECIAL = {2: (16, 36, 48), 4: (24, 26, 40), 12: (14, 28, 38)}
# r=3: first-copy pendant label -> offset used in the fourth copy
_TERNARY_R3_FOURTH = {13: 14, 14: 17, 17: 13, 15: 16, 16: 18, 18: 15}


def _beta_scheme(beta: int, alpha: int) -> dict[int, tuple[int, int, int]]:
    """Labels in copies 2..4 for the quasi-leaves with first-copy labels beta, beta-1, beta-2."""
    return {
        beta: (alpha + beta, 2 * alpha + beta - 1, 3 * alpha + beta),
        beta - 1: (alpha + beta - 2, 2 * alpha + beta - 2, 3 * alpha + beta - 2),
        beta - 2: (alpha + beta - 1, 2 * alpha + beta, 3 * alpha + beta - 1),
    }


def _quasi_leaves_ok(quasi: dict[int, tuple[int, int, int]], triple) -> bool:
    return all(is_sum_distinct((x,) + quasi[x]) for x in triple)


def _offset_permutation_scheme(triple, alpha: int) -> dict[int, tuple[int, int, int]] | None:
    """First assignment, in lexicographic order of per-copy permutations, that makes the three
    quasi-leaves sum-distinct; copies keep their own label triples."""
    for p2, p3, p4 in product(permutations(triple), repeat=3):
        quasi = {x: (alpha + p2[i], 2 * alpha + p3[i], 3 * alpha + p4[i]) for i, x in enumerate(triple)}
        if _quasi_leaves_ok(quasi, triple):
            return quasi
    return None


def glued_ternary_labels(r: int, copies: int) -> tuple[list[int], dict[str, int], list[str]]:
    _check_copies(copies)
    if r == 1:
        return _truncated_base(1, 3, copies), {"alpha": 3}, []
    base = ternary_tree_labels(r)
    alpha = len(base)
    trace = {"alpha": alpha}
    repairs: list[str] = []
    shifted = [[c * alpha + x for x in base] for c in range(copies)]
    if copies == 3:
        third = shifted[2]
        i, j = base.index(alpha - 1), base.index(alpha)
        third[i], third[j] = third[j], third[i]
        repairs.append(f"third copy: interchanged labels {3 * alpha - 1} and {3 * alpha}")
    elif copies == 4:
        pendant_edges = _level_edges(r, 3)[r - 1]
        quasi: dict[int, tuple[int, int, int]] = {}
        for s in range(0, len(pendant_edges), 3):
            triple = sorted(base[e] for e in pendant_edges[s:s + 3])
            if r == 2 and triple[-1] in _TERNARY_R2_SPECIAL:
                quasi.update({x: _TERNARY_R2_SPECIAL[x] for x in triple})
            elif r == 3 and triple[0] in _TERNARY_R3_FOURTH:
                quasi.update(
                    {x: (alpha + x, 2 * alpha + x, 3 * alpha + _TERNARY_R3_FOURTH[x]) for x in triple}
                )
            else:
                if triple != list(range(triple[0], triple[0] + 3)):
                    raise Infeasible(f"supporting vertex with non-consecutive pendant labels {triple}")
                beta = triple[-1]
                trace.setdefault("beta_first", beta)
                trace["beta_last"] = beta
                scheme = _beta_scheme(beta, alpha)
                if not _quasi_leaves_ok(scheme, triple):
                    scheme = _offset_permutation_scheme(triple, alpha)
                    if scheme is None:
                        raise Infeasible(f"no quasi-leaf labels for pendants {triple}")
                    repairs.append(
                        f"quasi-leaves of pendants {triple}: copy labels "
                        + ", ".join(f"{x}->{list(scheme[x])}" for x in triple)
                    )
                quasi.update(scheme)
        repairs.append("copies 2-4: quasi-leaf labels permuted within each supporting vertex")
        for e in pendant_edges:
            for c in (1, 2, 3):
                shifted[c][e] = quasi[base[e]][c - 1]
    return [x for copy in shifted for x in copy], trace, repairs


def label_glued_tree(r: int, t: int = 2, copies: int = 2) -> ConstructionOutcome:
    _check_copies(copies)
    graph = glued_tree(r, t, copies)
    if t == 2:
        labels, trace, repairs = glued_binary_labels(r, copies)
    elif t == 3:
        labels, trace, repairs = glued_ternary_labels(r, copies)
    else:
        raise InvalidParameter("t must be 2 or 3")
    notes = ["cached base labeling"] if r == 1 and (t == 3 or copies > 2) else []
    return finalize(graph, labels, trace, repairs, what=f"glued tree r={r} t={t} copies={copies}", notes=notes)
