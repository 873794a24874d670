"""Sierpinski graphs S(n,3) and Sierpinski gaskets S_n, built from three shifted copies."""

from __future__ import annotations

from ..errors import InvalidParameter
from ..graph import Family, FamilySpec, gasket, sierpinski
from .outcome import ConstructionOutcome, finalize
from .witnesses import get_witness


def sierpinski_labels(n: int) -> tuple[list[int], dict[str, int]]:
    """Labels in generator edge order: blocks M, L, R, then bridges M-L, M-R, L-R."""
    if n < 1:
        raise InvalidParameter("n must be at least 1")
    if n == 1:
        return [1, 2, 3], {}
    if n <= 3:
        return get_witness(FamilySpec.of(Family.SIERPINSKI, n=n)), {}
    sub, _ = sierpinski_labels(n - 1)
    alpha = len(sub)
    e_ml = 3 * alpha + 1
    if n % 2 == 0:
        e_mr, e_lr = 3 * alpha + 2, 3 * alpha + 3
    else:
        e_lr, e_mr = 3 * alpha + 2, 3 * alpha + 3
    labels = sub + [alpha + x for x in sub] + [2 * alpha + x for x in sub] + [e_ml, e_mr, e_lr]
    return labels, {"alpha": alpha, "e_ml": e_ml, "e_mr": e_mr, "e_lr": e_lr}


def label_sierpinski(n: int) -> ConstructionOutcome:
    labels, trace = sierpinski_labels(n)
    notes = ["cached base labeling"] if n in (2, 3) else []
    return finalize(sierpinski(n), labels, trace, what=f"sierpinski n={n}", notes=notes)


def gasket_labels(n: int) -> tuple[list[int], dict[str, int]]:
    """Labels in generator edge order: top block, then left (+3^(n-1)), then right (+2*3^(n-1))."""
    if n < 1:
        raise InvalidParameter("n must be at least 1")
    if n == 1:
        return [1, 2, 3], {}
    if n <= 3:
        return get_witness(FamilySpec.of(Family.GASKET, n=n)), {}
    sub, _ = gasket_labels(n - 1)
    shift = 3 ** (n - 1)
    return sub + [shift + x for x in sub] + [2 * shift + x for x in sub], {"shift": shift}


def label_gasket(n: int) -> ConstructionOutcome:
    labels, trace = gasket_labels(n)
    notes = ["cached base labeling"] if n in (2, 3) else []
    return finalize(gasket(n), labels, trace, what=f"gasket n={n}", notes=notes)
