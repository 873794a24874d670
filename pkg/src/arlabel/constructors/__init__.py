"""Compact AR-labelings for the named graph families, plus the powers-of-two labeling."""

from __future__ import annotations

from ..errors import InvalidParameter, UnsupportedCopies
from ..graph import Family, FamilySpec, generate
from .basic import label_basic_family, label_cycle_all_paths, label_prism, powers_of_two
from .cubic import label_cycle_covered, label_hamiltonian_cubic
from .outcome import ConstructionOutcome, finalize, local_repair
from .sierpinski import label_gasket, label_sierpinski
from .trees import label_glued_tree, label_perfect_tree
from .witnesses import get_witness

__all__ = [
    "ConstructionOutcome",
    "construct",
    "finalize",
    "get_witness",
    "label_basic_family",
    "label_cycle_all_paths",
    "label_cycle_covered",
    "label_gasket",
    "label_glued_tree",
    "label_hamiltonian_cubic",
    "label_perfect_tree",
    "label_prism",
    "label_sierpinski",
    "local_repair",
    "powers_of_two",
]

_CACHED_ONLY = (Family.PETERSEN, Family.COMPLETE4, Family.CUBIC6_TRANSITIVE, Family.CUBIC6_OTHER)


def construct(spec: FamilySpec) -> ConstructionOutcome:
    """Dispatch a family spec to its constructor."""
    f = spec.family
    p = spec.as_dict()
    if not spec.supported_by_constructors:
        raise UnsupportedCopies(f"{p['copies']} copies: constructions cover at most 4")
    if f in (
        Family.PATH,
        Family.CYCLE,
        Family.CYCLE_PLUS_PATH,
        Family.PENDANT_PATH_EXTENSION,
        Family.DEGREE2_PATH_EXTENSION,
        Family.CYCLE_ALL_PATHS,
    ):
        return label_basic_family(spec)
    if f is Family.PRISM:
        return label_prism(p["n"])
    if f in _CACHED_ONLY:
        return finalize(generate(spec), get_witness(spec), what=f.value, notes=["cached base labeling"])
    if f is Family.COMPLETE_BIPARTITE:
        # K_{2,q} is the glued binary tree of depth one with q copies
        a, b = sorted((p["p"], p["q"]))
        if a == 2 and 2 <= b <= 4:
            glued = label_glued_tree(1, 2, b)
            return _transfer_outcome(glued, generate(spec), f.value)
        if a == 3 and b == 3:
            return _transfer_outcome(construct(FamilySpec.of(Family.CUBIC6_TRANSITIVE)), generate(spec), f.value)
        if a == 3 and b == 4:
            glued = label_glued_tree(1, 3, 4)
            return _transfer_outcome(glued, generate(spec), f.value)
        if a == 1 and b <= 2:
            return label_basic_family(FamilySpec.of(Family.PATH, n=b + 1)) if b == 2 else finalize(generate(spec), [1])
        raise InvalidParameter(f"no construction for K_{{{p['p']},{p['q']}}}")
    if f is Family.SIERPINSKI:
        return label_sierpinski(p["n"])
    if f is Family.GASKET:
        return label_gasket(p["n"])
    if f is Family.PERFECT_TREE:
        return label_perfect_tree(p["r"], p["t"])
    if f is Family.GLUED_TREE:
        return label_glued_tree(p["r"], p["t"], p["copies"])
    raise InvalidParameter(f"no constructor for {f.value}")


def _transfer_outcome(outcome: ConstructionOutcome, target, name: str) -> ConstructionOutcome:
    from .cubic import _transfer

    labels = _transfer(outcome.graph, outcome.labeling, target)
    if labels is None:
        raise InvalidParameter(f"{name}: internal isomorphism lookup failed")
    return finalize(target, labels, outcome.trace, outcome.repairs, what=name, notes=outcome.notes)
