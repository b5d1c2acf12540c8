"""The centralizer map, its double-centralizer closure, and the Z*-partition.

Every operation here reduces to intersections of the per-element centralizer
bitmasks cached on the group, so subsets are cheap to process even when they
are large.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Group, SetLike, subgroup_generated_by
from .sets import ElemSet, Subgroup, ids_from_mask


def _centralizer_mask(G: Group, ids) -> int:
    mask = G.full_mask
    zmask = G.center.mask
    cms = G.cent_masks
    for s in ids:
        mask &= cms[s]
        if mask == zmask:
            break  # the intersection can never drop below Z(G)
    return mask


def _closure_mask(G: Group, ids) -> int:
    return _centralizer_mask(G, ids_from_mask(_centralizer_mask(G, ids)))


def centralizer(G: Group, S: SetLike) -> Subgroup:
    """C_G(S): all elements commuting with every member of S; C_G(empty) = G."""
    return Subgroup(G.order, _centralizer_mask(G, G.set_ids(S)))


def closure(G: Group, S: SetLike) -> Subgroup:
    """The double centralizer C_G(C_G(S)): extensive, monotone, idempotent."""
    return Subgroup(G.order, _closure_mask(G, G.set_ids(S)))


def fiber_supremum(G: Group, S: SetLike) -> Subgroup:
    """Union of all sets with the same centralizer as S, i.e. C_G(C_G(S))."""
    return closure(G, S)


def element_center(G: Group, g: int) -> Subgroup:
    """Z(g) = C_G(C_G(g)), the (always abelian) center of C_G(g)."""
    return Subgroup(G.order, _centralizer_mask(G, ids_from_mask(G.cent_masks[g])))


def is_abelian_subset(G: Group, S: SetLike) -> bool:
    """True iff the members of S pairwise commute."""
    S = G.elem_set(S)
    cms = G.cent_masks
    return all(S.mask & ~cms[m] == 0 for m in S)


def is_closed_abelian_iff(G: Group, S: SetLike) -> tuple[bool, bool]:
    """(is <S> abelian, is C_G(C_G(S)) abelian); the two always agree."""
    gen_ab = is_abelian_subset(G, subgroup_generated_by(G, S))
    closed_ab = is_abelian_subset(G, closure(G, S))
    return gen_ab, closed_ab


@dataclass(frozen=True)
class CentClass:
    """One class of the relation x ~ y iff C_G(x) = C_G(y).

    ``members`` is Z*(g), ``cent`` the shared centralizer C_G(g), and
    ``ecenter`` the shared element center Z(g) = C_G(C_G(g)).
    """

    representative: int
    members: ElemSet
    cent: Subgroup
    ecenter: Subgroup


def z_star_partition(G: Group) -> tuple[CentClass, ...]:
    """Partition of G into Z*-classes, ordered by minimal representative id.

    The class of any central element is exactly Z(G).
    """
    cached = getattr(G, "_zstar_cache", None)
    if cached is not None:
        return cached
    buckets: dict[int, int] = {}
    masks: list[int] = []
    member_masks: list[int] = []
    for g in G.elements():
        cm = G.cent_masks[g]
        idx = buckets.get(cm)
        if idx is None:
            buckets[cm] = len(masks)
            masks.append(cm)
            member_masks.append(0)
            idx = len(masks) - 1
        member_masks[idx] |= 1 << g
    classes = []
    for cm, mm in zip(masks, member_masks):
        rep = ids_from_mask(mm)[0]
        ecm = _centralizer_mask(G, ids_from_mask(cm))
        classes.append(
            CentClass(
                representative=rep,
                members=ElemSet(G.order, mm),
                cent=Subgroup(G.order, cm),
                ecenter=Subgroup(G.order, ecm),
            )
        )
    classes.sort(key=lambda c: c.representative)
    result = tuple(classes)
    class_of = {}
    for i, cl in enumerate(result):
        for m in cl.members:
            class_of[m] = i
    # publish the index first: readers key off _zstar_cache
    G._zstar_class_of = class_of
    G._zstar_cache = result
    return result


def class_transversal(G: Group) -> ElemSet:
    """Default transversal of the Z*-partition: the minimal id of each class."""
    return ElemSet.from_ids(G.order, (c.representative for c in z_star_partition(G)))


def u_star(G: Group, H: SetLike, X: SetLike) -> ElemSet:
    """U*_H: the representatives in X whose element centralizer contains H.

    Requires H to be a centralizer (a fixed point of the closure) and X to
    contain exactly one representative per Z*-class; then C_G(U*_H) = H.
    """
    H = G.elem_set(H)
    if _closure_mask(G, H.members) != H.mask:
        raise ValueError("H is not a centralizer (not closed under the double centralizer)")
    classes = z_star_partition(G)
    class_of = G._zstar_class_of
    xs = G.set_ids(X)
    hit = [False] * len(classes)
    for x in xs:
        i = class_of[x]
        if hit[i]:
            raise ValueError(f"X contains two representatives of the class of element {x}")
        hit[i] = True
    if not all(hit):
        missing = hit.index(False)
        raise ValueError(
            f"X is not a transversal: no representative for the class of element "
            f"{classes[missing].representative}"
        )
    cms = G.cent_masks
    return ElemSet.from_ids(G.order, (x for x in xs if H.mask & ~cms[x] == 0))
