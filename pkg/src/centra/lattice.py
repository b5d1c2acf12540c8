"""The centralizer lattice, its duality, and the element-center poset."""

from __future__ import annotations

from typing import Optional, Union

from .centralizers import z_star_partition, _centralizer_mask
from .groups import Group, InvariantViolation, SetLike, subgroup_generated_by, subgroup_label
from .sets import ElemSet, Subgroup, ids_from_mask

NodeLike = Union[int, Subgroup, ElemSet]


def _node_sort_key(order: int, mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), ids_from_mask(mask))


class CentLattice:
    """All distinct centralizers of a group, ordered by containment.

    Nodes are sorted by size then lexicographic member list, so node indices
    (and everything derived from them) are stable across runs.  ``dual`` maps
    a node index to the index of its centralizer; it is an order-reversing
    involution.
    """

    def __init__(self, group: Group, masks: list[int]):
        self.group = group
        order = group.order
        masks = sorted(set(masks), key=lambda m: _node_sort_key(order, m))
        self.nodes: tuple[Subgroup, ...] = tuple(Subgroup(order, m) for m in masks)
        self._index = {m: i for i, m in enumerate(masks)}
        dual = []
        for m in masks:
            dm = _centralizer_mask(group, ids_from_mask(m))
            if dm not in self._index:
                raise InvariantViolation("dual of a lattice node is not a node")
            dual.append(self._index[dm])
        self.dual = tuple(dual)
        self.top = self._index[group.full_mask]
        self.bottom = self._index[group.center.mask]

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def index_of(self, node: NodeLike) -> int:
        if isinstance(node, int):
            if not 0 <= node < len(self.nodes):
                raise ValueError(f"node index {node} out of range")
            return node
        idx = self._index.get(node.mask)
        if idx is None:
            raise ValueError(f"{node!r} is not a lattice node")
        return idx

    def leq(self, i: int, j: int) -> bool:
        return self.nodes[i].mask & ~self.nodes[j].mask == 0

    def meet(self, H: NodeLike, K: NodeLike) -> Subgroup:
        """H ∧ K = H ∩ K."""
        i, j = self.index_of(H), self.index_of(K)
        m = self.nodes[i].mask & self.nodes[j].mask
        if m not in self._index:
            raise InvariantViolation("meet of lattice nodes is not a node")
        return self.nodes[self._index[m]]

    def join(self, H: NodeLike, K: NodeLike) -> Subgroup:
        """H ∨ K: the centralizer of C_G(H) ∩ C_G(K)."""
        i, j = self.index_of(H), self.index_of(K)
        am = self.nodes[self.dual[i]].mask & self.nodes[self.dual[j]].mask
        jm = _centralizer_mask(self.group, ids_from_mask(am))
        if jm not in self._index:
            raise InvariantViolation("join of lattice nodes is not a node")
        return self.nodes[self._index[jm]]

    def node_label(self, i: int) -> str:
        return subgroup_label(self.group, self.nodes[i])

    def __repr__(self) -> str:
        return f"<CentLattice of {self.group.name}: {len(self.nodes)} nodes>"


def build_lattice(G: Group) -> CentLattice:
    """Close {G} and the element centralizers under pairwise intersection.

    By the intersection law this yields every C_G(S), without touching the
    power set.
    """
    masks = {G.full_mask}
    masks.update(G.cent_masks)
    worklist = list(masks)
    while worklist:
        m = worklist.pop()
        additions = []
        for other in masks:
            x = m & other
            if x not in masks:
                additions.append(x)
        for x in additions:
            masks.add(x)
            worklist.append(x)
    return CentLattice(G, list(masks))


class CenterPoset:
    """The element centers Z(g) together with Z(G), ordered by containment.

    ``class_sizes[i]`` is |Z*(g)| for the class whose element center is
    ``nodes[i]``; Z(G) carries the central class of size |Z(G)|.
    """

    def __init__(self, group: Group, masks: list[int], class_sizes: dict[int, int]):
        self.group = group
        order = group.order
        masks = sorted(masks, key=lambda m: _node_sort_key(order, m))
        self.nodes: tuple[Subgroup, ...] = tuple(Subgroup(order, m) for m in masks)
        self._index = {m: i for i, m in enumerate(masks)}
        self.class_sizes = tuple(class_sizes[m] for m in masks)
        self.min_index = self._index[group.center.mask]

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def index_of(self, node: NodeLike) -> int:
        if isinstance(node, int):
            if not 0 <= node < len(self.nodes):
                raise ValueError(f"node index {node} out of range")
            return node
        idx = self._index.get(node.mask)
        if idx is None:
            raise ValueError(f"{node!r} is not a poset node")
        return idx

    def leq(self, i: int, j: int) -> bool:
        return self.nodes[i].mask & ~self.nodes[j].mask == 0

    def node_label(self, i: int) -> str:
        return subgroup_label(self.group, self.nodes[i])

    def __repr__(self) -> str:
        return f"<CenterPoset of {self.group.name}: {len(self.nodes)} nodes>"


def center_poset(G: Group) -> CenterPoset:
    """Build the poset of element centers (one per Z*-class) plus Z(G)."""
    sizes: dict[int, int] = {}
    masks: list[int] = []
    for c in z_star_partition(G):
        m = c.ecenter.mask
        if m in sizes:
            raise InvariantViolation("two Z*-classes share an element center")
        sizes[m] = len(c.members)
        masks.append(m)
    if G.center.mask not in sizes:
        raise InvariantViolation("center missing from the element-center poset")
    return CenterPoset(G, masks, sizes)


def is_f_group(G: Group) -> bool:
    """True iff the proper element centralizers form an antichain.

    Checked both on the centralizers and (dually) on the element centers;
    the two views must agree.
    """
    classes = [c for c in z_star_partition(G) if c.cent.mask != G.full_mask]
    cents = [c.cent.mask for c in classes]
    centers = [c.ecenter.mask for c in classes]

    def antichain(ms: list[int]) -> bool:
        return not any(
            a != b and a & ~b == 0 for a in ms for b in ms
        )

    by_cents = antichain(cents)
    by_centers = antichain(centers)
    if by_cents != by_centers:
        raise InvariantViolation("centralizer and element-center antichain checks disagree")
    return by_cents


def f_group_chain_witness(G: Group) -> Optional[tuple[int, int]]:
    """Representatives (x, y) with C_G(x) properly inside C_G(y), if any."""
    classes = [c for c in z_star_partition(G) if c.cent.mask != G.full_mask]
    for a in classes:
        for b in classes:
            if a.cent.mask != b.cent.mask and a.cent.mask & ~b.cent.mask == 0:
                return (a.representative, b.representative)
    return None


def hasse_edges(poset) -> tuple[tuple[int, int], ...]:
    """Covering pairs (i, j) of a CentLattice or CenterPoset: node i is covered
    by node j.  Ordered by (i, j) under the object's node ordering."""
    n = len(poset.nodes)
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or not poset.leq(i, j):
                continue
            covered = True
            for k in range(n):
                if k != i and k != j and poset.leq(i, k) and poset.leq(k, j):
                    covered = False
                    break
            if covered:
                edges.append((i, j))
    edges.sort()
    return tuple(edges)


def all_subgroups(G: Group, limit_order: int = 64) -> tuple[Subgroup, ...]:
    """Every subgroup of a small group, by closing under one-element extensions.

    Used for diagram renderings and exhaustive oracles only; guarded by
    ``limit_order`` because subgroup counts explode.
    """
    if G.order > limit_order:
        raise ValueError(f"subgroup enumeration is limited to order <= {limit_order}")
    trivial = subgroup_generated_by(G, ())
    seen = {trivial.mask}
    worklist = [trivial]
    while worklist:
        H = worklist.pop()
        hm = H.mask
        for g in G.elements():
            if (hm >> g) & 1:
                continue
            ext = subgroup_generated_by(G, H.members + (g,))
            if ext.mask not in seen:
                seen.add(ext.mask)
                worklist.append(ext)
    masks = sorted(seen, key=lambda m: _node_sort_key(G.order, m))
    return tuple(Subgroup(G.order, m) for m in masks)
