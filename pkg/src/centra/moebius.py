"""Möbius function on the element-center poset and the mod-p congruence checks."""

from __future__ import annotations

from dataclasses import dataclass, field, asdict
from typing import Optional

from .centralizers import z_star_partition
from .groups import Group, InvariantViolation
from .lattice import CenterPoset, build_lattice, center_poset, is_f_group


@dataclass(frozen=True)
class MoebiusTable:
    """Integer mu per node of a center poset: mu(min) = 1 and
    mu(x) = -sum of mu over nodes strictly below x."""

    poset: CenterPoset
    mu: tuple[int, ...]

    def value(self, node) -> int:
        return self.mu[self.poset.index_of(node)]


def moebius(P: CenterPoset) -> MoebiusTable:
    """Compute mu by one pass over nodes sorted by subgroup size."""
    n = len(P.nodes)
    mn = P.min_index
    for j in range(n):
        if not P.leq(mn, j):
            raise ValueError("poset has no unique minimal element")
    # Node order is (size, lex), which is topological for containment.
    mu = [0] * n
    for i in range(n):
        if i == mn:
            mu[i] = 1
            continue
        total = 0
        for j in range(n):
            if j != i and P.leq(j, i):
                total += mu[j]
        mu[i] = -total
    return MoebiusTable(P, tuple(mu))


@dataclass
class CongruenceLine:
    """One congruence instance: lhs = rhs mod p, with residues kept for debugging."""

    label: str
    lhs: int
    rhs: int
    lhs_mod: int
    rhs_mod: int
    passed: bool


@dataclass
class CongruenceReport:
    check: str
    group: str
    p: int
    lines: list[CongruenceLine] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(line.passed for line in self.lines)

    def add(self, label: str, lhs: int, rhs: int) -> None:
        lm, rm = lhs % self.p, rhs % self.p
        self.lines.append(CongruenceLine(label, lhs, rhs, lm, rm, lm == rm))

    def add_exact(self, label: str, lhs: int, rhs: int) -> None:
        lm, rm = lhs % self.p, rhs % self.p
        self.lines.append(CongruenceLine(label, lhs, rhs, lm, rm, lhs == rhs))

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def p_group_prime(order: int) -> Optional[int]:
    """The prime p with order = p^k (k >= 1), or None."""
    if order < 2:
        return None
    p = 2
    while p * p <= order:
        if order % p == 0:
            break
        p += 1
    else:
        p = order
    while order % p == 0:
        order //= p
    return p if order == 1 else None


def _require_p_group(G: Group, p: Optional[int], *, nonabelian: bool = False,
                     f_group: bool = False) -> int:
    inferred = p_group_prime(G.order)
    if inferred is None:
        raise ValueError(f"{G.name} (order {G.order}) is not a p-group")
    if p is not None and p != inferred:
        raise ValueError(f"order {G.order} is not a power of p={p}")
    if nonabelian and G.is_abelian:
        raise ValueError(f"{G.name} is abelian; the check needs a nonabelian p-group")
    if f_group and not is_f_group(G):
        raise ValueError(f"{G.name} is not an F-group")
    return inferred


def check_class_size_congruence(G: Group, p: Optional[int] = None) -> CongruenceReport:
    """Per Z*-class: |Z*(g)| / |Z(G)| = mu(Z(g)) mod p."""
    p = _require_p_group(G, p)
    poset = center_poset(G)
    table = moebius(poset)
    z_order = len(G.center)
    report = CongruenceReport("class_size_congruence", G.name, p)
    for c in z_star_partition(G):
        size = len(c.members)
        if size % z_order:
            raise InvariantViolation(
                f"|Z(G)|={z_order} does not divide |Z*({G.label(c.representative)})|={size}"
            )
        report.add(
            f"class of {G.label(c.representative)}",
            size // z_order,
            table.value(c.ecenter),
        )
    return report


def check_mob_sums(G: Group, p: Optional[int] = None) -> CongruenceReport:
    """Both Möbius sum congruences over the centralizer lattice.

    For every lattice node H properly containing Z(G), the mu-sum over
    non-central element centers inside H is -1 mod p; dually, for every node
    H properly inside G, the mu-sum over proper element centralizers
    containing H (evaluated at their centers) is -1 mod p.
    """
    p = _require_p_group(G, p, nonabelian=True)
    lat = build_lattice(G)
    poset = center_poset(G)
    table = moebius(poset)
    center_mask = G.center.mask
    full = G.full_mask
    noncentral = [
        (c.cent.mask, table.value(c.ecenter), c.ecenter.mask)
        for c in z_star_partition(G)
        if c.cent.mask != full
    ]
    report = CongruenceReport("mob_sums", G.name, p)
    for i, node in enumerate(lat.nodes):
        hm = node.mask
        if hm != center_mask:
            total = sum(mu for _, mu, zm in noncentral if zm & ~hm == 0)
            report.add(f"centers within {lat.node_label(i)}", total, -1)
        if hm != full:
            total = sum(mu for cm, mu, _ in noncentral if hm & ~cm == 0)
            report.add(f"centralizers above {lat.node_label(i)}", total, -1)
    return report


def check_f_group_counts(G: Group, p: Optional[int] = None) -> CongruenceReport:
    """F-group counting congruences.

    Per proper element centralizer H: the number of non-central element
    centers inside H is 1 mod p; per element center H: the number of proper
    element centralizers containing H is 1 mod p; and |Z(G)-centers| is
    1 mod p.  Also records that mu = -1 at every non-minimal node.
    """
    p = _require_p_group(G, p, nonabelian=True, f_group=True)
    poset = center_poset(G)
    table = moebius(poset)
    full = G.full_mask
    classes = [c for c in z_star_partition(G) if c.cent.mask != full]
    report = CongruenceReport("f_group_counts", G.name, p)
    for c in classes:
        inside = sum(1 for d in classes if d.ecenter.mask & ~c.cent.mask == 0)
        report.add(f"centers within C({G.label(c.representative)})", inside, 1)
    for c in classes:
        above = sum(1 for d in classes if c.ecenter.mask & ~d.cent.mask == 0)
        report.add(f"centralizers above Z({G.label(c.representative)})", above, 1)
    report.add("number of non-central element centers", len(classes), 1)
    for i, m in enumerate(table.mu):
        if i != poset.min_index:
            report.add_exact(f"mu at {poset.node_label(i)}", m, -1)
    return report
