"""Named property suites driven by the CLI verifier and the test fleet.

Each suite replays the theorem-backed invariants of its area on one group:
exhaustively over the power set for tiny groups, and on seeded random
samples above that, so identical invocations always test identical cases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .centralizers import (
    centralizer,
    class_transversal,
    closure,
    is_abelian_subset,
    u_star,
    z_star_partition,
)
from .graphs import (
    centralizer_graph,
    commuting_graph,
    default_transversal,
    quotient_consistency,
    transversal_graph,
)
from .groups import Group, is_subgroup, subgroup_generated_by
from .lattice import build_lattice, center_poset, is_f_group
from .moebius import (
    check_class_size_congruence,
    check_f_group_counts,
    check_mob_sums,
    moebius,
    p_group_prime,
)
from .sets import ElemSet, ids_from_mask

SUITES = ("algebra", "lattice", "partition", "moebius", "graphs")

EXHAUSTIVE_LIMIT = 8   # full power-set checks up to this group order
POWERSET_ORACLE_LIMIT = 12


@dataclass
class PropertyResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""
    witness: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "witness": self.witness,
        }


def _ids_str(ids) -> str:
    ids = tuple(ids)
    shown = ",".join(map(str, ids[:12]))
    if len(ids) > 12:
        shown += f",... ({len(ids)} ids)"
    return "{" + shown + "}"


class _Suite:
    def __init__(self, prefix: str):
        self.prefix = prefix
        self.results: list[PropertyResult] = []

    def record(self, name: str, witness: Optional[str], detail: str = "") -> None:
        status = "pass" if witness is None else "fail"
        self.results.append(PropertyResult(f"{self.prefix}/{name}", status, detail, witness))

    def skip(self, name: str, reason: str) -> None:
        self.results.append(PropertyResult(f"{self.prefix}/{name}", "skip", reason))


def _subset_pool(G: Group, rng: random.Random, samples: int, max_size: Optional[int] = None):
    n = G.order
    if n <= EXHAUSTIVE_LIMIT:
        return [ids_from_mask(m) for m in range(1 << n)]
    pool = []
    cap = n if max_size is None else min(n, max_size)
    for _ in range(samples):
        k = rng.randint(0, cap)
        pool.append(tuple(sorted(rng.sample(range(n), k))))
    return pool


def algebra_suite(G: Group, rng: random.Random, samples: int) -> list[PropertyResult]:
    s = _Suite("algebra")
    n = G.order
    exhaustive = n <= EXHAUSTIVE_LIMIT
    pool = _subset_pool(G, rng, samples)
    cm = lambda ids: centralizer(G, ids).mask

    witness = None if cm(()) == G.full_mask else "C(empty) != G"
    s.record("empty_set_centralizer", witness)

    witness = None
    for ids in pool:
        res = cm(ids)
        if not is_subgroup(G, ids_from_mask(res)):
            witness = f"C({_ids_str(ids)}) is not a subgroup"
            break
    s.record("centralizer_is_subgroup", witness, f"{len(pool)} subsets")

    # Antitone law over ordered pairs S <= T.
    witness = None
    if exhaustive:
        pairs = []
        for t_mask in range(1 << n):
            sub = t_mask
            while True:
                pairs.append((sub, t_mask))
                if sub == 0:
                    break
                sub = (sub - 1) & t_mask
    else:
        pairs = []
        for ids in pool:
            t_mask = 0
            for i in ids:
                t_mask |= 1 << i
            k = rng.randint(0, len(ids))
            s_mask = 0
            for i in rng.sample(ids, k):
                s_mask |= 1 << i
            pairs.append((s_mask, t_mask))
    for s_mask, t_mask in pairs:
        if cm(ids_from_mask(t_mask)) & ~cm(ids_from_mask(s_mask)):
            witness = f"S={_ids_str(ids_from_mask(s_mask))} T={_ids_str(ids_from_mask(t_mask))}"
            break
    s.record("antitone_containment", witness, f"{len(pairs)} subset pairs")

    # Intersection law over pairs and a few wider collections.
    witness = None
    collections = []
    if exhaustive:
        collections = [
            (ids_from_mask(a), ids_from_mask(b))
            for a in range(1 << n)
            for b in range(1 << n)
            if a <= b
        ]
    else:
        for _ in range(samples):
            k = rng.randint(1, 4)
            collections.append(tuple(
                tuple(sorted(rng.sample(range(n), rng.randint(0, n // 2))))
                for _ in range(k)
            ))
    for coll in collections:
        union = sorted(set().union(*map(set, coll))) if coll else []
        inter = G.full_mask
        for part in coll:
            inter &= cm(part)
        if cm(union) != inter:
            witness = " ".join(_ids_str(part) for part in coll)
            break
    s.record("intersection_law", witness, f"{len(collections)} collections")

    # C(S) = C(<S>); generated subgroups kept small on purpose.
    witness = None
    gen_pool = pool if exhaustive else _subset_pool(G, rng, samples, max_size=6)
    for ids in gen_pool:
        if cm(ids) != cm(subgroup_generated_by(G, ids).members):
            witness = f"S={_ids_str(ids)}"
            break
    s.record("generated_subgroup_law", witness, f"{len(gen_pool)} subsets")

    witness = None
    for ids in pool:
        first = cm(ids)
        if cm(ids_from_mask(cm(ids_from_mask(first)))) != first:
            witness = f"S={_ids_str(ids)}"
            break
    s.record("triple_centralizer", witness, f"{len(pool)} subsets")

    # Galois: T <= C(S) iff S <= C(T), over arbitrary pairs.
    witness = None
    if exhaustive:
        gpairs = [(a, b) for a in range(1 << n) for b in range(1 << n)]
    else:
        gpairs = []
        for _ in range(samples):
            a = 0
            for i in rng.sample(range(n), rng.randint(0, n)):
                a |= 1 << i
            b = 0
            for i in rng.sample(range(n), rng.randint(0, n)):
                b |= 1 << i
            gpairs.append((a, b))
    for a, b in gpairs:
        lhs = b & ~cm(ids_from_mask(a)) == 0
        rhs = a & ~cm(ids_from_mask(b)) == 0
        if lhs != rhs:
            witness = f"S={_ids_str(ids_from_mask(a))} T={_ids_str(ids_from_mask(b))}"
            break
    s.record("galois_equivalence", witness, f"{len(gpairs)} pairs")

    # Closure-operator axioms for C(C(.)).
    clm = lambda ids: closure(G, ids).mask
    witness = None
    for ids in pool:
        m = 0
        for i in ids:
            m |= 1 << i
        if m & ~clm(ids):
            witness = f"S={_ids_str(ids)}"
            break
    s.record("closure_extensive", witness, f"{len(pool)} subsets")

    witness = None
    for s_mask, t_mask in pairs:
        if clm(ids_from_mask(s_mask)) & ~clm(ids_from_mask(t_mask)):
            witness = f"S={_ids_str(ids_from_mask(s_mask))} T={_ids_str(ids_from_mask(t_mask))}"
            break
    s.record("closure_monotone", witness, f"{len(pairs)} subset pairs")

    witness = None
    for ids in pool:
        once = clm(ids)
        if clm(ids_from_mask(once)) != once:
            witness = f"S={_ids_str(ids)}"
            break
    s.record("closure_idempotent", witness, f"{len(pool)} subsets")
    return s.results


def lattice_suite(G: Group, rng: random.Random, samples: int) -> list[PropertyResult]:
    s = _Suite("lattice")
    lat = build_lattice(G)
    nodes = lat.nodes
    k = len(nodes)

    witness = None
    for i, node in enumerate(nodes):
        if closure(G, node).mask != node.mask:
            witness = f"node {lat.node_label(i)}"
            break
    s.record("nodes_are_closure_fixed_points", witness, f"{k} nodes")

    witness = None
    if sorted(lat.dual) != list(range(k)):
        witness = "dual is not a bijection"
    else:
        for i in range(k):
            if lat.dual[lat.dual[i]] != i:
                witness = f"dual(dual({lat.node_label(i)})) != itself"
                break
    s.record("duality_involution", witness)

    pair_idx = [(i, j) for i in range(k) for j in range(k)]
    if len(pair_idx) > 4 * samples and k > 40:
        pair_idx = [
            (rng.randrange(k), rng.randrange(k)) for _ in range(4 * samples)
        ]
    witness = None
    for i, j in pair_idx:
        if lat.leq(i, j) != lat.leq(lat.dual[j], lat.dual[i]):
            witness = f"{lat.node_label(i)} vs {lat.node_label(j)}"
            break
    s.record("duality_order_reversing", witness, f"{len(pair_idx)} node pairs")

    witness = None
    for i, j in pair_idx:
        H, K = nodes[i], nodes[j]
        try:
            m = lat.meet(H, K)
            jn = lat.join(H, K)
        except ValueError as exc:
            witness = str(exc)
            break
        if m.mask != H.mask & K.mask:
            witness = f"meet({lat.node_label(i)},{lat.node_label(j)})"
            break
        # Join must be the least node containing both.
        expected = G.full_mask
        for other in nodes:
            if (H.mask | K.mask) & ~other.mask == 0:
                expected &= other.mask
        if jn.mask != expected:
            witness = f"join({lat.node_label(i)},{lat.node_label(j)})"
            break
    s.record("meet_join_closed_and_least", witness, f"{len(pair_idx)} node pairs")

    X = class_transversal(G)
    witness = None
    for i, j in pair_idx:
        H, K = nodes[i], nodes[j]
        uh = u_star(G, H, X).mask
        uk = u_star(G, K, X).mask
        ujoin = u_star(G, lat.join(H, K), X).mask
        if ujoin != uh & uk:
            witness = f"U*({lat.node_label(i)} v {lat.node_label(j)})"
            break
    s.record("ustar_intersection_law", witness, f"{len(pair_idx)} node pairs")

    witness = None
    triples = [
        (rng.randrange(k), rng.randrange(k), rng.randrange(k)) for _ in range(samples)
    ]
    for i, j, l in triples:
        H, K, L = nodes[i], nodes[j], nodes[l]
        if lat.meet(H, H).mask != H.mask or lat.join(H, H).mask != H.mask:
            witness = f"idempotence at {lat.node_label(i)}"
            break
        if lat.meet(H, K).mask != lat.meet(K, H).mask or lat.join(H, K).mask != lat.join(K, H).mask:
            witness = f"commutativity at {lat.node_label(i)},{lat.node_label(j)}"
            break
        if lat.meet(lat.meet(H, K), L).mask != lat.meet(H, lat.meet(K, L)).mask:
            witness = "meet associativity"
            break
        if lat.join(lat.join(H, K), L).mask != lat.join(H, lat.join(K, L)).mask:
            witness = "join associativity"
            break
        if lat.meet(H, lat.join(H, K)).mask != H.mask or lat.join(H, lat.meet(H, K)).mask != H.mask:
            witness = "absorption"
            break
    s.record("lattice_laws", witness, f"{len(triples)} random triples")

    witness = None
    if nodes[lat.top].mask != G.full_mask:
        witness = "top is not G"
    elif nodes[lat.bottom].mask != G.center.mask:
        witness = "bottom is not Z(G)"
    s.record("top_bottom", witness)

    if G.order <= POWERSET_ORACLE_LIMIT:
        seen = set()
        for m in range(1 << G.order):
            seen.add(centralizer(G, ids_from_mask(m)).mask)
        witness = None if seen == {node.mask for node in nodes} else "power-set image differs"
        s.record("powerset_agreement", witness, f"all {1 << G.order} subsets")
    else:
        s.skip("powerset_agreement", f"order {G.order} > {POWERSET_ORACLE_LIMIT}")
    return s.results


def partition_suite(G: Group, rng: random.Random, samples: int) -> list[PropertyResult]:
    s = _Suite("partition")
    classes = z_star_partition(G)
    n = G.order

    union = 0
    overlap = None
    for c in classes:
        if union & c.members.mask:
            overlap = f"class of {G.label(c.representative)} overlaps another"
            break
        union |= c.members.mask
    witness = overlap or (None if union == G.full_mask else "classes do not cover G")
    s.record("partition_disjoint_cover", witness, f"{len(classes)} classes")

    witness = None
    for c in classes:
        if any(G.cent_masks[m] != c.cent.mask for m in c.members):
            witness = f"class of {G.label(c.representative)}"
            break
    s.record("class_shares_centralizer", witness)

    witness = None
    for c in classes:
        if c.members.mask & ~c.ecenter.mask:
            witness = f"Z*({G.label(c.representative)}) not inside Z"
            break
        if not is_abelian_subset(G, c.ecenter):
            witness = f"Z({G.label(c.representative)}) not abelian"
            break
        # Element center must be the center of the centralizer.
        zc = 0
        for m in c.cent:
            if c.cent.mask & ~G.cent_masks[m] == 0:
                zc |= 1 << m
        if zc != c.ecenter.mask:
            witness = f"Z({G.label(c.representative)}) != Z(C(.))"
            break
    s.record("ecenter_structure", witness)

    z = G.center
    witness = None
    for c in classes:
        if len(c.members) % len(z):
            witness = f"|Z*({G.label(c.representative)})| not divisible by |Z(G)|"
            break
        covered = 0
        for m in c.members:
            if (covered >> m) & 1:
                continue
            coset = 0
            for zi in z:
                coset |= 1 << G.mul(m, zi)
            if coset & ~c.members.mask:
                witness = f"coset of {G.label(m)} leaves its class"
                break
            covered |= coset
        if witness:
            break
    s.record("coset_structure", witness)

    witness = None
    for c in classes:
        if (z.mask >> c.representative) & 1 and c.members.mask != z.mask:
            witness = "central class is not Z(G)"
            break
    s.record("central_class_is_center", witness)

    lat = build_lattice(G)
    witness = None
    for i, node in enumerate(lat.nodes):
        hm = node.mask
        total = 0
        count = 0
        for c in classes:
            if c.ecenter.mask & ~hm == 0:
                if total & c.members.mask:
                    witness = f"union not disjoint inside {lat.node_label(i)}"
                    break
                total |= c.members.mask
                count += len(c.members)
        if witness:
            break
        if total != hm or count != len(node):
            witness = f"node {lat.node_label(i)} is not the union of its Z*-classes"
            break
    s.record("partition_theorem_on_lattice", witness, f"{len(lat.nodes)} nodes")

    X = class_transversal(G)
    witness = None
    for i, node in enumerate(lat.nodes):
        if centralizer(G, u_star(G, node, X)).mask != node.mask:
            witness = f"C(U*) != H at {lat.node_label(i)}"
            break
    s.record("ustar_recovers_nodes", witness)

    if n <= POWERSET_ORACLE_LIMIT:
        fibers: dict[int, int] = {}
        for m in range(1 << n):
            cmask = centralizer(G, ids_from_mask(m)).mask
            fibers[cmask] = fibers.get(cmask, 0) | m
        witness = None
        for cmask, union_mask in fibers.items():
            rep = ids_from_mask(union_mask)
            if closure(G, ElemSet(n, union_mask)).mask != union_mask:
                witness = f"fiber union {_ids_str(rep)} is not closed"
                break
            if centralizer(G, ElemSet(n, union_mask)).mask != cmask:
                witness = f"fiber union {_ids_str(rep)} changes the centralizer"
                break
        s.record("fiber_union_is_closure", witness, f"{len(fibers)} fibers")
    else:
        s.skip("fiber_union_is_closure", f"order {n} > {POWERSET_ORACLE_LIMIT}")
    return s.results


def moebius_suite(G: Group, rng: random.Random, samples: int) -> list[PropertyResult]:
    s = _Suite("moebius")
    poset = center_poset(G)
    table = moebius(poset)

    witness = None
    mn = poset.min_index
    for i in range(len(poset.nodes)):
        below = sum(table.mu[j] for j in range(len(poset.nodes)) if j != i and poset.leq(j, i))
        expected = 1 if i == mn else -below
        if table.mu[i] != expected:
            witness = f"mu mismatch at {poset.node_label(i)}"
            break
    s.record("recursion_reverified", witness, f"{len(poset.nodes)} nodes")

    witness = None if all(poset.leq(mn, j) for j in range(len(poset.nodes))) else "no unique minimum"
    s.record("unique_minimum", witness)

    p = p_group_prime(G.order)
    if p is None:
        s.skip("class_size_congruence", "not a p-group")
        s.skip("mob_sums", "not a p-group")
        s.skip("f_group_counts", "not a p-group")
    else:
        rep = check_class_size_congruence(G, p)
        bad = [line.label for line in rep.lines if not line.passed]
        s.record("class_size_congruence", "; ".join(bad) or None, f"{len(rep.lines)} classes")
        if G.is_abelian:
            s.skip("mob_sums", "abelian group")
        else:
            rep = check_mob_sums(G, p)
            bad = [line.label for line in rep.lines if not line.passed]
            s.record("mob_sums", "; ".join(bad) or None, f"{len(rep.lines)} sums")
        if not G.is_abelian and is_f_group(G):
            rep = check_f_group_counts(G, p)
            bad = [line.label for line in rep.lines if not line.passed]
            s.record("f_group_counts", "; ".join(bad) or None, f"{len(rep.lines)} counts")
        else:
            s.skip("f_group_counts", "not a nonabelian F-group")

    if is_f_group(G):
        witness = None
        for i, m in enumerate(table.mu):
            if i != mn and m != -1:
                witness = f"mu({poset.node_label(i)}) = {m}"
                break
        s.record("f_group_mu_is_minus_one", witness)
    else:
        s.skip("f_group_mu_is_minus_one", "not an F-group")
    return s.results


def graphs_suite(G: Group, rng: random.Random, samples: int) -> list[PropertyResult]:
    s = _Suite("graphs")
    if G.is_abelian:
        s.skip("all", "abelian group: graphs have empty vertex sets")
        return s.results
    zsize = len(G.center)
    com = commuting_graph(G)

    witness = None
    for v, deg in zip(com.vertex_ids, com.degrees()):
        if deg != G.cent_masks[v].bit_count() - zsize - 1:
            witness = f"vertex {G.label(v)}"
            break
    s.record("commuting_degree_formula", witness, f"{com.vertex_count} vertices")

    pz = p_group_prime(zsize)
    if pz is not None:
        witness = None
        for v, deg in zip(com.vertex_ids, com.degrees()):
            if deg % pz != (-1) % pz:
                witness = f"vertex {G.label(v)}: degree {deg}"
                break
        s.record("commuting_degrees_mod_p", witness, f"p={pz}")
    else:
        s.skip("commuting_degrees_mod_p", "Z(G) is not a nontrivial p-group")

    tg = transversal_graph(G)
    witness = None
    for v, deg in zip(tg.vertex_ids, tg.degrees()):
        if deg != G.cent_masks[v].bit_count() // zsize - 2:
            witness = f"vertex {G.label(v)}"
            break
    s.record("transversal_degree_formula", witness, f"{tg.vertex_count} vertices")

    # The degree formula holds for any transversal, not just the default one.
    z_members = G.center.members
    alt = []
    seen = 0
    for g in G.elements():
        if (seen >> g) & 1:
            continue
        coset = [G.mul(g, zi) for zi in z_members]
        alt.append(rng.choice(sorted(coset)))
        for x in coset:
            seen |= 1 << x
    tg_alt = transversal_graph(G, alt)
    witness = None
    for v, deg in zip(tg_alt.vertex_ids, tg_alt.degrees()):
        if deg != G.cent_masks[v].bit_count() // zsize - 2:
            witness = f"vertex {G.label(v)}"
            break
    s.record("transversal_degree_formula_random_t", witness)

    pq = p_group_prime(G.order // zsize)
    if pq is not None:
        witness = None
        for v, deg in zip(tg.vertex_ids, tg.degrees()):
            if deg % pq != (-2) % pq:
                witness = f"vertex {G.label(v)}: degree {deg}"
                break
        s.record("transversal_degrees_mod_p", witness, f"p={pq}")
    else:
        s.skip("transversal_degrees_mod_p", "G/Z(G) is not a nontrivial p-group")

    cg = centralizer_graph(G)
    classes = [c for c in z_star_partition(G) if c.cent.mask != G.full_mask]
    witness = None if cg.vertex_count == len(classes) else "vertex count != proper centralizers"
    s.record("centralizer_graph_vertices", witness)

    # Adjacency agrees with the dual formulation on element centers.
    witness = None
    for i, a in enumerate(classes):
        for j in range(i + 1, len(classes)):
            b = classes[j]
            edge = (i, j) in cg.edges
            dual_rule = a.ecenter.mask & ~b.cent.mask == 0
            if edge != dual_rule:
                witness = f"pair {G.label(a.representative)},{G.label(b.representative)}"
                break
        if witness:
            break
    s.record("centralizer_graph_duality", witness)

    p = p_group_prime(G.order)
    if p is not None and is_f_group(G):
        witness = None
        for lab, deg in zip(cg.labels, cg.degrees()):
            if deg % p:
                witness = f"vertex {lab}: degree {deg}"
                break
        s.record("f_group_centralizer_degrees", witness, f"p={p}")
    else:
        s.skip("f_group_centralizer_degrees", "not an F-group p-group")

    witness = None if quotient_consistency(G) else "commuting-graph quotient differs"
    s.record("quotient_consistency", witness)
    return s.results


_SUITE_FUNCS: dict[str, Callable[[Group, random.Random, int], list[PropertyResult]]] = {
    "algebra": algebra_suite,
    "lattice": lattice_suite,
    "partition": partition_suite,
    "moebius": moebius_suite,
    "graphs": graphs_suite,
}


def run_suite(G: Group, suite: str = "all", *, seed: int = 0, samples: int = 200) -> list[PropertyResult]:
    """Run one named suite (or all of them) against a group."""
    if suite == "all":
        names = list(SUITES)
    elif suite in _SUITE_FUNCS:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r} (expected one of {SUITES + ('all',)})")
    results: list[PropertyResult] = []
    for name in names:
        rng = random.Random(seed)
        results.extend(_SUITE_FUNCS[name](G, rng, samples))
    return results
