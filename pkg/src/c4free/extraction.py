"""Certified clique extractors for graphs with no induced 4-cycle.

Each extractor returns a CliqueCertificate: the clique itself, the
method that produced it, the exact rational lower bound the method
guarantees on this instance, and a witness with enough data to re-check
the run. Bounds are computed in exact rational arithmetic throughout;
floating point never touches a comparison.

The four methods and their guarantees, writing n for the vertex count
and d for the minimum degree:

* regular:     2k-regular on 4k+1 vertices gives a clique of size k+1;
* general:     any C4-free graph gives a clique of size d^2/(2n+d);
* triple:      when d <= 11n/15, a clique larger than d - n/3;
* large-alpha: an independent set of size t >= (n^2-d^2)/(eps*d^2)+1
               gives a clique of size (1-eps)*d^2/n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .graph import (
    ORACLE_LIMIT_DEFAULT,
    Graph,
    GraphInputError,
    InvariantViolation,
    VertexSet,
    _above,
    _bit_indices,
    _mask_of,
    _maximal_extend,
    _to_vertexset,
    common_neighbors,
    find_independent_set_of_size,
    is_clique,
    is_independent_set,
    max_independent_set_exact,
    require_c4free,
)
from .structure import HypothesisViolation, alpha2_decompose, clique_from_certificate

METHOD_REGULAR = "regular"
METHOD_GENERAL = "general"
METHOD_TRIPLE = "triple"
METHOD_LARGE_ALPHA = "large-alpha"
METHOD_STRUCTURE = "structure"

# Methods whose guarantee is a strict inequality on the clique size.
STRICT_METHODS = frozenset({METHOD_TRIPLE})


@dataclass(frozen=True)
class DominatingPair:
    """Non-adjacent u, w whose closed neighborhoods cover every vertex."""

    u: int
    w: int


@dataclass(frozen=True)
class CliqueCertificate:
    clique: VertexSet
    method: str
    guaranteed_bound: Fraction
    precondition_met: bool
    verified: bool
    witness: dict

    @property
    def size(self) -> int:
        return len(self.clique)

    def to_json_dict(self, g: Graph) -> dict:
        return {
            "format_version": 1,
            "kind": "clique-certificate",
            "graph": {"n": g.n, "edge_count": g.edge_count},
            "method": self.method,
            "clique": list(self.clique),
            "size": self.size,
            "guaranteed_bound": str(self.guaranteed_bound),
            "precondition_met": self.precondition_met,
            "verified": self.verified,
            "witness": self.witness,
        }


def check_certificate(g: Graph, cert: CliqueCertificate) -> bool:
    """Re-check a certificate against the graph without trusting its producer."""
    if any(not (0 <= v < g.n) for v in cert.clique):
        return False
    if not is_clique(g, cert.clique):
        return False
    if cert.precondition_met:
        size = Fraction(cert.size)
        if cert.method in STRICT_METHODS:
            return size > cert.guaranteed_bound
        return size >= cert.guaranteed_bound
    return True


def find_dominating_nonadjacent_pair(g: Graph) -> Optional[DominatingPair]:
    """First non-adjacent pair (lexicographic) whose closed neighborhoods cover V."""
    full = g.full_mask
    for u in range(g.n):
        candidates = ~g.adj[u] & _above(u) & full
        for v in _bit_indices(candidates):
            covered = g.adj[u] | g.adj[v] | (1 << u) | (1 << v)
            if covered == full:
                return DominatingPair(u, v)
    return None


def best_pair_intersection(
    g: Graph, members: Sequence[int]
) -> tuple[int, int, VertexSet]:
    """Pair of the independent set with the largest common neighborhood.

    Pairs are scanned in lexicographic order and ties keep the first
    pair. Because g has no induced 4-cycle, the winning intersection
    spans a clique; that is asserted.
    """
    s = sorted(set(members))
    if len(s) < 2:
        raise GraphInputError(f"need at least 2 vertices, got {len(s)}")
    if not is_independent_set(g, s):
        raise GraphInputError(f"set {tuple(s)} is not independent")
    best: Optional[tuple[int, int, int]] = None
    best_size = -1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            mask = g.adj[s[i]] & g.adj[s[j]]
            size = mask.bit_count()
            if size > best_size:
                best_size = size
                best = (s[i], s[j], mask)
    assert best is not None
    xi, xj, mask = best
    clique = _to_vertexset(mask)
    if not is_clique(g, clique):
        raise GraphInputError(
            f"common neighborhood of {xi} and {xj} is not a clique; "
            "the graph has an induced 4-cycle"
        )
    return (xi, xj, clique)


# ---------------------------------------------------------------------------
# Regular extractor
# ---------------------------------------------------------------------------


def extract_regular(g: Graph) -> CliqueCertificate:
    """Clique of size k+1 in a 2k-regular C4-free graph on 4k+1 vertices.

    A dominating non-adjacent pair (u, w) is searched first. When one
    exists, the degree count d(u)+d(w)-|X| = n-2 forces the common
    neighborhood X to be a single vertex x, the sets U1 = N(x) inside
    N(u) and W1 = N(x) inside N(w) span cliques, and the two cliques
    U1+{u,x} and W1+{w,x} meet only in x while covering 2k+1 vertices,
    so the larger has at least k+1. When no pair exists the graph must
    have independence number at most 2 and the structure decomposition
    yields a clique of size at least (8k+2)/5 >= k+1.
    """
    n = g.n
    if n < 5 or n % 4 != 1:
        raise GraphInputError(f"vertex count must be 4k+1 with k >= 1, got n={n}")
    k = (n - 1) // 4
    if any(deg != 2 * k for deg in g.degrees()):
        raise GraphInputError(f"graph is not {2 * k}-regular")
    require_c4free(g)
    bound = Fraction(k + 1)

    pair = find_dominating_nonadjacent_pair(g)
    if pair is None:
        try:
            struct_cert = alpha2_decompose(g)
        except HypothesisViolation as exc:
            raise InvariantViolation(
                "guarantee violated: no dominating non-adjacent pair although "
                f"the graph has an independent triple ({exc})"
            ) from exc
        clique = clique_from_certificate(g, struct_cert)
        if len(clique) < k + 1:
            raise InvariantViolation(
                f"structure route produced {len(clique)} < k+1 = {k + 1}"
            )
        witness = {
            "route": "structure",
            "structure_kind": struct_cert.kind,
            "k": k,
        }
        return CliqueCertificate(
            clique=clique,
            method=METHOD_STRUCTURE,
            guaranteed_bound=bound,
            precondition_met=True,
            verified=True,
            witness=witness,
        )

    u, w = pair.u, pair.w
    x_set = common_neighbors(g, u, w)
    count = g.degree(u) + g.degree(w) - len(x_set)
    if count != n - 2 or len(x_set) != 1:
        raise InvariantViolation(
            f"guarantee violated: d(u)+d(w)-|X| = {count}, expected {n - 2}; "
            f"|X| = {len(x_set)}, expected 1"
        )
    x = x_set[0]
    u_side = g.adj[u] & ~(1 << x)
    w_side = g.adj[w] & ~(1 << x)
    u1 = g.adj[x] & u_side
    w1 = g.adj[x] & w_side
    u2 = u_side & ~u1
    w2 = w_side & ~w1
    for name, mask in (("U1", u1), ("W1", w1)):
        if not is_clique(g, _to_vertexset(mask)):
            raise InvariantViolation(f"guarantee violated: {name} does not span a clique")

    clique_u = u1 | (1 << u) | (1 << x)
    clique_w = w1 | (1 << w) | (1 << x)
    covered = g.full_mask & ~(u2 | w2)
    if covered.bit_count() != 2 * k + 1:
        raise InvariantViolation(
            f"guarantee violated: |V - (U2+W2)| = {covered.bit_count()}, "
            f"expected {2 * k + 1}"
        )
    if clique_u | clique_w != covered or clique_u & clique_w != 1 << x:
        raise InvariantViolation(
            "guarantee violated: cover cliques do not partition around x"
        )
    best = clique_u if clique_u.bit_count() >= clique_w.bit_count() else clique_w
    clique = _to_vertexset(best)
    if not is_clique(g, clique) or len(clique) < k + 1:
        raise InvariantViolation(
            f"guarantee violated: extracted set of size {len(clique)} "
            f"is not a clique of size >= {k + 1}"
        )
    witness = {
        "route": "dominating-pair",
        "u": u,
        "w": w,
        "x": x,
        "U1": list(_to_vertexset(u1)),
        "W1": list(_to_vertexset(w1)),
        "U2": list(_to_vertexset(u2)),
        "W2": list(_to_vertexset(w2)),
        "cover_size": covered.bit_count(),
        "k": k,
    }
    return CliqueCertificate(
        clique=clique,
        method=METHOD_REGULAR,
        guaranteed_bound=bound,
        precondition_met=True,
        verified=True,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# General minimum-degree extractor
# ---------------------------------------------------------------------------


def _single_s_neighbor_sets(g: Graph, s_mask: int) -> dict[int, int]:
    # For each x in S, the mask of vertices outside S whose unique
    # S-neighbor is x.
    buckets = {x: 0 for x in _bit_indices(s_mask)}
    for y in range(g.n):
        if s_mask & (1 << y):
            continue
        hits = g.adj[y] & s_mask
        if hits.bit_count() == 1:
            buckets[hits.bit_length() - 1] |= 1 << y
    return buckets


def extract_general(
    g: Graph,
    *,
    exact_alpha: bool = False,
    oracle_limit: int = ORACLE_LIMIT_DEFAULT,
) -> CliqueCertificate:
    """Clique of size at least d^2/(2n+d) in any C4-free graph.

    Grows a maximal independent set S by ascending-index greedy scan.
    If S reaches t = ceil(2n/d) vertices, the counting bound
    t*d <= sum |A_i| < n + sum |A_i ∩ A_j| makes the best pairwise
    common neighborhood larger than (t*d-n)/C(t,2) >= d^2/(2n+d).
    Otherwise the C(s,2) pairwise intersections plus the s sets
    {x_i} + B_i (B_i = vertices whose unique S-neighbor is x_i) cover
    the graph; when every B_i + {x_i} spans a clique the largest
    covering set has at least n/C(s+1,2) >= d^2/(2n+d) vertices. If
    some B_i contains a non-adjacent pair y, z, then S - {x_i} + {y, z}
    is a larger independent set; S is replaced by its maximal extension
    and the scan repeats, so the loop ends after at most n rounds.

    With exact_alpha=True the scan starts from a maximum independent
    set instead (exponential-time oracle, so only for graphs within
    oracle_limit); a maximum set can never own a non-clique bucket, so
    the augmentation step becomes an invariant check.
    """
    require_c4free(g)
    n = g.n
    if n == 0:
        raise GraphInputError("cannot extract a clique from the empty graph")
    delta = g.min_degree()
    if delta == 0:
        return CliqueCertificate(
            clique=(0,),
            method=METHOD_GENERAL,
            guaranteed_bound=Fraction(0),
            precondition_met=True,
            verified=True,
            witness={"route": "isolated-vertex", "min_degree": 0},
        )

    bound = Fraction(delta * delta, 2 * n + delta)
    t = -((-2 * n) // delta)  # ceil(2n/delta)
    if exact_alpha:
        s_mask = _mask_of(max_independent_set_exact(g, limit=oracle_limit))
    else:
        s_mask = _maximal_extend(g, 0)
    augmentations = 0
    alpha_mode = "exact" if exact_alpha else "greedy"

    while True:
        s_list = list(_bit_indices(s_mask))
        if len(s_list) >= t:
            head = s_list[:t]
            xi, xj, clique = best_pair_intersection(g, head)
            witness = {
                "route": "pair-scan",
                "independent_set": head,
                "pair": [xi, xj],
                "t": t,
                "min_degree": delta,
                "augmentations": augmentations,
                "alpha_mode": alpha_mode,
            }
            break

        buckets = _single_s_neighbor_sets(g, s_mask)
        bad = _first_nonadjacent_in_buckets(g, buckets)
        if bad is not None:
            if exact_alpha:
                raise InvariantViolation(
                    f"maximum independent set has a non-clique bucket at {bad}"
                )
            x, y, z = bad
            seed = (s_mask & ~(1 << x)) | (1 << y) | (1 << z)
            new_mask = _maximal_extend(g, seed)
            assert new_mask.bit_count() > s_mask.bit_count()
            s_mask = new_mask
            augmentations += 1
            continue

        cover_sets: list[int] = []
        for i in range(len(s_list)):
            for j in range(i + 1, len(s_list)):
                cover_sets.append(g.adj[s_list[i]] & g.adj[s_list[j]])
        for x in s_list:
            cover_sets.append(buckets[x] | (1 << x))
        union = 0
        best_mask = 0
        for mask in cover_sets:
            union |= mask
            if mask.bit_count() > best_mask.bit_count():
                best_mask = mask
        if union != g.full_mask:
            raise InvariantViolation("covering sets missed a vertex")
        clique = _to_vertexset(best_mask)
        if not is_clique(g, clique):
            raise InvariantViolation("covering route selected a non-clique")
        witness = {
            "route": "covering",
            "independent_set": s_list,
            "cover_sets": len(cover_sets),
            "t": t,
            "min_degree": delta,
            "augmentations": augmentations,
            "alpha_mode": alpha_mode,
        }
        break

    if Fraction(len(clique)) < bound:
        raise InvariantViolation(
            f"extracted clique of size {len(clique)} misses the bound {bound}"
        )
    return CliqueCertificate(
        clique=clique,
        method=METHOD_GENERAL,
        guaranteed_bound=bound,
        precondition_met=True,
        verified=True,
        witness=witness,
    )


def _first_nonadjacent_in_buckets(
    g: Graph, buckets: dict[int, int]
) -> Optional[tuple[int, int, int]]:
    for x in sorted(buckets):
        members = list(_bit_indices(buckets[x]))
        for i, y in enumerate(members):
            missing = buckets[x] & ~g.adj[y] & _above(y)
            if missing:
                z = (missing & -missing).bit_length() - 1
                return (x, y, z)
    return None


# ---------------------------------------------------------------------------
# Independent-triple extractor
# ---------------------------------------------------------------------------


def extract_triple(g: Graph) -> CliqueCertificate:
    """Clique strictly larger than d - n/3 via an independent triple.

    With an independent triple, 3d <= sum |A_i| < n + sum pairwise
    intersections forces one common neighborhood above d - n/3. Without
    one the independence number is at most 2 and the structure route
    yields a clique of size at least ceil(2n/5), which dominates
    d - n/3 whenever d <= 11n/15 (the precondition this method reports).
    """
    require_c4free(g)
    n = g.n
    if n == 0:
        raise GraphInputError("cannot extract a clique from the empty graph")
    delta = g.min_degree()
    bound = Fraction(delta) - Fraction(n, 3)
    precondition_met = Fraction(delta) <= Fraction(11 * n, 15)

    triple = find_independent_set_of_size(g, 3)
    if triple is not None:
        xi, xj, clique = best_pair_intersection(g, triple)
        if not Fraction(len(clique)) > bound:
            raise InvariantViolation(
                f"triple route clique of size {len(clique)} is not above {bound}"
            )
        witness = {
            "route": "triple",
            "independent_set": list(triple),
            "pair": [xi, xj],
            "min_degree": delta,
        }
        return CliqueCertificate(
            clique=clique,
            method=METHOD_TRIPLE,
            guaranteed_bound=bound,
            precondition_met=precondition_met,
            verified=True,
            witness=witness,
        )

    try:
        struct_cert = alpha2_decompose(g)
    except HypothesisViolation as exc:  # pragma: no cover - triple search is exact
        raise InvariantViolation(f"no independent triple yet no structure: {exc}")
    clique = clique_from_certificate(g, struct_cert)
    two_fifths = -((-2 * n) // 5)  # ceil(2n/5)
    if len(clique) < two_fifths:
        raise InvariantViolation(
            f"structure route clique of size {len(clique)} misses ceil(2n/5) = {two_fifths}"
        )
    if precondition_met and Fraction(len(clique)) < bound:
        raise InvariantViolation(
            f"structure route clique of size {len(clique)} misses the bound {bound}"
        )
    witness = {
        "route": "structure",
        "structure_kind": struct_cert.kind,
        "two_fifths": two_fifths,
        "min_degree": delta,
    }
    return CliqueCertificate(
        clique=clique,
        method=METHOD_STRUCTURE,
        guaranteed_bound=bound,
        precondition_met=precondition_met,
        verified=True,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# Large-independent-set extractor
# ---------------------------------------------------------------------------


def extract_large_alpha(
    g: Graph, members: Sequence[int], eps: Fraction
) -> CliqueCertificate:
    """Clique of size at least (1-eps)*d^2/n from a large independent set.

    The hypothesis t >= (n^2-d^2)/(eps*d^2)+1 is evaluated exactly and
    reported as precondition_met rather than enforced; the pair scan
    runs regardless and the conditional guarantee is asserted only when
    the hypothesis holds. The statement mixes the symbols d and the
    minimum degree; both are reported in the witness with d read as the
    minimum degree.
    """
    eps = Fraction(eps)
    if not (0 < eps < 1):
        raise GraphInputError(f"epsilon must be strictly between 0 and 1, got {eps}")
    require_c4free(g)
    n = g.n
    if n == 0:
        raise GraphInputError("cannot extract a clique from the empty graph")
    s = sorted(set(members))
    for v in s:
        if not (0 <= v < n):
            raise GraphInputError(f"vertex {v} out of range for n={n}")
    if not is_independent_set(g, s):
        raise GraphInputError(f"set {tuple(s)} is not independent")

    delta = g.min_degree()
    t = len(s)
    bound = (1 - eps) * Fraction(delta * delta, n)
    if delta > 0:
        threshold = Fraction(n * n - delta * delta) / (eps * delta * delta) + 1
        precondition_met = Fraction(t) >= threshold
        threshold_str = str(threshold)
    else:
        precondition_met = False
        threshold_str = "undefined (min degree 0)"

    witness_common = {
        "independent_set": list(s),
        "t": t,
        "epsilon": str(eps),
        "min_degree_delta": delta,
        "d": delta,
        "d_interpretation": "d read as the minimum degree",
        "threshold": threshold_str,
    }

    if t < 2:
        if precondition_met:  # pragma: no cover - impossible when delta < n
            raise InvariantViolation("hypothesis met with fewer than 2 set members")
        clique: VertexSet = (0,)
        witness = {**witness_common, "route": "single-vertex", "pair": None}
        pm = False
    else:
        xi, xj, clique = best_pair_intersection(g, s)
        if len(clique) == 0:
            if precondition_met:
                raise InvariantViolation(
                    "guarantee violated: hypothesis met but every pairwise "
                    "common neighborhood is empty"
                )
            clique = (0,)
            witness = {**witness_common, "route": "single-vertex", "pair": [xi, xj]}
            pm = False
        else:
            witness = {**witness_common, "route": "pair-scan", "pair": [xi, xj]}
            pm = precondition_met
            if pm and Fraction(len(clique)) < bound:
                raise InvariantViolation(
                    f"guarantee violated: clique of size {len(clique)} "
                    f"is below {bound}"
                )

    witness["bound_satisfied"] = bool(Fraction(len(clique)) >= bound)
    return CliqueCertificate(
        clique=clique,
        method=METHOD_LARGE_ALPHA,
        guaranteed_bound=bound,
        precondition_met=pm,
        verified=True,
        witness=witness,
    )


def extract_dirac(
    g: Graph, members: Sequence[int], eps: Fraction
) -> CliqueCertificate:
    """Preset of the large-independent-set extractor for min degree >= n/2.

    Under that degree condition the hypothesis simplifies: an
    independent set of size t >= 3/eps + 1 already guarantees a clique
    of size (1-eps)*n/4, because (n^2-d^2)/(eps*d^2) <= 3/eps when
    d >= n/2 and (1-eps)*d^2/n >= (1-eps)*n/4. The certificate carries
    the simplified threshold and bound; precondition_met reflects both
    the degree condition and the simplified set-size condition.
    """
    eps = Fraction(eps)
    inner = extract_large_alpha(g, members, eps)
    n = g.n
    delta = g.min_degree()
    degree_ok = Fraction(delta) >= Fraction(n, 2)
    threshold = 3 / eps + 1
    t = inner.witness["t"]
    pm = degree_ok and Fraction(t) >= threshold
    bound = (1 - eps) * Fraction(n, 4)
    if pm and Fraction(inner.size) < bound:  # pragma: no cover - implied
        raise InvariantViolation(
            f"guarantee violated: clique of size {inner.size} is below {bound}"
        )
    witness = {
        **inner.witness,
        "preset": "dirac",
        "dirac_threshold": str(threshold),
        "degree_at_least_half": degree_ok,
        "general_bound": str(inner.guaranteed_bound),
        "general_precondition_met": inner.precondition_met,
    }
    return CliqueCertificate(
        clique=inner.clique,
        method=METHOD_LARGE_ALPHA,
        guaranteed_bound=bound,
        precondition_met=pm,
        verified=True,
        witness=witness,
    )


def degree_square_census(g: Graph, members: Iterable[int]) -> dict:
    """Exact tallies for the incidence between an independent set and V.

    Writing deg(v) for the number of set members adjacent to v, returns
    sum deg(v)^2, sum |A_i|, and the ordered pairwise intersection total
    sum_{i != j} |A_i ∩ A_j|; the first always equals the sum of the
    other two. Also returns the Cauchy-Schwarz floor t^2*d^2/n, which
    never exceeds the square sum when the set is independent.
    """
    s = sorted(set(members))
    if not is_independent_set(g, s):
        raise GraphInputError(f"set {tuple(s)} is not independent")
    s_mask = _mask_of(s)
    sum_deg_sq = 0
    for v in range(g.n):
        deg = (g.adj[v] & s_mask).bit_count()
        sum_deg_sq += deg * deg
    sum_sizes = sum(g.adj[x].bit_count() for x in s)
    sum_pairwise = 0
    for i in range(len(s)):
        for j in range(len(s)):
            if i != j:
                sum_pairwise += (g.adj[s[i]] & g.adj[s[j]]).bit_count()
    delta = g.min_degree()
    t = len(s)
    cs_floor = Fraction(t * t * delta * delta, g.n) if g.n else Fraction(0)
    return {
        "sum_deg_sq": sum_deg_sq,
        "sum_sizes": sum_sizes,
        "sum_pairwise": sum_pairwise,
        "cs_floor": cs_floor,
    }
