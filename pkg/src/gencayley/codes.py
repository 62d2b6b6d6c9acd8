"""Perfect codes and total perfect codes in generalized Cayley graphs.

Subset-level deciders evaluate every equivalent formulation (graph
neighborhoods, translate partitions, algebraic set conditions) and assert
agreement. Subgroup-level deciders search for a witness connection set by
backtracking over coset representatives; each witness is re-validated
against the graph definition before it is returned, and the package's
verification suites additionally compare every decision against exhaustive
brute-force search.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from ._bits import bits, elems, fmt_set, mask_of, perm_mask, product_mask
from .automorphisms import (
    AlphaContext,
    Automorphism,
    alpha_context,
    automorphism_from_perm,
    conjugate_automorphism,
    product_automorphism,
)
from .errors import GenCayleyError, ThresholdError
from .graphs import (
    GenCayleyGraph,
    GenCayleySubset,
    build_graph,
    validate_subset,
)
from .groups import (
    CosetDecomposition,
    FiniteGroup,
    SubgroupHandle,
    _finish_group,
    cosets,
    normalizer,
    subgroup,
)

BRUTE_FORCE_LIMIT = 20

PC_MODES = ("graph", "partition", "algebraic")

REFUTATION_ALPHA = "alpha-not-preserving"
REFUTATION_SELF_PAIRED = "self-paired-coset-without-big-omega-element"
REFUTATION_OMEGA_COSET = "coset-inside-omega"
REFUTATION_EXHAUSTED = "search-exhausted"


def alpha_preserves(alpha: Automorphism, sub: SubgroupHandle) -> bool:
    """Does alpha map the subgroup onto itself?"""
    return perm_mask(alpha.perm, sub.mask) == sub.mask


def image_subgroup(alpha: Automorphism, sub: SubgroupHandle) -> SubgroupHandle:
    return subgroup(sub.parent, (alpha.perm[h] for h in sub.elements))


# ---------------------------------------------------------------------------
# subset-level deciders


def _translate_union(graph: GenCayleyGraph, xmask: int):
    group = graph.group
    ax = perm_mask(graph.context.alpha.perm, xmask)
    union = 0
    for s in graph.subset.elements:
        union |= product_mask(group.table, ax, 1 << s)
    return union


def _product_conditions(graph: GenCayleyGraph, xmask: int) -> tuple[bool, bool]:
    """(alpha(X^-1)X disjoint from S, alpha(X^-1)alpha(X) meets SS^-1 in at
    most the identity)."""
    group = graph.group
    alpha = graph.context.alpha.perm
    xinv = perm_mask(group.inv, xmask)
    p2 = product_mask(group.table, perm_mask(alpha, xinv), xmask)
    p1 = perm_mask(alpha, product_mask(group.table, xinv, xmask))
    sm = graph.subset.mask
    ss_inv = product_mask(group.table, sm, perm_mask(group.inv, sm))
    return p2 & sm == 0, p1 & ss_inv & ~1 == 0


def _pc_routes(graph: GenCayleyGraph, xmask: int) -> tuple[bool, bool, bool]:
    n = graph.group.order
    r = graph.degree
    sizex = xmask.bit_count()
    full = (1 << n) - 1

    independent = True
    outside_one = True
    for v in range(n):
        c = (graph.nbr_masks[v] & xmask).bit_count()
        if xmask >> v & 1:
            if c != 0:
                independent = False
        elif c != 1:
            outside_one = False
    by_graph = independent and outside_one

    union = _translate_union(graph, xmask)
    # X and the r translates partition G iff their sizes sum to |G| and
    # their union covers G (each translate has |X| elements)
    by_partition = sizex * (r + 1) == n and (xmask | union) == full

    no_edge, at_most_one = _product_conditions(graph, xmask)
    by_algebra = sizex * (r + 1) == n and no_edge and at_most_one
    return by_graph, by_partition, by_algebra


def is_perfect_code(graph: GenCayleyGraph, X, mode: str = "graph") -> bool:
    """Is X an independent set with every outside vertex adjacent to exactly
    one member?

    Modes: ``graph`` (neighbor counting), ``partition`` (X together with the
    translates alpha(X)s partitions the vertices), ``algebraic`` (counting
    plus the two product-set conditions). All three are computed and
    asserted equal.
    """
    if mode not in PC_MODES:
        raise ValueError(f"mode must be one of {PC_MODES}, got {mode!r}")
    xmask = mask_of(int(x) for x in X)
    if xmask >> graph.group.order:
        raise ValueError("X contains elements outside the group")
    routes = _pc_routes(graph, xmask)
    assert routes[0] == routes[1] == routes[2], f"route disagreement: {routes}"
    return routes[PC_MODES.index(mode)]


def _tpc_routes(graph: GenCayleyGraph, xmask: int) -> tuple[bool, bool, bool]:
    n = graph.group.order
    r = graph.degree
    sizex = xmask.bit_count()
    full = (1 << n) - 1

    by_graph = all((nm & xmask).bit_count() == 1 for nm in graph.nbr_masks)
    union = _translate_union(graph, xmask)
    by_partition = sizex * r == n and union == full
    _, at_most_one = _product_conditions(graph, xmask)
    by_algebra = sizex * r == n and at_most_one
    return by_graph, by_partition, by_algebra


def is_total_perfect_code(graph: GenCayleyGraph, X, mode: str = "graph") -> bool:
    """Does every vertex, members of X included, have exactly one neighbor
    in X?

    An empty connection set can never admit one (no vertex has neighbors at
    all), so the result is then False in every mode. When the answer is
    True, X induces a perfect matching on itself and has even size; both
    are asserted.
    """
    if mode not in PC_MODES:
        raise ValueError(f"mode must be one of {PC_MODES}, got {mode!r}")
    xmask = mask_of(int(x) for x in X)
    if xmask >> graph.group.order:
        raise ValueError("X contains elements outside the group")
    routes = _tpc_routes(graph, xmask)
    assert routes[0] == routes[1] == routes[2], f"route disagreement: {routes}"
    result = routes[PC_MODES.index(mode)]
    if result:
        assert xmask.bit_count() % 2 == 0, "total perfect code of odd size"
        for v in bits(xmask):
            assert (graph.nbr_masks[v] & xmask).bit_count() == 1
    return result


def brute_force_codes(graph: GenCayleyGraph, kind: str = "perfect") -> list[tuple[int, ...]]:
    """All codes of the requested kind by scanning every vertex subset.

    This is the graph-level oracle the other deciders are checked against;
    it does nothing smarter than neighbor counting. Refuses groups with
    more than 20 elements.
    """
    n = graph.group.order
    if n > BRUTE_FORCE_LIMIT:
        raise ThresholdError(
            f"brute-force code scan limited to order <= {BRUTE_FORCE_LIMIT}, got {n}"
        )
    kinds = {"perfect": 0, "total": 1}
    if kind not in kinds:
        raise ValueError(f"kind must be 'perfect' or 'total', got {kind!r}")
    masks = kernels.scan_codes(graph.nbr_masks, kinds[kind])
    return [elems(m) for m in masks]


# ---------------------------------------------------------------------------
# coset pairing


@dataclass(eq=False)
class CosetPairEntry:
    coset: int
    kind: str  # "self" | "paired" | "mixed"
    partner: int | None  # coset index; None when mixed


@dataclass(eq=False)
class CosetPairing:
    decomposition: CosetDecomposition
    entries: tuple[CosetPairEntry, ...]
    well_defined: bool


def coset_pairing(sub: SubgroupHandle, ctx: AlphaContext) -> CosetPairing:
    """Classify nontrivial right cosets under the pairing map.

    Requires alpha to preserve the subgroup. Each coset Hg is sent towards
    H*tau(g); when that target does not depend on the representative the
    coset is self-paired or paired and the induced map is an involution
    (asserted). Representative-dependent targets can occur for non-normal
    subgroups; such cosets are reported as ``mixed`` and ``well_defined``
    is False.
    """
    group = sub.parent
    if ctx.group is not group:
        raise GenCayleyError("context group does not match the subgroup's parent")
    if not alpha_preserves(ctx.alpha, sub):
        raise GenCayleyError("alpha does not preserve the subgroup")
    dec = cosets(group, sub, "right")
    entries = []
    well_defined = True
    for ci in range(1, dec.index):
        targets = {dec.rep_of[ctx.tau(x)] for x in dec.cosets[ci]}
        if len(targets) > 1:
            entries.append(CosetPairEntry(ci, "mixed", None))
            well_defined = False
        else:
            target = next(iter(targets))
            kind = "self" if target == ci else "paired"
            entries.append(CosetPairEntry(ci, kind, target))
    if well_defined:
        by_index = {e.coset: e for e in entries}
        for e in entries:
            assert e.partner is not None
            back = by_index[e.partner]
            assert back.partner == e.coset, "coset pairing is not an involution"
    return CosetPairing(dec, tuple(entries), well_defined)


# ---------------------------------------------------------------------------
# subgroup-level deciders


@dataclass(eq=False)
class CodeWitness:
    """Decision result for one subgroup: a witness connection set or a
    refutation reason, plus the coset assignment behind a witness."""

    subgroup: SubgroupHandle
    kind: str  # "perfect" | "total"
    subset: GenCayleySubset | None
    refutation: str | None
    # (coset index, partner coset index, chosen representative); partner ==
    # coset for self-paired representatives
    coset_classification: tuple[tuple[int, int, int], ...]
    alpha_preserves_subgroup: bool

    def __post_init__(self):
        assert (self.subset is None) != (self.refutation is None)

    @property
    def success(self) -> bool:
        return self.subset is not None


def _rep_candidates(ctx: AlphaContext, coset: tuple[int, ...]) -> list[int]:
    # tau-fixed elements first: a self-consistent representative is always
    # preferable and matches the deterministic construction rule
    first = [x for x in coset if ctx.big_omega_mask >> x & 1]
    second = [x for x in coset if ctx.mho_mask >> x & 1]
    return first + second


def _search_transversal(
    ctx: AlphaContext, dec: CosetDecomposition, required: list[int]
) -> dict[int, int] | None:
    """One representative per required coset, avoiding the loop set, with
    the whole choice closed under tau. Deterministic depth-first search:
    lowest unassigned coset first, candidates in `_rep_candidates` order."""
    coset_of = dec.rep_of
    required_set = set(required)
    cands = {ci: _rep_candidates(ctx, dec.cosets[ci]) for ci in required}
    reps: dict[int, int] = {}

    def extend() -> bool:
        target = next((ci for ci in required if ci not in reps), None)
        if target is None:
            return True
        for x in cands[target]:
            y = ctx.tau(x)
            cy = coset_of[y]
            if cy == target:
                if y != x:
                    continue  # tau-partner would collide inside the coset
                reps[target] = x
                if extend():
                    return True
                del reps[target]
            else:
                if cy not in required_set or cy in reps:
                    continue
                reps[target] = x
                reps[cy] = y
                if extend():
                    return True
                del reps[target]
                del reps[cy]
        return False

    return dict(reps) if extend() else None


def _refutation_reason(ctx: AlphaContext, dec: CosetDecomposition, required) -> str:
    for ci in required:
        if all(ctx.omega_mask >> x & 1 for x in dec.cosets[ci]):
            return REFUTATION_OMEGA_COSET
    for ci in required:
        non_loop = [x for x in dec.cosets[ci] if not ctx.omega_mask >> x & 1]
        if all(ctx.tau(x) != x and dec.rep_of[ctx.tau(x)] == ci for x in non_loop):
            return REFUTATION_SELF_PAIRED
    return REFUTATION_EXHAUSTED


def _classification(ctx: AlphaContext, dec: CosetDecomposition, reps: dict[int, int]):
    out = []
    for ci in sorted(reps):
        rep = reps[ci]
        out.append((ci, dec.rep_of[ctx.tau(rep)], rep))
    return tuple(out)


def decide_subgroup_pc(sub: SubgroupHandle, ctx: AlphaContext) -> CodeWitness:
    """Is the subgroup a perfect code of some graph induced by this
    involution? Returns a witness connection set or a refutation.

    A witness is a connection set S with {e} union S a right transversal of
    the subgroup: one representative per nontrivial coset, outside the loop
    set, closed under tau. Representatives of self-paired cosets must be
    tau-fixed; a representative sent elsewhere forces its partner. The
    search is deterministic (lowest coset, tau-fixed candidates first, then
    ascending element index) and every witness is re-validated against the
    graph definition.
    """
    group = sub.parent
    if ctx.group is not group:
        raise GenCayleyError("context group does not match the subgroup's parent")
    preserved = alpha_preserves(ctx.alpha, sub)
    if not preserved:
        return CodeWitness(sub, "perfect", None, REFUTATION_ALPHA, (), False)
    dec = cosets(group, sub, "right")
    required = list(range(1, dec.index))
    reps = _search_transversal(ctx, dec, required)
    if reps is None:
        return CodeWitness(
            sub, "perfect", None, _refutation_reason(ctx, dec, required), (), True
        )
    subset = validate_subset(ctx, reps.values())
    witness = CodeWitness(sub, "perfect", subset, None, _classification(ctx, dec, reps), True)
    if __debug__:
        _assert_pc_witness(sub, subset, dec)
    return witness


def _assert_pc_witness(sub: SubgroupHandle, subset: GenCayleySubset, dec: CosetDecomposition):
    seen = {0}
    for s in subset.elements:
        ci = dec.rep_of[s]
        assert ci not in seen, "two representatives in one coset"
        seen.add(ci)
    assert len(seen) == dec.index, "not a transversal"
    assert is_perfect_code(build_graph(subset), sub.elements)


def decide_subgroup_tpc(sub: SubgroupHandle, ctx: AlphaContext) -> CodeWitness:
    """Is the subgroup a total perfect code of some graph induced by this
    involution?

    A witness is a connection set that is a right transversal of the
    alpha-image of the subgroup (every coset, including the image itself,
    contributes one representative). The subgroup need not be preserved by
    alpha; whether it is gets recorded on the witness.
    """
    group = sub.parent
    if ctx.group is not group:
        raise GenCayleyError("context group does not match the subgroup's parent")
    preserved = alpha_preserves(ctx.alpha, sub)
    image = image_subgroup(ctx.alpha, sub)
    dec = cosets(group, image, "right")
    required = list(range(dec.index))
    reps = _search_transversal(ctx, dec, required)
    if reps is None:
        return CodeWitness(
            sub, "total", None, _refutation_reason(ctx, dec, required), (), preserved
        )
    subset = validate_subset(ctx, reps.values())
    witness = CodeWitness(sub, "total", subset, None, _classification(ctx, dec, reps), preserved)
    if __debug__:
        _assert_tpc_witness(sub, subset, dec)
    return witness


def _assert_tpc_witness(sub: SubgroupHandle, subset: GenCayleySubset, dec: CosetDecomposition):
    group = sub.parent
    assert sorted(dec.rep_of[s] for s in subset.elements) == list(range(dec.index))
    assert is_total_perfect_code(build_graph(subset), sub.elements)
    # the inverse set is then a left transversal of the alpha-image
    image = dec.subgroup
    left = cosets(group, image, "left")
    assert sorted(left.rep_of[group.inv[s]] for s in subset.elements) == list(range(left.index))


def is_gc_transversal(ctx: AlphaContext, sub: SubgroupHandle, T, side: str = "right") -> bool:
    """Is T a transversal of the subgroup containing the identity whose
    other members form a valid connection set?"""
    tset = sorted(set(int(x) for x in T))
    if 0 not in tset:
        return False
    from .graphs import subset_violation

    if subset_violation(ctx, [x for x in tset if x != 0]) is not None:
        return False
    dec = cosets(sub.parent, sub, side)
    return sorted(dec.rep_of[x] for x in tset) == list(range(dec.index))


# ---------------------------------------------------------------------------
# abelian characterization


def abelian_pc_criterion(sub: SubgroupHandle, ctx: AlphaContext) -> bool:
    """Perfect-code criterion for abelian groups, evaluated directly.

    True iff alpha preserves the subgroup and every g outside it with
    alpha(g)*g inside it has some h in the subgroup with h*g tau-fixed
    outside the loop set. Must agree with :func:`decide_subgroup_pc` on
    abelian inputs; the verification suites assert that.
    """
    group = sub.parent
    if not group.is_abelian:
        raise GenCayleyError("criterion applies to abelian groups only")
    if ctx.group is not group:
        raise GenCayleyError("context group does not match the subgroup's parent")
    if not alpha_preserves(ctx.alpha, sub):
        return False
    table = group.table
    alpha = ctx.alpha.perm
    hmask = sub.mask
    for g in range(group.order):
        if hmask >> g & 1:
            continue
        if hmask >> table[alpha[g]][g] & 1:
            if not any(
                ctx.big_omega_mask >> table[h][g] & 1 for h in sub.elements
            ):
                return False
    return True


def build_witness_abelian(sub: SubgroupHandle, ctx: AlphaContext) -> GenCayleySubset:
    """Construct a witness connection set on an abelian group.

    Self-paired cosets (alpha(g)*g falls inside the subgroup) contribute
    their least tau-fixed non-loop element; the remaining cosets pair up
    under the coset map and contribute a least element together with its
    tau-image. Requires :func:`abelian_pc_criterion` to hold.
    """
    if not abelian_pc_criterion(sub, ctx):
        raise GenCayleyError("abelian perfect-code criterion not satisfied")
    group = sub.parent
    dec = cosets(group, sub, "right")
    chosen: list[int] = []
    done: set[int] = set()
    for ci in range(1, dec.index):
        if ci in done:
            continue
        done.add(ci)
        coset = dec.cosets[ci]
        g = coset[0]
        if sub.mask >> group.table[ctx.alpha.perm[g]][g] & 1:
            chosen.append(min(x for x in coset if ctx.big_omega_mask >> x & 1))
        else:
            y = min(x for x in coset if not ctx.omega_mask >> x & 1)
            t = ctx.tau(y)
            done.add(dec.rep_of[t])
            chosen.extend((y, t))
    subset = validate_subset(ctx, chosen)
    if __debug__:
        _assert_pc_witness(sub, subset, dec)
    return subset


# ---------------------------------------------------------------------------
# transport constructions


def _code_pair_holds(sub: SubgroupHandle, subset: GenCayleySubset, kind: str) -> bool:
    graph = build_graph(subset)
    if kind == "perfect":
        return is_perfect_code(graph, sub.elements)
    return is_total_perfect_code(graph, sub.elements)


def transport_conjugate(
    sub: SubgroupHandle, subset: GenCayleySubset, g: int, kind: str = "perfect"
) -> tuple[SubgroupHandle, GenCayleySubset]:
    """Conjugate a validated code pair by an alpha-fixed element.

    Returns (g^-1 H g, g^-1 S g) for the same involution; the transported
    pair is re-validated.
    """
    ctx = subset.context
    group = sub.parent
    if ctx.alpha.perm[g] != g:
        raise GenCayleyError(f"element {g} is not fixed by alpha")
    conj_sub = subgroup(group, (group.conjugate(h, g) for h in sub.elements))
    conj_set = validate_subset(ctx, (group.conjugate(s, g) for s in subset.elements))
    assert _code_pair_holds(conj_sub, conj_set, kind), "transported pair fails"
    return conj_sub, conj_set


def transport_automorphism(
    sub: SubgroupHandle, subset: GenCayleySubset, beta: Automorphism, kind: str = "perfect"
) -> tuple[SubgroupHandle, GenCayleySubset, AlphaContext]:
    """Push a validated code pair through any automorphism beta.

    Returns (beta(H), beta(S), context of beta.alpha.beta^-1); the
    transported pair is re-validated in the new context.
    """
    ctx = subset.context
    group = sub.parent
    if beta.parent is not group:
        raise GenCayleyError("beta acts on a different group")
    new_ctx = alpha_context(group, conjugate_automorphism(beta, ctx.alpha))
    new_sub = subgroup(group, (beta.perm[h] for h in sub.elements))
    new_set = validate_subset(new_ctx, (beta.perm[s] for s in subset.elements))
    assert _code_pair_holds(new_sub, new_set, kind), "transported pair fails"
    return new_sub, new_set, new_ctx


# ---------------------------------------------------------------------------
# product constructions


def build_product_subset(
    s1: GenCayleySubset, s2: GenCayleySubset, product_ctx: AlphaContext
) -> GenCayleySubset:
    """Pairwise products S1 x S2 as a connection set on the direct product."""
    n2 = s2.context.group.order
    elems_ = [a * n2 + b for a in s1.elements for b in s2.elements]
    out = validate_subset(product_ctx, elems_)
    assert out.size == s1.size * s2.size
    return out


def build_product_subset_augmented(
    s1: GenCayleySubset, s2: GenCayleySubset, product_ctx: AlphaContext
) -> GenCayleySubset:
    """S1 x S2 together with the two axis copies {e} x S2 and S1 x {e}."""
    n2 = s2.context.group.order
    elems_ = [a * n2 + b for a in s1.elements for b in s2.elements]
    elems_ += [b for b in s2.elements]
    elems_ += [a * n2 for a in s1.elements]
    out = validate_subset(product_ctx, elems_)
    assert out.size == s1.size * s2.size + s1.size + s2.size
    return out


@dataclass(eq=False)
class ProductCodesReport:
    """Outcome of checking the two product constructions on a pair of codes."""

    pc_product_holds: bool  # H1 x H2 perfect in the augmented-set graph
    tpc_plain_counting_ok: bool  # |G| == |H1 x H2| * |S1 x S2| under PC inputs
    tpc_plain_holds: bool  # H1 x H2 total perfect in the plain-product graph
    tpc_amended_evaluated: bool
    tpc_amended_holds: bool | None  # same conclusion when the inputs are total codes


def verify_product_codes(
    pc_pair1: tuple[SubgroupHandle, GenCayleySubset],
    pc_pair2: tuple[SubgroupHandle, GenCayleySubset],
    tpc_pair1: tuple[SubgroupHandle, GenCayleySubset] | None = None,
    tpc_pair2: tuple[SubgroupHandle, GenCayleySubset] | None = None,
) -> ProductCodesReport:
    """Check the product constructions on validated code pairs.

    With perfect-code inputs, the augmented product set should again admit
    the product subgroup as a perfect code, while the plain product set
    fails the total-code counting condition. With total-code inputs
    (optional), the plain product set should admit the product subgroup as
    a total perfect code.
    """
    h1, s1 = pc_pair1
    h2, s2 = pc_pair2
    assert _code_pair_holds(h1, s1, "perfect"), "first pair is not a perfect code"
    assert _code_pair_holds(h2, s2, "perfect"), "second pair is not a perfect code"

    prod_group, prod_ctx = _product_context(s1.context, s2.context)
    n2 = h2.parent.order
    prod_sub = subgroup(
        prod_group, (a * n2 + b for a in h1.elements for b in h2.elements)
    )

    augmented = build_product_subset_augmented(s1, s2, prod_ctx)
    pc_holds = is_perfect_code(build_graph(augmented), prod_sub.elements)

    plain = build_product_subset(s1, s2, prod_ctx)
    counting_ok = prod_group.order == prod_sub.order * plain.size
    tpc_plain = is_total_perfect_code(build_graph(plain), prod_sub.elements)

    amended_holds = None
    evaluated = tpc_pair1 is not None and tpc_pair2 is not None
    if evaluated:
        th1, ts1 = tpc_pair1
        th2, ts2 = tpc_pair2
        assert _code_pair_holds(th1, ts1, "total"), "first pair is not a total code"
        assert _code_pair_holds(th2, ts2, "total"), "second pair is not a total code"
        tg, tctx = _product_context(ts1.context, ts2.context)
        tn2 = th2.parent.order
        tsub = subgroup(tg, (a * tn2 + b for a in th1.elements for b in th2.elements))
        tplain = build_product_subset(ts1, ts2, tctx)
        amended_holds = is_total_perfect_code(build_graph(tplain), tsub.elements)

    return ProductCodesReport(
        pc_product_holds=pc_holds,
        tpc_plain_counting_ok=counting_ok,
        tpc_plain_holds=tpc_plain,
        tpc_amended_evaluated=evaluated,
        tpc_amended_holds=amended_holds,
    )


def _product_context(ctx1: AlphaContext, ctx2: AlphaContext):
    from .groups import direct_product

    group = direct_product(ctx1.group, ctx2.group)
    bar = product_automorphism(ctx1.alpha, ctx2.alpha, group)
    return group, alpha_context(group, bar)


# ---------------------------------------------------------------------------
# restriction


@dataclass(eq=False)
class RestrictionResult:
    """A code pair restricted to an intermediate subgroup, rebuilt as a
    group in its own right."""

    group: FiniteGroup
    subgroup: SubgroupHandle
    subset: GenCayleySubset
    context: AlphaContext
    element_map: tuple[int, ...]  # local index -> index in the original group


def restrict_witness(
    sub: SubgroupHandle, subset: GenCayleySubset, inter: SubgroupHandle
) -> RestrictionResult:
    """Restrict a perfect-code pair to an alpha-invariant subgroup between
    the code and the whole group.

    The intermediate subgroup becomes a standalone group (elements
    renumbered in ascending order, identity stays 0), alpha restricts to an
    automorphism of it, and the intersected connection set re-validates as
    a perfect-code witness there.
    """
    ctx = subset.context
    group = sub.parent
    if inter.parent is not group:
        raise GenCayleyError("intermediate subgroup has a different parent group")
    if sub.mask & ~inter.mask:
        raise GenCayleyError("code subgroup is not contained in the intermediate one")
    if perm_mask(ctx.alpha.perm, inter.mask) != inter.mask:
        raise GenCayleyError("alpha does not preserve the intermediate subgroup")
    if __debug__:
        assert _code_pair_holds(sub, subset, "perfect"), "input pair does not validate"

    elements = inter.elements
    local = {g: i for i, g in enumerate(elements)}
    table = [
        [local[group.table[a][b]] for b in elements] for a in elements
    ]
    names = None
    if group.names is not None:
        names = [group.names[g] for g in elements]
    sub_id = f"{group.id}|{fmt_set(elements)}"
    k_group = _finish_group(table, sub_id, names)
    alpha_k = automorphism_from_perm(
        k_group, [local[ctx.alpha.perm[g]] for g in elements]
    )
    ctx_k = alpha_context(k_group, alpha_k)
    sub_k = subgroup(k_group, (local[h] for h in sub.elements))
    subset_k = validate_subset(
        ctx_k, (local[s] for s in subset.elements if inter.mask >> s & 1)
    )
    assert _code_pair_holds(sub_k, subset_k, "perfect"), "restricted pair fails"
    return RestrictionResult(k_group, sub_k, subset_k, ctx_k, elements)


def restrict_to_normalizer(
    sub: SubgroupHandle, subset: GenCayleySubset
) -> RestrictionResult:
    """Restriction with the normalizer as the intermediate subgroup.

    When alpha preserves the code subgroup it automatically preserves the
    normalizer; that is asserted rather than assumed.
    """
    group = sub.parent
    ctx = subset.context
    norm = normalizer(group, sub)
    assert perm_mask(ctx.alpha.perm, norm.mask) == norm.mask
    return restrict_witness(sub, subset, norm)
