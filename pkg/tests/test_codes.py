import pytest

from gencayley import (
    GenCayleyError,
    ThresholdError,
    abelian_pc_criterion,
    alpha_preserves,
    brute_force_codes,
    build_graph,
    build_group,
    build_product_subset,
    build_product_subset_augmented,
    build_witness_abelian,
    coset_pairing,
    decide_subgroup_pc,
    decide_subgroup_tpc,
    enumerate_involutory_automorphisms,
    enumerate_subgroups,
    image_subgroup,
    is_gc_transversal,
    is_perfect_code,
    is_total_perfect_code,
    restrict_to_normalizer,
    restrict_witness,
    subgroup,
    transport_automorphism,
    transport_conjugate,
    validate_subset,
    verify_product_codes,
)
from gencayley.codes import _product_context
from gencayley.verify import _contexts

from oracles import codes_by_definition, exists_pc_connection_set


def graph_for(ctx, elems):
    return build_graph(validate_subset(ctx, elems))


# ---------------------------------------------------------------------------
# subset-level deciders


def test_is_perfect_code_examples(z6_ctx):
    g1 = graph_for(z6_ctx, [1])
    assert is_perfect_code(g1, [0, 2, 4])
    assert not is_perfect_code(g1, [0, 1])  # not independent
    g15 = graph_for(z6_ctx, [1, 5])
    assert is_perfect_code(g15, [0, 3])
    edgeless = graph_for(z6_ctx, [])
    assert is_perfect_code(edgeless, range(6))
    for mode in ("graph", "partition", "algebraic"):
        assert is_perfect_code(g1, [0, 2, 4], mode)


def test_is_total_perfect_code_examples(z6_ctx):
    bip = graph_for(z6_ctx, [1, 3, 5])
    assert is_total_perfect_code(bip, [0, 3])
    g1 = graph_for(z6_ctx, [1])
    assert not is_total_perfect_code(g1, [0, 2, 4])  # members have no member-neighbor
    assert not is_total_perfect_code(bip, [])
    assert not is_total_perfect_code(graph_for(z6_ctx, []), range(6))  # empty S


def test_brute_force_codes_matching(z6_ctx):
    g1 = graph_for(z6_ctx, [1])
    codes = brute_force_codes(g1, "perfect")
    assert len(codes) == 8  # one endpoint per matching edge
    assert (0, 2, 4) in codes
    assert [set(c) for c in codes] == [set(c) for c in codes_by_definition(g1.adjacency, "perfect")]


def test_brute_force_codes_edgeless(z6_ctx):
    edgeless = graph_for(z6_ctx, [])
    assert brute_force_codes(edgeless, "perfect") == [(0, 1, 2, 3, 4, 5)]
    assert brute_force_codes(edgeless, "total") == []


def test_brute_force_codes_total(z6_ctx):
    bip = graph_for(z6_ctx, [1, 3, 5])
    codes = brute_force_codes(bip, "total")
    assert (0, 3) in codes
    assert len(codes) == 9  # one even and one odd vertex
    assert [set(c) for c in codes] == [set(c) for c in codes_by_definition(bip.adjacency, "total")]


def test_brute_force_threshold():
    from gencayley import enumerate_subsets

    g24 = build_group("symmetric:4")
    ctx = _contexts(g24)[0][1]
    graph = build_graph(next(iter(enumerate_subsets(ctx))))
    with pytest.raises(ThresholdError):
        brute_force_codes(graph)


# ---------------------------------------------------------------------------
# coset pairing


def test_coset_pairing_z6(z6, z6_ctx):
    pairing = coset_pairing(subgroup(z6, [0, 3]), z6_ctx)
    assert pairing.well_defined
    assert [(e.coset, e.kind) for e in pairing.entries] == [(1, "self"), (2, "self")]
    pairing = coset_pairing(subgroup(z6, [0, 2, 4]), z6_ctx)
    assert [(e.coset, e.kind) for e in pairing.entries] == [(1, "self")]


def test_coset_pairing_v4(v4, v4_swap_ctx):
    pairing = coset_pairing(subgroup(v4, [0, 3]), v4_swap_ctx)
    assert pairing.well_defined
    assert [(e.coset, e.kind) for e in pairing.entries] == [(1, "self")]


def test_coset_pairing_requires_preservation(v4, v4_swap_ctx):
    with pytest.raises(GenCayleyError):
        coset_pairing(subgroup(v4, [0, 1]), v4_swap_ctx)  # alpha swaps the generators


def test_coset_pairing_mixed_case():
    s3 = build_group("symmetric:3")
    for _, ctx in _contexts(s3):
        for sub in enumerate_subgroups(s3):
            if sub.order == 2 and alpha_preserves(ctx.alpha, sub):
                pairing = coset_pairing(sub, ctx)
                assert not pairing.well_defined
                assert {e.kind for e in pairing.entries} == {"mixed"}
                return
    pytest.fail("expected a representative-dependent pairing in S3")


# ---------------------------------------------------------------------------
# subgroup perfect codes


def test_decide_pc_z6(z6, z6_ctx):
    w = decide_subgroup_pc(subgroup(z6, [0, 3]), z6_ctx)
    assert w.success and w.subset.elements == (1, 5)
    assert w.coset_classification == ((1, 1, 1), (2, 2, 5))
    w = decide_subgroup_pc(subgroup(z6, [0, 2, 4]), z6_ctx)
    assert w.success and w.subset.elements == (1,)


def test_decide_pc_refutations(z4, z4_ctx, v4, v4_swap_ctx):
    w = decide_subgroup_pc(subgroup(v4, [0, 3]), v4_swap_ctx)
    assert not w.success
    assert w.refutation == "self-paired-coset-without-big-omega-element"
    w = decide_subgroup_pc(subgroup(z4, [0]), z4_ctx)
    assert not w.success and w.refutation == "coset-inside-omega"
    w = decide_subgroup_pc(subgroup(v4, [0, 1]), v4_swap_ctx)
    assert not w.success and w.refutation == "alpha-not-preserving"


def test_decide_pc_whole_group(z6, z6_ctx):
    w = decide_subgroup_pc(subgroup(z6, range(6)), z6_ctx)
    assert w.success and w.subset.elements == ()


@pytest.mark.parametrize("spec", ["cyclic:4", "cyclic:6", "cyclic:8", "V4", "dihedral:3", "dihedral:4"])
def test_decide_pc_matches_exhaustive_search(spec):
    group = build_group(spec)
    for _, ctx in _contexts(group):
        for sub in enumerate_subgroups(group):
            decided = decide_subgroup_pc(sub, ctx).success
            assert decided == exists_pc_connection_set(ctx, sub)


def test_witnesses_are_gc_transversals(z6, z6_ctx):
    sub = subgroup(z6, [0, 3])
    w = decide_subgroup_pc(sub, z6_ctx)
    assert is_gc_transversal(z6_ctx, sub, (0,) + w.subset.elements, "right")
    assert is_gc_transversal(z6_ctx, sub, (0,) + w.subset.elements, "left")
    assert not is_gc_transversal(z6_ctx, sub, w.subset.elements, "right")  # identity missing


# ---------------------------------------------------------------------------
# abelian criterion


def test_abelian_criterion_examples(z6, z6_ctx, z4, z4_ctx):
    assert abelian_pc_criterion(subgroup(z6, [0, 3]), z6_ctx)
    assert not abelian_pc_criterion(subgroup(z4, [0]), z4_ctx)
    assert abelian_pc_criterion(subgroup(z6, range(6)), z6_ctx)  # vacuous
    with pytest.raises(GenCayleyError):
        abelian_pc_criterion(
            subgroup(build_group("dihedral:3"), [0]),
            _contexts(build_group("dihedral:3"))[0][1],
        )


def test_build_witness_abelian(z6, z6_ctx):
    s = build_witness_abelian(subgroup(z6, [0, 2, 4]), z6_ctx)
    assert s.elements in {(1,), (3,), (5,)}
    s = build_witness_abelian(subgroup(z6, [0, 3]), z6_ctx)
    assert s.size == 2
    assert is_perfect_code(build_graph(s), [0, 3])
    with pytest.raises(GenCayleyError):
        build_witness_abelian(subgroup(z6, [0]), z6_ctx)


def test_z2_has_no_involutory_automorphism():
    # the smallest groups admit no usable involution at all, so the
    # abelian construction has nothing to build on there
    assert enumerate_involutory_automorphisms(build_group("cyclic:2")) == []
    assert enumerate_involutory_automorphisms(build_group("cyclic:1")) == []


# ---------------------------------------------------------------------------
# subgroup total perfect codes


def test_decide_tpc_z6(z6, z6_ctx):
    w = decide_subgroup_tpc(subgroup(z6, [0, 3]), z6_ctx)
    assert w.success and w.subset.elements == (1, 3, 5)
    w = decide_subgroup_tpc(subgroup(z6, [0, 2, 4]), z6_ctx)
    assert not w.success
    w = decide_subgroup_tpc(subgroup(z6, range(6)), z6_ctx)
    assert w.success and w.subset.size == 1


def test_tpc_without_alpha_preservation(v4, v4_swap_ctx):
    # alpha exchanges the two generators, so H = <first generator> is not
    # preserved, yet it is a total perfect code: the witness is a
    # transversal of alpha(H)
    sub = subgroup(v4, [0, 2])
    w = decide_subgroup_tpc(sub, v4_swap_ctx)
    assert w.success and not w.alpha_preserves_subgroup
    assert is_total_perfect_code(build_graph(w.subset), sub.elements)


# ---------------------------------------------------------------------------
# transports


def test_transport_trivial(z6, z6_ctx):
    sub = subgroup(z6, [0, 3])
    w = decide_subgroup_pc(sub, z6_ctx)
    csub, cset = transport_conjugate(sub, w.subset, 0)
    assert csub.elements == sub.elements and cset.elements == w.subset.elements

    from gencayley import automorphism_from_perm

    identity = automorphism_from_perm(z6, tuple(range(6)))
    tsub, tset, tctx = transport_automorphism(sub, w.subset, identity)
    assert tsub.elements == sub.elements and tset.elements == w.subset.elements


def test_transport_by_inversion_fixes_z6_pair(z6, z6_ctx):
    sub = subgroup(z6, [0, 3])
    w = decide_subgroup_pc(sub, z6_ctx)
    tsub, tset, _ = transport_automorphism(sub, w.subset, z6_ctx.alpha)
    assert tsub.elements == (0, 3) and tset.elements == (1, 5)


def test_transport_requires_fixed_element(z6, z6_ctx):
    sub = subgroup(z6, [0, 3])
    w = decide_subgroup_pc(sub, z6_ctx)
    with pytest.raises(GenCayleyError):
        transport_conjugate(sub, w.subset, 1)  # 1 is moved by inversion


def test_transport_nonabelian_hit():
    d4 = build_group("dihedral:4")
    hits = []
    for _, ctx in _contexts(d4):
        for sub in enumerate_subgroups(d4):
            w = decide_subgroup_pc(sub, ctx)
            if w.success and 0 < sub.order < d4.order:
                hits.append((sub, w.subset, ctx))
    assert hits
    from gencayley import enumerate_automorphisms

    sub, subset, ctx = hits[0]
    for g in ctx.fix:
        transport_conjugate(sub, subset, g)  # asserts re-validation internally
    for beta in enumerate_automorphisms(d4):
        transport_automorphism(sub, subset, beta)


def test_transport_total_codes(z6, z6_ctx):
    sub = subgroup(z6, [0, 3])
    w = decide_subgroup_tpc(sub, z6_ctx)
    for g in z6_ctx.fix:
        transport_conjugate(sub, w.subset, g, kind="total")
    tsub, tset, _ = transport_automorphism(sub, w.subset, z6_ctx.alpha, kind="total")
    assert tset.elements == (1, 3, 5)


# ---------------------------------------------------------------------------
# products


def test_product_subsets_z4(z4, z4_ctx):
    s = validate_subset(z4_ctx, [1])
    _, prod_ctx = _product_context(z4_ctx, z4_ctx)
    plain = build_product_subset(s, s, prod_ctx)
    assert plain.elements == (5,)  # (1,1)
    augmented = build_product_subset_augmented(s, s, prod_ctx)
    assert augmented.elements == (1, 4, 5)  # (0,1), (1,0), (1,1)
    assert augmented.size == 3

    empty = validate_subset(z4_ctx, [])
    assert build_product_subset(empty, empty, prod_ctx).elements == ()
    assert build_product_subset_augmented(empty, empty, prod_ctx).elements == ()


def test_verify_product_codes_z4(z4, z4_ctx):
    sub = subgroup(z4, [0, 2])
    w = decide_subgroup_pc(sub, z4_ctx)
    assert w.subset.elements == (1,)
    report = verify_product_codes((sub, w.subset), (sub, w.subset))
    assert report.pc_product_holds
    assert not report.tpc_plain_counting_ok  # 16 != 4 * 1
    assert not report.tpc_plain_holds
    assert not report.tpc_amended_evaluated


def test_verify_product_codes_amended(z6, z6_ctx, z4, z4_ctx):
    pc_pair = (subgroup(z4, [0, 2]), decide_subgroup_pc(subgroup(z4, [0, 2]), z4_ctx).subset)
    tpc_sub = subgroup(z6, [0, 3])
    tpc_pair = (tpc_sub, decide_subgroup_tpc(tpc_sub, z6_ctx).subset)
    report = verify_product_codes(pc_pair, pc_pair, tpc_pair, tpc_pair)
    assert report.tpc_amended_evaluated and report.tpc_amended_holds


# ---------------------------------------------------------------------------
# restriction


def test_restrict_witness_whole_group(z6, z6_ctx):
    sub = subgroup(z6, [0, 3])
    w = decide_subgroup_pc(sub, z6_ctx)
    res = restrict_witness(sub, w.subset, subgroup(z6, range(6)))
    assert res.subgroup.elements == (0, 3)
    assert res.subset.elements == (1, 5)


def test_restrict_witness_to_itself(z6, z6_ctx):
    sub = subgroup(z6, [0, 3])
    w = decide_subgroup_pc(sub, z6_ctx)
    res = restrict_witness(sub, w.subset, sub)
    assert res.subset.elements == ()  # edgeless graph on the subgroup
    assert res.group.order == 2


def test_restrict_witness_normalizer_abelian(z6, z6_ctx):
    sub = subgroup(z6, [0, 2, 4])
    w = decide_subgroup_pc(sub, z6_ctx)
    res = restrict_to_normalizer(sub, w.subset)
    assert res.group.order == 6  # abelian: the normalizer is everything


def test_restrict_witness_nonabelian_proper_normalizer():
    d4 = build_group("dihedral:4")
    for _, ctx in _contexts(d4):
        for sub in enumerate_subgroups(d4):
            w = decide_subgroup_pc(sub, ctx)
            if not w.success:
                continue
            from gencayley import normalizer

            norm = normalizer(d4, sub)
            if sub.order < norm.order < d4.order:
                res = restrict_to_normalizer(sub, w.subset)
                assert res.group.order == norm.order
                assert is_perfect_code(
                    build_graph(res.subset), res.subgroup.elements
                )
                return
    pytest.fail("expected a hit with a proper normalizer chain in D4")


def test_restrict_witness_requires_invariance(v4, v4_swap_ctx):
    whole = subgroup(v4, range(4))
    w = decide_subgroup_pc(whole, v4_swap_ctx)
    with pytest.raises(GenCayleyError):
        restrict_witness(whole, w.subset, subgroup(v4, [0, 1]))


# ---------------------------------------------------------------------------
# structural audits on hits


def test_pc_hits_preserve_subgroup_and_miss_image():
    for spec in ("cyclic:8", "dihedral:4", "abelian:2,4"):
        group = build_group(spec)
        for _, ctx in _contexts(group):
            for sub in enumerate_subgroups(group):
                w = decide_subgroup_pc(sub, ctx)
                if w.success:
                    assert alpha_preserves(ctx.alpha, sub)
                    image = image_subgroup(ctx.alpha, sub)
                    assert not set(w.subset.elements) & set(image.elements)
