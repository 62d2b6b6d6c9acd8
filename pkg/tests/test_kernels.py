"""Compiled and pure kernels must be interchangeable; both must match the
definition-level oracles."""

import random

import pytest

from gencayley import _kernels_py, build_graph, build_group
from gencayley.kernels import backend
from gencayley.verify import _contexts, _mul_flat, _orbit_translate_masks

from oracles import codes_by_definition

try:
    from gencayley import _kernels

    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False

needs_compiled = pytest.mark.skipif(not HAVE_COMPILED, reason="extension not built")


def _instances(max_order=8):
    from gencayley import enumerate_subsets

    out = []
    for spec in ("cyclic:6", "cyclic:8", "V4", "dihedral:3", "dihedral:4", "abelian:2,4"):
        group = build_group(spec)
        if group.order > max_order:
            continue
        for _, ctx in _contexts(group):
            for subset in enumerate_subsets(ctx):
                out.append((group, ctx, subset))
    return out


def test_backend_reports_something():
    assert backend() in ("compiled", "python")


def test_scan_codes_matches_definition_oracle():
    for group, ctx, subset in _instances():
        graph = build_graph(subset)
        for kind, name in ((0, "perfect"), (1, "total")):
            masks = _kernels_py.scan_codes(graph.nbr_masks, kind)
            expect = {
                frozenset(c) for c in codes_by_definition(graph.adjacency, name)
            }
            got = {
                frozenset(v for v in range(group.order) if m >> v & 1) for m in masks
            }
            assert got == expect


@needs_compiled
def test_compiled_scan_codes_matches_pure():
    for group, ctx, subset in _instances():
        graph = build_graph(subset)
        for kind in (0, 1):
            assert _kernels.scan_codes(graph.nbr_masks, kind) == _kernels_py.scan_codes(
                graph.nbr_masks, kind
            )


@needs_compiled
def test_compiled_scan_subgroup_codes_matches_pure():
    from gencayley import enumerate_subgroups

    for spec in ("cyclic:8", "dihedral:4", "V4"):
        group = build_group(spec)
        h_masks = [s.mask for s in enumerate_subgroups(group)]
        for _, ctx in _contexts(group):
            trans = _orbit_translate_masks(ctx)
            for kind in (0, 1):
                got = _kernels.scan_subgroup_codes(
                    trans, len(ctx.tau_orbits), h_masks, group.order, kind
                )
                want = _kernels_py.scan_subgroup_codes(
                    trans, len(ctx.tau_orbits), h_masks, group.order, kind
                )
                assert got == want


@needs_compiled
def test_compiled_scan_check_routes_matches_pure():
    rng = random.Random(0)
    for group, ctx, subset in _instances():
        graph = build_graph(subset)
        n = group.order
        xms = [rng.getrandbits(n) for _ in range(64)] + [0, (1 << n) - 1]
        args = (
            n,
            _mul_flat(group),
            group.inv,
            ctx.alpha.perm,
            subset.elements,
            graph.nbr_masks,
            xms,
        )
        assert _kernels.scan_check_routes(*args) == _kernels_py.scan_check_routes(*args)
