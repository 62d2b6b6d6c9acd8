import json

import pytest

from gencayley import (
    GroupFileError,
    GroupValidationError,
    ThresholdError,
    build_group,
    cosets,
    enumerate_subgroups,
    load_group_file,
    noncommuting_pair,
    normalizer,
    subgroup,
    subgroup_closure,
)
from gencayley.groups import group_from_table

from oracles import subgroups_by_generator_subsets


def test_trivial_group():
    g = build_group("cyclic:1")
    assert g.order == 1
    assert g.table == ((0,),)
    assert [s.elements for s in enumerate_subgroups(g)] == [(0,)]


def test_cyclic_six_is_residue_addition(z6):
    assert z6.mul(2, 5) == 1
    assert z6.inv == (0, 5, 4, 3, 2, 1)
    assert z6.is_abelian


def test_dihedral_three_nonabelian():
    d3 = build_group("dihedral:3")
    assert d3.order == 6
    pair = noncommuting_pair(d3)
    assert pair is not None
    a, b = pair
    assert d3.mul(a, b) != d3.mul(b, a)


@pytest.mark.parametrize(
    "spec, order, abelian",
    [
        ("cyclic:8", 8, True),
        ("dihedral:4", 8, False),
        ("symmetric:4", 24, False),
        ("abelian:2,4", 8, True),
        ("Z2xZ4", 8, True),
        ("V4", 4, True),
        ("dihedral:3xcyclic:2", 12, False),
    ],
)
def test_catalog_constructions(spec, order, abelian):
    g = build_group(spec)
    assert g.order == order
    assert g.is_abelian == abelian
    assert all(g.mul(0, b) == b for b in range(order))
    assert all(g.mul(a, g.inv[a]) == 0 for a in range(order))


def test_direct_product_numbering():
    g = build_group("Z2xZ3")
    # (a1, b1) * (a2, b2) with index 3*a + b
    assert g.mul(1 * 3 + 2, 1 * 3 + 2) == ((1 + 1) % 2) * 3 + (2 + 2) % 3
    assert g.id == "Z2xZ3"


def test_symmetric_group_composition():
    s3 = build_group("symmetric:3")
    assert s3.order == 6
    assert s3.names[0] == "()"
    # composition associativity spot check plus order profile
    orders = sorted(s3.element_orders)
    assert orders == [1, 2, 2, 2, 3, 3]


def test_unsupported_spec():
    with pytest.raises(ValueError):
        build_group("quaternion:8")
    with pytest.raises(ThresholdError):
        build_group("symmetric:6")


def test_subgroups_z6(z6):
    subs = [s.elements for s in enumerate_subgroups(z6)]
    assert subs == [(0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]
    assert {s.elements for s in enumerate_subgroups(z6)} == subgroups_by_generator_subsets(z6, 1)


def test_subgroups_v4(v4):
    subs = enumerate_subgroups(v4)
    assert len(subs) == 5
    assert sorted(s.order for s in subs) == [1, 2, 2, 2, 4]


@pytest.mark.parametrize("spec", ["cyclic:12", "dihedral:4", "symmetric:3", "abelian:3,3"])
def test_subgroup_oracle_two_generated(spec):
    g = build_group(spec)
    assert {s.elements for s in enumerate_subgroups(g)} == subgroups_by_generator_subsets(g, 2)


def test_subgroup_oracle_three_generated():
    g = build_group("abelian:2,2,2")
    listed = {s.elements for s in enumerate_subgroups(g)}
    assert listed == subgroups_by_generator_subsets(g, 3)
    assert len(listed) == 16  # subgroup count of the rank-3 elementary abelian group


def test_subgroup_enumeration_threshold():
    with pytest.raises(ThresholdError):
        enumerate_subgroups(build_group("symmetric:5"))


def test_subgroup_validation(z6):
    with pytest.raises(GroupValidationError):
        subgroup(z6, [0, 1])  # not closed
    with pytest.raises(GroupValidationError):
        subgroup(z6, [1, 2])  # missing identity
    assert subgroup_closure(z6, (2,)) == (0, 2, 4)


def test_cosets_z6(z6):
    h = subgroup(z6, [0, 3])
    dec = cosets(z6, h, "right")
    assert dec.cosets == ((0, 3), (1, 4), (2, 5))
    assert dec.rep_of == (0, 1, 2, 0, 1, 2)
    whole = cosets(z6, subgroup(z6, range(6)), "right")
    assert whole.cosets == ((0, 1, 2, 3, 4, 5),)


def test_cosets_normal_subgroup_sides_agree():
    d3 = build_group("dihedral:3")
    rot = subgroup(d3, [0, 1, 2])
    left = cosets(d3, rot, "left")
    right = cosets(d3, rot, "right")
    assert left.cosets == right.cosets  # index 2 forces both sides equal


def test_normalizer():
    d4 = build_group("dihedral:4")
    h = subgroup(d4, [0, 4])  # one reflection
    n = normalizer(d4, h)
    assert n.elements == (0, 2, 4, 6)
    assert normalizer(d4, subgroup(d4, range(8))).order == 8
    z6 = build_group("cyclic:6")
    assert normalizer(z6, subgroup(z6, [0, 3])).order == 6


def test_group_from_table_renumbers_identity():
    # Z2 written with the identity as element 1
    data = {"name": "flipped", "order": 2, "table": [[1, 0], [0, 1]]}
    g = group_from_table(data)
    assert g.table == ((0, 1), (1, 0))


def test_group_file_roundtrip(tmp_path, z6):
    path = tmp_path / "z6.json"
    path.write_text(
        json.dumps(
            {
                "name": "Z6-file",
                "order": 6,
                "table": [list(row) for row in z6.table],
                "names": list(z6.names),
            }
        )
    )
    g = load_group_file(path)
    assert g.table == z6.table
    assert g.id == "Z6-file"


@pytest.mark.parametrize(
    "payload, fragment",
    [
        ("{not json", "line 1"),
        ('{"name": "x", "order": 2}', "missing field 'table'"),
        ('{"name": "x", "order": 2, "table": [[0, 1]]}', "field 'table'"),
        ('{"name": "x", "order": 2, "table": [[0, 1], [1, 7]]}', "[1][1]"),
        ('{"name": "x", "order": 2, "table": [[0, 1], [1, 1]]}', "latin-row"),
        ('{"name": "x", "order": 2, "table": [[1, 0], [1, 0]]}', "identity"),
    ],
)
def test_group_file_diagnostics(tmp_path, payload, fragment):
    path = tmp_path / "bad.json"
    path.write_text(payload)
    with pytest.raises(GroupFileError) as err:
        load_group_file(path)
    assert fragment in str(err.value)


def test_bad_table_reports_first_axiom():
    # associativity violation witness: a valid Latin square that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupFileError) as err:
        group_from_table({"name": "bad", "order": 5, "table": table})
    assert "associativity" in str(err.value)
    assert "witness" in str(err.value)
