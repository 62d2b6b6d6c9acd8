"""Concrete finite groups as validated Cayley tables over element indices.

Conventions, fixed across the whole package:

* elements are the indices ``0 .. order-1`` and element 0 is the identity;
* ``table[a][b]`` is the product ``a*b``;
* cyclic groups are numbered by residues (addition mod n);
* dihedral groups of order 2n put the n rotations first (``k`` is the
  rotation by k) and the n reflections after them (``n+k`` is the map
  ``x -> k-x`` on rotation exponents);
* direct products use lexicographic pairs, second factor fastest:
  ``(a, b) -> a*|G2| + b``;
* symmetric groups list permutations of ``0..n-1`` in lexicographic order.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations

from ._bits import mask_of
from .errors import GroupFileError, GroupValidationError, ThresholdError

ASSOC_EXHAUSTIVE_LIMIT = 24  # full triple scan up to this order, seeded sample above
ASSOC_SAMPLE_TRIPLES = 100_000
SUBGROUP_ENUM_LIMIT = 64
SYMMETRIC_DEGREE_LIMIT = 5


@dataclass(eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table.

    Instances are immutable after construction and safe to share between
    threads or processes. Always build through :func:`build_group`,
    :func:`direct_product` or :func:`group_from_table`, which validate the
    axioms.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    id: str
    names: tuple[str, ...] | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def elements(self) -> range:
        return range(self.order)

    def name_of(self, a: int) -> str:
        return self.names[a] if self.names is not None else str(a)

    def conjugate(self, g: int, x: int) -> int:
        """x^-1 * g * x"""
        t = self.table
        return t[t[self.inv[x]][g]][x]

    def __getstate__(self):
        # drop derived caches (automorphism lists, flattened tables, ...)
        # so pickling for worker processes stays cheap
        return {k: v for k, v in self.__dict__.items() if not k.startswith("_")}

    @cached_property
    def is_abelian(self) -> bool:
        return noncommuting_pair(self) is None

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for g in range(self.order):
            k, x = 1, g
            while x != 0:
                x = self.table[x][g]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def exponent(self) -> int:
        e = 1
        for k in self.element_orders:
            e = _lcm(e, k)
        return e

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FiniteGroup({self.id}, order={self.order})"


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def noncommuting_pair(group: FiniteGroup) -> tuple[int, int] | None:
    """First pair (a, b) with ab != ba, or None if the group is abelian."""
    t = group.table
    for a in range(group.order):
        row = t[a]
        for b in range(a + 1, group.order):
            if row[b] != t[b][a]:
                return (a, b)
    return None


# ---------------------------------------------------------------------------
# validation


def _first_axiom_violation(table, order: int, seed: int = 0):
    if len(table) != order:
        return ("shape", (len(table), order))
    for a, row in enumerate(table):
        if len(row) != order:
            return ("shape", (a, len(row)))
        for b, v in enumerate(row):
            if not (0 <= v < order):
                return ("range", (a, b, v))
    for b in range(order):
        if table[0][b] != b:
            return ("identity", (0, b, table[0][b]))
    for a in range(order):
        if table[a][0] != a:
            return ("identity", (a, 0, table[a][0]))
    full = set(range(order))
    for a in range(order):
        if set(table[a]) != full:
            return ("latin-row", (a,))
    for b in range(order):
        if {table[a][b] for a in range(order)} != full:
            return ("latin-column", (b,))
    for a in range(order):
        if 0 not in table[a]:
            return ("inverse", (a,))
    if order <= ASSOC_EXHAUSTIVE_LIMIT:
        triples = (
            (a, b, c)
            for a in range(order)
            for b in range(order)
            for c in range(order)
        )
    else:
        rng = random.Random(seed)
        triples = (
            (rng.randrange(order), rng.randrange(order), rng.randrange(order))
            for _ in range(ASSOC_SAMPLE_TRIPLES)
        )
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            return ("associativity", (a, b, c))
    return None


def _finish_group(table, gid: str, names=None) -> FiniteGroup:
    order = len(table)
    if order == 0:
        raise GroupValidationError("shape", (0,), "empty table")
    violation = _first_axiom_violation(table, order)
    if violation is not None:
        raise GroupValidationError(violation[0], violation[1])
    inv = []
    for a in range(order):
        b = table[a].index(0)
        if table[b][a] != 0:
            raise GroupValidationError("inverse", (a, b))
        inv.append(b)
    if names is not None:
        names = tuple(str(s) for s in names)
        if len(names) != order:
            raise GroupValidationError("names", (len(names), order), "length mismatch")
    return FiniteGroup(
        order=order,
        table=tuple(tuple(row) for row in table),
        inv=tuple(inv),
        id=gid,
        names=names,
    )


# ---------------------------------------------------------------------------
# catalog constructors


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return _finish_group(table, f"Z{n}", [str(k) for k in range(n)])


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n, n >= 3.

    Element k (k < n) is the rotation x -> x+k; element n+k is the
    reflection x -> k-x, both acting on rotation exponents mod n.
    """
    if n < 3:
        raise ValueError(f"dihedral parameter must be >= 3, got {n}")
    order = 2 * n

    def compose(a: int, b: int) -> int:
        fa, ka = divmod(a, n)
        fb, kb = divmod(b, n)
        # product a*b acts as "apply b first, then a"
        if fa == 0 and fb == 0:
            return (ka + kb) % n
        if fa == 0 and fb == 1:
            return n + (ka + kb) % n
        if fa == 1 and fb == 0:
            return n + (ka - kb) % n
        return (ka - kb) % n

    table = [[compose(a, b) for b in range(order)] for a in range(order)]
    names = ["e"] + [f"r{k}" for k in range(1, n)] + [f"s{k}" for k in range(n)]
    return _finish_group(table, f"D{n}", names)


def symmetric_group(n: int) -> FiniteGroup:
    if not (1 <= n <= SYMMETRIC_DEGREE_LIMIT):
        raise ThresholdError(
            f"symmetric group degree {n} outside 1..{SYMMETRIC_DEGREE_LIMIT}"
        )
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = [
        [index[tuple(p[q[x]] for x in range(n))] for q in elems]
        for p in elems
    ]
    return _finish_group(table, f"S{n}", [_cycle_notation(p) for p in elems])


def _cycle_notation(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc, x = [], start
        while not seen[x]:
            seen[x] = True
            cyc.append(str(x))
            x = p[x]
        out.append("(" + " ".join(cyc) + ")")
    return "".join(out) or "()"


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    n1, n2 = g1.order, g2.order
    order = n1 * n2
    t1, t2 = g1.table, g2.table
    table = []
    for a in range(order):
        a1, a2 = divmod(a, n2)
        row1 = t1[a1]
        row2 = t2[a2]
        table.append(
            [row1[b // n2] * n2 + row2[b % n2] for b in range(order)]
        )
    names = None
    if g1.names is not None and g2.names is not None:
        names = [
            f"({g1.names[a // n2]},{g2.names[a % n2]})" for a in range(order)
        ]
    return _finish_group(table, f"{g1.id}x{g2.id}", names)


def abelian_group(factors: list[int]) -> FiniteGroup:
    """Direct product of cyclic groups, mixed-radix numbering (last factor fastest)."""
    if not factors:
        raise ValueError("abelian spec needs at least one factor")
    g = cyclic_group(factors[0])
    for d in factors[1:]:
        g = direct_product(g, cyclic_group(d))
    return g


# ---------------------------------------------------------------------------
# spec parsing

_ALIASES = {"V4": "abelian:2,2"}


def _build_atom(atom: str) -> FiniteGroup:
    a = atom.strip()
    key = a.upper()
    if key in _ALIASES:
        a = _ALIASES[key]
    low = a.lower()
    if low.startswith("cyclic:"):
        return cyclic_group(int(low.split(":", 1)[1]))
    if low.startswith("dihedral:"):
        return dihedral_group(int(low.split(":", 1)[1]))
    if low.startswith("symmetric:"):
        return symmetric_group(int(low.split(":", 1)[1]))
    if low.startswith("abelian:"):
        factors = [int(p) for p in low.split(":", 1)[1].split(",") if p]
        return abelian_group(factors)
    if len(a) >= 2 and a[0] in "zZcC" and a[1:].isdigit():
        return cyclic_group(int(a[1:]))
    if len(a) >= 2 and a[0] in "dD" and a[1:].isdigit():
        return dihedral_group(int(a[1:]))
    if len(a) >= 2 and a[0] in "sS" and a[1:].isdigit():
        return symmetric_group(int(a[1:]))
    raise ValueError(f"unsupported group spec {atom!r}")


@lru_cache(maxsize=None)
def build_group(spec: str) -> FiniteGroup:
    """Build a catalog group from a spec string.

    Accepted atoms: ``cyclic:N`` (``ZN``/``CN``), ``dihedral:N`` (``DN``,
    order 2N), ``symmetric:N`` (``SN``, N <= 5), ``abelian:d1,d2,...`` and
    the alias ``V4``. Atoms joined with ``x`` form direct products, e.g.
    ``Z2xZ4`` or ``dihedral:4xcyclic:2``.
    """
    parts = [p for p in spec.split("x") if p.strip()]
    if not parts:
        raise ValueError(f"empty group spec {spec!r}")
    group = _build_atom(parts[0])
    for part in parts[1:]:
        group = direct_product(group, _build_atom(part))
    return group


def group_from_table(data: dict, source: str = "<table>") -> FiniteGroup:
    """Build a group from a parsed table object.

    Expects fields ``name`` (string), ``order`` (int), ``table`` (n x n int
    array) and optionally ``names`` (n strings). If the identity is not
    element 0, elements are renumbered so that it is.
    """
    for field_name in ("name", "order", "table"):
        if field_name not in data:
            raise GroupFileError(f"{source}: missing field {field_name!r}")
    name = data["name"]
    order = data["order"]
    table = data["table"]
    if not isinstance(order, int) or order < 1:
        raise GroupFileError(f"{source}: field 'order' must be a positive integer")
    if not isinstance(table, list) or len(table) != order:
        raise GroupFileError(
            f"{source}: field 'table' must have {order} rows, got "
            f"{len(table) if isinstance(table, list) else type(table).__name__}"
        )
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != order:
            raise GroupFileError(f"{source}: field 'table' row {i} must have {order} entries")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not (0 <= v < order):
                raise GroupFileError(
                    f"{source}: field 'table' entry [{i}][{j}] = {v!r} out of range 0..{order - 1}"
                )
    names = data.get("names")
    if names is not None:
        if not isinstance(names, list) or len(names) != order:
            raise GroupFileError(f"{source}: field 'names' must list {order} strings")
        names = [str(s) for s in names]

    identity = None
    for e in range(order):
        if all(table[e][b] == b for b in range(order)) and all(
            table[a][e] == a for a in range(order)
        ):
            identity = e
            break
    if identity is None:
        raise GroupFileError(f"{source}: table has no two-sided identity element")
    if identity != 0:
        # renumber so the identity becomes element 0 (swap 0 <-> identity)
        relabel = list(range(order))
        relabel[0], relabel[identity] = identity, 0
        table = [
            [relabel[table[relabel[a]][relabel[b]]] for b in range(order)]
            for a in range(order)
        ]
        if names is not None:
            names = [names[relabel[a]] for a in range(order)]
    try:
        return _finish_group(table, str(name), names)
    except GroupValidationError as exc:
        raise GroupFileError(f"{source}: {exc}") from exc


def load_group_file(path) -> FiniteGroup:
    """Load a group from a JSON table file, with line/field diagnostics."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise GroupFileError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise GroupFileError(f"{path}: top-level value must be an object")
    return group_from_table(data, source=str(path))


# ---------------------------------------------------------------------------
# subgroups and cosets


@dataclass(eq=False)
class SubgroupHandle:
    """A validated subgroup, stored as a sorted tuple of element indices."""

    elements: tuple[int, ...]
    parent: FiniteGroup

    @cached_property
    def mask(self) -> int:
        return mask_of(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SubgroupHandle({list(self.elements)} of {self.parent.id})"


def subgroup(group: FiniteGroup, elements) -> SubgroupHandle:
    """Validate a set of element indices as a subgroup of ``group``."""
    elems = tuple(sorted(set(int(x) for x in elements)))
    if not elems or elems[0] != 0:
        raise GroupValidationError("subgroup-identity", elems[:1] or (None,))
    eset = set(elems)
    for a in elems:
        if group.inv[a] not in eset:
            raise GroupValidationError("subgroup-inverse", (a,))
        row = group.table[a]
        for b in elems:
            if row[b] not in eset:
                raise GroupValidationError("subgroup-closure", (a, b, row[b]))
    if group.order % len(elems) != 0:
        raise GroupValidationError("subgroup-lagrange", (len(elems), group.order))
    return SubgroupHandle(elems, group)


def subgroup_closure(group: FiniteGroup, generators) -> tuple[int, ...]:
    """Subgroup generated by the given elements, as a sorted tuple."""
    table = group.table
    gens = sorted(set(generators))
    seen = bytearray(group.order)
    seen[0] = 1
    queue = [0]
    for x in queue:
        row = table[x]
        for g in gens:
            y = row[g]
            if not seen[y]:
                seen[y] = 1
                queue.append(y)
    return tuple(i for i in range(group.order) if seen[i])


def enumerate_subgroups(
    group: FiniteGroup, limit: int = SUBGROUP_ENUM_LIMIT
) -> list[SubgroupHandle]:
    """All subgroups, by breadth-first closure over growing generator sets.

    Results are sorted by (order, elements). Refuses groups larger than
    ``limit``.
    """
    if group.order > limit:
        raise ThresholdError(
            f"subgroup enumeration limited to order <= {limit}, got {group.order}"
        )
    trivial = (0,)
    seen = {mask_of(trivial)}
    found = [trivial]
    frontier = [trivial]
    while frontier:
        nxt = []
        for base in frontier:
            bset = set(base)
            for g in range(1, group.order):
                if g in bset:
                    continue
                closed = subgroup_closure(group, base + (g,))
                key = mask_of(closed)
                if key not in seen:
                    seen.add(key)
                    found.append(closed)
                    nxt.append(closed)
        frontier = nxt
    found.sort(key=lambda t: (len(t), t))
    return [subgroup(group, t) for t in found]


@dataclass(eq=False)
class CosetDecomposition:
    """Partition of a group into left or right cosets of a subgroup.

    ``cosets[0]`` is the subgroup itself; ``rep_of[x]`` is the index of the
    coset containing x.
    """

    subgroup: SubgroupHandle
    side: str  # "left" | "right"
    cosets: tuple[tuple[int, ...], ...]
    rep_of: tuple[int, ...]

    @property
    def index(self) -> int:
        return len(self.cosets)


def cosets(group: FiniteGroup, sub: SubgroupHandle, side: str = "right") -> CosetDecomposition:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if sub.parent is not group:
        raise GroupValidationError("subgroup-parent", (sub.elements,), "wrong parent group")
    table = group.table
    assigned = [-1] * group.order
    blocks: list[tuple[int, ...]] = []
    for g in range(group.order):
        if assigned[g] != -1:
            continue
        if side == "right":
            block = sorted(table[h][g] for h in sub.elements)
        else:
            block = sorted(table[g][h] for h in sub.elements)
        idx = len(blocks)
        for x in block:
            assigned[x] = idx
        blocks.append(tuple(block))
    return CosetDecomposition(sub, side, tuple(blocks), tuple(assigned))


def normalizer(group: FiniteGroup, sub: SubgroupHandle) -> SubgroupHandle:
    """N_G(H) = {g : g^-1 H g = H}."""
    hmask = sub.mask
    members = []
    for g in range(group.order):
        if all(hmask >> group.conjugate(h, g) & 1 for h in sub.elements):
            members.append(g)
    return subgroup(group, members)
