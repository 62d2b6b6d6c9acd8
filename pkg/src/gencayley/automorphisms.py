"""Group automorphisms and the derived element sets of an involution.

For an automorphism ``a`` with ``a*a = id`` the package works with five
derived subsets of the group:

* ``omega``     -- ``{a(g^-1)*g : g in G}``: the elements that would create
  loops in a generalized Cayley graph; a connection set must avoid them.
* ``k_set``     -- ``{g : a(g) = g^-1}``: the fixed points of the pairing
  map ``tau: s -> a(s^-1)``.
* ``big_omega`` -- ``k_set`` minus ``omega``: tau-fixed elements that may
  appear alone in a connection set.
* ``mho``       -- complement of ``k_set``: elements moved by tau; they can
  occur in a connection set only together with their tau-partner.
* ``fix``       -- ``{g : a(g) = g}``.

``tau`` is an involution on the whole group; it fixes ``omega`` pointwise,
so its orbits on the complement of ``omega`` are singletons (``big_omega``)
and pairs (inside ``mho``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from ._bits import mask_of, perm_mask
from .errors import GenCayleyError, GroupFileError, ThresholdError
from .groups import FiniteGroup, subgroup_closure

AUT_ENUM_LIMIT = 48


@dataclass(eq=False)
class Automorphism:
    """A bijection on element indices verified to be a group homomorphism."""

    perm: tuple[int, ...]
    parent: FiniteGroup

    def __call__(self, x: int) -> int:
        return self.perm[x]

    @cached_property
    def is_identity(self) -> bool:
        return all(self.perm[i] == i for i in range(len(self.perm)))

    @cached_property
    def is_involution(self) -> bool:
        """a*a = id and a != id."""
        p = self.perm
        return not self.is_identity and all(p[p[i]] == i for i in range(len(p)))

    @cached_property
    def squares_to_identity(self) -> bool:
        p = self.perm
        return all(p[p[i]] == i for i in range(len(p)))

    @cached_property
    def inverse_perm(self) -> tuple[int, ...]:
        out = [0] * len(self.perm)
        for i, v in enumerate(self.perm):
            out[v] = i
        return tuple(out)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Automorphism({list(self.perm)} on {self.parent.id})"


def _is_homomorphism(group: FiniteGroup, perm) -> tuple[int, int] | None:
    """First pair (a, b) with perm[a*b] != perm[a]*perm[b], or None."""
    t = group.table
    n = group.order
    for a in range(n):
        row = t[a]
        pa = perm[a]
        prow = t[pa]
        for b in range(n):
            if perm[row[b]] != prow[perm[b]]:
                return (a, b)
    return None


def automorphism_from_perm(group: FiniteGroup, perm) -> Automorphism:
    perm = tuple(int(x) for x in perm)
    if len(perm) != group.order or sorted(perm) != list(range(group.order)):
        raise GenCayleyError(f"not a permutation of 0..{group.order - 1}: {perm}")
    if perm[0] != 0:
        raise GenCayleyError("automorphism must fix the identity element 0")
    bad = _is_homomorphism(group, perm)
    if bad is not None:
        raise GenCayleyError(f"not a homomorphism: fails at pair {bad}")
    return Automorphism(perm, group)


def _generating_sequence(group: FiniteGroup) -> list[int]:
    """Greedy generating set: repeatedly adjoin the smallest missing element."""
    gens: list[int] = []
    closed = (0,)
    while len(closed) < group.order:
        cset = set(closed)
        g = next(x for x in range(group.order) if x not in cset)
        gens.append(g)
        closed = subgroup_closure(group, gens)
    return gens


def enumerate_automorphisms(group: FiniteGroup, limit: int = AUT_ENUM_LIMIT) -> list[Automorphism]:
    """Full automorphism group via generator-image search.

    Images are chosen for a greedy generating sequence, with pruning on
    element order and on partial-homomorphism consistency. Results are
    sorted by permutation and cached on the group object.
    """
    if group.order > limit:
        raise ThresholdError(
            f"automorphism enumeration limited to order <= {limit}, got {group.order}"
        )
    cache = getattr(group, "_aut_cache", None)
    if cache is not None:
        return cache

    n = group.order
    table = group.table
    orders = group.element_orders
    gens = _generating_sequence(group)
    by_order: dict[int, list[int]] = {}
    for x in range(n):
        by_order.setdefault(orders[x], []).append(x)

    results: list[tuple[int, ...]] = []
    img = [-1] * n
    used = [False] * n
    img[0] = 0
    used[0] = True
    known = [0]  # elements with assigned images, in discovery order

    def close_over(gen_count: int, start: int) -> tuple[bool, int]:
        """Propagate images through products with the first gen_count generators.

        Returns (ok, n_added); on failure the caller rolls back n_added
        assignments.
        """
        added = 0
        i = start
        while i < len(known):
            x = known[i]
            ix = img[x]
            for j in range(gen_count):
                g = gens[j]
                y = table[x][g]
                iy = table[ix][img[g]]
                if img[y] == -1:
                    if used[iy]:
                        return False, added
                    img[y] = iy
                    used[iy] = True
                    known.append(y)
                    added += 1
                elif img[y] != iy:
                    return False, added
            i += 1
        return True, added

    def rollback(count: int) -> None:
        for _ in range(count):
            y = known.pop()
            used[img[y]] = False
            img[y] = -1

    def assign(level: int) -> None:
        if level == len(gens):
            results.append(tuple(img))
            return
        g = gens[level]
        for cand in by_order[orders[g]]:
            if used[cand]:
                continue
            restart = len(known)
            if img[g] == -1:
                img[g] = cand
                used[cand] = True
                known.append(g)
                ok, added = close_over(level + 1, restart)
                if ok:
                    assign(level + 1)
                rollback(added + 1)
            elif img[g] == cand:
                assign(level + 1)

    assign(0)
    results.sort()
    autos = [Automorphism(p, group) for p in results]
    if __debug__:
        for a in autos:
            assert _is_homomorphism(group, a.perm) is None
    group._aut_cache = autos
    return autos


def enumerate_involutory_automorphisms(
    group: FiniteGroup, include_identity: bool = False, limit: int = AUT_ENUM_LIMIT
) -> list[Automorphism]:
    """All automorphisms squaring to the identity, in deterministic order.

    The identity map is excluded by default; pass ``include_identity`` to
    admit it (then generalized Cayley graphs degenerate to ordinary Cayley
    graphs, which is useful as a cross-check).
    """
    autos = enumerate_automorphisms(group, limit=limit)
    out = [a for a in autos if a.squares_to_identity and not a.is_identity]
    if include_identity:
        out.insert(0, autos[0] if autos and autos[0].is_identity else Automorphism(tuple(range(group.order)), group))
    return out


def inversion_automorphism(group: FiniteGroup):
    """The map g -> g^-1 when it is a non-identity automorphism.

    Returns ``(automorphism, None)`` on success, else ``(None, reason)``
    with reason ``"nonabelian"`` (inversion is a homomorphism only on
    abelian groups) or ``"equals-identity"`` (every element self-inverse).
    """
    if not group.is_abelian:
        return None, "nonabelian"
    perm = group.inv
    if all(perm[i] == i for i in range(group.order)):
        return None, "equals-identity"
    return Automorphism(tuple(perm), group), None


def compose_automorphisms(a: Automorphism, b: Automorphism) -> Automorphism:
    """a after b."""
    if a.parent is not b.parent:
        raise GenCayleyError("automorphism composition across different groups")
    return Automorphism(tuple(a.perm[x] for x in b.perm), a.parent)


def conjugate_automorphism(beta: Automorphism, alpha: Automorphism) -> Automorphism:
    """beta . alpha . beta^-1; involutory whenever alpha is."""
    if beta.parent is not alpha.parent:
        raise GenCayleyError("automorphism conjugation across different groups")
    binv = beta.inverse_perm
    perm = tuple(beta.perm[alpha.perm[binv[x]]] for x in range(len(binv)))
    return Automorphism(perm, beta.parent)


def product_automorphism(
    a1: Automorphism, a2: Automorphism, product_group: FiniteGroup
) -> Automorphism:
    """Componentwise automorphism on a direct product built by this package.

    ``product_group`` must use the pair numbering ``(a, b) -> a*|G2| + b``
    for the parents of ``a1`` and ``a2``.
    """
    if not (a1.squares_to_identity and a2.squares_to_identity):
        raise GenCayleyError("product automorphism requires both factors to square to identity")
    n1, n2 = a1.parent.order, a2.parent.order
    if product_group.order != n1 * n2:
        raise GenCayleyError(
            f"product group order {product_group.order} != {n1} * {n2}"
        )
    perm = tuple(
        a1.perm[x // n2] * n2 + a2.perm[x % n2] for x in range(n1 * n2)
    )
    return automorphism_from_perm(product_group, perm)


def load_automorphism(path, group: FiniteGroup) -> Automorphism:
    """Load an automorphism from a JSON object file with field ``perm``."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise GroupFileError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "perm" not in data:
        raise GroupFileError(f"{path}: expected an object with field 'perm'")
    perm = data["perm"]
    if not isinstance(perm, list) or len(perm) != group.order:
        raise GroupFileError(f"{path}: field 'perm' must list {group.order} integers")
    try:
        return automorphism_from_perm(group, perm)
    except GenCayleyError as exc:
        raise GroupFileError(f"{path}: field 'perm': {exc}") from exc


# ---------------------------------------------------------------------------
# derived sets


@dataclass(eq=False)
class AlphaContext:
    """An involution of Aut(G) bundled with its derived element sets."""

    alpha: Automorphism
    omega: tuple[int, ...]
    big_omega: tuple[int, ...]
    mho: tuple[int, ...]
    fix: tuple[int, ...]
    k_set: tuple[int, ...]

    @property
    def group(self) -> FiniteGroup:
        return self.alpha.parent

    @cached_property
    def omega_mask(self) -> int:
        return mask_of(self.omega)

    @cached_property
    def big_omega_mask(self) -> int:
        return mask_of(self.big_omega)

    @cached_property
    def mho_mask(self) -> int:
        return mask_of(self.mho)

    def tau(self, x: int) -> int:
        """The pairing map s -> alpha(s^-1)."""
        return self.alpha.perm[self.group.inv[x]]

    @cached_property
    def tau_orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of tau on the complement of omega, sorted by least element.

        Singleton orbits are exactly the big_omega elements, pairs lie in
        mho. Valid connection sets are exactly the unions of these orbits.
        """
        out = []
        seen = 0
        avoid = self.omega_mask
        for x in range(self.group.order):
            if avoid >> x & 1 or seen >> x & 1:
                continue
            y = self.tau(x)
            orbit = (x,) if y == x else (x, y)
            for z in orbit:
                seen |= 1 << z
            out.append(orbit)
        return tuple(out)


def alpha_context(group: FiniteGroup, alpha: Automorphism) -> AlphaContext:
    """Compute the five derived sets of an involution by direct enumeration."""
    if alpha.parent is not group:
        raise GenCayleyError("automorphism does not belong to this group")
    if not alpha.squares_to_identity:
        raise GenCayleyError("alpha must square to the identity")
    perm = alpha.perm
    inv = group.inv
    table = group.table
    n = group.order
    omega = sorted({table[perm[inv[g]]][g] for g in range(n)})
    k_set = [g for g in range(n) if perm[g] == inv[g]]
    omega_set = set(omega)
    big_omega = [g for g in k_set if g not in omega_set]
    mho = [g for g in range(n) if perm[g] != inv[g]]
    fix = [g for g in range(n) if perm[g] == g]
    ctx = AlphaContext(
        alpha=alpha,
        omega=tuple(omega),
        big_omega=tuple(big_omega),
        mho=tuple(mho),
        fix=tuple(fix),
        k_set=tuple(k_set),
    )
    if __debug__:
        full = (1 << n) - 1
        assert ctx.omega_mask | ctx.big_omega_mask | ctx.mho_mask == full
        assert ctx.omega_mask & ctx.big_omega_mask == 0
        assert (ctx.omega_mask | ctx.big_omega_mask) & ctx.mho_mask == 0
        assert ctx.omega_mask & 1, "identity always lies in omega"
        assert perm_mask(perm, ctx.omega_mask) == ctx.omega_mask
        assert all(ctx.tau(w) == w for w in omega), "tau fixes omega pointwise"
        assert all(ctx.tau(ctx.tau(x)) == x for x in range(n))
    return ctx
