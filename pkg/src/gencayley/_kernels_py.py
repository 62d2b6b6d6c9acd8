"""Pure-Python kernels: exhaustive bitmask scans used by oracles and sweeps.

Same signatures and semantics as the compiled module ``_kernels``; selected
at import time by :mod:`gencayley.kernels` when the extension is missing.
All set arguments are bitmasks (bit i = element i); neighbor masks are the
adjacency rows of a generalized Cayley graph.
"""

from __future__ import annotations


def scan_codes(nbr_masks, kind: int) -> list[int]:
    """All vertex subsets that are codes, as ascending masks.

    kind 0: perfect codes (members have no neighbor in the set, everyone
    else exactly one). kind 1: total perfect codes (every vertex has
    exactly one neighbor in the set). Pure neighbor counting; no algebraic
    shortcuts, so this stays an independent oracle.
    """
    n = len(nbr_masks)
    nbr = list(nbr_masks)
    out = []
    for xm in range(1 << n):
        ok = True
        for v in range(n):
            c = (nbr[v] & xm).bit_count()
            if kind == 1:
                if c != 1:
                    ok = False
                    break
            elif xm >> v & 1:
                if c != 0:
                    ok = False
                    break
            elif c != 1:
                ok = False
                break
        if ok:
            out.append(xm)
    return out


def scan_subgroup_codes(trans_masks, num_orbits: int, h_masks, n: int, kind: int) -> list[int]:
    """For each subgroup mask, the first orbit-subset whose connection set
    makes it a code, else -1.

    ``trans_masks`` is flattened ``num_orbits x n``: entry ``o*n + g`` holds
    the neighbors vertex g gains when pairing-orbit o joins the connection
    set. Orbit subsets are scanned in ascending mask order and each
    candidate is checked by plain neighbor counting.
    """
    m = num_orbits
    res = [-1] * len(h_masks)
    undecided = len(h_masks)
    for sm in range(1 << m):
        nbr = [0] * n
        for o in range(m):
            if sm >> o & 1:
                base = o * n
                for v in range(n):
                    nbr[v] |= trans_masks[base + v]
        for i, hm in enumerate(h_masks):
            if res[i] != -1:
                continue
            ok = True
            for v in range(n):
                c = (nbr[v] & hm).bit_count()
                if kind == 1:
                    if c != 1:
                        ok = False
                        break
                elif hm >> v & 1:
                    if c != 0:
                        ok = False
                        break
                elif c != 1:
                    ok = False
                    break
            if ok:
                res[i] = sm
                undecided -= 1
        if undecided == 0:
            break
    return res


# verdict bits produced by scan_check_routes, one evaluation route per bit
AMO_GRAPH = 1 << 0
AMO_TRANSLATES = 1 << 1
AMO_PRODUCTSET = 1 << 2
DOM_GRAPH = 1 << 3
DOM_TRANSLATES = 1 << 4
IND_GRAPH = 1 << 5
IND_ALGEBRAIC = 1 << 6
PC_GRAPH = 1 << 7
PC_PARTITION = 1 << 8
PC_ALGEBRAIC = 1 << 9
TPC_GRAPH = 1 << 10
TPC_PARTITION = 1 << 11
TPC_ALGEBRAIC = 1 << 12


def scan_check_routes(n, mul_flat, inv_perm, alpha_perm, s_elems, nbr_masks, x_masks) -> list[int]:
    """Evaluate every route of the code criteria for a batch of subsets X.

    Returns one verdict int per X mask, with the bit layout of the
    ``*_GRAPH`` / ``*_PARTITION`` / ... constants above. Callers assert that
    the routes inside each group agree; that agreement is the content of
    the equivalence suites.
    """
    full = (1 << n) - 1
    r = len(s_elems)
    smask = 0
    for s in s_elems:
        smask |= 1 << s
    ss_inv = 0
    for s1 in s_elems:
        row = s1 * n
        for s2 in s_elems:
            ss_inv |= 1 << mul_flat[row + inv_perm[s2]]
    not_e = ~1

    out = []
    for xm in x_masks:
        xs = []
        ax = 0
        mm = xm
        while mm:
            low = mm & -mm
            v = low.bit_length() - 1
            mm ^= low
            xs.append(v)
            ax |= 1 << alpha_perm[v]
        sizex = len(xs)

        union_tr = 0
        disjoint_sum = 0
        for s in s_elems:
            t = 0
            aa = ax
            while aa:
                low = aa & -aa
                a = low.bit_length() - 1
                aa ^= low
                t |= 1 << mul_flat[a * n + s]
            union_tr |= t
            disjoint_sum += sizex

        p1 = 0  # alpha(X^-1 X) = alpha(X^-1) alpha(X)
        p2 = 0  # alpha(X^-1) X
        for a in xs:
            ia = inv_perm[a]
            row_ia = ia * n
            row_aia = alpha_perm[ia] * n
            for b in xs:
                p1 |= 1 << alpha_perm[mul_flat[row_ia + b]]
                p2 |= 1 << mul_flat[row_aia + b]

        amo_g = True
        dom_g = True
        ind_g = True
        out_one = True
        all_one = True
        for v in range(n):
            c = (nbr_masks[v] & xm).bit_count()
            if c > 1:
                amo_g = False
            if xm >> v & 1:
                if c != 0:
                    ind_g = False
            else:
                if c == 0:
                    dom_g = False
                if c != 1:
                    out_one = False
            if c != 1:
                all_one = False

        amo_tr = disjoint_sum == union_tr.bit_count()
        amo_ps = (p1 & ss_inv & not_e) == 0
        dom_tr = (full & ~xm & ~union_tr) == 0
        ind_alg = (p2 & smask) == 0
        pc_part = sizex * (r + 1) == n and (xm | union_tr) == full
        pc_alg = sizex * (r + 1) == n and ind_alg and amo_ps
        tpc_part = sizex * r == n and union_tr == full
        tpc_alg = sizex * r == n and amo_ps

        verdict = 0
        if amo_g:
            verdict |= AMO_GRAPH
        if amo_tr:
            verdict |= AMO_TRANSLATES
        if amo_ps:
            verdict |= AMO_PRODUCTSET
        if dom_g:
            verdict |= DOM_GRAPH
        if dom_tr:
            verdict |= DOM_TRANSLATES
        if ind_g:
            verdict |= IND_GRAPH
        if ind_alg:
            verdict |= IND_ALGEBRAIC
        if ind_g and out_one:
            verdict |= PC_GRAPH
        if pc_part:
            verdict |= PC_PARTITION
        if pc_alg:
            verdict |= PC_ALGEBRAIC
        if all_one:
            verdict |= TPC_GRAPH
        if tpc_part:
            verdict |= TPC_PARTITION
        if tpc_alg:
            verdict |= TPC_ALGEBRAIC
        out.append(verdict)
    return out
