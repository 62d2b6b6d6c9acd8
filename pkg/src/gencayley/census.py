"""Catalog sweep: decide both code kinds for every (group, involution,
subgroup) triple and serialize the results.

Reports are deterministic: records are produced in (group order, group id,
involution index, subgroup) order regardless of the worker count, and the
default serialization excludes timings so that repeated runs are
byte-identical. Pass ``with_timings`` to include the per-decision
milliseconds (then reports are for human reading, not for diffing).
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .automorphisms import Automorphism, alpha_context, enumerate_involutory_automorphisms
from .codes import decide_subgroup_pc, decide_subgroup_tpc
from .groups import FiniteGroup, build_group, enumerate_subgroups, subgroup

DEFAULT_CENSUS_MAX_ORDER = 24


def catalog(max_order: int = DEFAULT_CENSUS_MAX_ORDER) -> list[FiniteGroup]:
    """The default group catalog up to a maximum order.

    Cyclic and dihedral groups, every non-cyclic abelian group (by
    invariant-factor chains, so each isomorphism type appears once), and
    the symmetric groups S3 and S4. Sorted by (order, id).
    """
    specs: list[str] = []
    specs.extend(f"cyclic:{n}" for n in range(1, max_order + 1))
    specs.extend(f"dihedral:{n}" for n in range(3, max_order // 2 + 1))
    specs.extend(
        "abelian:" + ",".join(str(d) for d in chain)
        for chain in _invariant_factor_chains(max_order)
    )
    if max_order >= 6:
        specs.append("symmetric:3")
    if max_order >= 24:
        specs.append("symmetric:4")
    groups = [build_group(s) for s in specs]
    groups.sort(key=lambda g: (g.order, g.id))
    return groups


def _invariant_factor_chains(max_order: int) -> list[tuple[int, ...]]:
    """Chains (d1, ..., dk), k >= 2, each dividing the next, product bounded."""
    found: list[tuple[int, ...]] = []

    def extend(chain: list[int], prod: int) -> None:
        if len(chain) >= 2:
            found.append(tuple(chain))
        step = chain[-1]
        nxt = step
        while prod * nxt <= max_order:
            extend(chain + [nxt], prod * nxt)
            nxt += step

    for d in range(2, max_order + 1):
        if d * d <= max_order:
            extend([d], d)
    found.sort()
    return found


@dataclass(eq=False)
class CensusRecord:
    group_id: str
    group_order: int
    alpha_index: int | None
    subgroup: tuple[int, ...] | None
    alpha_preserves_subgroup: bool | None
    is_pc: bool | None
    pc_witness: tuple[int, ...] | None
    pc_refutation: str | None
    is_tpc: bool | None
    tpc_witness: tuple[int, ...] | None
    tpc_refutation: str | None
    decide_pc_ms: float | None = None
    decide_tpc_ms: float | None = None
    note: str | None = None

    def payload(self, with_timings: bool = False) -> dict:
        out = {
            "group": self.group_id,
            "order": self.group_order,
            "alpha": self.alpha_index,
            "subgroup": list(self.subgroup) if self.subgroup is not None else None,
            "alpha_preserves_subgroup": self.alpha_preserves_subgroup,
            "is_pc": self.is_pc,
            "pc_witness": list(self.pc_witness) if self.pc_witness is not None else None,
            "pc_witness_size": len(self.pc_witness) if self.pc_witness is not None else None,
            "pc_refutation": self.pc_refutation,
            "is_tpc": self.is_tpc,
            "tpc_witness": list(self.tpc_witness) if self.tpc_witness is not None else None,
            "tpc_witness_size": len(self.tpc_witness) if self.tpc_witness is not None else None,
            "tpc_refutation": self.tpc_refutation,
            "note": self.note,
        }
        if with_timings:
            out["decide_pc_ms"] = self.decide_pc_ms
            out["decide_tpc_ms"] = self.decide_tpc_ms
        return out


def _task_records(args) -> list[CensusRecord]:
    group, alpha_index, perm, subgroup_sets = args
    alpha = Automorphism(perm, group)
    ctx = alpha_context(group, alpha)
    records = []
    for elements in subgroup_sets:
        sub = subgroup(group, elements)
        t0 = time.perf_counter()
        pc = decide_subgroup_pc(sub, ctx)
        t1 = time.perf_counter()
        tpc = decide_subgroup_tpc(sub, ctx)
        t2 = time.perf_counter()
        records.append(
            CensusRecord(
                group_id=group.id,
                group_order=group.order,
                alpha_index=alpha_index,
                subgroup=elements,
                alpha_preserves_subgroup=tpc.alpha_preserves_subgroup,
                is_pc=pc.success,
                pc_witness=pc.subset.elements if pc.success else None,
                pc_refutation=pc.refutation,
                is_tpc=tpc.success,
                tpc_witness=tpc.subset.elements if tpc.success else None,
                tpc_refutation=tpc.refutation,
                decide_pc_ms=(t1 - t0) * 1000.0,
                decide_tpc_ms=(t2 - t1) * 1000.0,
            )
        )
    return records


def census_records(
    max_order: int = DEFAULT_CENSUS_MAX_ORDER, workers: int = 1
) -> list[CensusRecord]:
    """Run the full sweep; one record per (group, involution, subgroup).

    A group with no involutory automorphism contributes a single
    placeholder record noting the empty sweep. Results are merged in task
    order, so the output is identical for any worker count.
    """
    tasks = []
    placeholders = {}
    order_keys = []
    for group in catalog(max_order):
        alphas = enumerate_involutory_automorphisms(group)
        if not alphas:
            placeholders[group.id] = CensusRecord(
                group_id=group.id,
                group_order=group.order,
                alpha_index=None,
                subgroup=None,
                alpha_preserves_subgroup=None,
                is_pc=None,
                pc_witness=None,
                pc_refutation=None,
                is_tpc=None,
                tpc_witness=None,
                tpc_refutation=None,
                note="no-involutory-automorphisms",
            )
            order_keys.append(("placeholder", group.id))
            continue
        subgroup_sets = tuple(s.elements for s in enumerate_subgroups(group))
        for idx, alpha in enumerate(alphas):
            tasks.append((group, idx, alpha.perm, subgroup_sets))
            order_keys.append(("task", len(tasks) - 1))

    if workers <= 1:
        task_results = [_task_records(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            task_results = list(pool.map(_task_records, tasks, chunksize=chunk))

    records: list[CensusRecord] = []
    for kind, key in order_keys:
        if kind == "placeholder":
            records.append(placeholders[key])
        else:
            records.extend(task_results[key])
    return records


CSV_COLUMNS = [
    "group",
    "order",
    "alpha",
    "subgroup",
    "alpha_preserves_subgroup",
    "is_pc",
    "pc_witness",
    "pc_witness_size",
    "pc_refutation",
    "is_tpc",
    "tpc_witness",
    "tpc_witness_size",
    "tpc_refutation",
    "note",
]
CSV_TIMING_COLUMNS = ["decide_pc_ms", "decide_tpc_ms"]


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ";".join(str(v) for v in value)
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def emit_report(records, fmt: str = "jsonl", with_timings: bool = False) -> str:
    """Serialize records deterministically as JSON lines or CSV."""
    if fmt == "jsonl":
        lines = [
            json.dumps(r.payload(with_timings), sort_keys=True, separators=(",", ":"))
            for r in records
        ]
        return "".join(line + "\n" for line in lines)
    if fmt == "csv":
        columns = CSV_COLUMNS + (CSV_TIMING_COLUMNS if with_timings else [])
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in records:
            payload = r.payload(with_timings)
            writer.writerow([_csv_cell(payload[c]) for c in columns])
        return buf.getvalue()
    raise ValueError(f"format must be 'jsonl' or 'csv', got {fmt!r}")
