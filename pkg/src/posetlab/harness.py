"""Verification suites for the dimension bounds over a fixed corpus.

Each suite checks one inequality per instance and reports Pass, Fail, or
Unknown; cap-limited computations are always Unknown, never Pass. The
corpus is fixed by a manifest (named families plus seeded random posets)
so runs are reproducible; reports are sorted by instance id.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import networkx as nx

from .containment import NotFound, se, wheel_number
from .dimension import Budget, dim_exact
from .errors import BudgetExceeded
from .families import (
    kelly,
    random_cover_planar_with_unique_min,
    standard_example,
    wheel,
)
from .graph_metrics import (
    MINOR_MAX_VERTICES,
    grid_minor,
    verify_grid_subgraph,
    wheel_grid_certificate,
)
from .planar import cover_graph, is_planar, NonPlanarWitness
from .poset import Poset


@dataclass(frozen=True)
class Instance:
    id: str
    poset: Poset
    family: str
    order: int | None = None
    # dimension known from the family construction, usable without a solve
    claimed_dim: int | None = None
    # restrict the instance to the named suites (None = all)
    suites: frozenset[str] | None = None


@dataclass
class InstanceResult:
    instance_id: str
    status: str  # Pass | Fail | Unknown | Skipped
    details: dict = field(default_factory=dict)


@dataclass
class SuiteReport:
    suite: str
    results: list[InstanceResult]

    def __post_init__(self) -> None:
        self.results.sort(key=lambda r: r.instance_id)

    def counts(self) -> dict[str, int]:
        out = {"Pass": 0, "Fail": 0, "Unknown": 0, "Skipped": 0}
        for r in self.results:
            out[r.status] += 1
        return out

    @property
    def failed(self) -> bool:
        return any(r.status == "Fail" for r in self.results)

    @property
    def blocked(self) -> bool:
        return not self.failed and any(r.status == "Unknown" for r in self.results)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "counts": self.counts(),
            "results": [
                {"id": r.instance_id, "status": r.status, "details": r.details}
                for r in self.results
            ],
        }


# -- manifest ------------------------------------------------------------


def default_manifest(random_count: int = 200, random_seed_base: int = 1000) -> dict:
    entries: list[dict] = []
    entries += [{"id": f"standard-{d}", "family": "standard", "order": d} for d in range(2, 8)]
    entries += [{"id": f"wheel-{d}", "family": "wheel", "order": d} for d in range(3, 6)]
    # large enough that the grid suite's n=2 obligation is not vacuous;
    # served by the explicit certificate, so no exact solve is attempted
    entries.append(
        {"id": "wheel-11", "family": "wheel", "order": 11, "suites": ["grid"]}
    )
    entries += [{"id": f"kelly-{d}", "family": "kelly", "order": d} for d in range(3, 7)]
    entries += [
        {"id": "chain-2", "family": "chain", "order": 2},
        {"id": "chain-5", "family": "chain", "order": 5},
        {"id": "fan-4", "family": "fan", "order": 4},
    ]
    for k in range(random_count):
        size = 6 + (k % 11)  # sizes 6..16
        entries.append(
            {
                "id": f"random-{k:03d}",
                "family": "random",
                "seed": random_seed_base + k,
                "size": size,
            }
        )
    return {"instances": entries}


def _chain(n: int) -> Poset:
    els = [f"c{i}" for i in range(n)]
    return Poset.from_cover_pairs(els, list(zip(els, els[1:])))


def _fan(n: int) -> Poset:
    """An antichain of n elements over a single bottom."""
    els = ["bot"] + [f"f{i}" for i in range(n)]
    return Poset.from_cover_pairs(els, [("bot", e) for e in els[1:]])


def build_instance(entry: dict) -> Instance:
    fam = entry["family"]
    suites = frozenset(entry["suites"]) if "suites" in entry else None
    if fam == "standard":
        d = entry["order"]
        return Instance(entry["id"], standard_example(d), fam, d, d, suites)
    if fam == "wheel":
        d = entry["order"]
        return Instance(entry["id"], wheel(d), fam, d, d, suites)
    if fam == "kelly":
        d = entry["order"]
        return Instance(entry["id"], kelly(d), fam, d, d, suites)
    if fam == "chain":
        return Instance(entry["id"], _chain(entry["order"]), fam, entry["order"], None, suites)
    if fam == "fan":
        return Instance(entry["id"], _fan(entry["order"]), fam, entry["order"], None, suites)
    if fam == "random":
        p = random_cover_planar_with_unique_min(entry["seed"], entry["size"])
        return Instance(entry["id"], p, fam, None, None, suites)
    raise ValueError(f"unknown family {fam!r}")


def build_corpus(manifest: dict) -> list[Instance]:
    return [build_instance(e) for e in manifest["instances"]]


def load_manifest(path) -> dict:
    with open(path) as fh:
        manifest = json.load(fh)
    if "instances" not in manifest:
        raise ValueError("manifest has no 'instances' key")
    return manifest


def save_manifest(manifest: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=1)


# -- shared instance analysis ---------------------------------------------


def _cover_planar(inst: Instance) -> bool:
    return not isinstance(is_planar(cover_graph(inst.poset)), NonPlanarWitness)


def _unique_min(inst: Instance) -> bool:
    return len(inst.poset.minimal_elements()) == 1


def _dim(inst: Instance, budget: Budget) -> int:
    return dim_exact(inst.poset, budget=budget).value


def _run(
    suite: str, corpus: list[Instance], check, precondition=None
) -> SuiteReport:
    results = []
    for inst in corpus:
        if inst.suites is not None and suite not in inst.suites:
            results.append(
                InstanceResult(inst.id, "Skipped", {"reason": "out of scope"})
            )
            continue
        if precondition is not None and not precondition(inst):
            results.append(
                InstanceResult(inst.id, "Skipped", {"reason": "precondition"})
            )
            continue
        try:
            ok, details = check(inst)
            results.append(InstanceResult(inst.id, "Pass" if ok else "Fail", details))
        except BudgetExceeded as exc:
            results.append(InstanceResult(inst.id, "Unknown", {"reason": str(exc)}))
    return SuiteReport(suite, results)


# -- suites ----------------------------------------------------------------


def verify_wheel_bound(corpus: list[Instance]) -> SuiteReport:
    """dim(P) <= 2*wheel(P) + 2 on cover-planar unique-min instances."""

    def check(inst: Instance):
        budget = Budget()
        d = _dim(inst, budget)
        # se is a fast lower bound for wheel; it settles most instances
        se_val, _ = se(inst.poset, budget=budget)
        if d <= 2 * se_val + 2:
            return True, {"dim": d, "wheel_lower_bound": se_val}
        w, _ = wheel_number(inst.poset, budget=budget)
        return d <= 2 * w + 2, {"dim": d, "wheel": w}

    return _run(
        "wheel",
        corpus,
        check,
        precondition=lambda i: _unique_min(i) and _cover_planar(i),
    )


def verify_height_bound(corpus: list[Instance]) -> SuiteReport:
    """dim(P) <= 2*height(P) + 2 on cover-planar unique-min instances."""

    def check(inst: Instance):
        d = _dim(inst, Budget())
        h = inst.poset.height()
        return d <= 2 * h + 2, {"dim": d, "height": h}

    return _run(
        "height",
        corpus,
        check,
        precondition=lambda i: _unique_min(i) and _cover_planar(i),
    )


def verify_minimal_tw_bound(corpus: list[Instance]) -> SuiteReport:
    """dim(P) <= m * (4*tw(cover(P)) + 6) on cover-planar instances."""
    from .graph_metrics import treewidth_exact

    def check(inst: Instance):
        budget = Budget()
        d = _dim(inst, budget)
        m = len(inst.poset.minimal_elements())
        g = nx.Graph(inst.poset.cover_pairs())
        g.add_nodes_from(inst.poset.elements)
        tw, _ = treewidth_exact(g, budget=budget)
        return d <= m * (4 * tw + 6), {"dim": d, "minimals": m, "treewidth": tw}

    return _run("minimal-tw", corpus, check, precondition=_cover_planar)


def verify_grid_bound(corpus: list[Instance], n_max: int = 2) -> SuiteReport:
    """dim(P) >= 4n+3 forces an n x n grid minor in the cover graph.

    Wheel instances use their construction dimension and the explicit
    interval-map certificate, so no exact solve or generic minor search is
    needed at any size.
    """
    if n_max > 3:
        raise ValueError("grid obligations are limited to n <= 3")

    def check(inst: Instance):
        budget = Budget()
        if inst.claimed_dim is not None:
            d = inst.claimed_dim
        else:
            d = _dim(inst, budget)
        details: dict = {"dim": d}
        obligations = [n for n in range(2, n_max + 1) if d >= 4 * n + 3]
        if not obligations:
            details["obligations"] = "none"
            return True, details
        for n in obligations:
            if inst.family == "wheel" and inst.order >= 2 * n + 1:
                mapping = wheel_grid_certificate(n, inst.order)
                g = nx.Graph(inst.poset.cover_pairs())
                if not verify_grid_subgraph(g, n, mapping):
                    return False, {**details, "failed_n": n}
                details[f"n={n}"] = "certificate"
                continue
            g = nx.Graph(inst.poset.cover_pairs())
            g.add_nodes_from(inst.poset.elements)
            if g.number_of_nodes() > MINOR_MAX_VERTICES:
                raise BudgetExceeded("host too large for generic minor search")
            found = grid_minor(g, n, budget=budget)
            if isinstance(found, NotFound):
                return False, {**details, "failed_n": n}
            details[f"n={n}"] = "minor"
        return True, details

    return _run(
        "grid",
        corpus,
        check,
        precondition=lambda i: _unique_min(i) and _cover_planar(i),
    )


SUITES = {
    "wheel": verify_wheel_bound,
    "height": verify_height_bound,
    "minimal-tw": verify_minimal_tw_bound,
    "grid": verify_grid_bound,
}


def run_suites(names: list[str], corpus: list[Instance]) -> list[SuiteReport]:
    return [SUITES[name](corpus) for name in names]
