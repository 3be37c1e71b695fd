"""Run configuration shared by the analysis pipeline and the CLI."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Config:
    # caps
    max_enum: int = 10**6       # element-enumeration cap (exact Sylow needs it)
    bar_cap: int = 32           # largest subgroup handled by the bar complex
    union_cap: int = 4096       # max number of edge-orbit unions enumerated
    subgraph_depth: int = 1     # recursion depth for invariant-subgraph analysis
    seed: int = 0               # drives every randomized scan
    # scan budgets (documented: the certificate scan always processes at
    # least scan_quota cyclic subgroups before the early exit on a resolved
    # interval may trigger; for groups above max_enum the subgroup list is
    # sampled from word_budget random words of length <= max_word_length,
    # keeping at most max_subgroups distinct subgroups)
    scan_quota: int = 64
    word_budget: int = 1500
    max_word_length: int = 12
    max_subgroups: int = 400

    def __post_init__(self):
        for name in (
            "max_enum",
            "bar_cap",
            "union_cap",
            "subgraph_depth",
            "scan_quota",
            "word_budget",
            "max_word_length",
            "max_subgroups",
        ):
            if getattr(self, name) < 1 and name != "subgraph_depth":
                raise ValueError(f"{name} must be >= 1")
        if self.subgraph_depth < 0:
            raise ValueError("subgraph_depth must be >= 0")
