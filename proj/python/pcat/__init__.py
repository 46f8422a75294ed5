"""Workbench for categories of two-colored partitions."""

from ._core import (
    Partition,
    PcatError,
    analysis_report,
    analyze,
    check_names,
    classify_tuple,
    closure,
    compose,
    connect_turn,
    consistent_rows,
    disconnect_point,
    enumerate_partitions,
    equivalent,
    erase_turn,
    instantiate_row,
    involution,
    is_projective,
    project,
    reflect,
    rotate,
    rotate_cyclic,
    run_check,
    tensor,
)

__all__ = [
    "Partition",
    "PcatError",
    "analysis_report",
    "analyze",
    "check_names",
    "classify_tuple",
    "closure",
    "compose",
    "connect_turn",
    "consistent_rows",
    "disconnect_point",
    "enumerate_partitions",
    "equivalent",
    "erase_turn",
    "instantiate_row",
    "involution",
    "is_projective",
    "project",
    "reflect",
    "rotate",
    "rotate_cyclic",
    "run_check",
    "tensor",
]
