"""Instance transformations with certificate lifting in both directions."""

from .artifact import ReductionArtifact, project
from .directed import arc_colored_to_matched_digraph, padded_palette, pc_path_to_pc_circuit
from .gadgets import (PGadget, build_p_gadget, pc_gadget_graph, pc_path_gadget_graph,
                      verify_p_gadget)
from .linegraphs import ec_line_graph, pm_line_graph, pm_line_vertex
from .local2 import (digraph_to_local2, from_matched_graph, local2_from_coloring, split_vertex,
                     terminal_matched_graph, to_matched_graph)
from .rainbow import class_partitions, rainbow_star_reduction, replace_color_classes_with_gadget

__all__ = [
    "PGadget", "ReductionArtifact", "arc_colored_to_matched_digraph", "build_p_gadget",
    "class_partitions", "digraph_to_local2", "ec_line_graph", "from_matched_graph",
    "local2_from_coloring", "padded_palette", "pc_gadget_graph", "pc_path_gadget_graph",
    "pc_path_to_pc_circuit", "pm_line_graph", "pm_line_vertex", "project",
    "rainbow_star_reduction", "replace_color_classes_with_gadget", "split_vertex",
    "terminal_matched_graph", "to_matched_graph", "verify_p_gadget",
]
