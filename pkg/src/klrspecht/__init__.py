"""Universal graded Specht modules of cyclotomic KLR algebras, computed exactly."""

__version__ = "0.1.0"

from .garnir import COLUMN, ROW, GarnirData, garnir_data, garnir_nodes
from .ground import GroundData, RootElement, WeightElement, defect
from .klr import KlrAlgebra, KlrElement, normal_form, parse_element, sign_map, star
from .modules import GradedCharacter, PermutationModule, induced_graded_dimension, segment
from .perms import POLICY
from .specht import SpechtConfig, SpechtModule, build_specht, garnir_element
from .tableaux import Multipartition, Node, Tableau, parse_node, parse_shape, parse_tableau

__all__ = [
    "COLUMN",
    "POLICY",
    "ROW",
    "GarnirData",
    "GradedCharacter",
    "GroundData",
    "KlrAlgebra",
    "KlrElement",
    "Multipartition",
    "Node",
    "PermutationModule",
    "RootElement",
    "SpechtConfig",
    "SpechtModule",
    "Tableau",
    "WeightElement",
    "__version__",
    "build_specht",
    "defect",
    "garnir_data",
    "garnir_element",
    "garnir_nodes",
    "induced_graded_dimension",
    "normal_form",
    "parse_element",
    "parse_node",
    "parse_shape",
    "parse_tableau",
    "segment",
    "sign_map",
    "star",
]
