"""Link determinants, rational tangle replacement and quasi-alternating certificates."""

from .diagram import (LinkDiagram, UNKNOT, canonical_key, connected_sum, mirror,
                      parse_pd, simplify, smooth)
from .families import (PretzelSpec, classify_pretzel, pretzel_determinant,
                       pretzel_diagram, torus2)
from .qa import certify, qa_connected_sum, verify
from .statesum import determinant_jones, jones_polynomial, kauffman_bracket
from .tait import goeritz_determinant, spanning_tree_profile, tait_graph, tree_determinant
from .tangle import RationalTangle, replace_with_tangle, twist

__version__ = "0.1.0"

__all__ = [
    "LinkDiagram", "UNKNOT", "canonical_key", "connected_sum", "mirror", "parse_pd",
    "simplify", "smooth", "PretzelSpec", "classify_pretzel", "pretzel_determinant",
    "pretzel_diagram", "torus2", "certify", "qa_connected_sum", "verify",
    "determinant_jones", "jones_polynomial", "kauffman_bracket", "goeritz_determinant",
    "spanning_tree_profile", "tait_graph", "tree_determinant", "RationalTangle",
    "replace_with_tangle", "twist",
]
