import os

from newton_centers.utils.choice_enum import ChoiceEnum

TESTS_DIRECTORY = os.path.dirname(os.path.realpath(__file__))
DOCS_EXAMPLES_PATH = os.path.join(
    os.path.dirname(TESTS_DIRECTORY), "docs", "examples"
)
GOLDEN_CERTIFICATE_PATH = os.path.join(
    DOCS_EXAMPLES_PATH, "analyze_global_center.json"
)

#: ẏ = -x, the linear (isochronous) center.
HARMONIC = [[0, -1]]

#: ẏ = -x - x³y², a global center through (C1) and (G1).
REVERSIBLE_CENTER = [[0, -1], [], [0, 0, 0, -1]]

#: ẏ = -x + y³, never monodromic at infinity.
CUBIC_IN_Y = [[0, -1], [], [], [1]]

#: ẏ = -x - x³, a potential global center.
QUARTIC_POTENTIAL = [[0, -1, 0, -1]]

#: ẏ = -x³, a degenerate potential center.
PURE_QUARTIC_POTENTIAL = [[0, 0, 0, -1]]

#: ẏ = -x + xy - xy², a global center through (C3) with e = 1 and (G3).
DARBOUX_CENTER = [[0, -1], [0, 1], [0, -1]]

#: ẏ = -x³ - x³y², monodromic at infinity through (M2).
M2_SYSTEM = [[0, 0, 0, -1], [], [0, 0, 0, -1]]

#: Liénard systems ẏ = -x³ + P₁y: (L2) holds for P₁ = x and fails for 3x.
LIENARD_L2 = [[0, 0, 0, -1], [0, 1]]
LIENARD_NOT_MONODROMIC = [[0, 0, 0, -1], [0, 3]]


class ChoiceEnumDefinition(ChoiceEnum):
    A = "A"
    B = "B"
    C = "C"
