"""
Strings and string formatting templates used by the center subpackage.
"""

NOT_AN_EQUILIBRIUM: str = "The origin is not an equilibrium: P₀(0) = {value} ≠ 0!"
ORIGIN_NOT_MONODROMIC: str = "The origin of {system} is not monodromic ({case}); the center problem does not apply!"
HIGH_Y_DEGREE: str = "Local monodromy at the origin is defined for m ≤ 2 (got m={m})!"
ZERO_P0: str = "The center problem requires P₀ ≢ 0!"
BAD_RECONSTRUCTION: str = "Decomposition with r = {r} does not reconstruct P{index} = {expected} (got {actual})!"
DARBOUX_IDENTITY: str = "Leading data violate cₗ₂aₗ₀ = e·bₗ₁² under (G3): {c}·{a} ≠ {e}·{b}²!"
INFINITY_DISAGREES: str = "{system} satisfies {condition} but infinity was found not monodromic ({case})!"
BAD_DELTA: str = "The Kukles parameter δ must be nonpositive (got {delta})!"
BAD_KUKLES_DEGREE: str = "The Kukles family needs n ≥ 2 (got {n})!"
BAD_KUKLES_INDEX: str = "Kukles coefficient index {i} is outside 0..{n}!"
EMPTY_KUKLES: str = "At least one Kukles coefficient a_(n-i,i) must be nonzero!"
ADVISORY_DESCENT_FAILED: str = "Half-plane descent on {chart} did not complete: {error}"
ADVISORY_DISAGREES: str = "Half-plane descent on {chart} ({descent}) disagrees with the curve search ({curve})."

# flake8: noqa: E501
