"""
Strings and string formatting templates used by the monodromy subpackage.
"""

#: Message displayed when a system is built without any nonzero coefficient.
EMPTY_SYSTEM = "A Newton system needs at least one nonzero polynomial Pᵢ!"

#: Message displayed when chart fields are requested for a system outside
#: the Cherkas family.
NOT_CHERKAS = "Chart fields are defined for systems quadratic in y (got m={m})!"

#: Message displayed when chart fields are requested with P₀ ≡ 0.
ZERO_P0 = "Chart fields require P₀ ≢ 0!"

#: Message displayed when the shifted chart is requested with cₙ = 0.
UNDEFINED_SHIFT = "The shift y* = -bₙ/(2cₙ) is undefined for cₙ = 0!"

#: Message displayed when a Liénard predicate receives a zero polynomial.
NOT_LIENARD = "Liénard monodromy needs P₀ ≢ 0 and P₁ ≢ 0 (got P₀={p0}, P₁={p1})!"

#: Message displayed when the potential predicate receives P₀ ≡ 0.
DEGENERATE_POTENTIAL = "The potential system with P₀ ≡ 0 is degenerate!"

#: Message displayed when the descent and the curve search disagree.
EQUIVALENCE_VIOLATION = "Descent and curve search disagree on {chart}: descent verdicts {descent}, curve witnesses {witnesses}!"

#: Message displayed when the sign predicate receives P₀ ≡ 0.
ZERO_SIGN_POLYNOMIAL = "The sign of x·P₀(x) is undefined for P₀ ≡ 0!"

# flake8: noqa: E501
