#: ẏ = -x + xy + x²y²: a monodromic origin that is a focus.
FOCUS = [[0, -1], [0, 1], [0, 0, 1]]

#: ẏ = -x - x³ + xy + x²y², a focus with n odd.
ODD_FOCUS = [[0, -1, 0, -1], [0, 1], [0, 0, 1]]

#: Pᵢ = Aᵢ(x²)·2x with A₀ = -1 - t, A₁ = 1, A₂ = -t: a (G2ii) center.
COMPOSITION_CENTER = [[0, -2, 0, -2], [0, 2], [0, 0, 0, -2]]

#: ẏ = -x - x³ + x³y²: a local center with c > 0.
UNBOUNDED_CENTER = [[0, -1, 0, -1], [], [0, 0, 0, 1]]

#: ẏ = -2x - 2x⁵ + 2xy: a Liénard global center through (L1).
LIENARD_CENTER = [[0, -2, 0, 0, 0, -2], [0, 2]]

#: ẏ = -x + xy: a Liénard center whose infinity fails (L1) and (L2).
LIENARD_LOCAL_CENTER = [[0, -1], [0, 1]]
