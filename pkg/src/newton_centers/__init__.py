"""
*newton_centers* decides monodromy at infinity, the center-focus problem
and global centers for Newton systems ẋ = y, ẏ = Σ Pᵢ(x)yⁱ exactly, using
the subpackages and submodules documented below.
"""
from newton_centers.center.global_center import decide_global_center
from newton_centers.center.kukles import kukles_global_center
from newton_centers.center.local_center import decide_local_center
from newton_centers.cli.parser import parse_system
from newton_centers.monodromy.decide import decide_monodromy
from newton_centers.monodromy.newton_system import NewtonSystem
