"""Order relations on translation classes of lattice sets and mean entropy.

Submodules:

* :mod:`~entropy_order.lattice_set`: finite sets in Z^2, canonical forms, grids.
* :mod:`~entropy_order.order_engine`: saturation of the order axioms with traces.
* :mod:`~entropy_order.octogon`: boundary 8-tuples of convex octogons and molecules.
* :mod:`~entropy_order.entropy_oracle`: exact marginal entropies of Gibbs states.
"""
from .lattice_set import LatticeSet, Point, Vector, chess, from_grid, to_grid

__all__ = ["LatticeSet", "Point", "Vector", "chess", "from_grid", "to_grid"]
__version__ = "0.1.0"
