"""Edge-to-edge spherical tilings by regular polygons.

Subpackages:

- ``sphkernel``: spherical trigonometry of regular polygons
- ``vertexcomb``: vertex-type enumeration and arrangements
- ``algsolve``: angle-system solving and exact golden algebra
- ``tilemap``: combinatorial maps, validation, censuses, isomorphism
- ``catalog``: constructors for every classified tiling and the
  subdivision / truncation / cupola operators
- ``embedder``: unit-sphere embeddings and OBJ/JSON export
- ``cli``: the ``sphtile`` command-line interface
"""

__version__ = "0.1.0"
