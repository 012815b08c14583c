"""Periodic-orbit atlas of the spatial Hill lunar problem.

Subpackage map:

- :mod:`hillatlas.dynamics` — rotating-frame vector field, symmetries,
  equilibria, collinear linear analysis
- :mod:`hillatlas.ks` — Kustaanheimo–Stiefel regularized chart
- :mod:`hillatlas.propagation` — high-order propagation, events, monodromy
- :mod:`hillatlas.shooting` — symmetric periodic-orbit correctors
- :mod:`hillatlas.floquet` — multiplier classification, stability indices,
  rotation numbers and Maslov-type index bookkeeping
- :mod:`hillatlas.families` — family continuation, critical-orbit detection,
  branch switching
- :mod:`hillatlas.atlas` — bifurcation graph assembly and table/graph export
- :mod:`hillatlas.cli` — command-line driver (``hill-atlas``)
"""

__version__ = "0.1.0"
