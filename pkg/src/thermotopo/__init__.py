"""
Thermotopo - Topological Order of Mixed States

Spectral structure of -log(rho) and many-body Chern numbers of its gapped
manifolds, computed by exact diagonalization and U(N) Wilson loops over
twisted boundary conditions.
"""

__version__ = "0.1.0"
__author__ = "Thermotopo Team"
