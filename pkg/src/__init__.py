"""
Monge-Ampere solver: monotone wide-stencil scheme with overlapping domain decomposition
"""

__version__ = "0.1.0"
