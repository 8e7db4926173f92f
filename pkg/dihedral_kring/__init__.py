"""
Dihedral K-Ring Auditor
=======================
Exact arithmetic in the representation rings of dihedral groups and a
mechanical audit of the K-ring presentations of their classifying spaces.
"""

__version__ = "1.0.0"
