"""Residue engine for plus and minus deformation families."""
