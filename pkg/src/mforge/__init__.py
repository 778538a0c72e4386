"""Genus systems of primitive diagonal-type permutation groups."""
from __future__ import annotations

__version__ = "0.1.0"
