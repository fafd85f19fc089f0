"""Exact-arithmetic engine for Penrose-family aperiodic tilings.

Generates P2/P3 patches by substitution, derives hexagon-boat-star (HBS),
Star, P1 and Gemstones tilings from them by local mappings, and verifies
tile frequencies, vertex configurations, characteristic distances and
forcing properties, all over the golden field Q(phi).
"""

__version__ = "0.1.0"
