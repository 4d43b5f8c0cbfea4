"""bisphere: certified classification of compact packings of Euclidean
3-space by spheres of two sizes.

The pipeline re-derives the candidate radius ratios from ring ("necklace")
angle equations, certifies the surviving ratios with exact algebra and
interval arithmetic, enumerates the two possible neighbor shells at
r = sqrt(2)-1, and constructs and verifies the packings obtained by filling
the octahedral holes of close-packings.
"""

__version__ = "0.1.0"
