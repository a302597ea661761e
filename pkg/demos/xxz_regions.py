"""Where the two-spin XXZ-symmetric states sit in the (cx, cz) plane.

Prints a character map of the 21x21 grid used by ``lhvfit xxz plane``:
``.`` non-physical, ``s`` separable, ``e`` entangled without CHSH violation,
``C`` CHSH-violating. The chain-attainable boundary is printed below it.
"""

from lhvfit import TwoSpinCorrelators
from lhvfit.harness import chain_boundary_polyline, xxz_plane_grid

cx, cz = xxz_plane_grid(21)
for z in cz[::-1]:
    row = []
    for x in cx:
        c = TwoSpinCorrelators(x, z)
        row.append("." if not c.physical else "s" if c.separable else "C" if c.horodecki_m > 1 else "e")
    print(f"{z:+.1f} " + " ".join(row))

print("\nchain-attainable boundary (L=12), lower half:")
for x, z in chain_boundary_polyline(12)[::8]:
    print(f"  cx={x:+.3f} cz={z:+.3f}")
