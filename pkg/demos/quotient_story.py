"""Tour: pushing the relative condition through a quotient.

Take Z(12) and a nonzero idempotent e.  The right annihilator of e is
a two-sided ideal; divide it out and e's image becomes the quotient's
idempotent.  When the original ring is symmetric relative to e, the
quotient turns out to be right reversible relative to that image.
This script builds the whole chain with the library's own ideal and
quotient machinery, then shows the collapse case where the image of e
dies in the quotient and the question evaporates.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from finring import (
    build_expr, check_property, is_ideal, quotient, right_annihilator,
)

R = build_expr("Z(12)")
e = 4
print("ring %s, idempotent e = %s" % (R.provenance, R.labels[e]))

ann = right_annihilator(R, e)
print("right annihilator of e:", [R.labels[int(i)] for i in ann])
print("is a two-sided ideal:", is_ideal(R, ann))

v = check_property(R, "e_symmetric", e)
print("upstairs, symmetric relative to e:", v.status)

Q, proj = quotient(R, [int(i) for i in ann])
ebar = int(proj[e])
print("\nquotient has order %d, image of e is %s" % (Q.order,
                                                     Q.labels[ebar]))
v = check_property(Q, "right_e_reversible", ebar)
print("downstairs, right reversible relative to that image:", v.status)

# now the degenerate direction: divide out an ideal that contains e
# itself and the relative question disappears with it
print("\n-- collapse case --")
I = [0, 4, 8]
Q2, proj2 = quotient(R, I)
ebar2 = int(proj2[e])
print("dividing out", [R.labels[i] for i in I])
print("image of e:", Q2.labels[ebar2], "(the zero coset)")
print("nothing relative to e survives; the check refuses politely:")
try:
    check_property(Q2, "right_e_reversible", ebar2)
except Exception as ex:
    print("  ", type(ex).__name__, "-", ex)
