"""Tour: idempotent censuses in the block-constrained matrix families.

Constant-diagonal triangular rings have almost no idempotents, the
constrained 3x3 family has a catalogue of them built from the base
ring's own idempotents, and the twisted 2x2 pairing ring has so many
that none of them can rescue reversibility.  This script counts them
all and replays one failing witness end to end.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from finring import (
    build_expr, check_property, idempotents, replay_witness,
)

for text in ("D(3,Z(2))", "V(3,Z(2))", "H(Z(3),2,1)", "K(Z(3),0)"):
    R = build_expr(text)
    ids = [int(x) for x in idempotents(R)]
    print("%-12s order %-4d idempotents %d" % (text, R.order, len(ids)))

# constant diagonal forces 0/1: any idempotent has an idempotent
# scalar on the diagonal, and the strictly upper part then dies
D = build_expr("D(3,Z(2))")
ids = [int(x) for x in idempotents(D)]
print("\nD(3,Z(2)) census:", [D.labels[i] for i in ids])

# the 3x3 family over Z(3) with parameters (2,1): the catalogue lists
# combinations of a base idempotent in three slots; the builder finds
# every one of them and a few the catalogue does not list
H = build_expr("H(Z(3),2,1)")
ids = [int(x) for x in idempotents(H)]
print("\nH(Z(3),2,1) has %d idempotents, e.g." % len(ids))
for i in ids[:4]:
    print("   ", H.labels[i])

# the pairing ring with parameter 0: every nonzero idempotent fails
# right reversibility relative to itself, and each failure carries a
# replayable pair
K = build_expr("K(Z(3),0)")
ids = [int(x) for x in idempotents(K) if int(x) != K.zero]
fails = 0
sample = None
for e in ids:
    v = check_property(K, "right_e_reversible", e)
    if v.status == "fails":
        fails += 1
        if sample is None:
            sample = (e, v)
print("\nK(Z(3),0): %d of %d nonzero idempotents fail" % (fails, len(ids)))
e, v = sample
print("  e =", K.labels[e])
print("  witness:", v.detail)
print("  replay confirms:", replay_witness(K, "right_e_reversible",
                                           e, v.witness))
