#!/usr/bin/env python3
# A secure (1,0) dominating function on P11 o C7 built from a per-copy
# weight sequence, then checked and compared with the exact optimum.
from wdom import catalog as cat
from wdom import harness as hv

seq = hv.P11_SEQUENCE
print("copy weights:", " ".join(seq), "total", sum(map(int, seq)))
print("closed form :", cat.path_value("secdom:vi", 11))

rep = hv.verify_p11_lift(harness=hv.Harness())
print(hv.format_reports([rep]))
