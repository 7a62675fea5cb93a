#!/usr/bin/env python3
# The chain  g^s_(w0..wl) <= g_(w0+1,..,wi+1, w_{i+1}..) <= ...  breaks on K_{2,3}.
from wdom.graph import complete_bipartite
from wdom.solver import SolverConfig, solve

g = complete_bipartite(2, 3)
sec = solve(g, (2, 2, 0), SolverConfig(secure=True))
plain = solve(g, (3, 3, 0))
print("secure (2,2,0):", sec.value, sec.witness.values)
print("plain  (3,3,0):", plain.value, plain.witness.values)
print("chain holds" if sec.value <= plain.value else "chain fails")
