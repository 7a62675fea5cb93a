#!/usr/bin/env python3
# Exact values for the small named graphs shipped with the package.
from wdom.graph import figure1_graph, figure2_graph, parse_graph_expr
from wdom.solver import SolverConfig, solve

f1 = figure1_graph()
print("fig1:", f1.n, "vertices,", f1.m, "edges")

r = solve(f1, (1, 1, 0), SolverConfig(secure=True))
print("secure (1,1,0):", r.value, "witness", r.witness.values)
print("plain  (2,2,0):", solve(f1, (2, 2, 0)).value)

# adding a disjoint C4 costs 3 and 4 respectively
g = parse_graph_expr("union(fig1,cycle:4)").graph
print("fig1 + C4:", solve(g, (1, 1, 0), SolverConfig(secure=True)).value, solve(g, (2, 2, 0)).value)

for i in (1, 2, 3):
    gi = figure2_graph(i)
    print(f"G_{i}: (2,2,1) -> {solve(gi, (2, 2, 1)).value}, (2,2,2) -> {solve(gi, (2, 2, 2)).value}")
