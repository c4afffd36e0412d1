########## Minimum control sources for a target subset
#
# The 9-node network below has four nodes we want to steer: 2, 3, 7, 9.
# One external source turns out to be enough: node 9 heads a path that
# runs 9 -> 7, and nodes 2, 3 sit on the cycle 2 -> 3 -> 6 -> 2, which the
# same source can reach by attaching to one cycle node.

from targetflow import DiGraph, allocate_drivers, solve, verify_cover

edges_1based = [(1, 2), (6, 2), (2, 3), (6, 3), (3, 6), (3, 4), (7, 4),
                (5, 6), (9, 6), (6, 7), (9, 7), (6, 9), (8, 9)]
g = DiGraph(9, [(t - 1, h - 1) for t, h in edges_1based])
targets = [v - 1 for v in (2, 3, 7, 9)]

solution = solve(g, targets)
print("flow value:       ", solution.flow_value)
print("minimum drivers:  ", solution.min_drivers)
print("paths (1-based):  ", [[v + 1 for v in p] for p in solution.cover.paths])
print("cycles (1-based): ", [[v + 1 for v in c] for c in solution.cover.cycles])
assert verify_cover(g, targets, solution.cover)

# Attach the sources: one driver per path head, cycles piggyback on driver 0.
alloc = allocate_drivers(solution.cover)
print("attachments:      ", [(d, v + 1) for d, v in alloc.attachments])

# Compare against controlling the whole network.
from targetflow import driver_count

print("whole-network driver count:", driver_count(g))
print("all-nodes solve agrees:    ",
      solve(g, range(g.n)).min_drivers == driver_count(g))
