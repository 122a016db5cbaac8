"""
Counting solutions of 3x + 7y + 11z = 25
========================================

Walk one small instance through every stage and print what each produces.
"""

from denumerant import TraceLog, solve

# the trace collects one record per stage
log = TraceLog()
sol = solve(25, 3, 7, 11, trace=log)
for line in log.lines():
    print(line)

# two terms come from the a-contribution, two from the b-contribution
for t in sol.terms:
    print(f"({t.m1}) - ({t.m2})  over  ({t.omega}) ({t.theta})")

# individual values depend on mu, the sum does not
print("mu =", tuple(sol.mu), "values =", [str(v) for v in sol.values])
print("count =", sol.count)

# the three solutions, by direct search
print([(x, y, z) for z in range(3) for y in range(4) for x in range(9)
       if 3 * x + 7 * y + 11 * z == 25])
