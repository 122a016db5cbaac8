"""
Different slack directions, same count
======================================

Any mu that keeps the denominators nonzero works.  The terms change value
but their total stays put.
"""

from itertools import islice

from denumerant import solve
from denumerant.evaluation import eval_values, iter_valid_mu

n, a, b, c = 10**12 + 7, 1009, 4001, 7919
sol = solve(n, a, b, c)
print("count =", sol.count)

for mu in islice(iter_valid_mu(sol.terms, seed=1), 8):
    values = eval_values(sol.terms, mu)
    print(tuple(mu), "max |term| =", float(max(abs(v) for v in values)), "sum =", sum(values))
