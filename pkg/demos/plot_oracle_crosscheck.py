"""
Checking against the coin-change table
======================================

One table gives d(k; a, b, c) for every k up to n, so a whole range of
targets can be compared at once.
"""

import numpy as np

from denumerant import denumerant, oracle_table

a, b, c = 5, 13, 21
table = oracle_table(2000, (a, b, c))

fast = np.array([denumerant(k, a, b, c) for k in range(2001)])
print("mismatches:", int(np.count_nonzero(fast != table)))

# the count grows like n^2 / (2abc)
k = np.arange(2001)
print("max |d - n^2/2abc|:", np.abs(table - k**2 / (2 * a * b * c)).max())
