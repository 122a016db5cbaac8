"""
Recursion depth against bit length
===================================

The number of reduction steps tracks log2 of the smaller part, not its size.
"""

import numpy as np

from denumerant.cli import run_bench

bits = [8, 16, 32, 64, 128, 256]
steps = []
for k in bits:
    report = run_bench(k, 50, seed=k, verify_limit=0)
    steps.append(report["max_steps"])
    print(f"{k:4d} bits  max steps {report['max_steps']:4d}  median {report['median_ms']:.3f} ms")

# slope well under 1: each step at least halves the index
print(np.polyfit(bits, steps, 1))
