"""The query-count relation (2q+1) asin(1/sqrt(n)) = pi/2, solved and simulated.

Solves the relation in both directions, then runs the actual
sign-flip / inversion-about-mean iteration to show the closed form and
the state vector agree.
"""

import math

from codonlab import simulate, solve_n, solve_q, success_probability

print("Database size searchable with certainty in q queries:")
for q in range(0, 7):
    print(f"  q = {q}:  n = {solve_n(q):10.4f}")
print()

for n in (4, 20.2, 64):
    q = solve_q(n)
    print(f"n = {n:>5}: q = {q:.4f}  (whole queries: {round(q)})")
print()

N, Q = 20, 3
print(f"Simulating n = {N}, q = {Q} (marked item 0):")
run = simulate(N, Q)
print("  iter  simulated      closed form")
for i, probability in enumerate(run.probability_trace):
    print(f"  {i:>4}  {probability:.10f}   {success_probability(N, i):.10f}")
print(f"  max norm drift: {run.max_norm_drift:.2e}")
print()

N = 64
best = math.floor(solve_q(N))
run = simulate(N, best + 3)
print(f"n = {N}: probability peaks near iteration {best} and then overshoots:")
for i, probability in enumerate(run.probability_trace):
    bar = "#" * round(probability * 40)
    print(f"  {i:>4}  {probability:.6f}  {bar}")
