"""Exact arithmetic in Q(q^(1/2)).

Run with ``python3 demos/01_exact_field.py``.
"""
# %% q-integers and q-factorials are Laurent polynomials in q
from qcat import Q, V, parse_scalar, qfact, qint, eval_at

for n in range(5):
    print(f"[{n}] = {qint(n)}")
print("[3]! =", qfact(3))

# %% rational functions simplify automatically
x = qint(4) / qint(2)
print("[4]/[2] =", x)               # q^2 + q^(-2)
print("1/(q - 1/q) =", 1 / (Q - Q**-1))

# %% half-integer exponents come from v = q^(1/2)
print("v^3 =", V**3)
y = parse_scalar("(q^(1/2) + 1)/(q - 1)")
print("parsed:", y, " round trip ok:", parse_scalar(str(y)) == y)

# %% numerical evaluation at q = exp(i pi t)
t = 0.41
print(f"[3] at t={t}:", eval_at(qint(3), t))
