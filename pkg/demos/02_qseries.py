"""Truncated q-series with two marker variables.

z marks qualifying distinct parts and w marks parts, so a coefficient
[z^j w^m q^n] counts partitions of n with index j and m parts.

Run: python3 demos/02_qseries.py
"""
from partition_lab import qseries as Q

N = 10
g = Q.gf_O(2, 1, N)
print(g.dump(), end="")

# Coefficients agree with enumeration: [z^0 q^5] = 3, [z^1 q^5] = 4.
print("[z^0 q^5] =", g.coefficient(5, 0), " [z^1 q^5] =", g.coefficient(5, 1))

# Built a different way, the D series is the same power series.
print("gf_O == gf_D:", g == Q.gf_D(2, 1, N))

# Differentiating in w at w=1 turns partition counts into part counts.
dO = Q.d_dw_at_1(Q.gf_O_w(2, 1, N))
dD = Q.d_dw_at_1(Q.gf_D_w(2, 1, N))
print("parts over O_{0,2}(5):", dO.coefficient(5, 0), " over D_{0,2}(5):", dD.coefficient(5, 0))

# That difference is (k-1)(1-z) times the j-weighted series, exactly.
lhs = dO - dD
print("derivative identity holds:", lhs == Q.gf_jO(2, 1, N).scale(Q.ONE_MINUS_Z))

# 1/(q;q) is the partition generating function.
p = Q.pochhammer_reciprocal(Q.ONE, 0, 1, 20)
print("p(0..20):", [p.coefficient(n) for n in range(21)])
