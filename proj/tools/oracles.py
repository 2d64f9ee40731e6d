#!/usr/bin/env python3
"""Reference values for the unit tests, computed with mpmath at 60 digits.

Run once; the printed constants are frozen in tests/oracles.hpp.
"""
import mpmath as mp

mp.mp.dps = 60


def poch_inf(a, q):
    a, q = mp.mpmathify(a), mp.mpf(q)
    p = mp.mpf(1)
    k = 0
    while abs(a * q**k) > mp.mpf(10) ** -70:
        p *= 1 - a * q**k
        k += 1
    return p


def poch_real(a, q, alpha):
    return poch_inf(a, q) / poch_inf(mp.mpmathify(a) * mp.mpf(q) ** alpha, q)


def poch_n(a, q, n):
    p = mp.mpf(1)
    for k in range(n):
        p *= 1 - a * mp.mpf(q) ** k
    return p


def multi(params, q):
    p = mp.mpf(1)
    for a in params:
        p *= poch_inf(a, q)
    return p


def frac_weight(x, a, mu, q):
    x, a, mu = mp.mpf(x), mp.mpf(a), mp.mpf(mu)
    return x**mu * poch_real(a / x, q, mu) / poch_real(q, q, mu)


def qgamma(x, q):
    q = mp.mpf(q)
    return poch_inf(q, q) / poch_inf(q**x, q) * (1 - q) ** (1 - x)


def fractional_integral(f, x, a, mu, q):
    """Two-sided sum form of the fractional q-integral, summed to 1e-50."""
    x, a, mu, q = mp.mpf(x), mp.mpf(a), mp.mpf(mu), mp.mpf(q)
    s = mp.mpf(0)
    n = 0
    while True:
        qn = q**n
        t = x * poch_real(qn * q, q, mu - 1) * f(x * qn)
        if a != 0:
            t -= a * poch_real(a * qn * q / x, q, mu - 1) * f(a * qn)
        t *= qn
        s += t
        if abs(t) < mp.mpf(10) ** -55 and n > 5:
            break
        n += 1
    return x ** (mu - 1) * (1 - q) / qgamma(mu, q) * s


def phi_terminating(k, numer, denom, q):
    q = mp.mpf(q)
    s = mp.mpf(0)
    for n in range(k + 1):
        t = poch_n(q**-k, q, n) * q**n / poch_n(q, q, n)
        for a in numer:
            t *= poch_n(mp.mpmathify(a), q, n)
        for b in denom:
            t /= poch_n(mp.mpmathify(b), q, n)
        s += t
    return s


def show(name, v):
    v = mp.mpmathify(v)
    if isinstance(v, mp.mpc) and abs(v.imag) > mp.mpf(10) ** -40:
        print(f"{name}: {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}i")
    else:
        print(f"{name}: {mp.nstr(mp.re(v), 20)}")


q = mp.mpf("0.5")
show("poch_inf(0.3; 0.5)", poch_inf(mp.mpf("0.3"), q))
show("poch_inf(0.2, 0.3; 0.5)", multi([mp.mpf("0.2"), mp.mpf("0.3")], q))
show("phi10(0.4; 0.3)", poch_inf(mp.mpf("0.12"), q) / poch_inf(mp.mpf("0.3"), q))
show("(-0.25; 0.25)_inf", poch_inf(mp.mpf("-0.25"), mp.mpf("0.25")))
show("gamma_q(2.5)", qgamma(mp.mpf("2.5"), q))
show("gamma_q(3.5)", qgamma(mp.mpf("3.5"), q))
show("poch_real(0.3; 0.5; 1.7)", poch_real(mp.mpf("0.3"), q, mp.mpf("1.7")))
show("poch_real(0.3; 0.5; -0.4)", poch_real(mp.mpf("0.3"), q, mp.mpf("-0.4")))
show("(1-q)^1.7 weight(0.6, 0.2, 1.7)", (1 - q) ** mp.mpf("1.7") * frac_weight("0.6", "0.2", "1.7", q))
show("phi_4_3 k=6", phi_terminating(6, [mp.mpf("0.05"), mp.mpf("0.04"), mp.mpf("0.02")],
                                     [mp.mpf("0.012"), mp.mpf("0.03"), mp.mpf("0.016")], q))
show("phi_4_3 k=12", phi_terminating(12, [mp.mpf("0.05"), mp.mpf("0.04"), mp.mpf("0.02")],
                                      [mp.mpf("0.012"), mp.mpf("0.03"), mp.mpf("0.016")], q))
e = mp.expj(mp.mpf("0.7"))
show("phi_4_3 complex k=9", phi_terminating(9, [mp.mpf("0.009"), 0.2 * e, 0.2 / e],
                                             [mp.mpf("0.06"), mp.mpf("0.02"), mp.mpf("0.03")], q))

# generating function example
a, x, mu = mp.mpf("0.2"), mp.mpf("0.6"), mp.mpf("1.5")
b, s_, t, u, r, z = [mp.mpf(v) for v in ("0.3", "0.25", "0.15", "0.1", "0.4", "0.2")]
F = lambda y: multi([b * y * z, y * t, y * r * u], q) / multi([y * s_, y * z, y * u], q)
show("fractional-generating lhs", fractional_integral(F, x, a, mu, q))
G = lambda y: multi([b * y * z, y * t], q) / multi([y * s_, y * z], q)
show("generating-3phi2 lhs", fractional_integral(G, x, a, mu, q))

# closed forms
a, b, c, d = [mp.mpf(v) for v in ("0.3", "0.2", "0.1", "0.4")]
show("askey-wilson rhs", 2 * mp.pi * poch_inf(a * b * c * d, q) / multi([q, a*b, a*c, a*d, b*c, b*d, c*d], q))
show("2pi/(q;q)", 2 * mp.pi / poch_inf(q, q))
a, b, c, d = [mp.mpf(v) for v in ("0.2", "0.1", "0.15", "0.1")]
show("reversal rhs", multi([q, q*a*b, q*a*c, q*a*d, q*b*c, q*b*d, q*c*d], q) / poch_inf(q*a*b*c*d, q) * mp.log(1 / q))
show("(q;q) ln(1/q)", poch_inf(q, q) * mp.log(2))
qa = mp.exp(-2)
a, b, c, d = [mp.mpf(v) for v in ("0.1", "0.05", "0.08", "0.02")]
show("atakishiyev rhs", mp.sqrt(mp.pi) * qa ** mp.mpf("-0.125") *
     multi([a*b/qa, a*c/qa, a*d/qa, b*c/qa, b*d/qa, c*d/qa], qa) / poch_inf(a*b*c*d/qa**3, qa))
show("sqrt(pi) e^(1/4)", mp.sqrt(mp.pi) * mp.e ** mp.mpf("0.25"))

w = frac_weight("0.6", "0.2", "1.5", q)
a, b, c, d = [mp.mpf(v) for v in ("0.2", "0.3", "0.1", "0.15")]
show("fractional-aw rhs", 2 * mp.pi * poch_inf(a*b*c*d, q) / multi([q, a*b, a*c, a*d, b*c, b*d, c*d], q) * w)
a, b, c, d = [mp.mpf(v) for v in ("0.2", "0.1", "0.1", "0.05")]
show("fractional-reversal rhs", multi([q, q*a*b, q*a*c, q*a*d, q*b*c, q*b*d, q*c*d], q) /
     poch_inf(q*a*b*c*d, q) * w * mp.log(2))
a, b, c, d = [mp.mpf(v) for v in ("0.15", "0.05", "0.05", "0.02")]
show("fractional-atakishiyev rhs", mp.sqrt(mp.pi) * qa ** mp.mpf("-0.125") *
     multi([a*b/qa, a*c/qa, a*d/qa, b*c/qa, b*d/qa, c*d/qa], qa) / poch_inf(a*b*c*d/qa**3, qa) *
     frac_weight("0.6", "0.15", "1.5", qa))

a, b, c, t = [mp.mpf(v) for v in ("0.3", "0.2", "0.4", "0.5")]
show("cauchy closed", poch_inf(a*b*t, q) / multi([b*t, c*t], q))
