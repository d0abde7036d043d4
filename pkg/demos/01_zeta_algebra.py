"""Products of cyclotomic factors: parsing, arithmetic, degree and series."""

from zetaloc import cyclo, expand_series, format_zeta, parse_zeta

# a zeta function is a finite product of factors (1 - t^k)^e
z = parse_zeta("(1-t)(1-t^2)^-2")
print("z          =", z)
print("degree z   =", z.degree)

# the group structure: products, quotients, integer powers
w = z * cyclo(4, 2) / cyclo(2)
print("z*(1-t^4)^2/(1-t^2) =", w)
print("degree is additive:", w.degree, "=", z.degree, "+ 8 - 2")

# canonical form sorts by k and drops ^1 and zero exponents
print("canonical  =", format_zeta(parse_zeta("(1-t^3)^0 (1-t^4)^2 * (1-t)")))

# Taylor expansion around t = 0
print("series of z:", expand_series(z, 8))
