"""Local zeta functions: Milnor fibres, pencils, and quotients at a boundary hyperplane."""

from zetaloc import GermFamily, family_zeta_at_point, hat_family_zeta, milnor_zeta, pair_zeta0, parse_poly
from zetaloc.poly import chart, homogenize

xy = ["x", "y"]
for text in ["x^2 + y^3", "x^3 + y^3", "x^4 + x*y + y^4", "y + x^5"]:
    z = milnor_zeta(parse_poly(text, xy))
    print(f"{text:18s} {z}  chi={z.degree}")

# a pencil f + sigma*g with both members vanishing at the origin
f, g = parse_poly("x^5", xy), parse_poly("x^3 + y^3", xy)
print("zero fibre of f/g:", pair_zeta0(f, g))
print("family at 0:     ", family_zeta_at_point(GermFamily(f, g)))

# the same pencil at a point at infinity, divided by its trace on x0 = 0
ft, gt = homogenize(f, 5), homogenize(g, 5)
fam = GermFamily(chart(ft, 2), chart(gt, 2))
print("point at infinity:", hat_family_zeta(fam, 0))

# a quartic pencil whose point at infinity carries a nontrivial quotient
names = ["x1", "x2", "x3"]
ft = homogenize(parse_poly("x1^4 + x2^3 + x3^2", names), 4)
gt = homogenize(parse_poly("x2^4", names), 4)
fam = GermFamily(chart(ft, 3), chart(gt, 3))
print("full:", family_zeta_at_point(fam))
print("hat: ", hat_family_zeta(fam, 0))
