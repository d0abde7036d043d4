"""Newton diagrams, face normals and lattice volumes for a small pair of supports."""

from zetaloc import (
    diagram_vertices,
    face_of,
    kouchnirenko_mu,
    m_value,
    mixed_volume_sum,
    normalized_volume,
    pair_face_normals,
    parse_poly,
    restrict_to_subset,
    support,
)

names = ["x0", "x1", "x2"]
f = parse_poly("x0^2 + x1^4 + x0*x2^3", names)
g = parse_poly("x2^4", names)
F, G = support(f), support(g)

print("vertices of the diagram of f:", sorted(diagram_vertices(F, range(3))))

# covectors whose joint face with g is a facet of the Minkowski sum
for a in pair_face_normals(F, G, (0, 1, 2)):
    face = face_of(F, a)
    print(f"normal {a.weights}: m(f) = {m_value(F, a)}, m(g) = {m_value(G, a)}")
    print("  face of f:", sorted(face), "volume", normalized_volume(face, a))
    print("  sum of mixed volumes:", mixed_volume_sum(face, face_of(G, a), a))

# coordinate subsets on which both f and g survive see their own diagrams
for I in [(0, 1), (0, 2), (1, 2)]:
    fI, gI = restrict_to_subset(f, I), restrict_to_subset(g, I)
    if fI.is_zero() or gI.is_zero():
        print("subset", I, "skipped")
        continue
    print("subset", I, "normals", [a.weights for a in pair_face_normals(support(fI), support(gI), I)])

# Milnor number of a convenient germ from its diagram
print("mu(x^2 + y^3) =", kouchnirenko_mu([(2, 0), (0, 3)]))
print("mu(x^4 + xy + y^4) =", kouchnirenko_mu([(4, 0), (1, 1), (0, 4)]))
