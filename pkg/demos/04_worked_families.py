"""Global zeta functions of four families, assembled stratum by stratum."""

from zetaloc.fixtures import example1, example2, example3, example4

reports = [
    example1(5, 3),
    example1(3, 3),
    example1(2, 4),
    example2(),
    example3(3, 3, 1),
    example3(3, 2, 5),
    example4(3, 4, 2),
]
for rep in reports:
    print(rep.text())

# the exponent of the second factor follows a closed form in (n, d0, d)
print("n  d0 d  global")
for n in (2, 3, 4):
    for d0, d in [(3, 1), (4, 2), (5, 4)]:
        print(n, d0, d, "", example3(n, d0, d).zeta)
