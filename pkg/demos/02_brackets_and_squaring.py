"""Structure constants, axiom verification, and the squaring map.

Builds gl(2, GF(2)) with matrix squaring as its 2-map, checks both axiom
suites, and splits a few elements into commuting semisimple and
2-nilpotent parts.
"""

from lie2 import (
    fixture,
    jcs_decompose,
    is_semisimple,
    is_two_nilpotent,
    square,
    two_envelope,
    verify_lie,
    verify_two_map,
)
from lie2.linalg import coeffs, unit

g, tm = fixture("gl", n=2)
f = g.field
E11, E12, E21, E22 = (unit(f, i) for i in range(4))

print("== axiom verification ==========================================")
print("Lie axioms:", "clean" if verify_lie(g).ok else "violated")
print("2-map axioms:", "clean" if verify_two_map(g, tm).ok else "violated")

print()
print("== brackets and squares ========================================")
print("[E12, E21] =", coeffs(f, 4, g.bracket(E12, E21)), " (= E11 + E22)")
print("E12^[2]    =", coeffs(f, 4, square(g, tm, E12)), "     (nilpotent)")
print("(E11+E12)^[2] =", coeffs(f, 4, square(g, tm, E11 ^ E12)), "(idempotent matrix)")

print()
print("== semisimple / 2-nilpotent splits =============================")
for x in (E11, E12, E11 ^ E12 ^ E21, E12 ^ E22):
    xs, xn = jcs_decompose(g, tm, x)
    env = two_envelope(g, tm, x)
    print(
        f"x = {coeffs(f, 4, x)}: semisimple part {coeffs(f, 4, xs)}, "
        f"2-nilpotent part {coeffs(f, 4, xn)}, envelope dim {env.dim}"
    )
    assert is_semisimple(g, tm, xs) and is_two_nilpotent(g, tm, xn)
    assert g.bracket(xs, xn) == 0
print("all splits verified: parts commute and classify correctly")
