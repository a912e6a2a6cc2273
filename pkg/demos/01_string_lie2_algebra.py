"""The string Lie 2-algebra R -> sl(2), checked two ways, then broken on purpose."""

from fractions import Fraction

from lie2bialg.algebras import string_lie2_algebra
from lie2bialg.bigbracket import big_bracket
from lie2bialg.classical import encode, split_components
from lie2bialg.structures import verify_weak_lie2_algebra

maps = string_lie2_algebra(1)
print("homotopy h:", maps.h)

# The unfolded equations and the single equation {s, s} = 0 agree.
for route in ("unfolded", "bracket"):
    print(verify_weak_lie2_algebra(maps, route).to_text())

s = encode(maps, "algebra")
print("\nencoded element s =", s)
for name, part in split_components(s).items():
    if part:
        print(f"  {name:8s} {part}")
print("{s, s} =", big_bracket(s, s))

# Scale [h, e] = 2e to 3e. Jacobi fails, and phi = 0 cannot absorb it.
broken = maps.replace(bracket={**maps.bracket, (0, 1): maps.bracket[(0, 1)] * Fraction(3, 2)})
report = verify_weak_lie2_algebra(broken, "both")
print()
print(report.to_text())
for v in report.violations:
    print(f"re-evaluating {v.identity} at {v.basis}:", report.reevaluate(v) == v.residual)
