"""Walk one oscillating tableau through both constructions of Sundaram's
bijection and compare the descent sets on every side."""

from updown import OscillatingTableau, descents_oscillating, roby, tableau_to_word
from updown.sundaram import sun1_trace, sun_details
from updown.tableaux import descents_partial

t = OscillatingTableau.from_shapes([(), (1,), (1, 1), (2, 1), (2,), (1,), (2,), (2, 1), (2, 1, 1), (2, 1)])
print("oscillating tableau", t)
print("crystal word       ", " ".join(map(str, tableau_to_word(t))))
print("descent set        ", sorted(descents_oscillating(t)))
print()

# first step: column deletions turn contractions into pairs of an involution
for step in sun1_trace(t):
    kind = "add" if step.expansion else "del"
    print(f"  k={step.k} {kind} {tuple(step.box)}  T_k={step.tableau}  pair={step.pair}")

res = sun_details(t)
print()
print("iota", res.iota)
print("I   ", res.involution_tableau)
print("Q   ", res.q, "Des(Q) =", sorted(descents_partial(res.q)))
print("S   ", res.s.rows)

# the growth diagram computes the same Q without the skew tableau
g = roby(t)
print()
print(g.diagram.render())
print()
print("Roby agrees:", (g.iota, g.partial, g.q) == (res.iota, res.partial, res.q))
