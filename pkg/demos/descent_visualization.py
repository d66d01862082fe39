"""Stack a growth diagram for a seed permutation under the diagram of an
oscillating tableau and read the descents off the positions of the crosses."""

from updown import OscillatingTableau, descents_oscillating
from updown.growth import descent_visualization, stacked_diagram

t = OscillatingTableau.from_shapes([(), (1,), (1, 1), (2, 1), (2,), (1,), (2,), (2, 1), (2, 1, 1), (2, 1)])
for seed in ([6, 3, 7], [6, 7, 3]):
    d = stacked_diagram(t, seed)
    print(f"seed {seed}")
    print(d.render())
    print("descents read from the crosses:", sorted(descent_visualization(t, seed)))
    print()
print("descent set of the tableau:     ", sorted(descents_oscillating(t)))
