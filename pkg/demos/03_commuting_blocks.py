"""The commuting strand blocks that power both identification schemes.

Split the strands in half: braids that only move the lower strands commute
with braids that only move the upper strands, because they act on disjoint
strands. Key material is sampled from one block per party, and the hardness
policy keeps trivially simple braids out.
"""

import braidauth as ba
from braidauth import DeterministicRng, SamplerConfig, SubgroupSide
from braidauth.sampling import lower_generator_indices, upper_generator_indices

n = 16
print(f"n = {n}: lower block generators {list(lower_generator_indices(n))}")
print(f"        upper block generators {list(upper_generator_indices(n))}")
print(f"        generator {n // 2} belongs to neither, making the blocks commute")

cfg = SamplerConfig(n=n, word_length=64, min_canonical_length=8, seed=2024)
print("\nsampler:", cfg.echo())

rng = DeterministicRng(cfg.seed)
a = ba.normalize(ba.sample_subgroup_word(SubgroupSide.LOWER, cfg, rng))
b = ba.normalize(ba.sample_subgroup_word(SubgroupSide.UPPER, cfg, rng))
print("\na from the lower block, canonical length", ba.canonical_length(a))
print("b from the upper block, canonical length", ba.canonical_length(b))
print("a*b == b*a ?", ba.multiply(a, b) == ba.multiply(b, a))

# The hardness floor: identity and pure twists never qualify.
print("\nis_hard_instance(identity):", ba.is_hard_instance(ba.identity(n), cfg))
print("is_hard_instance(delta^5): ", ba.is_hard_instance(ba.power(ba.delta(n), 5), cfg))
print("is_hard_instance(a):       ", ba.is_hard_instance(a, cfg))

# Determinism: the same seed replays the same braids anywhere.
again = ba.normalize(ba.sample_subgroup_word(SubgroupSide.LOWER, cfg, DeterministicRng(cfg.seed)))
print("\nsame seed, same sample:", again == a)
