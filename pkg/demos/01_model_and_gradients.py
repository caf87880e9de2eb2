"""The numpy transformer: shapes, causality, and hand-checked gradients."""

import numpy as np

from unlearnlab.losses import LossSpec, loss_and_grad
from unlearnlab.model import (
    ArchSpec, backward, default_intervention_names, forward, init_model,
)

arch = ArchSpec()  # 64-token vocab, d_model 32, 2 blocks, gated MLPs
model = init_model(arch, seed=0, dtype=np.float64)
print(f"parameters: {sum(p.size for p in model.params.values())} floats "
      f"in {len(model.params)} named arrays")

rng = np.random.default_rng(0)
tokens = rng.integers(0, arch.vocab, size=(2, 8))
logits, cache = forward(model, tokens)
print(f"forward: tokens {tokens.shape} -> logits {logits.shape}")

# causality: changing position 5 must not move predictions at positions < 5
poked = tokens.copy()
poked[:, 5] = (poked[:, 5] + 1) % arch.vocab
other, _ = forward(model, poked, need_cache=False)
print(f"causal: logits before position 5 unchanged -> "
      f"{np.array_equal(logits[:, :5], other[:, :5])}")

# analytic gradient vs a central finite difference on one weight entry
loss, dlogits = loss_and_grad(LossSpec("lm"), logits, tokens)
grads = backward(model, cache, dlogits)
name, (i, j), h = "block0.mlp.gate", (3, 7), 1e-5
keep = model.params[name][i, j]
model.params[name][i, j] = keep + h
up = loss_and_grad(LossSpec("lm"), forward(model, tokens, need_cache=False)[0], tokens)[0]
model.params[name][i, j] = keep - h
dn = loss_and_grad(LossSpec("lm"), forward(model, tokens, need_cache=False)[0], tokens)[0]
model.params[name][i, j] = keep
fd = (up - dn) / (2 * h)
print(f"gradient check {name}[{i},{j}]: analytic={grads[name][i, j]:+.6e} "
      f"finite-diff={fd:+.6e}")

print(f"default unlearning targets (gate matrices only): "
      f"{default_intervention_names(arch)}")
