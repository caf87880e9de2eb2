"""Forget and retain corpora: two grammars over one vocabulary, on demand."""

import numpy as np

from unlearnlab.grammars import CorpusStream, GrammarSpec, held_out_eval_set

g = GrammarSpec()
print(f"vocabulary of {g.vocab}: {g.n_shared} shared tokens, "
      f"{g.n_bracket_pairs} bracket pairs + {g.n_forget_atoms} atoms (forget side), "
      f"{g.n_retain_only} retain-only tokens")

forget = CorpusStream(g, "forget", seed=0, cursor=0)
retain = CorpusStream(g, "retain", seed=0, cursor=0)
fb = forget.next_batch(batch=3, seq_len=16)
rb = retain.next_batch(batch=3, seq_len=16)
print(f"\nforget batch (nested bracket structure):\n{fb}")
print(f"\nretain batch (token-chain structure):\n{rb}")

# splits share tokens but never each other's exclusive ids
print(f"\nretain batch uses a forget-only id: "
      f"{bool(np.isin(rb, g.forget_only_ids).any())}")
print(f"forget batch uses a retain-only id: "
      f"{bool(np.isin(fb, g.retain_only_ids).any())}")

# streams are cursor-addressed: the same (seed, cursor) always replays
again = CorpusStream(g, "forget", seed=0, cursor=0).next_batch(3, 16)
print(f"\nsame seed+cursor replays the same batch: {np.array_equal(fb, again)}")
elsewhere = CorpusStream(g, "forget", seed=0, cursor=10_000).next_batch(3, 16)
print(f"a different cursor band is a different stream: "
      f"{not np.array_equal(fb, elsewhere)}")

# held-out evaluation sets live in a reserved cursor band above all training
evals = held_out_eval_set(g, "forget", seed=0, n_batches=2, batch=4, seq_len=16)
print(f"\nheld-out eval set: {len(evals)} fixed batches of shape {evals[0].shape}")
