"""The trial protocol: guarded unlearning, then a fixed relearning attack.

A trial only counts ("valid") if the retain loss never strayed above its
initial value + 0.05; the score is the held-out forget loss *after* an
attacker fine-tunes the unlearned model on forget data.  Robust unlearning
means that number stays high.
"""

from unlearnlab.attack import AttackConfig, GuardPolicy, run_trial
from unlearnlab.grammars import GrammarSpec
from unlearnlab.model import ArchSpec
from unlearnlab.pretrain import PretrainConfig, pretrain
from unlearnlab.records import build_eval_sets
from unlearnlab.unlearn import UnlearnConfig

arch, g = ArchSpec(), GrammarSpec()
model, info = pretrain(arch, g, PretrainConfig(steps=600, polish_steps=100), seed=0)
evals = build_eval_sets(g, {"seed": 0, "n_batches": 4, "batch": 4, "seq_len": 16})

res = run_trial(
    model, g,
    UnlearnConfig(unlearning_rate=0.3, pass_budget=300),
    AttackConfig(lr=1e-3, pass_budget=200),
    GuardPolicy(),  # reject-only: 0.05 soft, 0.10 hard
    seed=0, trial_index=0, eval_sets=evals,
)
print(f"status:    {res.status}")
print(f"objective: {res.objective:.3f}  (post-attack forget loss; "
      f"pretraining plateau was {info['plateau_forget_loss']:.3f})")
print(f"retain:    {res.initial_retain:.3f} -> {res.final_retain:.3f} "
      f"(guard points at loops {[p[0] for p in res.retain_points]})")
print(f"passes:    unlearn={res.unlearn_passes} relearn={res.relearn_passes}")

# an over-aggressive rate wrecks retention and the guard throws the trial out
wild = run_trial(
    model, g,
    UnlearnConfig(unlearning_rate=40.0, pass_budget=300),
    AttackConfig(lr=1e-3, pass_budget=200),
    GuardPolicy(),
    seed=0, trial_index=1, eval_sets=evals,
)
print(f"\nunlearning_rate=40: status={wild.status}, objective=nan, "
      f"retain {wild.initial_retain:.3f} -> {wild.final_retain:.3f}")

# trials are pure functions of (config, seed, trial_index): bitwise replay
again = run_trial(
    model, g,
    UnlearnConfig(unlearning_rate=0.3, pass_budget=300),
    AttackConfig(lr=1e-3, pass_budget=200),
    GuardPolicy(),
    seed=0, trial_index=0, eval_sets=evals,
)
print(f"\nre-running trial 0 reproduces it exactly: {again == res}")
