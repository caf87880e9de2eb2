"""Hyperparameter search: uniform exploration, then sampling near the winners.

Rejected trials never enter the score; the reported number is the mean
objective of the last K valid trials, where the sampler has concentrated.
"""

from unlearnlab.attack import AttackConfig, GuardPolicy
from unlearnlab.grammars import GrammarSpec
from unlearnlab.model import ArchSpec
from unlearnlab.pretrain import PretrainConfig, pretrain
from unlearnlab.records import build_eval_sets
from unlearnlab.search import SearchSpace, run_search, saturation_audit
from unlearnlab.unlearn import UnlearnConfig

arch, g = ArchSpec(), GrammarSpec()
model, _ = pretrain(arch, g, PretrainConfig(steps=600, polish_steps=100), seed=0)
evals = build_eval_sets(g, {"seed": 0, "n_batches": 4, "batch": 4, "seq_len": 16})

space = SearchSpace(
    log_uniform={"unlearning_rate": (0.01, 10.0), "retaining_rate": (1e-5, 1e-2)},
    uniform={"retain_momentum": (0.0, 1.0)},
    int_choice={"fork_every_n_loops": (1, 2, 5, 10)},
)
res = run_search(
    space, n_trials=40, base_seed=0,
    fixed=UnlearnConfig(pass_budget=100),
    model=model, grammar=g,
    attack_cfg=AttackConfig(pass_budget=40), policy=GuardPolicy(),
    eval_sets=evals, k=10,
)
print(f"trials: {len(res.trials)} run, {res.n_valid} valid")
print(f"last-{res.k} valid mean objective: {res.mean:.3f} +- {res.stderr:.3f}")
print(f"best single trial: {res.best_objective:.3f} at {res.best_params}")

# early trials explore the whole space; late ones cluster near the optimum
for phase, band in (("first 10", res.trials[:10]), ("last 10", res.trials[-10:])):
    rates = [t.params["unlearning_rate"] for t in band]
    print(f"{phase}: unlearning_rate spans {min(rates):.3g} .. {max(rates):.3g}")

# the audit flags any dimension whose best trials pile up at a range boundary
print(f"saturated dimensions: {res.saturation or 'none'}")
tight = saturation_audit(res.trials, space, min_valid=10)
print(f"re-audited standalone: {tight or 'none'}")
