"""A miniature experiment end to end: method matrix, study, records, replay.

The real run (configs/ablation.toml) takes a couple of hours; this one uses
toy budgets to walk the same code path in under a minute.
"""

import tempfile
from pathlib import Path

from unlearnlab.config import parse_config
from unlearnlab.experiment import (
    normalization_checks, ordering_checks, report_text, run_experiment,
    run_normalization_study, study_report_text,
)
from unlearnlab.records import read_jsonl, replay_trial

cfg = parse_config({
    "pretrain": {"steps": 300, "polish_steps": 50, "eval_every": 60},
    "unlearn": {"pass_budget": 50, "unlearning_rate": 0.3},
    "attack": {"pass_budget": 20},
    "search": {"n_trials": 10, "k": 4},
    "eval": {"n_batches": 2},
    "experiment": {"methods": ["mudman", "no_masking", "control"], "seeds": [0, 1]},
    "study": {"n_blocks": 3, "n_configs": 6, "top": 2, "seeds": [0]},
})

out = Path(tempfile.mkdtemp(prefix="unlearnlab_demo_"))
rows = run_experiment(cfg, out, jobs=1)
print(report_text(rows, ordering_checks(rows)))

study = run_normalization_study(cfg, out, jobs=1)
print()
print(study_report_text(study, normalization_checks(study)))
print("\n(toy budgets walk the pipeline; the orderings above are noise. "
      "The committed configs/ablation.toml run is the real comparison.)")

# each record embeds its fully resolved config; replay re-runs and compares
records = [r for r in read_jsonl(out / "records" / "mudman_s0.jsonl")
           if r["kind"] == "trial"]
rec = records[-1]
_, match = replay_trial(rec)
print(f"\nreplayed trial {rec['trial_index']} from its record: "
      f"{'bitwise identical' if match else 'MISMATCH'}")
print(f"artifacts under {out}")
