"""Sample random 3-connected plane graphs and check the guaranteed intervals."""

from csl.sweeps import SweepConfig, run_sweep

for cfg in (SweepConfig(count=100, seed=1), SweepConfig(count=40, seed=1, cubic=True)):
    res = run_sweep(cfg)
    kind = "cubic [k, 5(k-1)/2]" if cfg.cubic else "general [k, 2k+3]"
    print(f"{kind}: {res.samples} graphs, {res.checks} checks, "
          f"{len(res.skipped)} skipped (circumference too small), {len(res.violations)} violations")
