"""Runs every oracle script; any assertion failure aborts with a traceback."""

import gf_oracle
import matsuo_oracle
import pair_lambda_oracle
import spin_oracle
import split_oracle

for mod in (gf_oracle, spin_oracle, matsuo_oracle, pair_lambda_oracle, split_oracle):
    print(f"== {mod.__name__} ==")
    mod.main()
print("all oracles passed")
