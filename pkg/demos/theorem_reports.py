"""Run a few bounded theorem checks and print their reports."""
from dikernels.verification import run_lemma_suite, verify_theorem

for suite in ("semicomplete-cki", "4t-cki", "odd-even-cycles"):
    print(verify_theorem(suite).to_text())
    print()

# the diameter-3 statement and its companion run
print(verify_theorem("4at-asym-diam4-cki").to_text())
print()
print(run_lemma_suite("2at-structure").to_text())
