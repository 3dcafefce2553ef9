"""Print every worked example: the regular G(2,5) diagram and the four n=8, k=4 instances."""

from singular_bgg.complex import check_suite
from singular_bgg.pipeline import run_pipeline
from singular_bgg.render import render_complex, render_relative
from singular_bgg.weights import Weight

print("== mu = (43210), k = 2 ==")
print(render_relative(run_pipeline(Weight((4, 3, 2, 1, 0)), 2).relative))

for mu in ["55432210", "55443210", "54321100", "54432110"]:
    res = run_pipeline(Weight(tuple(int(c) for c in mu)), 4)
    p = res.profile
    print(f"\n== mu = ({mu}), k = 4, S = {list(p.S)}, I = {list(p.I)}, J = {list(p.J)} ==")
    print(render_complex(res.complex))
    for r in check_suite(res.complex):
        print("  " + r.line())
