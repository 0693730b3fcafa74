"""Parameter sweeps, the same machinery the ``hawking-qfi`` command uses.

Builds a grid over the channel and Hawking temperatures, evaluates closed
and numeric QFI at every point and writes the CSV next to this script.
The command-line equivalent is

    hawking-qfi sweep --channel gad --set Q=0.5 --set gamma0=0.5 --set omega=5 \\
        --vary T_C=0.5:5:10 --vary T_H=0.5:5:4 --out demos/gad_sweep.csv
"""
import pathlib

from hawking_qfi.sweep import Grid, SweepConfig, run_sweep, write_csv
from hawking_qfi.verify import run_verify

cfg = SweepConfig(
    channel="gad",
    vary=(Grid("T_C", 0.5, 5.0, 10), Grid("T_H", 0.5, 5.0, 4)),
    fixed={"Q": 0.5, "gamma0": 0.5, "omega": 5.0},
)
rows = run_sweep(cfg)
out = pathlib.Path(__file__).with_name("gad_sweep.csv")
write_csv(rows, str(out))
print(f"wrote {len(rows)} rows to {out.name}")

print(f"{'T_C':>6} {'T_H':>6} {'lambda':>9} {'F_theta':>12} {'F_phi':>12}")
for r in rows[::4]:
    p = r.params
    print(f"{p['T_C']:6.2f} {p['T_H']:6.2f} {r.lam:9.5f} {r.qfi_theta_numeric:12.8f} {r.qfi_phi_numeric:12.8f}")

worst = max(abs(r.qfi_theta_closed - r.qfi_theta_numeric) for r in rows)
print(f"largest closed/numeric gap on this grid: {worst:.1e}")

# A small verification run; the full one is `hawking-qfi verify`.
print()
print(run_verify(points=25, informational=False).text())
