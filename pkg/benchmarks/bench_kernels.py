"""Compare the compiled and pure-Python Metropolis kernels.

    python benchmarks/bench_kernels.py --steps 2000000 --repeat 3
"""
import argparse
import time

from netthermo import _kernels_py
from netthermo.exchange import SimConfig, run_exchange

try:
    from netthermo import _kernels as compiled
except ImportError:
    compiled = None


def best_of(cfg, kernel, repeat):
    best, traj = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        traj = run_exchange(cfg, kernel=kernel)
        best = min(best, time.perf_counter() - t0)
    return best, traj


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--steps", type=int, default=1_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--k1", type=int, default=2)
    parser.add_argument("--k2", type=int, default=4)
    parser.add_argument("--r", type=int, default=6)
    args = parser.parse_args()

    cfg = SimConfig(args.k1, args.k2, args.r, steps=args.steps, seed=42)
    py_time, py_traj = best_of(cfg, _kernels_py, args.repeat)
    print(f"python  {py_time:8.3f} s  {args.steps / py_time / 1e6:7.2f} Msteps/s")
    if compiled is None:
        print("cython  not built (pip install -e . --no-build-isolation)")
        return
    c_time, c_traj = best_of(cfg, compiled, args.repeat)
    print(f"cython  {c_time:8.3f} s  {args.steps / c_time / 1e6:7.2f} Msteps/s")
    same = c_traj.samples.tobytes() == py_traj.samples.tobytes()
    print(f"speedup {py_time / c_time:6.1f}x   identical trajectories: {same}")


if __name__ == "__main__":
    main()
