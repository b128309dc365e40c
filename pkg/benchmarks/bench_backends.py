"""Compare the compiled and pure-numpy kernel backends.

    python3 benchmarks/bench_backends.py [--size 512] [--repeats 5]
"""
import argparse

from matteforge import kernels
from matteforge.bench import bench_kernels


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=512)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    backends = kernels.available_backends()
    rows = bench_kernels(args.size, args.repeats)
    print(f"{args.size}x{args.size} float64, seconds per call (mean of {args.repeats})")
    header = f"{'kernel':<18}" + "".join(f"{b:>12}" for b in backends)
    if "cython" in backends:
        header += f"{'speedup':>10}"
    print(header)
    for row in rows:
        line = f"{row['kernel']:<18}" + "".join(f"{row[b]:>12.5f}" for b in backends)
        if "cython" in backends:
            line += f"{row['python'] / row['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
