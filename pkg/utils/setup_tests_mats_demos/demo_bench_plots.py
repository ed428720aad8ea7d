import os
import sys

# Create images directory if it doesn't exist
os.makedirs('data/images', exist_ok=True)

# Add the project root to the path to import the modules
sys.path.append('.')

try:
    from models.bench import BenchConfig
    from models.sequence import NucleotideSequence
    from utils.benchmark import BenchmarkRunner
    from utils.image_generator import ImageGenerator
    from utils.metrics import MetricsCalculator
    from utils.selftest import BEST_CASE_SEQUENCE, WORST_CASE_SEQUENCE

    print("=== GenBit Compress - Benchmark Plot Demo ===")

    # Named cases
    print("\nMeasured case sequences:")
    for name, text in (('best', BEST_CASE_SEQUENCE), ('worst', WORST_CASE_SEQUENCE)):
        stats = MetricsCalculator.measure(NucleotideSequence(text))
        print(f"  {name}: {stats.summary()}")
    print(f"  average (formula): {MetricsCalculator.scenario_stats('average', 66).summary()}")

    # Density sweep
    length = 10000
    print(f"\nSweeping repeat density at n={length}...")
    sweep = BenchmarkRunner.sweep_densities(length, trials=5)
    for density, rate in sweep:
        print(f"  density {density:.1f}: {rate:.4f} bits/base")
    sweep_path = ImageGenerator.plot_rate_sweep(sweep, length, 'data/images/rate_sweep_demo.png')
    print(f"Rate sweep plot saved as: {sweep_path}")

    # Per-input bar chart
    print("\nBenchmarking a small mixed corpus...")
    report = BenchmarkRunner.run(BenchConfig(2002, 0.5, seed=7, trials=8))
    print(report.render_table())
    corpus_path = ImageGenerator.plot_corpus_rates(report, 'data/images/corpus_rates_demo.png')
    print(f"Corpus plot saved as: {corpus_path}")

    print("\nDemo completed successfully!")

except ImportError as e:
    print(f"Error importing modules: {e}")
    print("Make sure numpy and matplotlib are installed (see requirements.txt).")
