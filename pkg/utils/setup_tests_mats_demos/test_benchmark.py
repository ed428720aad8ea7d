"""
Tests for the synthetic generator, corpus benchmark and plots
"""
import json

import numpy as np
import pytest

from models.bench import BenchConfig
from models.errors import EmptyCorpus, UndefinedRate
from models.sequence import NucleotideSequence
from models.stats import Scenario
from utils.benchmark import SWEEP_DENSITIES, BenchmarkRunner, generate_synthetic, run_corpus
from utils.codec import count_collapsed_pairs
from utils.image_generator import ImageGenerator


def test_full_density_on_two_fragments_gives_one_pair():
    sequence = generate_synthetic(BenchConfig(8, 1.0, seed=5))
    assert sequence.n == 8
    assert count_collapsed_pairs(sequence) == 1


def test_zero_density_never_repeats():
    sequence = generate_synthetic(BenchConfig(4000, 0.0, seed=3))
    assert count_collapsed_pairs(sequence) == 0


def test_generator_is_deterministic():
    config = BenchConfig(1001, 0.4, seed=42)
    assert generate_synthetic(config).text == generate_synthetic(config).text
    assert generate_synthetic(config).text != generate_synthetic(BenchConfig(1001, 0.4, seed=43)).text


def test_trials_use_consecutive_seeds():
    corpus = BenchmarkRunner.generate_corpus(BenchConfig(200, 0.5, seed=10, trials=3))
    assert [s.name for s in corpus] == ['trial-0', 'trial-1', 'trial-2']
    assert corpus[2].text == BenchmarkRunner.generate_synthetic(BenchConfig(200, 0.5, seed=12)).text


@pytest.mark.parametrize('length', [0, 1, 2, 3, 4, 5, 63, 64, 1001])
def test_generated_length(length):
    sequence = generate_synthetic(BenchConfig(length, 0.5))
    assert sequence.n == length
    assert sequence.tau == length % 4


def test_full_density_reaches_best_case():
    report = BenchmarkRunner.run(BenchConfig(64, 1.0))
    assert report.mean_rate == 1.125


def test_zero_density_at_fragment_multiple_is_exactly_two_and_a_quarter():
    report = BenchmarkRunner.run(BenchConfig(100000, 0.0))
    assert report.mean_rate == 2.25


@pytest.mark.parametrize('tau', [1, 2, 3])
def test_zero_density_with_tail_stays_below_limit(tau):
    rate = BenchmarkRunner.run(BenchConfig(100000 + tau, 0.0)).mean_rate
    assert 2.23 <= rate < 2.25


@pytest.mark.slow
def test_rate_falls_as_density_rises():
    sweep = BenchmarkRunner.sweep_densities(4000, seed=0, trials=30)
    rates = [rate for _, rate in sweep]
    assert [d for d, _ in sweep] == list(SWEEP_DENSITIES)
    assert all(a > b for a, b in zip(rates, rates[1:]))


def test_density_tracks_collapsed_pairs():
    sequences = BenchmarkRunner.generate_corpus(BenchConfig(40000, 0.5, trials=5))
    pairs = np.mean([count_collapsed_pairs(s) for s in sequences])
    # copies never follow copies, so the expected share is d / (1 + d)
    assert pairs / 9999 == pytest.approx(0.5 / 1.5, abs=0.02)


def test_bench_config_validation():
    for bad in (dict(length=-1, repeat_density=0.5), dict(length=8, repeat_density=1.5),
                dict(length=8, repeat_density=0.5, trials=0), dict(length=8, repeat_density=0.5, seed=-1)):
        with pytest.raises(ValueError):
            BenchConfig(**bad)


def test_run_corpus_errors():
    with pytest.raises(EmptyCorpus):
        run_corpus([])
    with pytest.raises(UndefinedRate):
        run_corpus([NucleotideSequence('acgt'), NucleotideSequence('')])


def test_run_corpus_single_input():
    report = run_corpus([NucleotideSequence('aaaaaaaa')])
    assert report.mean_rate == 1.125
    assert report.entries[0].name == 'input-1'
    assert report.entries[0].envelope[Scenario.BEST] == 1.125


def test_identical_inputs_have_identical_stats():
    text = generate_synthetic(BenchConfig(999, 0.3, seed=7)).text
    report = run_corpus([NucleotideSequence(text, 'x'), NucleotideSequence(text, 'y')])
    first, second = report.entries
    assert first.stats == second.stats
    assert report.mean_rate == first.stats.rate


def test_render_table_and_json():
    report = run_corpus([NucleotideSequence('aaaaaaaa', 'pair'), NucleotideSequence('acgtatgc', 'distinct')])
    table = report.render_table()
    lines = table.splitlines()
    assert lines[0].split() == ['name', 'n', 'tau', 'upsilon', 'bits', 'rate']
    assert lines[2].split() == ['pair', '8', '0', '1', '9', '1.1250']
    assert lines[3].split() == ['distinct', '8', '0', '0', '18', '2.2500']
    assert 'mean rate: 1.6875 bits/base' in table
    assert 'envelope n=8: best=1.1250 average=n/a worst=2.2500' in table
    payload = json.loads(report.to_json())
    assert payload['mean_rate'] == 1.6875
    assert payload['entries'][0]['bits'] == 9
    assert payload['entries'][0]['envelope']['average'] is None


def test_plot_rate_sweep_writes_png(tmp_path):
    sweep = BenchmarkRunner.sweep_densities(400, densities=(0.0, 0.5, 1.0))
    path = ImageGenerator.plot_rate_sweep(sweep, 400, str(tmp_path / 'plots' / 'sweep.png'))
    with open(path, 'rb') as file:
        assert file.read(8) == b'\x89PNG\r\n\x1a\n'


def test_plot_corpus_rates_writes_png(tmp_path):
    report = BenchmarkRunner.run(BenchConfig(67, 0.5, trials=4))
    path = ImageGenerator.plot_corpus_rates(report, str(tmp_path / 'corpus.png'))
    with open(path, 'rb') as file:
        assert file.read(8) == b'\x89PNG\r\n\x1a\n'
