"""
GenBit Compress command line.

    encode    FASTA/raw text -> GBC1 container(s), statistics on stderr
    decode    GBC1 container -> raw or FASTA sequence
    stats     bits/base statistics and the best/average/worst rates for n
    bench     synthetic corpus benchmark (table, JSON, optional plot)
    selftest  built-in verification

'-' stands for standard input/output. Exit codes: 0 success, 1 data or I/O
error, 2 usage error.
"""
import json
import logging
import os
from typing import List, NoReturn

import click

from models.codebook import DEFAULT_CODEBOOK
from models.bench import BenchConfig
from models.errors import GenBitError, ParseError, UndefinedRate
from models.records import NormalizationPolicy
from utils.benchmark import BenchmarkRunner
from utils.codec import DEFAULT_CODEC
from utils.container import ContainerIO
from utils.data_loader import DataLoader, FORMATS
from utils.image_generator import ImageGenerator
from utils.metrics import MetricsCalculator
from utils.selftest import SelfTest
from utils.settings import DEFAULT_POLICY, RATE_DECIMALS, configure_logging

logger = logging.getLogger('genbit_compress')

EXIT_DATA_ERROR = 1


def _fail(error: Exception) -> NoReturn:
    click.echo(f"error: {type(error).__name__}: {error}", err=True)
    raise click.exceptions.Exit(EXIT_DATA_ERROR)


def _parse_policy(ctx, param, value: str) -> NormalizationPolicy:
    try:
        return NormalizationPolicy.parse(value)
    except ValueError as e:
        raise click.BadParameter(str(e))


def _check_output(path: str) -> None:
    """Fail before any work if the output directory is missing."""
    if path == '-':
        return
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory):
        raise FileNotFoundError(f"output directory does not exist: {directory}")


def _numbered_outputs(target: str, count: int) -> List[str]:
    """out.gbc -> out.1.gbc, out.2.gbc, ... when there is more than one record."""
    if count == 1:
        return [target]
    root, ext = os.path.splitext(target)
    return [f"{root}.{i}{ext}" for i in range(1, count + 1)]


def _write_bytes(path: str, data: bytes) -> None:
    with click.open_file(path, 'wb') as file:
        file.write(data)


def _read_bytes(path: str) -> bytes:
    with click.open_file(path, 'rb') as file:
        return file.read()


def _format_rate(rate) -> str:
    return f"{rate:.{RATE_DECIMALS}f}" if rate is not None else "n/a"


def _format_scenario(stats) -> str:
    if stats is None:
        return _format_rate(None)
    text = _format_rate(stats.rate)
    return f"{text} ({stats.note})" if stats.note else text


format_option = click.option('--format', 'fmt', type=click.Choice(FORMATS), default='fasta', show_default=True,
                             help="Input format; fasta falls back to raw when there is no '>' header.")
policy_option = click.option('--policy', default=DEFAULT_POLICY, show_default=True, callback=_parse_policy,
                             help="Non-ACGT handling: strict, skip or substitute=<base>.")


@click.group()
@click.option('--verbose', '-v', is_flag=True, help="Debug logging.")
@click.pass_context
def cli(ctx, verbose):
    """GenBit Compress: 4-base fragment DNA compression."""
    ctx.ensure_object(dict)
    configure_logging(verbose)


@cli.command('encode')
@click.argument('source', type=click.Path(dir_okay=False, allow_dash=True))
@click.argument('target', type=click.Path(dir_okay=False, allow_dash=True))
@format_option
@policy_option
def cmd_encode(source, target, fmt, policy):
    """Compress SOURCE into GBC1 container TARGET (numbered per record)."""
    try:
        _check_output(target)
        records = DataLoader.read_records(source, fmt)
        if not records:
            raise ParseError("input holds no sequence records")
        if target == '-' and len(records) > 1:
            raise click.UsageError(f"{len(records)} records cannot share standard output; give a file name")
        sequences = [DataLoader.normalize(r.sequence_text, policy, r.id) for r in records]

        for sequence, output in zip(sequences, _numbered_outputs(target, len(sequences))):
            stream = DEFAULT_CODEC.encode(sequence)
            data = ContainerIO.write_container(sequence.n, stream)
            _write_bytes(output, data)
            label = f"{sequence.name}: " if sequence.name else ''
            if sequence.n:
                summary = MetricsCalculator.measure(sequence, stream=stream).summary()
            else:
                summary = "n=0 tau=0 upsilon=0 bits=0 rate=n/a"
            click.echo(f"{label}{summary} -> {output} ({len(data)} bytes)", err=True)
    except (GenBitError, OSError) as e:
        _fail(e)


@cli.command('decode')
@click.argument('source', type=click.Path(dir_okay=False, allow_dash=True))
@click.argument('target', type=click.Path(dir_okay=False, allow_dash=True))
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='raw', show_default=True,
              help="raw writes the bare sequence; fasta wraps it in a record.")
@click.option('--id', 'record_id', default='decoded', show_default=True, help="FASTA header for --format fasta.")
def cmd_decode(source, target, fmt, record_id):
    """Restore the sequence held in GBC1 container SOURCE."""
    try:
        _check_output(target)
        n, stream = ContainerIO.read_container(_read_bytes(source))
        sequence = DEFAULT_CODEC.decode(stream, n)
        text = sequence.text if fmt == 'raw' else DataLoader.format_fasta(record_id, sequence.text)
        _write_bytes(target, text.encode('ascii'))
        logger.info("decoded %d bases from %s", n, source)
    except (GenBitError, OSError) as e:
        _fail(e)


@cli.command('stats')
@click.argument('source', type=click.Path(dir_okay=False, allow_dash=True))
@format_option
@policy_option
@click.option('--json', 'as_json', is_flag=True, help="Emit JSON.")
@click.option('--tokens', is_flag=True, help="Also print the 9-bit tokens and tail codes.")
def cmd_stats(source, fmt, policy, as_json, tokens):
    """Report n, tau, upsilon, bits and bits/base for each record of SOURCE."""
    try:
        sequences = DataLoader.load_sequences(source, fmt, policy)
        if not sequences:
            raise UndefinedRate("no sequence to measure")
        results = []
        for sequence in sequences:
            stream = DEFAULT_CODEC.encode(sequence)
            stats = MetricsCalculator.measure(sequence, stream=stream)
            envelope = MetricsCalculator.scenario_envelope(sequence.n)
            results.append((sequence, stream, stats, envelope))
    except (GenBitError, OSError) as e:
        _fail(e)

    if as_json:
        payload = []
        for sequence, stream, stats, envelope in results:
            entry = {'id': sequence.name}
            entry.update(stats.to_dict())
            entry['scenarios'] = {kind.value: (s.to_dict() if s else None) for kind, s in envelope.items()}
            if tokens:
                entry['tokens'] = stream.grouped(sequence.n)
            payload.append(entry)
        click.echo(json.dumps({'records': payload}, indent=2))
        return

    for sequence, stream, stats, envelope in results:
        label = f"{sequence.name}: " if sequence.name else ''
        click.echo(f"{label}{stats.summary()}")
        scenarios = ' '.join(f"{kind.value}={_format_scenario(s)}" for kind, s in envelope.items())
        click.echo(f"{label}scenarios {scenarios}")
        if tokens:
            click.echo(f"{label}tokens {stream.grouped(sequence.n)}")


@cli.command('bench')
@click.option('--length', type=click.IntRange(min=1), default=100000, show_default=True, help="Bases per sequence.")
@click.option('--density', type=click.FloatRange(0.0, 1.0), default=0.0, show_default=True,
              help="Probability a fragment copies its predecessor.")
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True, help="Base seed; trial t uses seed + t.")
@click.option('--trials', type=click.IntRange(min=1), default=1, show_default=True, help="Sequences to generate.")
@click.option('--json', 'as_json', is_flag=True, help="Emit JSON.")
@click.option('--plot', type=click.Path(dir_okay=False), default=None,
              help="Also sweep densities 0..1 and save a rate plot (PNG).")
def cmd_bench(length, density, seed, trials, as_json, plot):
    """Benchmark bits/base over seeded synthetic sequences."""
    try:
        report = BenchmarkRunner.run(BenchConfig(length, density, seed, trials))
        click.echo(report.to_json() if as_json else report.render_table())
        if plot:
            sweep = BenchmarkRunner.sweep_densities(length, seed=seed, trials=trials)
            path = ImageGenerator.plot_rate_sweep(sweep, length, plot)
            click.echo(f"plot written to {path}", err=True)
    except (GenBitError, OSError) as e:
        _fail(e)


@cli.command('selftest')
@click.pass_context
def cmd_selftest(ctx):
    """Verify the codebook, the case values and a 1,000-sequence round trip."""
    codebook = ctx.obj.get('codebook', DEFAULT_CODEBOOK)
    results = SelfTest(codebook).run(report=lambda result: click.echo(result.render()))
    failed = [r.name for r in results if not r.passed]
    if failed:
        click.echo(f"selftest failed: {', '.join(failed)}", err=True)
        raise click.exceptions.Exit(EXIT_DATA_ERROR)
    click.echo("all checks passed")


if __name__ == '__main__':
    cli()
