import sys
from functools import wraps

import click
from flask import Blueprint, current_app

from hmap.core.characteristics import counts
from hmap.core.errors import HypermapError
from hmap.core.fmap import check_inv_hmap
from hmap.core.jordan import fuzz_jordan, gen_map, gen_planar, jordan_check
from hmap.core.orbits import OrbitKind, orbit
from hmap.core.rings import Bl, ring_check
from hmap.core.serialize import parse_map, parse_ring, serialize_map, to_dot
from hmap.core.stats import STAT_KEYS
from hmap.models import FuzzRun
from hmap.utils import bool_text, witness_dir, write_witness_files

# Exit codes: 0 = ok / Prädikat wahr, 1 = Prädikat falsch, 2 = Bedienungs-, Parse- oder Vorbedingungsfehler
EXIT_FALSE = 1
EXIT_ERROR = 2

cli_bp = Blueprint('hmap', __name__, cli_group=None)

MapFile = click.Path(exists=True, dir_okay=False)


class CliError(click.ClickException):
    exit_code = EXIT_ERROR


def hypermap_errors(f):
    """Übersetzt Bibliotheksfehler in Exit-Code 2."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except HypermapError as e:
            raise CliError(str(e)) from e
    return decorated_function


def _read(path):
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def _write(path, text):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)


def load_map(path):
    return parse_map(_read(path))


def load_ring(path):
    return parse_ring(_read(path))


def _exit(ok):
    if not ok:
        click.get_current_context().exit(EXIT_FALSE)


@cli_bp.cli.command('check')
@click.argument('map_file', type=MapFile)
@hypermap_errors
def check(map_file):
    """inv_hmap verdict of a map file."""
    failure = check_inv_hmap(load_map(map_file))
    if failure is None:
        click.echo('inv_hmap=true')
    else:
        pos, predicate, conjunct = failure
        click.echo(f'inv_hmap=false {predicate}: {conjunct} at constructor #{pos + 1}')
    _exit(failure is None)


@cli_bp.cli.command('stats')
@click.argument('map_file', type=MapFile)
@hypermap_errors
def stats(map_file):
    """nd, ne, nv, nf, nc, ec, genus and planarity."""
    values = counts(load_map(map_file)).as_dict()
    for key in STAT_KEYS:
        value = values[key]
        click.echo(f'{key}={bool_text(value) if isinstance(value, bool) else value}')


@cli_bp.cli.command('orbit')
@click.argument('map_file', type=MapFile)
@click.option('--kind', type=click.Choice([k.value for k in OrbitKind]), required=True)
@click.option('--dart', type=int, required=True)
@hypermap_errors
def orbit_cmd(map_file, kind, dart):
    """Orbit of a dart, in successor order."""
    o = orbit(load_map(map_file), OrbitKind(kind), dart)
    click.echo(f'period={o.period}')
    click.echo('members=' + ' '.join(str(z) for z in o.members))


@cli_bp.cli.command('planar')
@click.argument('map_file', type=MapFile)
@hypermap_errors
def planar_cmd(map_file):
    s = counts(load_map(map_file))
    click.echo(f'planar={bool_text(s.planar)} genus={s.genus}')
    _exit(s.planar)


@cli_bp.cli.command('ring-check')
@click.argument('map_file', type=MapFile)
@click.argument('ring_file', type=MapFile)
@hypermap_errors
def ring_check_cmd(map_file, ring_file):
    diag = ring_check(load_map(map_file), load_ring(ring_file))
    for name, ok in diag.conditions.items():
        click.echo(f'{name}={bool_text(ok)}')
    click.echo(f'verdict={diag.describe()}')
    _exit(diag.valid)


@cli_bp.cli.command('break')
@click.argument('map_file', type=MapFile)
@click.argument('ring_file', type=MapFile)
@click.option('-o', '--output', required=True, type=click.Path(dir_okay=False))
@hypermap_errors
def break_cmd(map_file, ring_file, output):
    """Write the map broken along the ring."""
    broken = Bl(load_map(map_file), load_ring(ring_file))
    _write(output, serialize_map(broken))
    click.echo(f'nc={counts(broken).nc}')


@cli_bp.cli.command('jordan')
@click.argument('map_file', type=MapFile)
@click.argument('ring_file', type=MapFile)
@hypermap_errors
def jordan_cmd(map_file, ring_file):
    outcome = jordan_check(load_map(map_file), load_ring(ring_file))
    click.echo(f'nc_before={outcome.nc_before} nc_after={outcome.nc_after} verdict={outcome.verdict}')
    _exit(outcome.passed)


@cli_bp.cli.command('gen')
@click.option('--darts', type=int, required=True)
@click.option('--links', type=int, required=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--free', is_flag=True, help='Any inv_hmap map instead of a planar one.')
@click.option('-o', '--output', required=True, type=click.Path(dir_okay=False))
@hypermap_errors
def gen(darts, links, seed, free, output):
    if free:
        m = gen_map(seed, darts, links)
    else:
        m = gen_planar(seed, darts, links, current_app.config['GEN_WEIGHTS'])
    _write(output, serialize_map(m))
    click.echo(f'links={len(m) - darts}')


@cli_bp.cli.command('fuzz')
@click.option('--trials', type=int, required=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--size', type=int, required=True)
@click.option('--max-ring', type=int, default=None)
@click.option('--workers', type=int, default=None)
@click.option('--witness-dir', 'witness_directory', type=click.Path(file_okay=False), default=None)
@hypermap_errors
def fuzz(trials, seed, size, max_ring, workers, witness_directory):
    """Fuzz the Jordan check on generated planar maps."""
    cfg = current_app.config
    report = fuzz_jordan(trials, seed, size,
                         max_ring=max_ring or cfg['FUZZ_MAX_RING'],
                         workers=workers or cfg['FUZZ_WORKERS'],
                         weights=cfg['GEN_WEIGHTS'])
    run = FuzzRun.record(report)
    if report.witnesses:
        directory = witness_dir(witness_directory)
        write_witness_files(report.witnesses, directory)
        current_app.logger.info('%d witnesses written to %s', len(report.witnesses), directory)
    click.echo(f'run={run.id} {report.summary()}')
    _exit(report.total_failures == 0)


@cli_bp.cli.command('dot')
@click.argument('map_file', type=MapFile)
@click.option('-o', '--output', required=True, type=click.Path(dir_okay=False))
@hypermap_errors
def dot(map_file, output):
    _write(output, to_dot(load_map(map_file)))


def run_cli(argv=None, app=None):
    """Run one command line and return its exit code."""
    if app is None:
        from hmap import create_app
        app = create_app()
    args = list(sys.argv[1:] if argv is None else argv)
    with app.app_context():
        try:
            rv = app.cli.main(args=args, prog_name='hmap', standalone_mode=False)
        except click.ClickException as e:
            e.show()
            return e.exit_code
        except click.exceptions.Abort:
            return EXIT_ERROR
    return rv if isinstance(rv, int) else 0
