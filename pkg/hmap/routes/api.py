from flask import Blueprint, request, jsonify

from hmap.core.characteristics import counts
from hmap.core.errors import HypermapError, ParseError, PreconditionError
from hmap.core.fmap import check_inv_hmap
from hmap.core.jordan import jordan_check
from hmap.core.orbits import OrbitKind, orbit
from hmap.core.rings import ring_check
from hmap.core.serialize import parse_map, parse_ring
from hmap.models import FuzzRun

api_bp = Blueprint('api', __name__, url_prefix='/api')


@api_bp.errorhandler(HypermapError)
def hypermap_error(e):
    body = {'status': 'error', 'msg': str(e)}
    if isinstance(e, PreconditionError):
        body.update(predicate=e.predicate, conjunct=e.conjunct)
    elif isinstance(e, ParseError):
        body.update(line=e.line_no)
    return jsonify(body), 400


def _body():
    return request.get_json(silent=True) or {}


def _map():
    text = _body().get('map')
    if text is None:
        raise ParseError(0, '', "missing 'map' field")
    return parse_map(text)


def _ring():
    return parse_ring(_body().get('ring', ''))


@api_bp.route('/check', methods=['POST'])
def check():
    failure = check_inv_hmap(_map())
    if failure is None:
        return jsonify({'inv_hmap': True})
    pos, predicate, conjunct = failure
    return jsonify({'inv_hmap': False, 'position': pos, 'predicate': predicate, 'conjunct': conjunct})


@api_bp.route('/stats', methods=['POST'])
def stats():
    return jsonify(counts(_map()).as_dict())


@api_bp.route('/orbit', methods=['POST'])
def orbit_view():
    data = _body()
    try:
        kind = OrbitKind(data.get('kind'))
        dart = int(data.get('dart'))
    except (TypeError, ValueError):
        return jsonify({'status': 'error', 'msg': "need 'kind' (edge|vertex|face) and an integer 'dart'"}), 400
    o = orbit(_map(), kind, dart)
    return jsonify({'period': o.period, 'members': list(o.members)})


@api_bp.route('/ring-check', methods=['POST'])
def ring_check_view():
    diag = ring_check(_map(), _ring())
    return jsonify({'valid': diag.valid, 'conditions': diag.conditions, 'verdict': diag.describe()})


@api_bp.route('/jordan', methods=['POST'])
def jordan():
    outcome = jordan_check(_map(), _ring())
    return jsonify({'nc_before': outcome.nc_before, 'nc_after': outcome.nc_after, 'verdict': outcome.verdict})


@api_bp.route('/fuzz-runs')
def fuzz_runs():
    runs = FuzzRun.query.order_by(FuzzRun.id.desc()).all()
    return jsonify([r.as_dict() for r in runs])
