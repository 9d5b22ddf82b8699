import pytest

from hmap import create_app
from hmap.extensions import db
from hmap.core.serialize import serialize_map, serialize_ring

from .maps import DIGON, FIX1, K4T, M2


@pytest.fixture
def app(tmp_path, monkeypatch):
    monkeypatch.setenv('HMAP_WITNESS_DIR', str(tmp_path / 'witnesses'))
    app = create_app('config.TestConfig')
    yield app
    with app.app_context():
        db.drop_all()


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def fix1():
    return FIX1


@pytest.fixture
def m2():
    return M2


@pytest.fixture
def digon():
    return DIGON


@pytest.fixture
def k4t():
    return K4T


@pytest.fixture
def map_file(tmp_path):
    """Writes a map to disk and returns the path."""
    def write(m, name='map'):
        path = tmp_path / f'{name}.hmap'
        path.write_text(serialize_map(m), encoding='utf-8')
        return str(path)
    return write


@pytest.fixture
def ring_file(tmp_path):
    def write(l, name='ring'):
        path = tmp_path / f'{name}.ring'
        path.write_text(serialize_ring(l), encoding='utf-8')
        return str(path)
    return write
