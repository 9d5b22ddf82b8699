import os
from datetime import datetime
try:
    import zoneinfo
except ImportError:
    from backports import zoneinfo
from flask import current_app


def get_current_time():
    """Returns the current time in the configured timezone."""
    tz = zoneinfo.ZoneInfo(current_app.config.get('TIMEZONE', 'UTC'))
    return datetime.now(tz)


def bool_text(value):
    return 'true' if value else 'false'


def witness_dir(override=None):
    """Zielordner für Fuzz-Witnesses: Option > Umgebungsvariable > Config."""
    path = override or os.environ.get('HMAP_WITNESS_DIR') or current_app.config['HMAP_WITNESS_DIR']
    os.makedirs(path, exist_ok=True)
    return path


def write_witness_files(witnesses, directory):
    """Schreibt jeden Witness als <trial>-<check>.hmap / .ring. Gibt die Pfade zurück."""
    paths = []
    for w in witnesses:
        stem = os.path.join(directory, f"{w.trial:06d}-{w.check.replace(' ', '_')}")
        with open(stem + '.hmap', 'w', encoding='utf-8') as f:
            f.write(w.map_text)
        with open(stem + '.ring', 'w', encoding='utf-8') as f:
            f.write(w.ring_text)
        paths.append(stem)
    return paths
