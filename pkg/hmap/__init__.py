import logging


def create_app(config_object='config.Config'):
    # Flask erst hier laden: hmap.core bleibt ohne Flask importierbar
    from flask import Flask
    from .extensions import db

    app = Flask(__name__)
    app.config.from_object(config_object)

    logging.getLogger('hmap').setLevel(app.config.get('HMAP_LOG_LEVEL', 'INFO'))

    # Init Extensions
    db.init_app(app)

    # Blueprints registrieren
    from hmap.routes.cli import cli_bp
    from hmap.routes.api import api_bp

    app.register_blueprint(cli_bp)
    app.register_blueprint(api_bp)

    with app.app_context():
        from . import models  # noqa: F401
        db.create_all()

    return app
