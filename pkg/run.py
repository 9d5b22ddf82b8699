import sys

from hmap import create_app
from hmap.routes.cli import run_cli

app = create_app()

if __name__ == '__main__':
    sys.exit(run_cli(sys.argv[1:], app=app))
