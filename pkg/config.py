import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    SQLALCHEMY_DATABASE_URI = os.environ.get('HMAP_DATABASE_URL', 'sqlite:///hmap.db')
    SQLALCHEMY_TRACK_MODIFICATIONS = False
    TIMEZONE = 'Europe/Berlin'

    # Logging
    HMAP_LOG_LEVEL = os.environ.get('HMAP_LOG_LEVEL', 'INFO')

    # Fuzzing (HMAP_WITNESS_DIR in the environment wins over this default at run time)
    HMAP_WITNESS_DIR = os.environ.get('HMAP_WITNESS_DIR', os.path.join(os.getcwd(), 'instance', 'witnesses'))
    FUZZ_MAX_RING = int(os.environ.get('FUZZ_MAX_RING', 6))
    FUZZ_WORKERS = int(os.environ.get('FUZZ_WORKERS', 1))

    # Link-move weights of the planar generator
    GEN_WEIGHTS = {'cross': 1, 'face': 2, 'mirror': 1}


class TestConfig(Config):
    TESTING = True
    SQLALCHEMY_DATABASE_URI = 'sqlite://'
