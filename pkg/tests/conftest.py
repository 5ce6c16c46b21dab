import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def data_path(name):
    return os.path.join(DATA_DIR, name)
