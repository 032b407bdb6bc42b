import json
import os
import pathlib
import subprocess

import pytest

SOURCE = pathlib.Path(os.environ.get("WIDTHLAB_SOURCE", pathlib.Path(__file__).resolve().parents[2]))
CLI = os.environ.get("WIDTHLAB_CLI", str(SOURCE / "build" / "widthlab"))


class Result:
    def __init__(self, proc):
        self.code = proc.returncode
        self.out = proc.stdout
        self.err = proc.stderr

    def json(self):
        return json.loads(self.out)


@pytest.fixture
def run():
    def _run(*args, cwd=SOURCE):
        proc = subprocess.run([CLI, *map(str, args)], cwd=cwd, capture_output=True, text=True, timeout=600)
        return Result(proc)

    return _run


@pytest.fixture
def schema():
    def _load(name):
        return json.loads((SOURCE / "schemas" / f"{name}.schema.json").read_text())

    return _load


@pytest.fixture
def golden():
    def _load(name):
        return json.loads((SOURCE / "tests" / "golden" / name).read_text())

    return _load
