import itertools
import json

import pytest

# Shared fixtures. Names: A2 is the index-3 triangle with two inner points,
# D1 the 1-dimensional d+3 set with M_w = 2, RADON4 the 4-dimensional
# six-point set whose Radon parts both have three points.
A013 = [(0,), (1,), (3,)]
QUAD = [(0, 0), (1, 0), (2, 1), (0, 1)]
RADON4 = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 0, 0), (1, 1, 1, -1)]
A2 = [(0, 0), (1, 1), (1, -2), (-2, 1), (0, 1)]
D1 = [(0,), (-1,), (2,), (1,)]


def multiset_sumset(points, h):
    """hA by enumerating h-multisets; independent of the layer engine."""
    d = len(points[0])
    out = set()
    for combo in itertools.combinations_with_replacement(points, h):
        out.add(tuple(sum(p[k] for p in combo) for k in range(d)))
    if h == 0:
        out = {(0,) * d}
    return out


@pytest.fixture
def write_instance(tmp_path):
    def write(points, name="inst.json", **extra):
        path = tmp_path / name
        data = {"d": len(points[0]), "points": [list(p) for p in points]}
        data.update(extra)
        path.write_text(json.dumps(data))
        return str(path)

    return write


_ACCEPTANCE = []


def record_criterion(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    _ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
