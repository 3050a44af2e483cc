"""Published tables for n <= 30, transcribed as data.

counts.csv          C_n and C_{n,i}, n = 2..30, in the `counts --format csv` layout
graded_counts.json  [C_{n,i,2}, C_{n,i,3}, ...] per n and i
poincare.tsv        Poincare-Betti series of K over A_n (graded, non-graded), n = 2..25,
                    with denominators normalized to constant term +1
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources


def _text(name: str) -> str:
    return resources.files(__name__).joinpath(name).read_text()


def counts_csv() -> str:
    return _text("counts.csv")


def counts() -> dict[int, list[int]]:
    """{n: [C_n, C_{n,1}, C_{n,2}, ...]}."""
    rows = list(csv.reader(io.StringIO(counts_csv())))
    return {int(r[0]): [int(x) for x in r[1:] if x] for r in rows[1:]}


def graded_counts() -> dict[int, list[list[int]]]:
    return {int(k): v for k, v in json.loads(_text("graded_counts.json")).items()}


def poincare() -> dict[int, tuple[str | None, str]]:
    """{n: (graded, non_graded)}; graded is None where the table leaves it out."""
    out = {}
    for line in _text("poincare.tsv").splitlines()[1:]:
        n, graded, plain = line.split("\t")
        out[int(n)] = (graded or None, plain)
    return out
