"""Golden-table loading and row-level comparison.

Golden files are tab-separated with '#' comment headers. Search-table rows
compare a-values up to subgroup equivalence (see the file headers), all
other fields exactly.
"""

from importlib import resources

from .primesearch import canonical_subgroup_rep

TABLE1 = "table1.tsv"
TABLE2 = "table2.tsv"
TABLE3 = "table3.tsv"


def load_rows(source) -> list[list[str]]:
    """Rows of a golden file: `source` is a path or an open-file text."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source) as fh:
            text = fh.read()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            rows.append(line.split("\t"))
    return rows


def load_packaged(name: str) -> list[list[str]]:
    ref = resources.files("neumaier") / "golden" / name
    return load_rows(ref.open("r"))


def _search_rows_equal(golden: list[str], produced: list[str]) -> bool:
    # columns: q p a t v k lambda s; a compares up to subgroup equivalence
    if golden[:2] != produced[:2] or golden[3:] != produced[3:]:
        return False
    if golden[2] == produced[2]:
        return True
    q, p = int(golden[0]), int(golden[1])
    return (canonical_subgroup_rep(p, q, int(golden[2]))
            == canonical_subgroup_rep(p, q, int(produced[2])))


def compare(produced: list[list[str]], golden: list[list[str]],
            subgroup_a_column: bool = False) -> list[str]:
    """Row-level diff; empty list means the tables agree.

    Rows are compared positionally. With subgroup_a_column the third
    column is compared up to subgroup equivalence.
    """
    diff = []
    for idx in range(max(len(produced), len(golden))):
        if idx >= len(produced):
            diff.append(f"row {idx + 1}: missing, expected {' '.join(golden[idx])}")
        elif idx >= len(golden):
            diff.append(f"row {idx + 1}: unexpected {' '.join(produced[idx])}")
        else:
            g, m = golden[idx], produced[idx]
            same = _search_rows_equal(g, m) if subgroup_a_column else g == m
            if not same:
                diff.append(f"row {idx + 1}: expected {' '.join(g)}, got {' '.join(m)}")
    return diff
