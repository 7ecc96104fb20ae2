"""Print Alexander, qhat and Morton polynomials for a few standard closures.

    python3 scripts/alexander_table.py [--display q] [--json]
"""

import argparse
import json
from dataclasses import dataclass, field

from braidrep.braids import parse_braid
from braidrep.burau import alexander_via_minor, morton_det
from braidrep.quantum import qhat

STANDARD = {
    "unknot (B2)": "2: 1",
    "Hopf link": "2: 1 1",
    "trefoil": "2: 1 1 1",
    "figure-eight": "3: 1 -2 1 -2",
    "cinquefoil T(2,5)": "2: 1 1 1 1 1",
    "T(3,4)": "3: 1 2 1 2 1 2 1 2",
    "three-twist 5_2": "3: 1 1 1 2 -1 2",
    "2-component unlink": "2:",
}


@dataclass
class TableConfig:
    display: str = "t-if-even"
    braids: dict = field(default_factory=lambda: dict(STANDARD))


def build_rows(cfg: TableConfig):
    rows = []
    for name, text in cfg.braids.items():
        w = parse_braid(text)
        rows.append(
            {
                "name": name,
                "braid": text,
                "alexander": alexander_via_minor(w).format(cfg.display),
                "qhat": qhat(w).canonical_unit_form("q").format(cfg.display),
                "morton": morton_det(w).format(cfg.display),
            }
        )
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--display", choices=("q", "t-if-even"), default="t-if-even")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = build_rows(TableConfig(display=args.display))
    if args.json:
        print(json.dumps(rows, ensure_ascii=False, indent=1))
        return
    width = max(len(r["name"]) for r in rows)
    for r in rows:
        print(f"{r['name']:<{width}}  alexander={r['alexander']}  qhat={r['qhat']}")
        print(f"{'':<{width}}  morton={r['morton']}")


if __name__ == "__main__":
    main()
