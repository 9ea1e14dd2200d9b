#!/usr/bin/env python3
"""Regenerate the bundled knot table from the KnotInfo database.

Requires `pip install database_knotinfo`. Writes
include/bridgekit/knot_table.hpp and data/knots_le10.census.
"""
import csv
import os
import pathlib

import database_knotinfo

MAX_CROSSINGS = 10
ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_rows():
    path = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data",
                        "knotinfo_data_complete.csv")
    with open(path, newline="") as fh:
        reader = csv.reader(fh, delimiter="|")
        header = next(reader)
        next(reader)  # human-readable column titles
        col = {name: header.index(name) for name in
               ("name", "crossing_number", "gauss_notation", "bridge_index")}
        for row in reader:
            crossings = row[col["crossing_number"]]
            if not crossings.isdigit() or int(crossings) > MAX_CROSSINGS:
                continue
            raw = row[col["gauss_notation"]].strip("[] ")
            visits = [int(x) for x in raw.split(",")] if raw else []
            yield row[col["name"]], visits, int(row[col["bridge_index"]])


def to_code(visits):
    # KnotInfo: positive entries are over-passages, negative under-passages.
    return "".join(("O" if v > 0 else "U") + str(abs(v)) for v in visits)


def main():
    rows = list(load_rows())
    lines = [
        "// Generated by tools/gen_knot_table.py from the KnotInfo database. Do not edit.",
        "#pragma once",
        "",
        "#include <array>",
        "#include <string_view>",
        "",
        "namespace bridgekit {",
        "",
        "struct TabulatedKnot {",
        "    std::string_view name;",
        "    std::string_view code;  // minimal-crossing diagram, \"\" for the unknot",
        "    int crossing_number;",
        "    int bridge_index;",
        "};",
        "",
        f"inline constexpr std::array<TabulatedKnot, {len(rows)}> kKnotTable{{{{",
    ]
    for name, visits, bridge in rows:
        lines.append(f'    {{"{name}", "{to_code(visits)}", {len(visits) // 2}, {bridge}}},')
    lines += ["}};", "", "}  // namespace bridgekit", ""]
    (ROOT / "include/bridgekit/knot_table.hpp").write_text("\n".join(lines))

    census = ["# Minimal-crossing diagrams of all prime knots through "
              f"{MAX_CROSSINGS} crossings (KnotInfo).",
              "# name<TAB>gauss code; [] marks the 0-crossing diagram."]
    for name, visits, _ in rows:
        census.append(f"{name}\t{to_code(visits) or '[]'}")
    (ROOT / "data/knots_le10.census").write_text("\n".join(census) + "\n")


if __name__ == "__main__":
    main()
