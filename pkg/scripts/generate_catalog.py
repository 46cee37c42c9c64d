"""Regenerate the bundled catalog data files from the explicit constructions.

Writes src/preproj/data/catalog_a1.json .. catalog_a4.json.  Run after
changing anything in catalog_build.py; the test suite fails loudly if the
bundled files and the constructions drift apart.
"""

import argparse
import pathlib

import preproj
from preproj.catalog import render_catalog_json
from preproj.catalog_build import build_entries


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(preproj.__file__).parent / "data",
                        help="target directory (default: the package data dir)")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for n in (1, 2, 3, 4):
        text = render_catalog_json(f"A{n}", build_entries(n))
        path = args.out / f"catalog_a{n}.json"
        path.write_text(text)
        print(f"wrote {path} ({len(text.splitlines())} lines)")


if __name__ == "__main__":
    main()
