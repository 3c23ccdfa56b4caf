#!/usr/bin/env python3
"""Prints the edges of a GML graph as 'source target [weight]' lines."""

import re
import sys
import zipfile


def read_member(archive, member):
    with zipfile.ZipFile(archive) as z:
        return z.read(member).decode("latin-1")


def edges(text):
    for block in re.finditer(r"edge\s*\[(.*?)\]", text, re.S):
        body = block.group(1)
        source = re.search(r"\bsource\s+(-?\d+)", body).group(1)
        target = re.search(r"\btarget\s+(-?\d+)", body).group(1)
        weight = re.search(r"\bvalue\s+([-+0-9.eE]+)", body)
        yield source, target, weight.group(1) if weight else None


def main():
    if len(sys.argv) == 3:
        text = read_member(sys.argv[1], sys.argv[2])
    elif len(sys.argv) == 2:
        with open(sys.argv[1], encoding="latin-1") as f:
            text = f.read()
    else:
        sys.exit("usage: gml_to_edgelist.py ARCHIVE.zip MEMBER | FILE.gml")
    print("# converted from GML")
    for s, t, w in edges(text):
        print(f"{s} {t}" if w is None else f"{s} {t} {w}")


if __name__ == "__main__":
    main()
