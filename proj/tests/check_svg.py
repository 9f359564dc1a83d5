"""Parse every SVG in a directory and check the gallery summary against it."""

import json
import pathlib
import sys
import xml.etree.ElementTree as ET

SVG_NS = "{http://www.w3.org/2000/svg}"


def main(directory: str) -> int:
    root = pathlib.Path(directory)
    summary = json.loads((root / "summary.json").read_text())
    names = [s["scenario"] for s in summary["scenarios"]]
    svgs = sorted(root.glob("*.svg"))
    if len(svgs) != 7 or sorted(p.stem for p in svgs) != sorted(names):
        print(f"expected 7 SVGs matching the summary, found {[p.name for p in svgs]}")
        return 1
    for path in svgs:
        doc = ET.parse(path).getroot()
        if doc.tag != SVG_NS + "svg" or "viewBox" not in doc.attrib:
            print(f"{path.name}: not an svg root with a viewBox")
            return 1
        markers = doc.findall(f".//{SVG_NS}circle")
        entry = next(s for s in summary["scenarios"] if s["scenario"] == path.stem)
        if len(markers) != len(entry["points"]):
            print(f"{path.name}: {len(markers)} markers, summary lists {len(entry['points'])} points")
            return 1
    if not all(s["pass"] for s in summary["scenarios"]):
        print("summary reports a failing scenario")
        return 1
    print(f"{len(svgs)} SVGs well-formed")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
