"""Parse sweep2 SVG output as XML and check its structure."""

import os
import subprocess
import sys
import xml.etree.ElementTree as ET

SVG = "{http://www.w3.org/2000/svg}"


def sweep_svg(c1, c2, steps):
    out = subprocess.run(
        [os.environ["CHM"], "--format", "svg", "sweep2", "--c1", c1, "--c2", c2, "--steps", str(steps)],
        check=True,
        capture_output=True,
    ).stdout
    return ET.fromstring(out)


def count(root, tag, cls):
    return sum(1 for el in root.iter(SVG + tag) if el.get("class") == cls)


def main():
    failures = 0
    for c1, c2, steps, points in [
        ("1+1i", "1-1i", 11, 11),
        ("8", "1+1i", 11, 11),
        ("1", "3", 5, 5),
        ("-1", "2", 4, 3),  # theta = 2/3 has no mean
    ]:
        root = sweep_svg(c1, c2, steps)
        got = (root.tag, count(root, "circle", "point"), count(root, "path", "locus"))
        want = (SVG + "svg", points, 1)
        status = "ok" if got == want else "FAIL"
        failures += got != want
        print(f"{status} {c1} {c2} steps={steps}: {got}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
