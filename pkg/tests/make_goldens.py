"""Regenerate the golden CLI outputs under tests/golden/.

Run after an intentional report or figure change:

    python tests/make_goldens.py

SVG goldens are rendered by matplotlib; regenerate them when the pinned
matplotlib version changes.
"""

import contextlib
import io
from pathlib import Path

from fuzzmark.cli import main

GOLDEN = Path(__file__).parent / "golden"

CLASS_1 = "1/6,0,5/6"
CLASS_2 = "0,1/3,2/3"

CAPTURED = {
    "analyze_trap_class1.json": ["analyze", "--model", "trap", "--dist", CLASS_1, "--json"],
    "analyze_rect_class1.csv": ["analyze", "--model", "rect", "--dist", CLASS_1, "--csv"],
    "compare_rect_classes.json": [
        "compare", "--model", "rect",
        "--cohort", f"Class I={CLASS_1}", "--cohort", f"Class II={CLASS_2}", "--json",
    ],
}

RENDERED = {
    "analyze_trap_class1.svg": ["analyze", "--model", "trap", "--dist", CLASS_1, "--json"],
    "compare_rect_classes.svg": [
        "compare", "--model", "rect",
        "--cohort", f"Class I={CLASS_1}", "--cohort", f"Class II={CLASS_2}", "--json",
    ],
}


def regenerate() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in CAPTURED.items():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(argv)
        assert code == 0, f"{name}: exit {code}"
        (GOLDEN / name).write_text(buf.getvalue(), encoding="utf-8")
        print(f"wrote {GOLDEN / name}")
    for name, argv in RENDERED.items():
        with contextlib.redirect_stdout(io.StringIO()):
            code = main(argv + ["--svg", str(GOLDEN / name)])
        assert code == 0, f"{name}: exit {code}"
        print(f"wrote {GOLDEN / name}")


if __name__ == "__main__":
    regenerate()
