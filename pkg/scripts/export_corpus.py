"""Write every named corpus program to data/programs/<name>.lr."""
from pathlib import Path

from lrbound.corpus import PROGRAMS, program
from lrbound.parser import render

OUT = Path(__file__).resolve().parents[1] / "data" / "programs"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name in sorted(PROGRAMS):
        (OUT / f"{name}.lr").write_text(render(program(name)) + "\n")
    print(f"wrote {len(PROGRAMS)} programs to {OUT}")


if __name__ == "__main__":
    main()
