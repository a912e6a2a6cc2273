"""The lie2 command line, driven in-process: export, verify, construct."""

import io
import tempfile
from pathlib import Path

from lie2bialg.cli import main


def lie2(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    print(f"$ lie2 {' '.join(argv)}\n{out.getvalue()}[exit {code}]\n")
    return code


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    lie2("catalog", "list")
    r_file, triple = str(tmp / "r.json"), str(tmp / "triple.json")
    lie2("catalog", "export", "gl2-sl2-r-matrix", "--output", r_file)
    lie2("verify", "--input", r_file)
    lie2("construct", "from-r", "--input", r_file, "--output", triple)
    lie2("verify", "--input", triple, "--report", "machine")
    (tmp / "empty.json").write_text("")
    lie2("verify", "--input", str(tmp / "empty.json"))
