"""Round trip through a presentation file.

Emits Lambda(2,2) as text, writes it to a temporary file, and verifies the
file with the same driver the command line uses.  Editing the file (for
example adding a relation) and re-running shows how the checks react.
"""

import pathlib
import tempfile

from tetrahedral.cli import VerificationConfig, run_verify
from tetrahedral.path_algebra import tetrahedral_relations
from tetrahedral.presentation_io import emit_presentation

text = emit_presentation(tetrahedral_relations(2, 2))
print(text)
with tempfile.TemporaryDirectory() as tmp:
    path = pathlib.Path(tmp) / "lambda22.txt"
    path.write_text(text)
    report = run_verify(VerificationConfig(presentation=str(path),
                                           checks=("dims", "symmetry", "lemmas")))
print(report.render())
