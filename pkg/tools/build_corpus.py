"""Regenerate the corpus/ directory from the library builders.

Run from the repository root:

    python3 tools/build_corpus.py [corpus]

Most of the corpus is derived output: the propositional and predicate
scripts are serialized from the theorem libraries, the matrix file from
the built-in Bernays matrix, and moods.expected from the mood census.
The sequent scripts and a few propositional scripts that exercise
derived-rule lines are kept as string constants below.

Check the result with:

    python3 -m logic1939.cli corpus corpus
"""

from __future__ import annotations

import argparse
from pathlib import Path

from logic1939 import hilbert, matrices, pred_kernel, sequents, syllogistic
from logic1939.recipes import _LIBRARY_SPECS, theorem_library


HAND_SCRIPTS = {
    "identity-via-syllogism": """\
# p -> p, routed through the derived syllogism rule instead of the
# usual A4 detour.
1: p -> p | q ; ax A1
2: p -> p | p ; subst 1 {p := p, q := p}
3: p | p -> p ; ax A2
4: p -> p ; use syll 2 3
""",
    "excluded-middle-commuted": """\
# p | ~p, by unfolding p -> p and commuting the disjunction.
1: p -> p | q ; ax A1
2: p -> p | p ; subst 1 {p := p, q := p}
3: p | p -> p ; ax A2
4: p -> p ; use syll 2 3
5: ~p | p ; def 4 - imp expand
6: p | q -> q | p ; ax A3
7: ~p | p -> p | ~p ; subst 6 {p := ~p, q := p}
8: p | ~p ; mp 7 5
""",
    "contraction-transposed": """\
# Transposition applied to an axiom instance.
1: p | p -> p ; ax A2
2: ~p -> ~(p | p) ; use transpose 1
""",
    "addition-on-the-left": """\
# Adding a fixed left disjunct to both sides of A1.
1: p -> p | q ; ax A1
2: r | p -> r | (p | q) ; use add-left 1 {r := r}
""",
}

SEQUENT_SCRIPTS = {
    "01-true-consequent": """\
# A true proposition is implied by anything: q |- p -> q.
1: q |- q ; axiom
2: p, q |- q ; add 1 p
3: q |- p -> q ; export 2
""",
    "02-false-antecedent": """\
# A false proposition implies anything: ~p |- p -> q.
1: p |- p ; axiom
2: ~p |- ~p ; axiom
3: ~q, p |- p ; add 1 ~q
4: ~q, ~p |- ~p ; add 2 ~q
5: ~p, ~q, p |- p ; add 3 ~p
6: p, ~q, ~p |- ~p ; add 4 p
7: p, ~p |- q ; raa 5 6
8: ~p |- p -> q ; export 7
""",
    "03-ex-falso": """\
# From contradictory premises everything follows: p, ~p |- q.
1: p |- p ; axiom
2: ~p |- ~p ; axiom
3: ~q, p |- p ; add 1 ~q
4: ~q, ~p |- ~p ; add 2 ~q
5: ~p, ~q, p |- p ; add 3 ~p
6: p, ~q, ~p |- ~p ; add 4 p
7: p, ~p |- q ; raa 5 6
""",
}


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n")
    print(f"wrote {path}")


def build(base: Path) -> None:
    library = theorem_library()
    for no, (name, proof) in enumerate(library.items(), start=1):
        _write(base / "prop" / f"{no:02d}-{name}.proof", hilbert.serialize_proof(proof))
    for no, (name, text) in enumerate(HAND_SCRIPTS.items(), start=len(library) + 1):
        hilbert.check_proof(hilbert.parse_proof_script(text))
        _write(base / "prop" / f"{no:02d}-{name}.proof", text)

    pred_library = pred_kernel.pred_theorem_library()
    for no, (name, proof) in enumerate(pred_library.items(), start=1):
        _write(
            base / "pred" / f"{no:02d}-{name}.pproof",
            pred_kernel.serialize_pred_proof(proof),
        )

    for name, text in SEQUENT_SCRIPTS.items():
        sequents.check_sequent_proof(sequents.parse_sequent_script(text))
        _write(base / "seq" / f"{name}.sproof", text)

    lines = ["# Tautologies certified by the truth-table decision procedure."]
    lines += [f"{text:<40} # {name}" for name, _, text, _ in _LIBRARY_SPECS]
    _write(base / "tautologies.txt", "\n".join(lines))

    _write(base / "matrices" / "bernays.mat", matrices.serialize_matrix(matrices.BERNAYS))
    _write(base / "moods.expected", syllogistic.moods_report())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("path", nargs="?", default="corpus", help="output directory")
    args = parser.parse_args()
    build(Path(args.path))


if __name__ == "__main__":
    main()
