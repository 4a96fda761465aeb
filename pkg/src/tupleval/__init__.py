"""Clemens n-tuple semantics, three-valued K3/LP/st semantics and
countermodel search for the consequence relations they define."""
from .consequence import (
    BudgetExceeded,
    ConsequenceMode,
    Verdict,
    check,
    check_first_order_bounded,
    check_propositional,
    designated_atoms_table,
)
from .formula import (
    And,
    Atom,
    Const,
    Exists,
    Forall,
    Formula,
    Not,
    Or,
    Sequent,
    Signature,
    Var,
    atom,
    enumerate_formulas,
    free_variables,
    signature_of,
    substitute,
)
from .parser import ParseError, format_formula, parse_formula, parse_sequent
from .readings import ReadingScheme, explain
from .threeval import (
    ThreeValue,
    ThreeValuedInterpretation,
    eval3_prop,
    eval3_sentence,
    is_designated3,
)
from .translation import (
    collapse_interpretation,
    collapse_value,
    embed_interpretation,
    embed_value,
    verify_lemma_3toc,
    verify_lemma_cto3,
    verify_theorem_on_sequent,
)
from .tuples import (
    ClemensInterpretation,
    TupleValue,
    eval_prop,
    eval_sentence,
    is_designated,
    tuple_join,
    tuple_meet,
    tuple_neg,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "Atom",
    "BudgetExceeded",
    "ClemensInterpretation",
    "ConsequenceMode",
    "Const",
    "Exists",
    "Forall",
    "Formula",
    "Not",
    "Or",
    "ParseError",
    "ReadingScheme",
    "Sequent",
    "Signature",
    "ThreeValue",
    "ThreeValuedInterpretation",
    "TupleValue",
    "Var",
    "Verdict",
    "atom",
    "check",
    "check_first_order_bounded",
    "check_propositional",
    "collapse_interpretation",
    "collapse_value",
    "designated_atoms_table",
    "embed_interpretation",
    "embed_value",
    "enumerate_formulas",
    "eval3_prop",
    "eval3_sentence",
    "eval_prop",
    "eval_sentence",
    "explain",
    "format_formula",
    "free_variables",
    "is_designated",
    "is_designated3",
    "parse_formula",
    "parse_sequent",
    "signature_of",
    "substitute",
    "tuple_join",
    "tuple_meet",
    "tuple_neg",
    "verify_lemma_3toc",
    "verify_lemma_cto3",
    "verify_theorem_on_sequent",
    "schema",
]


def schema(name: str) -> dict:
    """Load one of the bundled JSON schemas: verdict, interpretation or report."""
    import json
    from importlib import resources

    return json.loads(resources.files(__package__).joinpath(f"schemas/{name}.schema.json").read_text())
