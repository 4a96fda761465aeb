import itertools
import random

import pytest
from hypothesis import strategies as st

from tupleval.formula import And, Atom, Const, Exists, Forall, Not, Or, Var, signature_of

# acceptance lines, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# strategies ----------------------------------------------------------------

VAR_NAMES = st.sampled_from(["x", "y", "z"])
TERMS = st.one_of(VAR_NAMES.map(Var), st.sampled_from(["a", "b"]).map(Const))
ATOMS = st.one_of(
    st.sampled_from(["p", "q", "r"]).map(Atom),
    st.builds(lambda t: Atom("P", (t,)), TERMS),
    st.builds(lambda t, u: Atom("R", (t, u)), TERMS, TERMS),
)
FORMULAS = st.recursive(
    ATOMS,
    lambda sub: st.one_of(
        sub.map(Not),
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Forall, VAR_NAMES, sub),
        st.builds(Exists, VAR_NAMES, sub),
    ),
    max_leaves=10,
)
PROP_ATOMS = st.sampled_from(["p", "q", "r"]).map(Atom)
PROP_FORMULAS = st.recursive(
    PROP_ATOMS,
    lambda sub: st.one_of(sub.map(Not), st.builds(And, sub, sub), st.builds(Or, sub, sub)),
    max_leaves=8,
)


# brute-force oracle ----------------------------------------------------------


def brute_force_verdict(sequent, mode, sizes):
    """Validity by plain nested loops over interpretations and scalar evaluation.

    Shares nothing with the vectorised search apart from the scalar
    evaluators and designation tests, which have their own golden tests.
    Returns (valid, number of countermodels found).
    """
    sig = signature_of(*sequent.formulas)
    consts = sorted(sig.constants)
    space = [mode.decode(c) for c in mode.codes]
    bad = 0
    for size in sizes:
        cells = [
            (p, args)
            for p, k in sig.predicates.items()
            for args in itertools.product(range(size), repeat=k)
        ]
        for assignment in itertools.product(range(size), repeat=len(consts)):
            for values in itertools.product(space, repeat=len(cells)):
                preds = {}
                for (p, args), v in zip(cells, values):
                    preds.setdefault(p, {})[args] = v
                m = mode.build_interpretation(size, dict(zip(consts, assignment)), preds)
                if all(mode.designates(mode.premise, mode.evaluate(f, m)) for f in sequent.premises) and not mode.designates(
                    mode.conclusion, mode.evaluate(sequent.conclusion, m)
                ):
                    bad += 1
    return bad == 0, bad


@pytest.fixture
def rng():
    return random.Random(20240601)
