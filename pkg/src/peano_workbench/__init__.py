"""Peano arithmetic workbench: syntax, proof checking, bounded and certified semantics."""

from .engine import (
    Assignment, Decider, Evidence, NotFound, SatisfactionMethod, Verdict,
    check_axiom_truth, check_rule_preservation, classify, decide_atom, eval_term,
    satisfies, synthesize_uniform_decider, truth, verify_up_to,
)
from .kernel import AxiomId, CheckReport, Proof, ProofLine, check_proof, load_proof, parse_proof
from .notation import ParseError, parse_formula, parse_term, print_formula, print_term

__version__ = "0.1.0"
