"""Growth-rate analysis for a small imperative language with resets."""
from .analyzer import (
    Analyzer, AnalyzerConfig, Derivation, ResourceLimitError, Verdict, analyze,
    atomic_judgements, loop_closure, verdict, verdicts, witness_derivation,
)
from .deps import Binary, DepType, Mode, Unary, compose, compose_all, join, loop_correct
from .interp import ExecLimits, ExecResult, growth_probe, max_outputs, reachable_stores
from .lang import Program, validate, vars_of
from .nfa import Nfa, is_universal, nfa_to_program, parse_nfa
from .parser import ParseError, parse_program, render

__all__ = [
    "Analyzer", "AnalyzerConfig", "Binary", "DepType", "Derivation", "ExecLimits",
    "ExecResult", "Mode", "Nfa", "ParseError", "Program", "ResourceLimitError", "Unary",
    "Verdict", "analyze", "atomic_judgements", "compose", "compose_all", "growth_probe",
    "is_universal", "join", "loop_closure", "loop_correct", "max_outputs",
    "nfa_to_program", "parse_nfa", "parse_program", "reachable_stores", "render",
    "validate", "vars_of", "verdict", "verdicts", "witness_derivation",
]
