"""
Sorties de la ligne de commande.

Le format machine est un ``OutputRecord`` sérialisé en JSON ; tous les
entiers mathématiques y sont écrits en chaînes décimales. Le format texte
aligne les mêmes données en tables pandas.
"""

from typing import Any, Dict, Iterable, List, Literal, Mapping, Optional

import pandas as pd
from pydantic import BaseModel

from src.continued_fractions.expansion import SurdExpansion, convergents
from src.oracle.report import SearchReport
from src.solvers.ab import AbVerdict, NoSolution, PellCase, Solvable
from src.solvers.pell import SolutionFamily
from src.solvers.solution import Solution

SCHEMA_VERSION = 1

Status = Literal["ok", "no_solution", "error"]


class OutputRecord(BaseModel):
    """Enregistrement versionné produit par chaque commande."""

    schema_version: int = SCHEMA_VERSION
    command: str
    status: Status
    inputs: Dict[str, str]
    result: Dict[str, Any]

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


def _str_or_none(value: Optional[int]) -> Optional[str]:
    return None if value is None else str(value)


def solutions_payload(solutions: Iterable[Solution]) -> List[Dict[str, str]]:
    return [s.to_payload() for s in solutions]


def expansion_payload(exp: SurdExpansion, terms: int) -> Dict[str, Any]:
    """Développement de √d et ses ``terms`` premières réduites."""
    head = []
    for convergent in convergents(exp):
        if convergent.index >= terms:
            break
        head.append(
            {
                "index": str(convergent.index),
                "p": str(convergent.p),
                "q": str(convergent.q),
            }
        )

    return {
        "a0": str(exp.a0),
        "period": [str(a) for a in exp.period],
        "period_length": str(exp.T),
        "u": [str(u) for u in exp.u_seq],
        "v": [str(v) for v in exp.v_seq],
        "convergents": head,
    }


def family_payload(family: SolutionFamily, solutions: List[Solution]) -> Dict[str, Any]:
    """Famille de x² - d·y² = m, avec les indices de m et de -m pour le diagnostic."""
    return {
        "period_length": str(family.expansion.T),
        "residues_m": [str(j) for j in sorted(family.residues_m)],
        "residues_neg_m": [str(j) for j in sorted(family.residues_neg_m)],
        "branches": [
            {"start": str(branch.start), "stride": str(branch.stride)}
            for branch in family.branches
        ],
        "trivial": family.trivial.to_payload() if family.trivial else None,
        "obstruction": family.obstruction,
        "solutions": solutions_payload(solutions),
    }


def verdict_payload(verdict: AbVerdict, solutions: List[Solution]) -> Dict[str, Any]:
    """Verdict pour a·x² - b·y² = ±1, avec le motif d'échec le cas échéant."""
    payload: Dict[str, Any] = {
        "verdict": type(verdict).__name__,
        "reason": None,
        "which": None,
        "period_length": None,
        "midpoint": None,
        "u_midpoint": None,
        "v_midpoint": None,
        "divisor": None,
        "orientation": None,
    }

    if isinstance(verdict, Solvable):
        u_mid, v_mid = (
            verdict.expansion.u_seq[verdict.midpoint - 1],
            verdict.expansion.v_seq[verdict.midpoint - 1],
        )
        payload.update(
            period_length=str(verdict.branch.stride),
            midpoint=str(verdict.midpoint),
            u_midpoint=str(u_mid),
            v_midpoint=str(v_mid),
            divisor=str(verdict.divisor),
            orientation=verdict.orientation.value,
        )
    elif isinstance(verdict, NoSolution):
        payload.update(
            reason=verdict.reason.value,
            period_length=_str_or_none(verdict.period_length),
            midpoint=_str_or_none(verdict.midpoint),
            u_midpoint=_str_or_none(verdict.u_midpoint),
            v_midpoint=_str_or_none(verdict.v_midpoint),
        )
    elif isinstance(verdict, PellCase):
        payload.update(
            which=verdict.which.value,
            period_length=str(verdict.family.expansion.T) if verdict.family else None,
        )

    payload["solutions"] = solutions_payload(solutions)
    return payload


def report_payload(report: SearchReport) -> Dict[str, Any]:
    """Rapport d'oracle ; les recherches de Pell ajoutent le sous-ensemble primitif."""
    payload: Dict[str, Any] = {
        "kind": report.kind,
        "parameters": {name: str(value) for name, value in report.parameters.items()},
        "bound": str(report.bound),
        "iterations": str(report.iterations),
        "solutions": solutions_payload(report.solutions),
    }
    if report.kind == "pell_general":
        payload["primitive"] = solutions_payload(report.primitive)
    if report.kind == "legendre":
        payload["rejected"] = solutions_payload(report.rejected)
    return payload


def _render_value(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, list):
        if value and isinstance(value[0], dict):
            return "\n" + pd.DataFrame(value).to_string(index=False)
        return "[" + ", ".join(str(item) for item in value) + "]"
    if isinstance(value, dict):
        return ", ".join(f"{k}={v}" for k, v in value.items())
    return str(value)


def render_text(
    record: OutputRecord, tables: Optional[Mapping[str, pd.DataFrame]] = None
) -> str:
    """Rendu lisible d'un enregistrement, suivi de tables supplémentaires."""
    inputs = " ".join(f"{name}={value}" for name, value in record.inputs.items())
    lines = [f"{record.command} {inputs} : {record.status}"]
    for name, value in record.result.items():
        lines.append(f"{name} : {_render_value(value)}")
    for title, frame in (tables or {}).items():
        lines.append(f"{title} :")
        lines.append(frame.to_string(index=False))
    return "\n".join(lines)
