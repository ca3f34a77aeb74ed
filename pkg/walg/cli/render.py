#  * Copyright (c) 2022-2023. Authors: see NOTICE file.
#  *
#  * Licensed under the Apache License, Version 2.0 (the "License");
#  * you may not use this file except in compliance with the License.
#  * You may obtain a copy of the License at
#  *
#  *      http://www.apache.org/licenses/LICENSE-2.0
#  *
#  * Unless required by applicable law or agreed to in writing, software
#  * distributed under the License is distributed on an "AS IS" BASIS,
#  * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  * See the License for the specific language governing permissions and
#  * limitations under the License.
"""
Result rendering: JSON for machines, LaTeX for reading against printed
formulas, plain text for the terminal. All numbers are exact strings.
"""
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import orjson
import sympy

from walg.arith import Scalar, format_rational, to_sympy
from walg.cli.models import OutputFormat
from walg.ope import OpeExpansion
from walg.structure import Family, GeneratorLabel, GeneratorMode, ModeCombination

LATEX_SYMBOLS = {
    Family.H: "H",
    Family.W: "w",
    Family.WTILDE: r"\widetilde{W}",
    Family.WTILDE2: r"\widetilde{\widetilde{W}}",
    Family.GPLUS: "G",
    Family.GMINUS: "G",
    Family.VHAT: r"\hat{V}",
    Family.GHAT: r"\hat{G}",
}


def scalar_latex(value: Scalar) -> str:
    return sympy.latex(to_sympy(value))


def label_latex(label: GeneratorLabel) -> str:
    upper = ",".join(scalar_latex(v) for _, v in label.fields())
    if label.family is Family.GPLUS:
        upper += "+"
    elif label.family is Family.GMINUS:
        upper += "-"
    return f"{LATEX_SYMBOLS[label.family]}^{{{upper}}}"


def mode_latex(mode: GeneratorMode) -> str:
    return f"{label_latex(mode.label)}_{{{scalar_latex(mode.m)}}}"


def _signed_sum(parts: List[str]) -> str:
    if not parts:
        return "0"
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def combination_payload(c: ModeCombination) -> Dict[str, Any]:
    return {
        "terms": [{"coeff": format_rational(coeff), "generator": str(mode)} for coeff, mode in c],
        "dropped": [
            {"coeff": format_rational(d.coeff), "family": d.family.value,
             "q": format_rational(d.q), "m": str(d.m), "reason": d.reason}
            for d in c.dropped
        ],
    }


def combination_latex(c: ModeCombination) -> str:
    parts = []
    for coeff, mode in c:
        parts.append(f"\\left({scalar_latex(coeff)}\\right) {mode_latex(mode)}")
    return _signed_sum(parts)


def expansion_payload(e: OpeExpansion) -> Dict[str, Any]:
    return {
        "source": e.source.value,
        "terms": [
            {"coeff": format_rational(t.coeff), "hol_pole": t.hol_pole,
             "antihol_pole": t.antihol_pole, "dbar_order": t.dbar_order, "target": str(t.target)}
            for t in e
        ],
        "residuals": [str(r) for r in e.residuals],
        "dropped": list(e.dropped),
    }


def expansion_latex(e: OpeExpansion) -> str:
    parts = []
    for t in e:
        poles = ""
        if t.hol_pole:
            poles += f"\\frac{{1}}{{(z-w)^{{{t.hol_pole}}}}}"
        if t.antihol_pole:
            poles += f"(\\bar z-\\bar w)^{{{-t.antihol_pole}}}"
        derivative = "" if t.dbar_order == 0 else f"\\bar\\partial^{{{t.dbar_order}}}"
        parts.append(f"\\left({scalar_latex(t.coeff)}\\right) {poles} {derivative}{label_latex(t.target)}")
    return _signed_sum(parts)


@dataclass
class Artifact:
    """One command result with its three renderings."""
    kind: str
    data: Dict[str, Any]
    text: str
    latex: Optional[str] = None
    notes: List[str] = field(default_factory=list)
    status: int = 0

    def render(self, fmt: OutputFormat) -> str:
        fmt = OutputFormat(fmt)
        if fmt is OutputFormat.JSON:
            payload = {"kind": self.kind, **self.data}
            if self.notes:
                payload["notes"] = self.notes
            return orjson.dumps(payload, option=orjson.OPT_INDENT_2).decode() + "\n"
        if fmt is OutputFormat.LATEX:
            return (self.latex if self.latex is not None else self.text) + "\n"
        lines = [self.text] + [f"# {note}" for note in self.notes]
        return "\n".join(lines) + "\n"


def emit(artifact: Artifact, fmt: OutputFormat, output: Optional[str] = None):
    rendered = artifact.render(fmt)
    if output:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(rendered)
    else:
        sys.stdout.write(rendered)
