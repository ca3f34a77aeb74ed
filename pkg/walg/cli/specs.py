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
Text form of generators.

    Wt[q=2,s=2,m=1]    G-[q=3/2,r=1/2]    H[k=1,s=2,m=0]    Vhat[q=2,m=0]

Without a mode field the text names a label. Printing a parsed generator
gives back its canonical text.
"""
from typing import Dict, Optional, Tuple, Union

from walg.arith import HalfInt, parse_rational
from walg.exceptions import GeneratorSpecSyntaxProblem
from walg.structure import Family, GeneratorLabel, GeneratorMode
from walg.structure.labels import FAMILY_TOKENS

Generator = Union[GeneratorLabel, GeneratorMode]

TOKENS = sorted(((token, family) for family, token in FAMILY_TOKENS.items()),
                key=lambda t: -len(t[0]))


def family_fields(family: Family) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    """(required, optional) field names of a family."""
    if family is Family.H:
        return ("k", "s"), ("m",)
    return ("q",), ("s", family.mode_name)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    @property
    def column(self) -> int:
        return self.pos + 1

    def error(self, message: str, column: Optional[int] = None):
        return GeneratorSpecSyntaxProblem(self.text, column or self.column, message)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def family(self) -> Family:
        self.skip()
        for token, family in TOKENS:
            if self.text.startswith(token, self.pos):
                self.pos += len(token)
                return family
        expected = ", ".join(FAMILY_TOKENS.values())
        raise self.error(f"expected a family ({expected})")

    def accept(self, char: str) -> bool:
        self.skip()
        if self.text.startswith(char, self.pos):
            self.pos += 1
            return True
        return False

    def expect(self, char: str):
        if not self.accept(char):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected '{char}', found {found!r}")

    def name(self) -> Tuple[str, int]:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a field name")
        return self.text[start:self.pos], start + 1

    def value(self) -> HalfInt:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",]" \
                and not self.text[self.pos].isspace():
            self.pos += 1
        literal = self.text[start:self.pos]
        parsed = parse_rational(literal, raise_exc=False) if literal else None
        if parsed is None:
            raise self.error(f"expected a rational, found {literal!r}", start + 1)
        if parsed.denominator not in (1, 2):
            raise self.error(f"{literal} is not a half-integer", start + 1)
        return HalfInt.of(parsed)

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")


def parse_generator(text: str) -> Generator:
    """
    Parse a generator label or mode.

    Raises
    ------
    GeneratorSpecSyntaxProblem
        On malformed text, with the 1-based column of the offending token.
    InvalidLabelProblem, WedgeViolationProblem
        If the text is well formed but names no admissible generator.
    """
    scanner = _Scanner(text)
    family = scanner.family()
    required, optional = family_fields(family)
    scanner.expect("[")

    fields: Dict[str, HalfInt] = {}
    while True:
        name, column = scanner.name()
        if name not in required + optional:
            allowed = ", ".join(required + optional)
            raise scanner.error(f"unknown field {name!r} for {FAMILY_TOKENS[family]} ({allowed})", column)
        if name in fields:
            raise scanner.error(f"duplicate field {name!r}", column)
        scanner.expect("=")
        fields[name] = scanner.value()
        if scanner.accept(","):
            continue
        closing = scanner.column
        scanner.expect("]")
        break
    scanner.end()

    missing = [name for name in required if name not in fields]
    if missing:
        raise scanner.error(f"missing field {', '.join(missing)}", closing)

    if family is Family.H:
        label = GeneratorLabel.soft(fields["k"], fields["s"])
    else:
        label = GeneratorLabel(family, fields["q"], fields.get("s"))
    mode = fields.get(family.mode_name)
    return label if mode is None else GeneratorMode(label, mode)


def parse_mode(text: str) -> GeneratorMode:
    generator = parse_generator(text)
    if not isinstance(generator, GeneratorMode):
        raise GeneratorSpecSyntaxProblem(text, len(text), "a mode field is required here")
    return generator


def format_generator(generator: Generator) -> str:
    return str(generator)
