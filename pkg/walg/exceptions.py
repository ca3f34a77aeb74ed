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

from typing import Any, Dict


class ProblemException(Exception):
    def __init__(self, status, title=None, detail=None, **ext):
        super().__init__(detail or title)
        self.status: int = status
        self.title: str = title
        self.detail = detail
        self.ext = ext

    def content(self) -> Dict[str, Any]:
        content = {
            "title": self.title,
            "detail": self.detail
        }
        if self.ext:
            content.update(self.ext)
        return content


class DomainException(ProblemException):
    def __init__(self, title="Domain error", detail=None, **ext):
        super().__init__(1, title, detail, **ext)


class UsageException(ProblemException):
    def __init__(self, title="Usage error", detail=None, **ext):
        super().__init__(2, title, detail, **ext)


class CouplingNotFoundProblem(DomainException):
    def __init__(self, key):
        title = 'Coupling not found'
        detail = f'The registry has no coupling for {key} and no default.'
        super().__init__(title, detail, key=str(key))


class InvalidLabelProblem(DomainException):
    def __init__(self, family, reason):
        title = 'Invalid generator label'
        detail = f'Invalid {family} label: {reason}'
        super().__init__(title, detail, family=str(family))


class WedgeViolationProblem(DomainException):
    def __init__(self, label, m):
        title = 'Mode outside the wedge'
        detail = f'Mode {m} of {label} violates the wedge condition.'
        super().__init__(title, detail, label=str(label), m=str(m))


class UndefinedPRangeProblem(DomainException):
    def __init__(self, s1, s2):
        title = 'Undefined p range'
        detail = f'No p range for spins ({s1}, {s2}): s1 + s2 must be an integer.'
        super().__init__(title, detail)


class NonSquareKappaProblem(DomainException):
    def __init__(self, kappa):
        title = 'Coupling is not a perfect square'
        detail = f'kappa = {kappa} has no exact rational square root.'
        super().__init__(title, detail, kappa=str(kappa))


class MixedChargeProblem(DomainException):
    def __init__(self, a, b):
        title = 'Mixed fermionic charges'
        detail = (
            f'{a} and {b} carry opposite charges; '
            f'use the G-/G+ anticommutator instead.'
        )
        super().__init__(title, detail)


class RegistryNotFoundProblem(DomainException):
    def __init__(self, path):
        title = 'Registry not found'
        detail = f'The registry file {path} does not exist.'
        super().__init__(title, detail, path=str(path))


class RegistrySchemaProblem(DomainException):
    def __init__(self, pointer, message):
        title = 'Invalid registry'
        detail = f'{pointer}: {message}'
        super().__init__(title, detail, pointer=pointer)


class GeneratorSpecSyntaxProblem(UsageException):
    def __init__(self, text, column, message, line=1):
        title = 'Malformed generator specification'
        detail = f'{message} at line {line}, column {column}: {text}'
        super().__init__(title, detail, line=line, column=column)


class UnsupportedBracketProblem(UsageException):
    def __init__(self, a, b):
        title = 'Unsupported bracket'
        detail = f'No bracket is implemented between {a} and {b}.'
        super().__init__(title, detail)
