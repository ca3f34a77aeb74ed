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
import pytest

from walg.cli.specs import format_generator, parse_generator, parse_mode
from walg.exceptions import GeneratorSpecSyntaxProblem, InvalidLabelProblem, WedgeViolationProblem
from walg.structure import Family, GeneratorLabel, GeneratorMode, make_mode


@pytest.mark.parametrize("text", [
    "Wt[q=2,s=2,m=1]",
    "G-[q=3/2,r=1/2]",
    "H[k=0,s=2,m=0]",
    "Vhat[q=2,m=0]",
    "Wtt[q=2]",
])
def test_generator_text_is_canonical(text):
    assert format_generator(parse_generator(text)) == text


def test_parse_generator():
    assert parse_generator("Wt[q=2,s=2,m=1]") == make_mode(Family.WTILDE, 2, 1, 2)
    assert parse_generator(" Wt [ s = 2 , q = 5/2 ] ") == GeneratorLabel(Family.WTILDE, "5/2", 2)
    assert parse_generator("G+[q=3/2,r=-1/2]") == make_mode(Family.GPLUS, "3/2", "-1/2")

    soft = parse_generator("H[k=1,s=2,m=1/2]")
    assert isinstance(soft, GeneratorMode)
    assert soft.label == GeneratorLabel.soft(1, 2)


def test_parse_generator_syntax_errors():
    with pytest.raises(GeneratorSpecSyntaxProblem) as e:
        parse_generator("Wt[q=2,s=2,m=1")
    assert e.value.ext["column"] == 15
    assert e.value.status == 2

    with pytest.raises(GeneratorSpecSyntaxProblem) as e:
        parse_generator("X[q=2]")
    assert e.value.ext["column"] == 1

    with pytest.raises(GeneratorSpecSyntaxProblem) as e:
        parse_generator("Wt[q=2,q=3]")
    assert e.value.ext["column"] == 8

    with pytest.raises(GeneratorSpecSyntaxProblem):
        parse_generator("Wt[q=2,k=1]")

    with pytest.raises(GeneratorSpecSyntaxProblem):
        parse_generator("Wt[q=1/3]")

    with pytest.raises(GeneratorSpecSyntaxProblem):
        parse_generator("Wt[s=2]")

    with pytest.raises(GeneratorSpecSyntaxProblem):
        parse_generator("Wt[q=2] x")


def test_parse_generator_domain_errors():
    with pytest.raises(InvalidLabelProblem):
        parse_generator("Wt[q=1/2]")
    with pytest.raises(WedgeViolationProblem):
        parse_generator("Wt[q=2,s=2,m=2]")


def test_parse_mode_requires_mode():
    assert parse_mode("Vhat[q=2,m=3]") == make_mode(Family.VHAT, 2, 3)
    with pytest.raises(GeneratorSpecSyntaxProblem):
        parse_mode("Wt[q=2,s=2]")
