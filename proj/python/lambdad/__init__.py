# Copyright 2026 The lambdad Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the lambdad checker, oracle and exporter."""

from ._lambdad import (
    LambdadError,
    Session,
    check_corpus,
    export_latex,
    flag_depth,
    format_script,
    required_exports,
    strictness_witness,
    theorem_ids,
    verify_all,
    verify_theorem,
)

__all__ = [
    "LambdadError",
    "Session",
    "check_corpus",
    "export_latex",
    "flag_depth",
    "format_script",
    "required_exports",
    "strictness_witness",
    "theorem_ids",
    "verify_all",
    "verify_theorem",
]
