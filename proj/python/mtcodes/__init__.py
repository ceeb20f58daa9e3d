# Copyright 2026 The mtcodes Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Multi-twisted codes over finite fields, represented by polynomial matrices."""

from ._core import (
    Code,
    Error,
    Field,
    Poly,
    PolyMat,
    Shape,
    macwilliams,
    search,
    singleton_check,
    verify_table,
)

__all__ = [
    "Code",
    "Error",
    "Field",
    "Poly",
    "PolyMat",
    "Shape",
    "macwilliams",
    "search",
    "singleton_check",
    "verify_table",
]
