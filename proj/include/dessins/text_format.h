// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DESSINS_TEXT_FORMAT_H_
#define DESSINS_TEXT_FORMAT_H_

#include <optional>
#include <string>
#include <string_view>

#include "dessins/dessin.h"

namespace dessins {

// One `key = value` entry of a .dsn document with the 1-based position of
// its value, kept for error reporting.
struct DocumentField {
  std::string value;
  int line = 0;
  int column = 0;
};

// The raw content of a .dsn document:
//
//   # comment
//   n = 5
//   sigma = (2 3 4)
//   alpha = (1 2)(3 5 4)
//   phi = (1 4 5 2)        # optional
//
// Keys may appear in any order; each at most once.
struct DessinDocument {
  int n = 0;
  DocumentField sigma;
  DocumentField alpha;
  std::optional<DocumentField> phi;
};

// Throws SyntaxError with line and column.
DessinDocument ParseDessinDocument(std::string_view text);

// Parses the cycle fields and validates the triple. Cycle-notation errors
// are rethrown as SyntaxError positioned within the document.
Dessin ToDessin(const DessinDocument& doc);

Dessin ParseDessinText(std::string_view text);

// Canonical text: cycles minimal-element first and sorted, fixed points
// omitted, phi always present, no trailing newline.
std::string FormatDessinText(const Dessin& d);

}  // namespace dessins

#endif  // DESSINS_TEXT_FORMAT_H_
