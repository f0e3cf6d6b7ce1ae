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

#include "dessins/text_format.h"

#include <cctype>
#include <string>

#include "dessins/error.h"

namespace dessins {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

Permutation ParseField(const DocumentField& field, int n) {
  try {
    return Permutation::Parse(field.value, n);
  } catch (const SyntaxError& e) {
    throw SyntaxError(field.line, field.column + e.column() - 1, e.detail());
  }
}

}  // namespace

DessinDocument ParseDessinDocument(std::string_view text) {
  DessinDocument doc;
  std::optional<DocumentField> n_field;
  std::optional<DocumentField> sigma;
  std::optional<DocumentField> alpha;
  int line_no = 0;
  size_t line_start = 0;
  while (line_start <= text.size()) {
    ++line_no;
    size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const size_t comment = line.find('#');
    if (comment != std::string_view::npos) line = line.substr(0, comment);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    size_t pos = 0;
    while (pos < line.size() && IsSpace(line[pos])) ++pos;
    if (pos < line.size()) {
      const size_t key_start = pos;
      while (pos < line.size() && !IsSpace(line[pos]) && line[pos] != '=') {
        ++pos;
      }
      const std::string key(line.substr(key_start, pos - key_start));
      while (pos < line.size() && IsSpace(line[pos])) ++pos;
      if (pos >= line.size() || line[pos] != '=') {
        throw SyntaxError(line_no, static_cast<int>(pos) + 1,
                          "expected '=' after key");
      }
      ++pos;
      while (pos < line.size() && IsSpace(line[pos])) ++pos;
      size_t value_end = line.size();
      while (value_end > pos && IsSpace(line[value_end - 1])) --value_end;
      DocumentField field{std::string(line.substr(pos, value_end - pos)),
                          line_no, static_cast<int>(pos) + 1};

      std::optional<DocumentField>* slot = nullptr;
      if (key == "n") {
        slot = &n_field;
      } else if (key == "sigma") {
        slot = &sigma;
      } else if (key == "alpha") {
        slot = &alpha;
      } else if (key == "phi") {
        slot = &doc.phi;
      } else {
        throw SyntaxError(line_no, static_cast<int>(key_start) + 1,
                          "unknown key '" + key + "'");
      }
      if (slot->has_value()) {
        throw SyntaxError(line_no, static_cast<int>(key_start) + 1,
                          "duplicate key '" + key + "'");
      }
      *slot = std::move(field);
    }
    line_start = line_end + 1;
  }

  if (!n_field) throw SyntaxError(line_no, 1, "missing key 'n'");
  if (!sigma) throw SyntaxError(line_no, 1, "missing key 'sigma'");
  if (!alpha) throw SyntaxError(line_no, 1, "missing key 'alpha'");

  const std::string& digits = n_field->value;
  if (digits.empty() || digits.size() > 6) {
    throw SyntaxError(n_field->line, n_field->column,
                      "n must be a positive integer");
  }
  for (size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw SyntaxError(n_field->line, n_field->column + static_cast<int>(i),
                        "n must be a positive integer");
    }
  }
  doc.n = std::stoi(digits);
  if (doc.n < 1) {
    throw SyntaxError(n_field->line, n_field->column,
                      "n must be a positive integer");
  }
  doc.sigma = std::move(*sigma);
  doc.alpha = std::move(*alpha);
  return doc;
}

Dessin ToDessin(const DessinDocument& doc) {
  Permutation sigma = ParseField(doc.sigma, doc.n);
  Permutation alpha = ParseField(doc.alpha, doc.n);
  std::optional<Permutation> phi;
  if (doc.phi) phi = ParseField(*doc.phi, doc.n);
  return Dessin::Make(doc.n, std::move(sigma), std::move(alpha),
                      std::move(phi));
}

Dessin ParseDessinText(std::string_view text) {
  return ToDessin(ParseDessinDocument(text));
}

std::string FormatDessinText(const Dessin& d) {
  auto line = [](const char* key, const Permutation& p) {
    const std::string cycles = p.ToString();
    return std::string(key) + " =" + (cycles.empty() ? "" : " " + cycles);
  };
  return "n = " + std::to_string(d.n_darts()) + "\n" + line("sigma", d.sigma()) +
         "\n" + line("alpha", d.alpha()) + "\n" + line("phi", d.phi());
}

}  // namespace dessins
