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

#include <string>

#include "dessins/error.h"
#include "gtest/gtest.h"
#include "testing/fixtures.h"

namespace dessins {
namespace {

using ::dessins::testing::P;

std::pair<int, int> ErrorPosition(std::string_view text) {
  try {
    ParseDessinText(text);
  } catch (const SyntaxError& e) {
    return {e.line(), e.column()};
  }
  return {-1, -1};
}

TEST(TextFormatTest, ParsesDocuments) {
  EXPECT_EQ(ParseDessinText("n = 5\nsigma = (2 3 4)\nalpha = (1 2)(3 5 4)"),
            testing::Symmetric5());
  EXPECT_EQ(ParseDessinText("n = 2\nsigma = (1 2)\nalpha = (1 2)"),
            testing::Loop().dessin());
  EXPECT_EQ(ParseDessinText("# digon\n\n  n=4\nalpha = (1 2)(3 4)  # edges\n"
                            "sigma = (1 4)(2 3)\nphi = (1 3)(2 4)\n"),
            testing::Digon().dessin());
  EXPECT_EQ(ParseDessinText("n = 2\r\nsigma =\r\nalpha = (1 2)\r\n"),
            testing::Segment().dessin());
}

TEST(TextFormatTest, DocumentKeepsPositions) {
  const DessinDocument doc =
      ParseDessinDocument("n = 4\n\nalpha =  (1 2)(3 4)\nsigma = (1 4)(2 3)");
  EXPECT_EQ(doc.n, 4);
  EXPECT_EQ(doc.alpha.value, "(1 2)(3 4)");
  EXPECT_EQ(doc.alpha.line, 3);
  EXPECT_EQ(doc.alpha.column, 10);
  EXPECT_FALSE(doc.phi.has_value());
}

TEST(TextFormatTest, SyntaxErrors) {
  // Label out of range, reported at the label.
  EXPECT_EQ(ErrorPosition("n = 4\nsigma = (1 2 5)\nalpha = (1 2)(3 4)"),
            std::make_pair(2, 14));
  EXPECT_EQ(ErrorPosition("n = 4\nsigma = (1 2)\nbeta = (1 2)"),
            std::make_pair(3, 1));
  EXPECT_EQ(ErrorPosition("n = 4\nsigma = (1 2)\nsigma = (1 2)"),
            std::make_pair(3, 1));
  EXPECT_EQ(ErrorPosition("n = 4\nsigma (1 2)"), std::make_pair(2, 7));
  EXPECT_EQ(ErrorPosition("n = four\nsigma =\nalpha ="), std::make_pair(1, 5));
  EXPECT_EQ(ErrorPosition("n = 0\nsigma =\nalpha ="), std::make_pair(1, 5));
  // A missing key is reported after the last line read.
  EXPECT_EQ(ErrorPosition("n = 2\nsigma ="), std::make_pair(2, 1));
}

TEST(TextFormatTest, SemanticErrorsPropagate) {
  try {
    ParseDessinText("n = 2\nsigma =\nalpha =");
    FAIL();
  } catch (const SyntaxError&) {
    FAIL();
  } catch (const DessinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTransitive);
  }
  try {
    ParseDessinText("n = 2\nsigma = (1 2)\nalpha = (1 2)\nphi = (1 2)");
    FAIL();
  } catch (const DessinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProductNotIdentity);
  }
}

TEST(TextFormatTest, Format) {
  EXPECT_EQ(FormatDessinText(testing::Digon().dessin()),
            "n = 4\nsigma = (1 4)(2 3)\nalpha = (1 2)(3 4)\nphi = (1 3)(2 4)");
  const std::string segment = FormatDessinText(testing::Segment().dessin());
  EXPECT_EQ(segment, "n = 2\nsigma =\nalpha = (1 2)\nphi = (1 2)");
  EXPECT_EQ(segment.find("()"), std::string::npos);
}

TEST(TextFormatPropertyTest, RoundTrip) {
  const Dessin fig = testing::Symmetric5();
  EXPECT_EQ(ParseDessinText(FormatDessinText(fig)), fig);
  for (const CleanDessin& m : testing::SmallMaps()) {
    EXPECT_EQ(ParseDessinText(FormatDessinText(m.dessin())), m.dessin());
  }
  for (const CleanDessin& m : EnumerateCleanDessins(8)) {
    EXPECT_EQ(ParseDessinText(FormatDessinText(m.dessin())), m.dessin());
  }
}

}  // namespace
}  // namespace dessins
