#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "ginv/law_parser.hpp"
#include "ginv/theorem_suite.hpp"

using namespace ginv;

namespace {

std::vector<std::string> read_lines(const std::string& path, bool skip_comments) {
  std::ifstream in(path);
  EXPECT_TRUE(in) << path;
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (skip_comments && (line.empty() || line[0] == '%')) continue;
    out.push_back(line);
  }
  return out;
}

std::string unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 'n') {
      out += '\n';
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string outcome(const std::string& text) {
  try {
    return "ok " + print_law(parse_law(text));
  } catch (const LawError& e) {
    std::string s = "error " + std::string(error_code_name(e.code())) + " " + std::to_string(e.line()) + ":" +
                    std::to_string(e.column()) + " " + e.message();
    if (!e.expected().empty()) {
      s += " | expected:";
      for (const auto& x : e.expected()) s += " " + x;
    }
    return s;
  }
}

const std::string kDir = GINV_TEST_DATA_DIR;

}  // namespace

TEST(LawCorpus, MatchesGolden) {
  const auto corpus = read_lines(kDir + "/law_corpus.txt", true);
  const auto golden = read_lines(kDir + "/law_corpus.golden", false);
  ASSERT_GE(corpus.size(), 30u);
  ASSERT_EQ(corpus.size(), golden.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(outcome(unescape(corpus[i])), golden[i]) << corpus[i];
}

TEST(LawCorpus, AcceptedLinesRoundTrip) {
  for (const auto& line : read_lines(kDir + "/law_corpus.txt", true)) {
    Law law;
    try {
      law = parse_law(unescape(line));
    } catch (const LawError&) {
      continue;
    }
    const std::string printed = print_law(law);
    const Law back = parse_law(printed);
    EXPECT_TRUE(same_law(law, back)) << line;
    EXPECT_EQ(print_law(back), printed);
  }
}

TEST(LawCorpus, CoversCatalogAndMalformedCases) {
  const auto corpus = read_lines(kDir + "/law_corpus.txt", true);
  const std::set<std::string> lines(corpus.begin(), corpus.end());
  for (const auto& e : theorem_catalog())
    for (const auto& law : e.laws) EXPECT_TRUE(lines.count(law)) << e.id << ": " << law;
  const auto errors = std::count_if(corpus.begin(), corpus.end(), [](const auto& l) {
    return outcome(unescape(l)).rfind("error", 0) == 0;
  });
  EXPECT_GE(errors, 20);
}
