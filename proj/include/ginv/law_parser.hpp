#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ginv/error.hpp"
#include "ginv/law_ast.hpp"

namespace ginv {

/// Parse failure with a 1-based position. For SyntaxError the expected set
/// lists what would have been accepted at that point.
class LawError : public Error {
 public:
  LawError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message,
           std::vector<std::string> expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Grammar:
///   law     := [formula {"," formula} "=>"] concl
///   formula := term "=" term | term "in" KIND "(" term ")"
///            | SET "(" term ")" ("<=" | "=") SET "(" term ")"
///            | ("nil" | "hirano") "(" term ")" | "has" KIND "(" term ")"
///   term    := prod {("+" | "-") prod}
///   prod    := unary {"*" unary}
///   unary   := atom {"^*" | "^" INT | "^k" | "^{" KIND "}"}
///   atom    := VAR | "0" | "1" | "(" term ")"
///   SET     := rideal | lideal | lann | rann
///   KIND    := mp | d | grp | core | pc | rpc | dmp | wd | wdmp | inner
/// "#" starts a comment that runs to the end of the line. A conclusion
/// "t^{wd} = u" (or wdmp) is read as "u in wd(t)" and leaves a warning.
Law parse_law(std::string_view text);

}  // namespace ginv
