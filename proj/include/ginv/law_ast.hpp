#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ginv/inverse_kind.hpp"

namespace ginv {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Op {
    Var,
    Zero,
    One,
    Add,
    Sub,
    Mul,
    Star,      // t^*
    Pow,       // t^n
    PowIndex,  // t^k, k = max over the law's variables of max(ind, 1)
    Inverse,   // t^{kind}
  };

  Op op = Op::Var;
  std::string name;
  unsigned exponent = 0;
  InverseKind kind = InverseKind::MP;
  TermPtr lhs;
  TermPtr rhs;
  SourceSpan span;
};

/// The four principal sets a relation can compare: aR, Ra, °a = {x : xa = 0}
/// and a° = {x : ax = 0}.
enum class SetKind { RightIdeal, LeftIdeal, LeftAnn, RightAnn };

struct Formula {
  enum class Type {
    Equation,    // lhs = rhs
    Membership,  // lhs in kind(rhs)
    Inclusion,   // set(lhs) <= set(rhs)
    SetEqual,    // set(lhs) = set(rhs)
    Nilpotent,   // nil(lhs)
    Hirano,      // hirano(lhs)
    Has,         // has kind(lhs)
  };

  Type type = Type::Equation;
  TermPtr lhs;
  TermPtr rhs;
  InverseKind kind = InverseKind::MP;
  SetKind set = SetKind::RightIdeal;
  SourceSpan span;
};

struct Law {
  /// In order of first appearance.
  std::vector<std::string> variables;
  std::vector<Formula> hypotheses;
  Formula conclusion;
  std::vector<std::string> warnings;
};

std::string_view set_kind_name(SetKind s);

std::string print_term(const Term& t);
std::string print_formula(const Formula& f);
/// Canonical text: minimal parentheses, fixed spacing.
std::string print_law(const Law& law);

/// Structural equality, ignoring source spans.
bool same_term(const Term& a, const Term& b);
bool same_formula(const Formula& a, const Formula& b);
bool same_law(const Law& a, const Law& b);

}  // namespace ginv
