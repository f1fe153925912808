#include "ginv/law_ast.hpp"

namespace ginv {

namespace {

int precedence(const Term& t) {
  switch (t.op) {
    case Term::Op::Add:
    case Term::Op::Sub: return 1;
    case Term::Op::Mul: return 2;
    case Term::Op::Star:
    case Term::Op::Pow:
    case Term::Op::PowIndex:
    case Term::Op::Inverse: return 3;
    default: return 4;
  }
}

void print(const Term& t, int min_prec, std::string& out) {
  const bool wrap = precedence(t) < min_prec;
  if (wrap) out += '(';
  switch (t.op) {
    case Term::Op::Var: out += t.name; break;
    case Term::Op::Zero: out += '0'; break;
    case Term::Op::One: out += '1'; break;
    case Term::Op::Add:
    case Term::Op::Sub:
      print(*t.lhs, 1, out);
      out += t.op == Term::Op::Add ? " + " : " - ";
      print(*t.rhs, 2, out);
      break;
    case Term::Op::Mul:
      print(*t.lhs, 2, out);
      // keeps "a^* * b" readable
      out += out.back() == '*' ? " * " : "*";
      print(*t.rhs, 3, out);
      break;
    case Term::Op::Star:
      print(*t.lhs, 3, out);
      out += "^*";
      break;
    case Term::Op::Pow:
      print(*t.lhs, 3, out);
      out += '^';
      out += std::to_string(t.exponent);
      break;
    case Term::Op::PowIndex:
      print(*t.lhs, 3, out);
      out += "^k";
      break;
    case Term::Op::Inverse:
      print(*t.lhs, 3, out);
      out += "^{";
      out += kind_short_name(t.kind);
      out += '}';
      break;
  }
  if (wrap) out += ')';
}

bool same_ptr(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return !a && !b;
  return same_term(*a, *b);
}

}  // namespace

std::string_view set_kind_name(SetKind s) {
  switch (s) {
    case SetKind::RightIdeal: return "rideal";
    case SetKind::LeftIdeal: return "lideal";
    case SetKind::LeftAnn: return "lann";
    case SetKind::RightAnn: return "rann";
  }
  return "?";
}

std::string print_term(const Term& t) {
  std::string out;
  print(t, 1, out);
  return out;
}

std::string print_formula(const Formula& f) {
  const std::string set(set_kind_name(f.set));
  switch (f.type) {
    case Formula::Type::Equation: return print_term(*f.lhs) + " = " + print_term(*f.rhs);
    case Formula::Type::Membership:
      return print_term(*f.lhs) + " in " + std::string(kind_short_name(f.kind)) + "(" + print_term(*f.rhs) + ")";
    case Formula::Type::Inclusion:
      return set + "(" + print_term(*f.lhs) + ") <= " + set + "(" + print_term(*f.rhs) + ")";
    case Formula::Type::SetEqual:
      return set + "(" + print_term(*f.lhs) + ") = " + set + "(" + print_term(*f.rhs) + ")";
    case Formula::Type::Nilpotent: return "nil(" + print_term(*f.lhs) + ")";
    case Formula::Type::Hirano: return "hirano(" + print_term(*f.lhs) + ")";
    case Formula::Type::Has: return "has " + std::string(kind_short_name(f.kind)) + "(" + print_term(*f.lhs) + ")";
  }
  return {};
}

std::string print_law(const Law& law) {
  std::string out;
  for (std::size_t i = 0; i < law.hypotheses.size(); ++i) {
    if (i > 0) out += ", ";
    out += print_formula(law.hypotheses[i]);
  }
  if (!law.hypotheses.empty()) out += " => ";
  out += print_formula(law.conclusion);
  return out;
}

bool same_term(const Term& a, const Term& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Term::Op::Var: return a.name == b.name;
    case Term::Op::Pow:
      if (a.exponent != b.exponent) return false;
      break;
    case Term::Op::Inverse:
      if (a.kind != b.kind) return false;
      break;
    default: break;
  }
  return same_ptr(a.lhs, b.lhs) && same_ptr(a.rhs, b.rhs);
}

bool same_formula(const Formula& a, const Formula& b) {
  if (a.type != b.type) return false;
  if ((a.type == Formula::Type::Membership || a.type == Formula::Type::Has) && a.kind != b.kind) return false;
  if ((a.type == Formula::Type::Inclusion || a.type == Formula::Type::SetEqual) && a.set != b.set) return false;
  return same_ptr(a.lhs, b.lhs) && same_ptr(a.rhs, b.rhs);
}

bool same_law(const Law& a, const Law& b) {
  if (a.variables != b.variables || a.hypotheses.size() != b.hypotheses.size()) return false;
  for (std::size_t i = 0; i < a.hypotheses.size(); ++i) {
    if (!same_formula(a.hypotheses[i], b.hypotheses[i])) return false;
  }
  return same_formula(a.conclusion, b.conclusion);
}

}  // namespace ginv
