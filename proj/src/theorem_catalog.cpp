#include <regex>
#include <string>
#include <vector>

#include "ginv/theorem_suite.hpp"

namespace ginv {

namespace {

std::vector<std::string> ep_laws() {
  std::vector<std::string> out;
  const std::string ep = "a*a^{mp} = a^{mp}*a";
  out.push_back(ep + " => has grp(a)");
  for (int n = 1; n <= 3; ++n) {
    const std::string p = "^" + std::to_string(n);
    const std::string c1 = "a" + p + "*a^{mp} = a^{mp}*a" + p;
    const std::string c2 = "a^{grp}" + p + "*a^{mp} = a^{mp}*a^{grp}" + p;
    const std::string c3 = "a^{mp}" + p + " = a^{grp}" + p;
    out.push_back(ep + " => " + c1);
    out.push_back(ep + " => " + c2);
    out.push_back(ep + " => " + c3);
    out.push_back("has grp(a), " + c1 + " => " + ep);
    out.push_back(c2 + " => " + ep);
    out.push_back(c3 + " => " + ep);
  }
  return out;
}

// Left and right idempotent splitting with x = e, for a fixed idempotent e.
std::vector<std::string> idempotent_split(const std::string& e, const std::string& b, const std::string& c,
                                          const std::string& hyp) {
  const std::string pre = hyp.empty() ? "" : hyp + ", ";
  return {
      pre + "(1 - " + e + ")*" + b + " = " + c + " => " + e + "*" + c + " = 0",
      pre + "(1 - " + e + ")*" + b + " = " + c + " => lann(" + e + ") <= lann(" + b + " - " + c + ")",
      pre + e + "*" + c + " = 0, lann(" + e + ") <= lann(" + b + " - " + c + ") => (1 - " + e + ")*" + b + " = " + c,
      pre + b + "*(1 - " + e + ") = " + c + " => " + c + "*" + e + " = 0",
      pre + b + "*(1 - " + e + ") = " + c + " => rann(" + e + ") <= rann(" + b + " - " + c + ")",
      pre + c + "*" + e + " = 0, rann(" + e + ") <= rann(" + b + " - " + c + ") => " + b + "*(1 - " + e + ") = " + c,
  };
}

// A law naming both t^{wd} and t^{wdmp} means the WDMP inverse built
// from that same WD inverse, so t^{wdmp} is spelled out as t^{wd}*t*t^{mp}.
std::string tie(const std::string& law) {
  static const std::regex decorated(R"(([a-z]|\([^()]*\))\^\{wdmp\})");
  return std::regex_replace(law, decorated, "($1^{wd}*$1*$1^{mp})");
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<TheoremEntry> build() {
  const std::string abs = "a^{wd}*(a + b)*b^{wd} = a^{wd} + b^{wd}";
  const std::string suf = "b^{wd}*a*a^{wd} = a^{wd}, b^{wd}*b*a^{wd} = b^{wd}";
  const std::string orth = "a*b = 0, b*a = 0, a*b^{wd} = 0, b^{wd}*a = 0, a^{wd}*b = 0, b*a^{wd} = 0";
  const std::string rol = "(a*b)^{wdmp} = b^{wdmp}*a^{wdmp}";
  const std::string fol = "(a*b)^{wdmp} = a^{wdmp}*b^{wdmp}";
  const std::string herm = "a^* = a, has wdmp(a)";

  return {
      {"PRE-MP-ADD", "MP additivity when a*b = ab* = 0",
       {"a^**b = 0, a*b^* = 0 => a^{mp} + b^{mp} in mp(a + b)"}},
      {"PRE-EP-EQ", "EP characterizations through commuting powers, n <= 3", ep_laws()},
      {"PRE-HIRANO-NIL", "Hirano invertible iff a - a^3 nilpotent",
       {"hirano(a) => nil(a - a^3)", "nil(a - a^3) => hirano(a)"}},
      {"PRE-HIRANO-DRAZIN", "Hirano invertible implies Drazin invertible", {"hirano(a) => has d(a)"}},
      {"PRE-ANN", "principal ideals versus annihilators",
       {"rideal(a) <= rideal(b) => lann(b) <= lann(a)", "has inner(b), lann(b) <= lann(a) => rideal(a) <= rideal(b)",
        "lideal(a) <= lideal(b) => rann(b) <= rann(a)", "has inner(b), rann(b) <= rann(a) => lideal(a) <= lideal(b)"}},
      {"WD-DRAZIN", "WD invertible implies Drazin invertible", {"has wd(a) => has d(a)"}},
      {"WD-IDEMP", "an idempotent is its own WD inverse", {"p*p = p => p in wd(p)"}},
      {"WD-PROJ", "complementary idempotents of a WD inverse kill a^k",
       {"a^k*(1 - a*a^{wd}) = 0", "(1 - a^{wd}*a)*a^k = 0", "(1 - a*a^{wd})^2 = 1 - a*a^{wd}",
        "(1 - a^{wd}*a)^2 = 1 - a^{wd}*a"}},
      {"WDMP-SOLVE", "a^{wd}*a*a^{mp} solves the WDMP system", {"a^{wd}*a*a^{mp} in wdmp(a)"}},
      {"WDMP-PROPS-i", "a*y*a^k = a^k", {"a*a^{wdmp}*a^k = a^k", "a*a^{wdmp}*a^k*a = a^k*a"}},
      {"WDMP-PROPS-ii", "a*y and y*a idempotent",
       {"(a*a^{wdmp})^2 = a*a^{wdmp}", "(a^{wdmp}*a)^2 = a^{wdmp}*a"}},
      {"WDMP-PROPS-iii", "1 - y*a is an idempotent killing a^k",
       {"(1 - a^{wdmp}*a)^2 = 1 - a^{wdmp}*a", "(1 - a^{wdmp}*a)*a^k = 0"}},
      {"WDMP-PROPS-iv", "y*(a*y)^k = y", {"a^{wdmp}*(a*a^{wdmp})^k = a^{wdmp}"}},
      {"WDMP-PROPS-v", "a^(k+1)*y*a = a^(k+1)", {"a^k*a*a^{wdmp}*a = a^k*a"}},
      {"WDMP-PROPS-vi", "y*a^(k+1)*y = a^k*a^{mp}", {"a^{wdmp}*a^k*a*a^{wdmp} = a^k*a^{mp}"}},
      {"WDMP-PROPS-vii", "a^{mp}*a*y = a^{mp}", {"a^{mp}*a*a^{wdmp} = a^{mp}"}},
      {"WDMP-DMP", "WDMP invertible implies DMP invertible", {"has wdmp(a) => has dmp(a)"}},
      {"WDMP-RPC", "a WDMP inverse is the right pseudo core inverse",
       {"has wdmp(a) => has rpc(a)", "a^{wdmp} in rpc(a)"}},
      {"WDMP-HERM-i", "Hermitian a: a^{mp}*a*y is the group inverse", {herm + " => a^{mp}*a*a^{wdmp} in grp(a)"}},
      {"WDMP-HERM-ii", "Hermitian a: a^2*y = a", {herm + " => a^2*a^{wdmp} = a"}},
      {"WDMP-HERM-iii", "Hermitian a: y^2 = a^{wd}*a^{mp} = y*a^{mp}",
       {tie(herm + " => a^{wdmp}^2 = a^{wd}*a^{mp}"), tie(herm + " => a^{wdmp}^2 = a^{wdmp}*a^{mp}")}},
      {"WDMP-HERM-iv", "Hermitian a: a^{wd}*a is a WDMP inverse of a^{mp}*a",
       {herm + " => a^{wd}*a in wdmp(a^{mp}*a)"}},
      {"WDMP-HERM-v", "Hermitian a: a*a^{wd}*(a*a^{mp})^(k+1) = a*a^{mp}",
       {herm + " => a*a^{wd}*(a*a^{mp})^k*a*a^{mp} = a*a^{mp}"}},
      {"EP-WD", "the group inverse of an EP element is WD and WDMP",
       {"a*a^{mp} = a^{mp}*a => a^{grp} in wd(a)", "a*a^{mp} = a^{mp}*a => a^{grp} in wdmp(a)"}},
      {"WDMP-ANN", "Ry = Ra^* and aR = y^*R",
       {"lideal(a^{wdmp}) = lideal(a^*)", "rideal(a) = rideal(a^{wdmp}^*)"}},
      {"WDMP-HIRANO", "a*y and y*a are Hirano invertible", {"hirano(a*a^{wdmp})", "hirano(a^{wdmp}*a)"}},
      {"IDEMP-EQ", "splitting by an idempotent through annihilators",
       idempotent_split("x", "a", "b", "x*x = x")},
      {"COR-WD-IDEMP", "splitting by the idempotents a^{wd}*a and a^{wdmp}*a",
       concat(idempotent_split("a^{wd}*a", "b", "c", ""), idempotent_split("a^{wdmp}*a", "b", "c", ""))},
      {"ANN-CHAIN", "right annihilator chain of a^{wd}*a, y*a and a^(k+1)",
       {"rann(a^{wd}*a) <= rann(a^{wdmp}*a)", "rann(a^{wdmp}*a) <= rann(a^k*a)"}},
      {"WD-ADD", "WD additivity under orthogonality", {orth + " => a^{wd} + b^{wd} in wd(a + b)"}},
      {"WD-ROL-A", "WD reverse order law, first condition",
       {"a*b = b*a, b*b^{wd}*a^{wd} = a^{wd}*b*b^{wd} => b^{wd}*a^{wd} in wd(a*b)"}},
      {"WD-ROL-B", "WD reverse order law, second condition",
       {"a*b = b*a, b*a^{wd}*a = a^{wd}*a*b => b^{wd}*a^{wd} in wd(a*b)"}},
      {"WD-FOL", "WD forward order law", {"a*b = b*a, b^{wd}*b*a = a*b^{wd}*b => a^{wd}*b^{wd} in wd(a*b)"}},
      {"WD-ROL3", "WD triple reverse order law",
       {"a*b = b*a, b*c = c*b, a*c = c*a, c*c^{wd}*b = b*c*c^{wd}, c^{wd}*b^{wd}*a = a*c^{wd}*b^{wd} => "
        "c^{wd}*b^{wd}*a^{wd} in wd(a*b*c)"}},
      {"WD-FOL3", "WD triple forward order law",
       {"a*b = b*a, b*c = c*b, a*c = c*a, a*a^{wd}*b = b*a*a^{wd}, a^{wd}*b^{wd}*c = c*a^{wd}*b^{wd} => "
        "a^{wd}*b^{wd}*c^{wd} in wd(a*b*c)"}},
      {"WD-ABS-NEC", "consequences of the WD absorption law",
       {abs + " => a*a^{wd}*b*b^{wd} = a*a^{wd}", abs + " => a^{wd}*a*b^{wd}*b = b^{wd}*b",
        abs + " => a^k*b*b^{wd} = a^k", abs + " => a^{wd}*a*b^k = b^k"}},
      {"WD-ABS-COR", "ideal and annihilator consequences of the WD absorption law",
       {abs + " => rideal(b^k) <= rideal(a^{wd})", abs + " => rideal(a^k) = rideal(a^k*b)",
        abs + " => lann(a^{wd}) <= lann(b^k)", abs + " => lann(a^k) = lann(a^k*b)",
        abs + " => lideal(a*b^k) = lideal(b^k)", abs + " => lideal(a^k) <= lideal(b^{wd})",
        abs + " => rann(b^{wd}) <= rann(a^k)", abs + " => rann(a*b^k) = rann(b^k)"}},
      {"WD-ABS-SUF", "sufficient conditions for the WD absorption law",
       {suf + " => b^{wd}*(a + b)*a^{wd} = a^{wd} + b^{wd}", suf + " => b^k*a*a^{wd} = b^k",
        suf + " => b^{wd}*b*a^k = a^k", suf + " => b*b^{wd}*a*a^{wd} = b*b^{wd}",
        suf + " => b^{wd}*b*a^{wd}*a = a^{wd}*a"}},
      {"WDMP-ADD", "WDMP additivity under orthogonality",
       {tie("a*b = 0, b*a = 0, a^**b = 0, a*b^* = 0, a*b^{wd} = 0, b^{wd}*a = 0, a^{wd}*b = 0, b*a^{wd} = 0 => "
            "a^{wdmp} + b^{wdmp} in wdmp(a + b)")}},
      {"WDMP-ADD-HERM", "WDMP additivity for Hermitian a and b",
       {tie("a^* = a, b^* = b, " + orth + " => a^{wdmp} + b^{wdmp} in wdmp(a + b)")}},
      {"WDMP-ROL", "WDMP reverse order law",
       {tie("a*b = b*a, a^**b = b^**a, a^{wd}*a*b*b^{mp} = b*b^{mp}*a^{wd}*a, b*b^{wd}*a^{wd} = a^{wd}*b*b^{wd} => "
            "b^{wdmp}*a^{wdmp} in wdmp(a*b)")}},
      {"WDMP-FOL-HERM", "WDMP forward order law for Hermitian idempotents",
       {tie("a*a = a, a^* = a, b*b = b, b^* = b, a*b = b*a, b^{wd}*b*a = a*b^{wd}*b => a^{wdmp}*b^{wdmp} in wdmp(a*b)")}},
      {"WDMP-MIXED-1", "consequences of the WDMP reverse order law",
       {tie(rol + " => b*(a*b)^{wdmp}*a = b*b^{mp}*a^{wd}*a"), tie(rol + " => b*(a*b)^{wdmp}*a^k*a = b*b^{mp}*a^k"),
        tie(rol + " => b^k*b*(a*b)^{wdmp}*a = b^k*b*b^{mp}*a^{wd}*a")}},
      {"WDMP-MIXED-2", "consequences of the WDMP forward order law",
       {tie(fol + " => a*(a*b)^{wdmp}*b = a*a^{mp}*b^{wd}*b"), tie(fol + " => a^k*a*(a*b)^{wdmp}*b = a^k*a*a^{mp}*b^{wd}*b"),
        tie(fol + " => a*(a*b)^{wdmp}*b^k*b = a*a^{mp}*b^k")}},
  };
}

}  // namespace

const std::vector<TheoremEntry>& theorem_catalog() {
  static const std::vector<TheoremEntry> catalog = build();
  return catalog;
}

}  // namespace ginv
