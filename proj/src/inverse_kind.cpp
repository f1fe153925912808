#include "ginv/inverse_kind.hpp"

namespace ginv {

std::string_view kind_short_name(InverseKind k) {
  switch (k) {
    case InverseKind::MP: return "mp";
    case InverseKind::DRAZIN: return "d";
    case InverseKind::GROUP: return "grp";
    case InverseKind::CORE: return "core";
    case InverseKind::PSEUDO_CORE: return "pc";
    case InverseKind::RIGHT_PSEUDO_CORE: return "rpc";
    case InverseKind::DMP: return "dmp";
    case InverseKind::WD: return "wd";
    case InverseKind::WDMP: return "wdmp";
    case InverseKind::INNER: return "inner";
  }
  return "?";
}

std::string_view kind_tag(InverseKind k) {
  switch (k) {
    case InverseKind::MP: return "MP";
    case InverseKind::DRAZIN: return "DRAZIN";
    case InverseKind::GROUP: return "GROUP";
    case InverseKind::CORE: return "CORE";
    case InverseKind::PSEUDO_CORE: return "PSEUDO_CORE";
    case InverseKind::RIGHT_PSEUDO_CORE: return "RIGHT_PSEUDO_CORE";
    case InverseKind::DMP: return "DMP";
    case InverseKind::WD: return "WD";
    case InverseKind::WDMP: return "WDMP";
    case InverseKind::INNER: return "INNER";
  }
  return "?";
}

std::optional<InverseKind> parse_kind(std::string_view name) {
  for (auto k : kAllKinds) {
    if (name == kind_short_name(k) || name == kind_tag(k)) return k;
  }
  return std::nullopt;
}

}  // namespace ginv
