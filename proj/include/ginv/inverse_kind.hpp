#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace ginv {

enum class InverseKind {
  MP,
  DRAZIN,
  GROUP,
  CORE,
  PSEUDO_CORE,
  RIGHT_PSEUDO_CORE,
  DMP,
  WD,
  WDMP,
  INNER,
};

inline constexpr std::array<InverseKind, 10> kAllKinds = {
    InverseKind::MP,   InverseKind::DRAZIN, InverseKind::GROUP, InverseKind::CORE,
    InverseKind::PSEUDO_CORE, InverseKind::RIGHT_PSEUDO_CORE, InverseKind::DMP,
    InverseKind::WD,   InverseKind::WDMP,   InverseKind::INNER,
};

/// Kinds whose defining system has at most one solution in any ring.
inline constexpr std::array<InverseKind, 7> kUniqueKinds = {
    InverseKind::MP,   InverseKind::DRAZIN, InverseKind::GROUP, InverseKind::CORE,
    InverseKind::PSEUDO_CORE, InverseKind::RIGHT_PSEUDO_CORE, InverseKind::DMP,
};

constexpr bool is_unique_kind(InverseKind k) {
  for (auto u : kUniqueKinds) {
    if (u == k) return true;
  }
  return false;
}

/// Short name used by the law language and the CLI: mp, d, grp, core, pc,
/// rpc, dmp, wd, wdmp, inner.
std::string_view kind_short_name(InverseKind k);
/// Enum-style tag used in JSON reports: "MP", "DRAZIN", ...
std::string_view kind_tag(InverseKind k);
/// Accepts either the short name or the tag.
std::optional<InverseKind> parse_kind(std::string_view name);

}  // namespace ginv
