#pragma once

#include <array>
#include <string_view>

#include "feuerbach/triangle.hpp"

namespace feuerbach {

enum class CenterId {
  Circumcenter,
  Centroid,
  NinePointCenter,
  Orthocenter,
  Incenter,
  ExcenterA,
  ExcenterB,
  ExcenterC,
};

inline constexpr std::array<CenterId, 8> kAllCenters = {
    CenterId::Circumcenter, CenterId::Centroid,  CenterId::NinePointCenter,
    CenterId::Orthocenter,  CenterId::Incenter,  CenterId::ExcenterA,
    CenterId::ExcenterB,    CenterId::ExcenterC,
};

inline constexpr std::size_t index(CenterId id) { return static_cast<std::size_t>(id); }

/// Short symbol: "O", "G", "N", "H", "I", "I_a", "I_b", "I_c".
std::string_view symbol(CenterId id);
/// Inverse of symbol(); throws InvalidArgument on an unknown name.
CenterId center_from_symbol(std::string_view name);

bool is_excenter(CenterId id);
CenterId excenter_opposite(Side x);
/// Side opposite the vertex an excenter is labelled by.
Side excenter_side(CenterId id);

}  // namespace feuerbach
