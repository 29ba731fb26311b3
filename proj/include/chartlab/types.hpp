#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace chartlab {

// All series math runs on dense double arrays; Eigen is the only math
// dependency of the core.
using Array = Eigen::ArrayXd;
using ArrayRef = Eigen::Ref<const Eigen::ArrayXd>;
using Index = Eigen::Index;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace chartlab
