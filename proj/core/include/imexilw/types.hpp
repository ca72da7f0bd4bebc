#pragma once

#include <Eigen/Dense>

namespace imexilw {

inline constexpr int kMaxComponents = 5;

using State = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxComponents, 1>;
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxComponents, kMaxComponents>;

struct Direction {
  double nx = 1.0;
  double ny = 0.0;
};

inline constexpr Direction kXDirection{1.0, 0.0};
inline constexpr Direction kYDirection{0.0, 1.0};

enum class Splitting { Componentwise, Characteristic };

}  // namespace imexilw
