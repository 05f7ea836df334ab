#pragma once

#include <Eigen/Core>

namespace wep4 {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

} // namespace wep4
