#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace cmm {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Bosonic modes of the two-cavity magnomechanical system.
enum class Mode { b, m, c1, c2 };

inline constexpr std::array<Mode, 4> kAllModes = {Mode::b, Mode::m, Mode::c1, Mode::c2};

/// Fixed quadrature ordering shared by the drift, diffusion and covariance
/// matrices: (q, p, x, y, X1, Y1, X2, Y2).
inline constexpr std::array<std::string_view, 8> kQuadratureLabels = {
    "q", "p", "x", "y", "X1", "Y1", "X2", "Y2"};

/// Index of the position-like quadrature of a mode in the 8-vector.
constexpr int mode_offset(Mode mode) {
  switch (mode) {
    case Mode::b: return 0;
    case Mode::m: return 2;
    case Mode::c1: return 4;
    case Mode::c2: return 6;
  }
  return 0;
}

std::string_view mode_name(Mode mode);

/// Parses "b", "m", "c1", "c2"; throws DomainError otherwise.
Mode parse_mode(std::string_view name);

/// Unordered pair of distinct modes; u is the first party (partial transpose
/// acts on it).
struct Bipartition {
  Mode u;
  Mode v;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// "c2-m" style label.
std::string bipartition_label(const Bipartition& pair);
Bipartition parse_bipartition(std::string_view text);

}  // namespace cmm
