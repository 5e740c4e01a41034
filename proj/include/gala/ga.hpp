#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace gala::ga {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;  // rows

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(double c, const Vec3& a) {
  return {c * a[0], c * a[1], c * a[2]};
}

// Blade basis order used everywhere: 1, e1, e2, e3, e12, e13, e23, e123.
struct BladeProduct {
  int blade;
  double sign;
};

// kBladeTable[i][j]: blade index and sign of the product basis_i * basis_j.
inline constexpr BladeProduct kBladeTable[8][8] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}},
    {{1, 1}, {0, 1}, {4, 1}, {5, 1}, {2, 1}, {3, 1}, {7, 1}, {6, 1}},
    {{2, 1}, {4, -1}, {0, 1}, {6, 1}, {1, -1}, {7, -1}, {3, 1}, {5, -1}},
    {{3, 1}, {5, -1}, {6, -1}, {0, 1}, {7, 1}, {1, -1}, {2, -1}, {4, 1}},
    {{4, 1}, {2, -1}, {1, 1}, {7, 1}, {0, -1}, {6, -1}, {5, 1}, {3, -1}},
    {{5, 1}, {3, -1}, {7, -1}, {1, 1}, {6, 1}, {0, -1}, {4, -1}, {2, 1}},
    {{6, 1}, {7, 1}, {3, -1}, {2, 1}, {5, -1}, {4, 1}, {0, -1}, {1, -1}},
    {{7, 1}, {6, 1}, {5, -1}, {4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, -1}},
};

// Element of the 3D geometric algebra. Component storage order is fixed as
// (s, e1, e2, e3, e12, e13, e23, e123) and stable across versions.
struct Multivector {
  double s = 0.0;
  Vec3 v{0.0, 0.0, 0.0};  // e1, e2, e3
  Vec3 b{0.0, 0.0, 0.0};  // e12, e13, e23
  double t = 0.0;

  static Multivector scalar(double x) {
    Multivector m;
    m.s = x;
    return m;
  }
  static Multivector vector(const Vec3& x) {
    Multivector m;
    m.v = x;
    return m;
  }

  double component(int k) const {
    switch (k) {
      case 0: return s;
      case 1: case 2: case 3: return v[k - 1];
      case 4: case 5: case 6: return b[k - 4];
      case 7: return t;
    }
    throw std::out_of_range("multivector component index");
  }
  void set_component(int k, double x) {
    switch (k) {
      case 0: s = x; return;
      case 1: case 2: case 3: v[k - 1] = x; return;
      case 4: case 5: case 6: b[k - 4] = x; return;
      case 7: t = x; return;
    }
    throw std::out_of_range("multivector component index");
  }
};

inline Multivector operator+(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (int k = 0; k < 8; ++k) r.set_component(k, a.component(k) + b.component(k));
  return r;
}

inline Multivector operator-(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (int k = 0; k < 8; ++k) r.set_component(k, a.component(k) - b.component(k));
  return r;
}

inline Multivector operator*(double c, const Multivector& a) {
  Multivector r;
  for (int k = 0; k < 8; ++k) r.set_component(k, c * a.component(k));
  return r;
}

inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
  std::array<double, 8> out{};
  for (int i = 0; i < 8; ++i) {
    const double ai = a.component(i);
    if (ai == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const double bj = b.component(j);
      if (bj == 0.0) continue;
      const BladeProduct p = kBladeTable[i][j];
      out[p.blade] += p.sign * ai * bj;
    }
  }
  Multivector r;
  for (int k = 0; k < 8; ++k) r.set_component(k, out[k]);
  return r;
}

// Left fold of the geometric product over a sequence of vectors,
// p = r_0 r_1 r_2 ...  Even-length chains carry only scalar+bivector parts,
// odd-length chains only vector+trivector parts.
inline Multivector product_chain(std::span<const Vec3> vectors) {
  if (vectors.empty())
    throw std::invalid_argument("product_chain: empty vector sequence");
  Multivector p = Multivector::vector(vectors[0]);
  for (std::size_t i = 1; i < vectors.size(); ++i)
    p = geometric_product(p, Multivector::vector(vectors[i]));
  return p;
}

// The rotation-invariant attributes of a multivector: scalar component,
// norms of the vector and bivector components, and trivector component.
struct InvariantVec {
  double scalar = 0.0;
  double vec_norm = 0.0;
  double bivec_norm = 0.0;
  double trivector = 0.0;
};

inline InvariantVec invariants(const Multivector& m) {
  return {m.s, norm(m.v), norm(m.b), m.t};
}

enum class Parity { even, odd };

// Extracts a rotation-covariant 3-vector from a product of vectors: the
// vector component for odd chains, or the right-product of the bivector part
// with the unit trivector (m * e123) for even chains.
inline Vec3 covariant_vector(const Multivector& m, Parity parity) {
  if (parity == Parity::odd) return m.v;
  // (b12 e12 + b13 e13 + b23 e23) e123 = -b23 e1 + b13 e2 - b12 e3
  return {-m.b[2], m.b[1], -m.b[0]};
}

// Proper rotation stored as a unit quaternion (w, x, y, z).
class Rotation {
 public:
  static Rotation identity() { return Rotation({1.0, 0.0, 0.0, 0.0}); }

  static Rotation from_quaternion(const std::array<double, 4>& q) {
    return Rotation(q);
  }

  static Rotation from_axis_angle(const Vec3& axis, double angle) {
    const double n = norm(axis);
    if (n == 0.0) throw std::invalid_argument("rotation axis must be nonzero");
    const double h = 0.5 * angle;
    const double s = std::sin(h) / n;
    return Rotation({std::cos(h), s * axis[0], s * axis[1], s * axis[2]});
  }

  // Shepperd's method; requires a proper orthogonal matrix.
  static Rotation from_matrix(const Mat3& r) {
    const double tr = r[0][0] + r[1][1] + r[2][2];
    std::array<double, 4> q;
    if (tr > 0.0) {
      double s = std::sqrt(tr + 1.0) * 2.0;
      q = {0.25 * s, (r[2][1] - r[1][2]) / s, (r[0][2] - r[2][0]) / s,
           (r[1][0] - r[0][1]) / s};
    } else if (r[0][0] > r[1][1] && r[0][0] > r[2][2]) {
      double s = std::sqrt(1.0 + r[0][0] - r[1][1] - r[2][2]) * 2.0;
      q = {(r[2][1] - r[1][2]) / s, 0.25 * s, (r[0][1] + r[1][0]) / s,
           (r[0][2] + r[2][0]) / s};
    } else if (r[1][1] > r[2][2]) {
      double s = std::sqrt(1.0 + r[1][1] - r[0][0] - r[2][2]) * 2.0;
      q = {(r[0][2] - r[2][0]) / s, (r[0][1] + r[1][0]) / s, 0.25 * s,
           (r[1][2] + r[2][1]) / s};
    } else {
      double s = std::sqrt(1.0 + r[2][2] - r[0][0] - r[1][1]) * 2.0;
      q = {(r[1][0] - r[0][1]) / s, (r[0][2] + r[2][0]) / s,
           (r[1][2] + r[2][1]) / s, 0.25 * s};
    }
    return Rotation(q);
  }

  const std::array<double, 4>& quaternion() const { return q_; }

  Mat3 matrix() const {
    const double w = q_[0], x = q_[1], y = q_[2], z = q_[3];
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
  }

  Vec3 apply(const Vec3& v) const {
    const Mat3 r = matrix();
    return {dot(r[0], v), dot(r[1], v), dot(r[2], v)};
  }

 private:
  explicit Rotation(const std::array<double, 4>& q) : q_(q) {
    const double n2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
    if (std::abs(n2 - 1.0) > 1e-10)
      throw std::invalid_argument("rotation quaternion must have unit norm");
  }

  std::array<double, 4> q_;
};

// Rotor sandwich q m q~.  Scalar and trivector parts are unchanged; the
// vector and bivector parts transform as under the matrix form of R.
inline Multivector rotate(const Multivector& m, const Rotation& R) {
  const auto& q = R.quaternion();
  Multivector rotor;  // w - x e23 + y e13 - z e12
  rotor.s = q[0];
  rotor.b = {-q[3], q[2], -q[1]};
  Multivector reverse = rotor;
  reverse.b = {-rotor.b[0], -rotor.b[1], -rotor.b[2]};
  return geometric_product(geometric_product(rotor, m), reverse);
}

}  // namespace gala::ga
