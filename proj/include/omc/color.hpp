// Copyright 2026 The omcmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "omc/error.hpp"

namespace omc {

namespace detail {

/// Shared base for the three color spaces: a fixed 3-vector with value
/// semantics. Each space derives its own type so that an Lab triple can never
/// be passed where an sRGB triple is expected.
template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

}  // namespace detail

/// Gamma-encoded sRGB, channels in [0, 1].
template <typename Scalar>
class RgbT : public detail::Vec3<Scalar> {
  using Base = detail::Vec3<Scalar>;

 public:
  RgbT() : Base(Base::Zero()) {}
  RgbT(Scalar r, Scalar g, Scalar b) : Base(r, g, b) {}
  template <typename Derived>
  explicit RgbT(const Eigen::MatrixBase<Derived>& other) : Base(other) {}

  Scalar r() const { return (*this)[0]; }
  Scalar g() const { return (*this)[1]; }
  Scalar b() const { return (*this)[2]; }
};

/// Hexcone HSV. h in degrees [0, 360), s and v in [0, 1].
template <typename Scalar>
class HsvT : public detail::Vec3<Scalar> {
  using Base = detail::Vec3<Scalar>;

 public:
  HsvT() : Base(Base::Zero()) {}
  HsvT(Scalar h, Scalar s, Scalar v) : Base(h, s, v) {}
  template <typename Derived>
  explicit HsvT(const Eigen::MatrixBase<Derived>& other) : Base(other) {}

  Scalar h() const { return (*this)[0]; }
  Scalar s() const { return (*this)[1]; }
  Scalar v() const { return (*this)[2]; }
};

/// CIELAB under D65 / 2 degree observer.
template <typename Scalar>
class LabT : public detail::Vec3<Scalar> {
  using Base = detail::Vec3<Scalar>;

 public:
  LabT() : Base(Base::Zero()) {}
  LabT(Scalar l, Scalar a, Scalar b) : Base(l, a, b) {}
  template <typename Derived>
  explicit LabT(const Eigen::MatrixBase<Derived>& other) : Base(other) {}

  Scalar L() const { return (*this)[0]; }
  Scalar a() const { return (*this)[1]; }
  Scalar b() const { return (*this)[2]; }

  Scalar chroma() const { return std::hypot(a(), b()); }
  /// Hue angle in radians, (-pi, pi].
  Scalar hue_angle() const { return std::atan2(b(), a()); }
};

using Rgb = RgbT<double>;
using Hsv = HsvT<double>;
using Lab = LabT<double>;

/// 8-bit view of an sRGB color.
struct Rgb8 {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb8&, const Rgb8&) = default;
  friend auto operator<=>(const Rgb8&, const Rgb8&) = default;
};

template <typename Scalar>
Rgb8 to_rgb8(const RgbT<Scalar>& c) {
  auto q = [](Scalar x) {
    return static_cast<std::uint8_t>(std::lround(std::clamp<double>(static_cast<double>(x), 0.0, 1.0) * 255.0));
  };
  return {q(c.r()), q(c.g()), q(c.b())};
}

inline Rgb from_rgb8(Rgb8 c) { return {c.r / 255.0, c.g / 255.0, c.b / 255.0}; }

namespace detail {

// sRGB primaries with D65 white (IEC 61966-2-1).
template <typename Scalar>
const Eigen::Matrix<Scalar, 3, 3>& rgb_to_xyz_matrix() {
  static const Eigen::Matrix<Scalar, 3, 3> m = [] {
    Eigen::Matrix<Scalar, 3, 3> r;
    r << Scalar(0.4124564), Scalar(0.3575761), Scalar(0.1804375),
         Scalar(0.2126729), Scalar(0.7151522), Scalar(0.0721750),
         Scalar(0.0193339), Scalar(0.1191920), Scalar(0.9503041);
    return r;
  }();
  return m;
}

template <typename Scalar>
const Eigen::Matrix<Scalar, 3, 3>& xyz_to_rgb_matrix() {
  static const Eigen::Matrix<Scalar, 3, 3> m = rgb_to_xyz_matrix<Scalar>().inverse();
  return m;
}

// White point taken as the image of RGB (1,1,1) so that white maps to a = b = 0.
template <typename Scalar>
const Vec3<Scalar>& white_xyz() {
  static const Vec3<Scalar> w = rgb_to_xyz_matrix<Scalar>() * Vec3<Scalar>::Ones();
  return w;
}

template <typename Scalar>
Scalar srgb_decode(Scalar c) {
  return c <= Scalar(0.04045) ? c / Scalar(12.92) : std::pow((c + Scalar(0.055)) / Scalar(1.055), Scalar(2.4));
}

template <typename Scalar>
Scalar srgb_encode(Scalar c) {
  return c <= Scalar(0.0031308) ? Scalar(12.92) * c : Scalar(1.055) * std::pow(c, Scalar(1) / Scalar(2.4)) - Scalar(0.055);
}

template <typename Scalar>
Scalar lab_f(Scalar t) {
  constexpr Scalar d = Scalar(6) / Scalar(29);
  return t > d * d * d ? std::cbrt(t) : t / (Scalar(3) * d * d) + Scalar(4) / Scalar(29);
}

template <typename Scalar>
Scalar lab_f_inv(Scalar t) {
  constexpr Scalar d = Scalar(6) / Scalar(29);
  return t > d ? t * t * t : Scalar(3) * d * d * (t - Scalar(4) / Scalar(29));
}

}  // namespace detail

template <typename Scalar>
detail::Vec3<Scalar> srgb_to_linear(const RgbT<Scalar>& c) {
  return c.unaryExpr([](Scalar x) { return detail::srgb_decode(x); });
}

template <typename Scalar>
detail::Vec3<Scalar> lab_to_linear(const LabT<Scalar>& c) {
  const Scalar fy = (c.L() + Scalar(16)) / Scalar(116);
  const Scalar fx = fy + c.a() / Scalar(500);
  const Scalar fz = fy - c.b() / Scalar(200);
  const detail::Vec3<Scalar> xyz =
      detail::Vec3<Scalar>(detail::lab_f_inv(fx), detail::lab_f_inv(fy), detail::lab_f_inv(fz))
          .cwiseProduct(detail::white_xyz<Scalar>());
  return detail::xyz_to_rgb_matrix<Scalar>() * xyz;
}

/// True when the Lab color maps inside the sRGB cube, up to `tolerance` in
/// linear light.
template <typename Scalar>
bool in_srgb_gamut(const LabT<Scalar>& c, Scalar tolerance = Scalar(1e-12)) {
  const auto lin = lab_to_linear(c);
  return (lin.array() >= -tolerance).all() && (lin.array() <= Scalar(1) + tolerance).all();
}

template <typename Scalar>
LabT<Scalar> srgb_to_lab(const RgbT<Scalar>& c) {
  const detail::Vec3<Scalar> xyz =
      (detail::rgb_to_xyz_matrix<Scalar>() * srgb_to_linear(c)).cwiseQuotient(detail::white_xyz<Scalar>());
  const Scalar fx = detail::lab_f(xyz[0]);
  const Scalar fy = detail::lab_f(xyz[1]);
  const Scalar fz = detail::lab_f(xyz[2]);
  return {Scalar(116) * fy - Scalar(16), Scalar(500) * (fx - fy), Scalar(200) * (fy - fz)};
}

/// Out-of-gamut input is clamped per channel; `clamped` reports it.
template <typename Scalar>
Clamped<RgbT<Scalar>> lab_to_srgb(const LabT<Scalar>& c) {
  constexpr Scalar tol = Scalar(1e-9);
  const auto lin = lab_to_linear(c);
  const bool outside = (lin.array() < -tol).any() || (lin.array() > Scalar(1) + tol).any();
  RgbT<Scalar> out(lin.unaryExpr([](Scalar x) {
    return std::clamp(detail::srgb_encode(std::clamp(x, Scalar(0), Scalar(1))), Scalar(0), Scalar(1));
  }));
  return {out, outside};
}

template <typename Scalar>
HsvT<Scalar> srgb_to_hsv(const RgbT<Scalar>& c) {
  const Scalar mx = c.maxCoeff();
  const Scalar mn = c.minCoeff();
  const Scalar delta = mx - mn;
  if (delta <= Scalar(0)) return {Scalar(0), Scalar(0), mx};

  Scalar h;
  if (mx == c.r()) {
    h = (c.g() - c.b()) / delta;
  } else if (mx == c.g()) {
    h = Scalar(2) + (c.b() - c.r()) / delta;
  } else {
    h = Scalar(4) + (c.r() - c.g()) / delta;
  }
  h *= Scalar(60);
  if (h < Scalar(0)) h += Scalar(360);
  if (h >= Scalar(360)) h -= Scalar(360);
  return {h, delta / mx, mx};
}

template <typename Scalar>
RgbT<Scalar> hsv_to_srgb(const HsvT<Scalar>& c) {
  Scalar h = std::fmod(c.h(), Scalar(360));
  if (h < Scalar(0)) h += Scalar(360);
  const Scalar s = std::clamp(c.s(), Scalar(0), Scalar(1));
  const Scalar v = std::clamp(c.v(), Scalar(0), Scalar(1));

  const Scalar sector = h / Scalar(60);
  const int i = static_cast<int>(std::floor(sector)) % 6;
  const Scalar f = sector - std::floor(sector);
  const Scalar p = v * (Scalar(1) - s);
  const Scalar q = v * (Scalar(1) - s * f);
  const Scalar t = v * (Scalar(1) - s * (Scalar(1) - f));
  switch (i) {
    case 0: return {v, t, p};
    case 1: return {q, v, p};
    case 2: return {p, v, t};
    case 3: return {p, q, v};
    case 4: return {t, p, v};
    default: return {v, p, q};
  }
}

enum class DeltaEMetric { CIE76, CIEDE2000 };

template <typename Scalar>
Scalar delta_e_76(const LabT<Scalar>& c1, const LabT<Scalar>& c2) {
  return (c1 - c2).norm();
}

/// CIEDE2000 with kL = kC = kH = 1.
template <typename Scalar>
Scalar delta_e_2000(const LabT<Scalar>& c1, const LabT<Scalar>& c2) {
  using std::atan2, std::cos, std::exp, std::hypot, std::sin, std::sqrt, std::abs;
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  constexpr Scalar deg = pi / Scalar(180);
  constexpr Scalar pow25_7 = Scalar(6103515625);  // 25^7

  const Scalar c_bar = (c1.chroma() + c2.chroma()) / Scalar(2);
  const Scalar c_bar7 = std::pow(c_bar, Scalar(7));
  const Scalar g = Scalar(0.5) * (Scalar(1) - sqrt(c_bar7 / (c_bar7 + pow25_7)));

  const Scalar a1 = (Scalar(1) + g) * c1.a();
  const Scalar a2 = (Scalar(1) + g) * c2.a();
  const Scalar cp1 = hypot(a1, c1.b());
  const Scalar cp2 = hypot(a2, c2.b());

  auto hue = [](Scalar b, Scalar a) {
    if (a == Scalar(0) && b == Scalar(0)) return Scalar(0);
    Scalar h = atan2(b, a);
    return h < Scalar(0) ? h + Scalar(2) * pi : h;
  };
  const Scalar hp1 = hue(c1.b(), a1);
  const Scalar hp2 = hue(c2.b(), a2);

  const Scalar dl = c2.L() - c1.L();
  const Scalar dc = cp2 - cp1;

  Scalar dh = 0;
  const bool achromatic = cp1 * cp2 == Scalar(0);
  if (!achromatic) {
    dh = hp2 - hp1;
    if (dh > pi) dh -= Scalar(2) * pi;
    else if (dh < -pi) dh += Scalar(2) * pi;
  }
  const Scalar dH = Scalar(2) * sqrt(cp1 * cp2) * sin(dh / Scalar(2));

  const Scalar l_bar = (c1.L() + c2.L()) / Scalar(2);
  const Scalar cp_bar = (cp1 + cp2) / Scalar(2);

  Scalar hp_bar = hp1 + hp2;
  if (!achromatic) {
    if (abs(hp1 - hp2) > pi) {
      hp_bar = hp_bar < Scalar(2) * pi ? (hp_bar + Scalar(2) * pi) / Scalar(2) : (hp_bar - Scalar(2) * pi) / Scalar(2);
    } else {
      hp_bar /= Scalar(2);
    }
  }

  const Scalar t = Scalar(1) - Scalar(0.17) * cos(hp_bar - Scalar(30) * deg) + Scalar(0.24) * cos(Scalar(2) * hp_bar) +
                   Scalar(0.32) * cos(Scalar(3) * hp_bar + Scalar(6) * deg) -
                   Scalar(0.20) * cos(Scalar(4) * hp_bar - Scalar(63) * deg);
  const Scalar d_theta = Scalar(30) * deg * exp(-std::pow((hp_bar / deg - Scalar(275)) / Scalar(25), Scalar(2)));
  const Scalar cp_bar7 = std::pow(cp_bar, Scalar(7));
  const Scalar rc = Scalar(2) * sqrt(cp_bar7 / (cp_bar7 + pow25_7));
  const Scalar l50 = (l_bar - Scalar(50)) * (l_bar - Scalar(50));
  const Scalar sl = Scalar(1) + Scalar(0.015) * l50 / sqrt(Scalar(20) + l50);
  const Scalar sc = Scalar(1) + Scalar(0.045) * cp_bar;
  const Scalar sh = Scalar(1) + Scalar(0.015) * cp_bar * t;
  const Scalar rt = -sin(Scalar(2) * d_theta) * rc;

  const Scalar tl = dl / sl;
  const Scalar tc = dc / sc;
  const Scalar th = dH / sh;
  return sqrt(tl * tl + tc * tc + th * th + rt * tc * th);
}

template <typename Scalar>
Scalar delta_e(const LabT<Scalar>& c1, const LabT<Scalar>& c2, DeltaEMetric metric) {
  return metric == DeltaEMetric::CIE76 ? delta_e_76(c1, c2) : delta_e_2000(c1, c2);
}

}  // namespace omc
