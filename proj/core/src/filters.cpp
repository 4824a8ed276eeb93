// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/filters.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavshrink {
namespace {

// Scaling filters from the minimum-phase spectral factorization, 20 digits.
const std::array<std::vector<double>, 7> kDaubechies = {{
    {0.48296291314453414337, 0.83651630373780790558, 0.22414386804201338103,
     -0.12940952255126038117},
    {0.332670552950082616, 0.80689150931109257649, 0.4598775021184915701,
     -0.1350110200102545887, -0.085441273882026661693, 0.035226291885709536603},
    {0.23037781330889650086, 0.71484657055291564709, 0.63088076792985890788,
     -0.027983769416859854211, -0.18703481171909308408, 0.030841381835560763627,
     0.032883011666885199735, -0.010597401785069032105},
    {0.16010239797419291448, 0.60382926979718967054, 0.72430852843777292773,
     0.13842814590132073151, -0.24229488706638203186, -0.032244869584638374648,
     0.077571493840045713523, -0.0062414902127982742742, -0.012580751999081999469,
     0.003335725285473771278},
    {0.11154074335010946362, 0.49462389039845308568, 0.75113390802109535068,
     0.31525035170919762909, -0.22626469396543982008, -0.12976686756726193556,
     0.097501605587323049102, 0.027522865530305728626, -0.031582039317486029565,
     0.00055384220116149613925, 0.0047772575109455106396, -0.0010773010853084795649},
    {0.07785205408500917902, 0.39653931948191730654, 0.72913209084623511992,
     0.46978228740519312247, -0.14390600392856497541, -0.22403618499387498264,
     0.071309219266830264751, 0.080612609151083071913, -0.03802993693501441358,
     -0.016574541630666880654, 0.012550998556099840613, 0.00042957797292136652113,
     -0.0018016407040474909153, 0.00035371379997452024845},
    {0.054415842243104009955, 0.31287159091429997066, 0.67563073629728980681,
     0.58535468365420671277, -0.015829105256349305667, -0.28401554296154692652,
     0.00047248457391328277036, 0.12874742662047845886, -0.01736930100180754617,
     -0.044088253930794751507, 0.013981027917398281649, 0.0087460940474057767164,
     -0.0048703529934515743104, -0.0003917403733769470463, 0.00067544940645056936637,
     -0.00011747678412476953373},
}};

void check_orthonormal(const std::string& name, const std::vector<double>& h) {
  constexpr double kTol = 1e-12;
  if (h.size() < 2 || h.size() % 2 != 0) {
    throw std::invalid_argument("filter " + name + ": length must be even and >= 2");
  }
  double sum = 0.0;
  for (double c : h) sum += c;
  if (std::abs(sum - std::numbers::sqrt2) > kTol) {
    throw std::invalid_argument("filter " + name + ": low-pass taps must sum to sqrt(2)");
  }
  for (std::size_t m = 0; 2 * m < h.size(); ++m) {
    double acc = 0.0;
    for (std::size_t k = 0; k + 2 * m < h.size(); ++k) acc += h[k] * h[k + 2 * m];
    const double expected = m == 0 ? 1.0 : 0.0;
    if (std::abs(acc - expected) > kTol) {
      throw std::invalid_argument("filter " + name + ": not orthonormal under even shifts");
    }
  }
}

}  // namespace

FilterPair FilterPair::from_scaling_filter(std::string name, std::vector<double> low_pass,
                                           int vanishing_moments) {
  check_orthonormal(name, low_pass);
  const std::size_t len = low_pass.size();
  std::vector<double> high_pass(len);
  for (std::size_t k = 0; k < len; ++k) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    high_pass[k] = sign * low_pass[len - 1 - k];
  }
  return FilterPair{std::move(name), std::move(low_pass), std::move(high_pass),
                    vanishing_moments};
}

FilterPair haar() {
  const double c = 1.0 / std::numbers::sqrt2;
  return FilterPair::from_scaling_filter("haar", {c, c}, 1);
}

FilterPair daubechies(int vanishing_moments) {
  if (vanishing_moments == 1) return haar();
  if (vanishing_moments < 1 || vanishing_moments > 8) {
    throw std::invalid_argument("daubechies: vanishing moments must be in [1, 8], got " +
                                std::to_string(vanishing_moments));
  }
  return FilterPair::from_scaling_filter(
      "db" + std::to_string(vanishing_moments),
      kDaubechies[static_cast<std::size_t>(vanishing_moments - 2)], vanishing_moments);
}

FilterPair filter_by_name(std::string_view name) {
  if (name == "haar" || name == "db1") return haar();
  if (name.size() == 3 && name.substr(0, 2) == "db" && name[2] >= '2' && name[2] <= '8') {
    return daubechies(name[2] - '0');
  }
  throw std::invalid_argument("unknown wavelet '" + std::string(name) +
                              "' (expected haar or db1..db8)");
}

std::vector<std::string> available_filters() {
  return {"haar", "db2", "db3", "db4", "db5", "db6", "db7", "db8"};
}

}  // namespace wavshrink
