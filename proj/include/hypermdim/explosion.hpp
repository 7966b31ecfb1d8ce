// Copyright 2026 The hypermdim Authors
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypermdim/sepspan.hpp"
#include "hypermdim/sets.hpp"
#include "hypermdim/system.hpp"
#include "hypermdim/wandering.hpp"

namespace hypermdim {

// ---- subset-family certificate ---------------------------------------------

// prefix: a maximum separated family from the pool, truncated to the cap.
// isolated: a maximum family in which every member has a time at which it is
// eps-far from all other members (maximum independent set over (point, time)
// pairs), truncated to the cap.
enum class Selection { prefix, isolated };

std::string_view to_string(Selection selection);
Selection selection_from_string(std::string_view name);

struct CertificateOptions {
  std::size_t cap = 12;
  Selection selection = Selection::prefix;
  Method base_method = Method::exact;
  std::uint64_t exhaustive_limit = 4096;  // verify all pairs when 2^N - 1 <= this
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
};

struct SubsetVerification {
  std::string mode;  // "exhaustive" or "sampled"
  std::uint64_t seed = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  double min_distance = 0.0;
  std::uint64_t witness_a = 0;  // subset bitmasks realizing min_distance
  std::uint64_t witness_b = 0;

  bool passed() const { return violations == 0; }
};

// D_k over pairs of distinct nonempty subsets of family, all pairs or a seeded
// uniform sample. Rejects families larger than options.cap.
SubsetVerification verify_subset_family(const DynSystem& sys, const std::vector<double>& family,
                                        int k, double eps, const CertificateOptions& options = {});

// For each member, the first time i < k at which it is eps-far from every
// other member, or -1.
std::vector<int> isolating_times(const DynSystem& sys, const std::vector<double>& family, int k,
                                 double eps);

FinitePoint subset_of(Space space, const std::vector<double>& family, std::uint64_t mask);

struct SubsetCertificate {
  std::vector<double> base_family;
  std::vector<std::size_t> pool_indices;
  int k = 1;
  double eps = 0.0;
  std::size_t n = 0;
  std::size_t found = 0;  // family size before truncation
  bool truncated = false;
  Selection selection = Selection::prefix;
  Method base_method = Method::exact;
  std::uint64_t subset_count = 0;  // 2^N - 1, the implied lower bound
  std::vector<int> isolating_times;
  SubsetVerification verification;
};

// Throws verification_failed, with the verification report in the message,
// when some pair of subsets is closer than eps in D_k.
SubsetCertificate build_subset_certificate(const DynSystem& sys, int k, double eps,
                                           const std::vector<double>& pool,
                                           const CertificateOptions& options = {});

// ---- shift embedding --------------------------------------------------------

struct PaddingOptions {
  long burn = 1000;
  long window = 64;
  double tol = 1e-9;
};

struct EmbedConfig {
  DynSystem system;
  ArcPoint gamma;
  int channels = 1;
  std::vector<std::pair<double, double>> subintervals;  // J_i inside [0,1]
  int horizon = 0;
  std::vector<double> padding;
  double padding_error = 0.0;  // directed Hausdorff distance from T(padding) to padding
  WanderingCheck arc_check;    // disjointness of T^n(gamma), |n| <= horizon + 1
};

// J_i = [2i/(2k-1), (2i+1)/(2k-1)]. Padding is the union of the estimated
// forward and backward limit sets of the endpoints of gamma, each point
// checked periodic with period <= 64 within padding.tol.
EmbedConfig make_embed_config(const DynSystem& sys, const ArcPoint& gamma, int channels,
                              int horizon, const PaddingOptions& padding = {});

class SymbolBlock {
 public:
  SymbolBlock(int horizon, int channels, double fill = 0.0);

  int horizon() const { return horizon_; }
  int channels() const { return channels_; }
  double at(int n, int i) const { return values_[index(n, i)]; }
  double& at(int n, int i) { return values_[index(n, i)]; }
  const std::vector<double>& values() const { return values_; }

  // Restriction of the inverse shift: (sigma^-1 xi)_m = xi_{m-1}, |m| <= N-1.
  SymbolBlock inverse_shift() const;

 private:
  std::size_t index(int n, int i) const;

  int horizon_;
  int channels_;
  std::vector<double> values_;
};

// Uniform symbols in [0,1) from a seeded mt19937_64, independent of the
// standard library's distributions.
SymbolBlock random_block(int horizon, int channels, std::uint64_t seed);

struct EmbedState {
  SymbolBlock block;
  FinitePoint image;
};

EmbedState build_embedding(const EmbedConfig& cfg, const SymbolBlock& xi);

struct ConjugacyReport {
  int horizon = 0;
  double residual = 0.0;
  double bound = 0.0;            // max(boundary_term, padding_error)
  double boundary_term = 0.0;    // distance from T^N(gamma), T^(N+1)(gamma) to the padding
  double padding_error = 0.0;
  double boundary_diameter = 0.0;  // max diameter of T^(+-N)(gamma)
};

ConjugacyReport check_conjugacy(const EmbedConfig& cfg, const SymbolBlock& xi);

struct GrowthOptions {
  int n_window = 2;
  double eps = 0.05;
  int symbols = 4;                         // m-point grid j/(m-1) per coordinate
  std::optional<std::vector<int>> positions;  // varied positions; default 0, -1, ..., -(n-1)
  std::size_t cap = 4096;
  std::uint64_t seed = 0;
  Method method = Method::greedy;
};

struct GrowthReport {
  int channels = 1;
  int n_window = 1;
  double eps = 0.0;
  int symbols = 1;
  std::vector<int> positions;
  std::uint64_t full_family_size = 0;  // saturating
  std::size_t family_size = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::size_t sep = 0;
  double rate = 0.0;  // log Sep / (n_window * -log eps)
  double min_image_distance = 0.0;
};

GrowthReport embedded_growth(const EmbedConfig& cfg, const GrowthOptions& options = {});

double directed_arc_to_set(const ArcPoint& arc, const FinitePoint& set);

}  // namespace hypermdim
