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

#include "hypermdim/system.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hypermdim/error.hpp"

namespace hypermdim {
namespace detail {

class MapKernel {
 public:
  virtual ~MapKernel() = default;
  virtual double forward(double x) const = 0;
  virtual Precise forward(const Precise& x) const = 0;
  virtual double inverse(double x) const = 0;
  virtual Precise inverse(const Precise& x) const = 0;
  virtual double lift(double x) const = 0;
  virtual Precise lift(const Precise& x) const = 0;
  virtual double lift_inverse(double y) const = 0;
  virtual Precise lift_inverse(const Precise& y) const = 0;
};

}  // namespace detail

namespace {

using detail::MapKernel;
using detail::pi_as;
using detail::unit_frac;

template <class R>
R clamp01(const R& x) {
  if (x < R(0)) return R(0);
  if (x > R(1)) return R(1);
  return x;
}

template <class K>
class KernelOf final : public MapKernel {
 public:
  explicit KernelOf(K k) : k_(std::move(k)) {}
  double forward(double x) const override { return k_.template forward<double>(x); }
  Precise forward(const Precise& x) const override { return k_.template forward<Precise>(x); }
  double inverse(double x) const override { return k_.template inverse<double>(x); }
  Precise inverse(const Precise& x) const override { return k_.template inverse<Precise>(x); }
  double lift(double x) const override { return k_.template lift<double>(x); }
  Precise lift(const Precise& x) const override { return k_.template lift<Precise>(x); }
  double lift_inverse(double y) const override { return k_.template lift_inverse<double>(y); }
  Precise lift_inverse(const Precise& y) const override {
    return k_.template lift_inverse<Precise>(y);
  }

 private:
  K k_;
};

struct NoInverse {
  template <class R>
  R inverse(const R&) const {
    detail::fail(ErrorKind::not_invertible, "map has no inverse");
  }
};

struct NoLift {
  template <class R>
  R lift(const R&) const {
    detail::fail(ErrorKind::invalid_argument, "map has no circle lift");
  }
  template <class R>
  R lift_inverse(const R&) const {
    detail::fail(ErrorKind::invalid_argument, "map has no circle lift");
  }
};

// Circle homeomorphism given by a lift and its inverse.
template <class D>
struct CircleHomeo {
  template <class R>
  R forward(const R& x) const {
    return unit_frac(static_cast<const D&>(*this).template lift<R>(x));
  }
  template <class R>
  R inverse(const R& y) const {
    return unit_frac(static_cast<const D&>(*this).template lift_inverse<R>(y));
  }
};

struct Rotation : CircleHomeo<Rotation> {
  double theta;
  explicit Rotation(double t) : theta(t) {}
  template <class R>
  R lift(const R& x) const { return x + R(theta); }
  template <class R>
  R lift_inverse(const R& y) const { return y - R(theta); }
};

struct CircleReflection : CircleHomeo<CircleReflection> {
  template <class R>
  R lift(const R& x) const { return -x; }
  template <class R>
  R lift_inverse(const R& y) const { return -y; }
};

struct CircleIdentity : CircleHomeo<CircleIdentity> {
  template <class R>
  R lift(const R& x) const { return x; }
  template <class R>
  R lift_inverse(const R& y) const { return y; }
};

// Lift of the projective north-south map: on [n, n+1) it sends n + f to
// n + atan2(lambda sin(pi f), cos(pi f)) / pi. In the coordinate
// u = tan(pi f) this is u -> lambda u, so the inverse uses 1/lambda.
template <class R>
R projective_lift(const R& u, const R& lambda) {
  using std::atan2;
  using std::cos;
  using std::floor;
  using std::sin;
  R n = floor(u);
  R f = u - n;
  const R pi = pi_as<R>();
  return n + atan2(lambda * sin(pi * f), cos(pi * f)) / pi;
}

// Morse-Smale circle map with an attracting and a repelling period-q orbit.
// The fundamental map is the projective lift, scaled to 1/q of the circle and
// followed by rotation by 1/q. q = 1 is the north-south map.
struct MorseSmale : CircleHomeo<MorseSmale> {
  double lambda;
  int q;
  MorseSmale(double l, int period) : lambda(l), q(period) {}

  template <class R>
  R shift() const {
    return q > 1 ? R(1) / R(q) : R(0);
  }
  template <class R>
  R lift(const R& x) const {
    const R qq(q);
    return projective_lift<R>(qq * x, R(lambda)) / qq + shift<R>();
  }
  template <class R>
  R lift_inverse(const R& y) const {
    const R qq(q);
    return projective_lift<R>(qq * (y - shift<R>()), R(1) / R(lambda)) / qq;
  }
};

struct Doubling : NoInverse, NoLift {
  template <class R>
  R forward(const R& x) const { return unit_frac(R(2) * x); }
};

struct Tent : NoInverse, NoLift {
  double slope;
  explicit Tent(double s) : slope(s) {}
  template <class R>
  R forward(const R& x) const {
    R m = x < R(1) - x ? x : R(1) - x;
    return clamp01(R(slope) * m);
  }
};

struct IntervalReflection : NoLift {
  template <class R>
  R forward(const R& x) const { return clamp01(R(1) - x); }
  template <class R>
  R inverse(const R& y) const { return clamp01(R(1) - y); }
};

struct IntervalIdentity : NoLift {
  template <class R>
  R forward(const R& x) const { return x; }
  template <class R>
  R inverse(const R& y) const { return y; }
};

struct IntervalSquare : NoLift {
  template <class R>
  R forward(const R& x) const { return x * x; }
  template <class R>
  R inverse(const R& y) const {
    using std::sqrt;
    return sqrt(y);
  }
};

// Piecewise-linear interpolation through (xs[j], ys[j]) with xs increasing.
template <class R>
R interpolate(const std::vector<double>& xs, const std::vector<double>& ys, const R& x) {
  std::size_t j = 0;
  std::size_t hi = xs.size() - 1;
  while (hi - j > 1) {
    std::size_t mid = (j + hi) / 2;
    if (x < R(xs[mid])) hi = mid; else j = mid;
  }
  R t = (x - R(xs[j])) / (R(xs[j + 1]) - R(xs[j]));
  return R(ys[j]) + t * (R(ys[j + 1]) - R(ys[j]));
}

struct PlCircle : CircleHomeo<PlCircle> {
  std::vector<double> xs, ys;
  template <class R>
  R lift(const R& x) const {
    using std::floor;
    R n = floor(x);
    return n + interpolate<R>(xs, ys, x - n);
  }
  template <class R>
  R lift_inverse(const R& y) const {
    using std::floor;
    R n = floor(y - R(ys.front()));
    R r = y - n;
    if (r > R(ys.back())) r = R(ys.back());
    return n + interpolate<R>(ys, xs, r);
  }
};

struct PlInterval : NoLift {
  std::vector<double> xs, ys;
  // Inverse tables, filled only for monotone maps onto [0,1].
  std::vector<double> inv_xs, inv_ys;
  template <class R>
  R forward(const R& x) const { return clamp01(interpolate<R>(xs, ys, x)); }
  template <class R>
  R inverse(const R& y) const {
    if (inv_xs.empty()) detail::fail(ErrorKind::not_invertible, "pl_interval map is not invertible");
    return clamp01(interpolate<R>(inv_xs, inv_ys, y));
  }
};

struct Power {
  std::shared_ptr<const MapKernel> base;
  int p;
  template <class R>
  R forward(const R& x) const {
    R y = x;
    for (int i = 0; i < p; ++i) y = base->forward(y);
    return y;
  }
  template <class R>
  R inverse(const R& x) const {
    R y = x;
    for (int i = 0; i < p; ++i) y = base->inverse(y);
    return y;
  }
  template <class R>
  R lift(const R& x) const {
    R y = x;
    for (int i = 0; i < p; ++i) y = base->lift(y);
    return y;
  }
  template <class R>
  R lift_inverse(const R& x) const {
    R y = x;
    for (int i = 0; i < p; ++i) y = base->lift_inverse(y);
    return y;
  }
};

struct Conjugate : CircleHomeo<Conjugate> {
  std::shared_ptr<const MapKernel> h, psi;
  template <class R>
  R lift(const R& x) const { return psi->lift(h->lift(psi->lift_inverse(x))); }
  template <class R>
  R lift_inverse(const R& y) const { return psi->lift(h->lift_inverse(psi->lift_inverse(y))); }
};

// Interval map read off H^q through the cut at x. The constant offsets make
// 0 and 1 exact fixed points (or exchange them for orientation reversal).
struct Cut : NoLift {
  std::shared_ptr<const MapKernel> h;
  int q;
  bool reversing;
  double x;
  double base_d;
  Precise base_p;

  template <class R>
  R lift_q(R y) const {
    for (int i = 0; i < q; ++i) y = h->lift(y);
    return y;
  }
  template <class R>
  R lift_q_inverse(R y) const {
    for (int i = 0; i < q; ++i) y = h->lift_inverse(y);
    return y;
  }
  template <class R>
  R base() const {
    if constexpr (std::is_same_v<R, double>) return base_d; else return base_p;
  }
  template <class R>
  R forward(const R& t) const {
    R v = lift_q<R>(R(x) + t) - base<R>();
    if (reversing) v += R(1);
    return clamp01(v);
  }
  template <class R>
  R inverse(const R& s) const {
    R target = s + base<R>();
    if (reversing) target -= R(1);
    return clamp01(lift_q_inverse<R>(target) - R(x));
  }
};

template <class K>
std::shared_ptr<const MapKernel> wrap(K k) {
  return std::make_shared<KernelOf<K>>(std::move(k));
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double take_param(const SystemSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  detail::require(it != spec.params.end(),
                  spec.kind + " requires parameter '" + key + "'");
  detail::require(std::isfinite(it->second), spec.kind + " parameter '" + key + "' must be finite");
  return it->second;
}

void check_param_keys(const SystemSpec& spec, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : spec.params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    detail::require(ok, spec.kind + " does not take parameter '" + key + "'");
  }
}

void split_breakpoints(const SystemSpec& spec, std::vector<double>& xs, std::vector<double>& ys) {
  detail::require(spec.breakpoints.size() >= 2, spec.kind + " needs at least two breakpoints");
  for (auto [bx, by] : spec.breakpoints) {
    detail::require(std::isfinite(bx) && std::isfinite(by), spec.kind + " breakpoints must be finite");
    xs.push_back(bx);
    ys.push_back(by);
  }
  detail::require(xs.front() == 0.0 && xs.back() == 1.0,
                  spec.kind + " breakpoints must start at x = 0 and end at x = 1");
  for (std::size_t j = 1; j < xs.size(); ++j)
    detail::require(xs[j] > xs[j - 1], spec.kind + " breakpoint abscissae must be strictly increasing");
}

// Delegates to an existing system, optionally swapping map and inverse.
class Forwarding final : public MapKernel {
 public:
  Forwarding(DynSystem sys, bool invert) : s_(std::move(sys)), inv_(invert) {}
  double forward(double x) const override { return inv_ ? s_.inverse(x) : s_.forward(x); }
  Precise forward(const Precise& x) const override { return inv_ ? s_.inverse(x) : s_.forward(x); }
  double inverse(double x) const override { return inv_ ? s_.forward(x) : s_.inverse(x); }
  Precise inverse(const Precise& x) const override { return inv_ ? s_.forward(x) : s_.inverse(x); }
  double lift(double x) const override { return inv_ ? s_.lift_inverse(x) : s_.lift(x); }
  Precise lift(const Precise& x) const override { return inv_ ? s_.lift_inverse(x) : s_.lift(x); }
  double lift_inverse(double y) const override { return inv_ ? s_.lift(y) : s_.lift_inverse(y); }
  Precise lift_inverse(const Precise& y) const override {
    return inv_ ? s_.lift(y) : s_.lift_inverse(y);
  }

 private:
  DynSystem s_;
  bool inv_;
};

std::shared_ptr<const MapKernel> forwarding(const DynSystem& sys, bool invert = false) {
  return std::make_shared<Forwarding>(sys, invert);
}

}  // namespace

std::string_view to_string(Orientation orientation) {
  switch (orientation) {
    case Orientation::preserving: return "preserving";
    case Orientation::reversing: return "reversing";
    case Orientation::none: return "none";
  }
  return "none";
}

DynSystem::DynSystem(std::shared_ptr<const detail::MapKernel> kernel, SystemTraits traits,
                     std::string name, SystemSpec spec)
    : kernel_(std::move(kernel)), traits_(traits), name_(std::move(name)), spec_(std::move(spec)) {}

void DynSystem::need_inverse() const {
  if (!traits_.invertible)
    detail::fail(ErrorKind::not_invertible, name_ + " is not invertible");
}

void DynSystem::need_lift() const {
  if (!traits_.has_lift)
    detail::fail(ErrorKind::invalid_argument, name_ + " has no circle-homeomorphism lift");
}

double DynSystem::forward(double x) const { return kernel_->forward(x); }
Precise DynSystem::forward(const Precise& x) const { return kernel_->forward(x); }
double DynSystem::inverse(double x) const { need_inverse(); return kernel_->inverse(x); }
Precise DynSystem::inverse(const Precise& x) const { need_inverse(); return kernel_->inverse(x); }
double DynSystem::lift(double x) const { need_lift(); return kernel_->lift(x); }
Precise DynSystem::lift(const Precise& x) const { need_lift(); return kernel_->lift(x); }
double DynSystem::lift_inverse(double y) const { need_lift(); return kernel_->lift_inverse(y); }
Precise DynSystem::lift_inverse(const Precise& y) const {
  need_lift();
  return kernel_->lift_inverse(y);
}

DynSystem make_system(const std::string& kind, std::map<std::string, double> params) {
  SystemSpec spec;
  spec.kind = kind;
  spec.params = std::move(params);
  return make_system(spec);
}

DynSystem make_system(const SystemSpec& spec) {
  const std::string& kind = spec.kind;
  auto circle_homeo = [](Orientation o) {
    return SystemTraits{Space::circle, true, o, true};
  };
  if (kind != "reflection" && kind != "identity") {
    detail::require(!spec.space.has_value() ||
                        (kind == "pl_interval" || kind == "tent" || kind == "interval_square")
                            == (*spec.space == Space::interval),
                    kind + " does not live on the requested space");
  }
  if (kind == "rotation") {
    check_param_keys(spec, {"theta"});
    double theta = take_param(spec, "theta");
    return DynSystem(wrap(Rotation(theta)), circle_homeo(Orientation::preserving),
                     "rotation(" + format_number(theta) + ")", spec);
  }
  if (kind == "doubling") {
    check_param_keys(spec, {});
    return DynSystem(wrap(Doubling{}), {Space::circle, false, Orientation::none, false},
                     "doubling", spec);
  }
  if (kind == "tent") {
    check_param_keys(spec, {"slope"});
    double s = take_param(spec, "slope");
    detail::require(s > 0.0 && s <= 2.0, "tent slope must lie in (0, 2]");
    return DynSystem(wrap(Tent(s)), {Space::interval, false, Orientation::none, false},
                     "tent(" + format_number(s) + ")", spec);
  }
  if (kind == "north_south" || kind == "morse_smale") {
    bool ms = kind == "morse_smale";
    if (ms) check_param_keys(spec, {"lambda", "period"});
    else check_param_keys(spec, {"lambda"});
    double lambda = take_param(spec, "lambda");
    detail::require(lambda > 0.0 && lambda < 1.0, kind + " lambda must lie in (0, 1)");
    int q = 1;
    if (ms) {
      double period = take_param(spec, "period");
      detail::require(period >= 1 && period <= 64 && period == std::floor(period),
                      "morse_smale period must be an integer in [1, 64]");
      q = static_cast<int>(period);
    }
    std::string name = ms ? "morse_smale(" + format_number(lambda) + ", " + std::to_string(q) + ")"
                          : "north_south(" + format_number(lambda) + ")";
    return DynSystem(wrap(MorseSmale(lambda, q)), circle_homeo(Orientation::preserving), name, spec);
  }
  if (kind == "reflection" || kind == "identity") {
    check_param_keys(spec, {});
    Space space = spec.space.value_or(Space::circle);
    bool refl = kind == "reflection";
    std::string name = kind + "[" + std::string(to_string(space)) + "]";
    Orientation o = refl ? Orientation::reversing : Orientation::preserving;
    if (space == Space::circle) {
      if (refl) return DynSystem(wrap(CircleReflection{}), circle_homeo(o), name, spec);
      return DynSystem(wrap(CircleIdentity{}), circle_homeo(o), name, spec);
    }
    SystemTraits traits{Space::interval, true, o, false};
    if (refl) return DynSystem(wrap(IntervalReflection{}), traits, name, spec);
    return DynSystem(wrap(IntervalIdentity{}), traits, name, spec);
  }
  if (kind == "interval_square") {
    check_param_keys(spec, {});
    return DynSystem(wrap(IntervalSquare{}),
                     {Space::interval, true, Orientation::preserving, false}, "interval_square",
                     spec);
  }
  if (kind == "pl_circle") {
    check_param_keys(spec, {});
    PlCircle k;
    split_breakpoints(spec, k.xs, k.ys);
    for (std::size_t j = 1; j < k.ys.size(); ++j)
      detail::require(k.ys[j] > k.ys[j - 1],
                      "pl_circle lift is not monotone: breakpoint " + std::to_string(j) +
                          " has y = " + format_number(k.ys[j]) + " <= " + format_number(k.ys[j - 1]));
    detail::require(std::fabs(k.ys.back() - k.ys.front() - 1.0) <= kSetTol,
                    "pl_circle lift must satisfy L(1) = L(0) + 1");
    k.ys.back() = k.ys.front() + 1.0;
    return DynSystem(wrap(std::move(k)), circle_homeo(Orientation::preserving), "pl_circle", spec);
  }
  if (kind == "pl_interval") {
    check_param_keys(spec, {});
    PlInterval k;
    split_breakpoints(spec, k.xs, k.ys);
    for (double y : k.ys)
      detail::require(y >= 0.0 && y <= 1.0, "pl_interval values must lie in [0,1]");
    bool inc = true, dec = true;
    for (std::size_t j = 1; j < k.ys.size(); ++j) {
      inc = inc && k.ys[j] > k.ys[j - 1];
      dec = dec && k.ys[j] < k.ys[j - 1];
    }
    Orientation o = Orientation::none;
    if (inc && k.ys.front() == 0.0 && k.ys.back() == 1.0) {
      k.inv_xs = k.ys;
      k.inv_ys = k.xs;
      o = Orientation::preserving;
    } else if (dec && k.ys.front() == 1.0 && k.ys.back() == 0.0) {
      k.inv_xs.assign(k.ys.rbegin(), k.ys.rend());
      k.inv_ys.assign(k.xs.rbegin(), k.xs.rend());
      o = Orientation::reversing;
    }
    bool homeo = o != Orientation::none;
    return DynSystem(wrap(std::move(k)), {Space::interval, homeo, o, false}, "pl_interval", spec);
  }
  detail::fail(ErrorKind::invalid_argument, "unknown system kind '" + kind + "'");
}

DynSystem power(const DynSystem& sys, int p) {
  detail::require(p != 0, "power needs a nonzero exponent");
  if (p < 0) detail::require(sys.invertible(), sys.name() + " is not invertible");
  SystemTraits traits{sys.space(), sys.invertible(), sys.orientation(), sys.has_lift()};
  if (sys.orientation() == Orientation::reversing && p % 2 == 0)
    traits.orientation = Orientation::preserving;
  SystemSpec spec{"power", {{"p", static_cast<double>(p)}}, {}, sys.space()};
  return DynSystem(wrap(Power{forwarding(sys, p < 0), std::abs(p)}), traits,
                   sys.name() + "^" + std::to_string(p), spec);
}

DynSystem conjugate(const DynSystem& h, const DynSystem& psi) {
  detail::require(h.has_lift() && psi.has_lift(),
                  "conjugation needs circle homeomorphisms with lifts");
  Orientation o = h.orientation();
  SystemSpec spec{"conjugate", {}, {}, Space::circle};
  return DynSystem(wrap(Conjugate{{}, forwarding(h), forwarding(psi)}),
                   {Space::circle, true, o, true},
                   psi.name() + " o " + h.name() + " o " + psi.name() + "^-1", spec);
}

DynSystem cut_at_periodic_point(const DynSystem& h, double x, int q) {
  detail::require(h.has_lift(), "cut needs a circle homeomorphism");
  detail::require(q >= 1, "cut period must be >= 1");
  bool reversing = h.orientation() == Orientation::reversing && q % 2 == 1;
  Cut k;
  k.h = forwarding(h);
  k.q = q;
  k.reversing = reversing;
  k.x = x;
  k.base_d = k.lift_q<double>(x);
  k.base_p = k.lift_q<Precise>(Precise(x));
  SystemSpec spec{"cut", {{"x", x}, {"q", static_cast<double>(q)}}, {}, Space::interval};
  Orientation o = reversing ? Orientation::reversing : Orientation::preserving;
  return DynSystem(wrap(std::move(k)), {Space::interval, true, o, false},
                   "cut(" + h.name() + ", " + format_number(x) + ", " + std::to_string(q) + ")",
                   spec);
}

double iterate(const DynSystem& sys, double x, long n) {
  if (n < 0 && !sys.invertible())
    detail::fail(ErrorKind::not_invertible,
                 "negative iterate requested but " + sys.name() + " has no inverse");
  x = normalize(sys.space(), x);
  for (long i = 0; i < n; ++i) x = sys.forward(x);
  for (long i = 0; i > n; --i) x = sys.inverse(x);
  return x;
}

Precise iterate(const DynSystem& sys, Precise x, long n) {
  if (n < 0 && !sys.invertible())
    detail::fail(ErrorKind::not_invertible,
                 "negative iterate requested but " + sys.name() + " has no inverse");
  for (long i = 0; i < n; ++i) x = sys.forward(x);
  for (long i = 0; i > n; --i) x = sys.inverse(x);
  return x;
}

PhasePoint iterate(const DynSystem& sys, const PhasePoint& x, long n) {
  if (x.space != sys.space())
    detail::fail(ErrorKind::space_mismatch, "point and system live in different spaces");
  return {sys.space(), iterate(sys, x.value, n)};
}

double iterate_lift(const DynSystem& sys, double x, long n) {
  detail::require(n >= 0, "iterate_lift needs n >= 0");
  for (long i = 0; i < n; ++i) x = sys.lift(x);
  return x;
}

double dyn_distance(const DynSystem& sys, double x, double y, int k) {
  detail::require(k >= 1, "dynamical distance needs k >= 1");
  Space space = sys.space();
  x = normalize(space, x);
  y = normalize(space, y);
  double d = metric(space, x, y);
  for (int i = 1; i < k; ++i) {
    x = sys.forward(x);
    y = sys.forward(y);
    d = std::max(d, metric(space, x, y));
  }
  return d;
}

double dyn_distance(const DynSystem& sys, const PhasePoint& x, const PhasePoint& y, int k) {
  if (x.space != sys.space() || y.space != sys.space())
    detail::fail(ErrorKind::space_mismatch, "points and system live in different spaces");
  return dyn_distance(sys, x.value, y.value, k);
}

OrbitSegment orbit_segment(const DynSystem& sys, double x, int k) {
  detail::require(k >= 1, "orbit segment needs k >= 1");
  OrbitSegment seg;
  seg.base = normalize(sys.space(), x);
  seg.points.resize(static_cast<std::size_t>(k));
  seg.points[0] = seg.base;
  for (int i = 1; i < k; ++i) seg.points[i] = sys.forward(seg.points[i - 1]);
  return seg;
}

namespace {

struct Cluster {
  double start;
  double extent;
};

std::vector<Cluster> single_linkage(Space space, std::vector<double> v, double tol) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  std::vector<Cluster> out;
  if (space == Space::interval || n == 1) {
    std::size_t s = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == n || v[i] - v[i - 1] > tol) {
        out.push_back({v[s], v[i - 1] - v[s]});
        s = i;
      }
    }
    return out;
  }
  auto gap = [&](std::size_t i) { return i + 1 < n ? v[i + 1] - v[i] : v[0] + 1.0 - v[n - 1]; };
  std::vector<std::size_t> breaks;
  for (std::size_t i = 0; i < n; ++i)
    if (gap(i) > tol) breaks.push_back(i);
  if (breaks.empty()) {
    std::size_t widest = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (gap(i) > gap(widest)) widest = i;
    out.push_back({v[(widest + 1) % n], 1.0 - gap(widest)});
    return out;
  }
  for (std::size_t b = 0; b < breaks.size(); ++b) {
    std::size_t first = (breaks[b] + 1) % n;
    std::size_t last = breaks[(b + 1) % breaks.size()];
    double extent = v[last] - v[first];
    if (extent < 0.0) extent += 1.0;
    out.push_back({v[first], extent});
  }
  return out;
}

}  // namespace

FinitePoint omega_limit_estimate(const DynSystem& sys, double x, long burn, long window,
                                 double tol, Direction direction) {
  detail::require(burn >= 1 && window >= 1, "burn and window must be >= 1");
  detail::require(tol > 0.0, "tolerance must be positive");
  long step = direction == Direction::forward ? 1 : -1;
  x = iterate(sys, x, step * burn);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(window));
  for (long n = 0; n < window; ++n) {
    pts.push_back(x);
    x = step > 0 ? sys.forward(x) : sys.inverse(x);
  }
  std::vector<double> reps;
  for (const Cluster& c : single_linkage(sys.space(), std::move(pts), tol)) {
    if (c.extent <= tol) {
      reps.push_back(settle(sys.space(), c.start + 0.5 * c.extent));
      continue;
    }
    auto steps = static_cast<long>(std::ceil(c.extent / tol));
    for (long j = 0; j < steps; ++j)
      reps.push_back(settle(sys.space(), c.start + tol * static_cast<double>(j)));
    reps.push_back(settle(sys.space(), c.start + c.extent));
  }
  return FinitePoint(sys.space(), std::move(reps));
}

}  // namespace hypermdim
