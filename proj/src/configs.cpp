#include "qplanes/configs.hpp"

#include "qplanes/errors.hpp"
#include "qplanes/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qplanes {

namespace {

int mod(long a, long n) { return static_cast<int>(((a % n) + n) % n); }

using IVec = std::array<long, 4>;

// 2x2 minors of the pair (u, v) for column pairs 01 02 03 12 13 23.
std::array<__int128, 6> pluecker(const IVec &u, const IVec &v)
{
  const auto m = [&](int i, int j) {
    return static_cast<__int128>(u[i]) * v[j] - static_cast<__int128>(u[j]) * v[i];
  };
  return {m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)};
}

bool on_line(const std::array<__int128, 6> &l, const IVec &x)
{
  // Each 3x3 minor of (u, v, x) expands along x.
  const __int128 x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3];
  return l[3] * x3 - l[4] * x2 + l[5] * x1 == 0 &&  // columns 1 2 3
         l[1] * x3 - l[2] * x2 + l[5] * x0 == 0 &&  // columns 0 2 3
         l[0] * x3 - l[2] * x1 + l[4] * x0 == 0 &&  // columns 0 1 3
         l[0] * x2 - l[1] * x1 + l[3] * x0 == 0;    // columns 0 1 2
}

bool is_zero(const std::array<__int128, 6> &l)
{
  return std::all_of(l.begin(), l.end(), [](__int128 v) { return v == 0; });
}

// Draws integer points in [-bound, bound]^4 keeping the set free of repeated
// points and collinear triples.
class GeneralPositionSampler {
public:
  GeneralPositionSampler(Rng &rng, long bound) : rng_(rng), bound_(bound) {}

  void add_existing(const IVec &v)
  {
    for (const auto &u : points_) {
      lines_.push_back(pluecker(u, v));
    }
    points_.push_back(v);
  }

  // Returns false when no admissible point was found within `budget` draws.
  bool draw(IVec &out, std::size_t budget)
  {
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
      IVec v;
      for (auto &x : v) {
        x = draw_int(rng_, -bound_, bound_);
      }
      if (v == IVec{0, 0, 0, 0} || !admissible(v)) {
        continue;
      }
      add_existing(v);
      out = v;
      return true;
    }
    return false;
  }

private:
  bool admissible(const IVec &v) const
  {
    for (const auto &u : points_) {
      if (is_zero(pluecker(u, v))) {
        return false;
      }
    }
    for (const auto &l : lines_) {
      if (on_line(l, v)) {
        return false;
      }
    }
    return true;
  }

  Rng &rng_;
  long bound_;
  std::vector<IVec> points_;
  std::vector<std::array<__int128, 6>> lines_;
};

HPoint to_hpoint(const IVec &v) { return HPoint(v[0], v[1], v[2], v[3]); }

// Primitive integer representative of an exact point; throws if it does not fit.
IVec to_ivec(const HPoint &p)
{
  BigInt lcm = 1;
  for (const auto &c : p.coords()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  IVec out;
  for (int i = 0; i < 4; ++i) {
    const Rational scaled = p[i] * lcm;
    out[i] = to_int64(scaled.get_num());
  }
  return out;
}

}  // namespace

GroupConfig::GroupConfig(ModelKind kind, int order, int offset, int parity,
                         CircleAlignment alignment)
    : kind_(kind), order_(order), offset_(offset), parity_(parity), alignment_(alignment),
      present_(order, true)
{
  members_.resize(order);
  for (int i = 0; i < order; ++i) {
    members_[i] = i;
  }
}

GroupConfig GroupConfig::cyclic(int n, int offset)
{
  if (n < 4) {
    throw PreconditionError("cyclic coset needs n >= 4");
  }
  return GroupConfig(ModelKind::Cyclic, n, mod(offset, n), 0, CircleAlignment::Aligned);
}

GroupConfig GroupConfig::two_component(int n, int offset, int parity)
{
  if (n % 2 != 0) {
    throw PreconditionError("two-component coset needs even n");
  }
  if (n < 8) {
    throw PreconditionError("two-component coset needs n >= 8");
  }
  if (parity != 0 && parity != 1) {
    throw PreconditionError("parity target must be 0 or 1");
  }
  return GroupConfig(ModelKind::TwoComponent, n, mod(offset, n / 2), parity,
                     CircleAlignment::Aligned);
}

GroupConfig GroupConfig::circle_pair(int m, CircleAlignment alignment)
{
  if (m < 3) {
    throw PreconditionError("circle pair needs m >= 3");
  }
  return GroupConfig(ModelKind::CirclePair, 2 * m, 0, 0, alignment);
}

std::pair<int, int> GroupConfig::decode(int i) const
{
  switch (kind_) {
  case ModelKind::Cyclic:
    return {i, 0};
  case ModelKind::TwoComponent:
  case ModelKind::CirclePair:
    return {i % (order_ / 2), i / (order_ / 2)};
  }
  return {i, 0};
}

bool GroupConfig::coplanar(int a, int b, int c, int d) const
{
  switch (kind_) {
  case ModelKind::Cyclic:
    return mod(static_cast<long>(a) + b + c + d - offset_, order_) == 0;
  case ModelKind::TwoComponent: {
    const int half = order_ / 2;
    int sum_j = 0;
    int sum_e = 0;
    for (int x : {a, b, c, d}) {
      sum_j += x % half;
      sum_e += x / half;
    }
    return mod(sum_j - offset_, half) == 0 && (sum_e - parity_) % 2 == 0;
  }
  case ModelKind::CirclePair: {
    const int m = order_ / 2;
    int tops = 0;
    int top_sum = 0;
    int bottom_sum = 0;
    for (int x : {a, b, c, d}) {
      if (x < m) {
        ++tops;
        top_sum += x;
      } else {
        bottom_sum += x - m;
      }
    }
    if (tops == 0 || tops == 4) {
      return true;
    }
    if (tops != 2) {
      return false;
    }
    const int shift = alignment_ == CircleAlignment::Offset ? 1 : 0;
    return mod(top_sum - bottom_sum - shift, m) == 0;
  }
  }
  return false;
}

std::optional<int> GroupConfig::fourth(int a, int b, int c) const
{
  switch (kind_) {
  case ModelKind::Cyclic:
    return mod(static_cast<long>(offset_) - a - b - c, order_);
  case ModelKind::TwoComponent: {
    const int half = order_ / 2;
    const int j = mod(static_cast<long>(offset_) - a % half - b % half - c % half, half);
    const int e = mod(parity_ - a / half - b / half - c / half, 2);
    return j + e * half;
  }
  case ModelKind::CirclePair: {
    const int m = order_ / 2;
    const int shift = alignment_ == CircleAlignment::Offset ? 1 : 0;
    std::vector<int> tops;
    std::vector<int> bottoms;
    for (int x : {a, b, c}) {
      (x < m ? tops : bottoms).push_back(x < m ? x : x - m);
    }
    if (tops.size() == 3 || bottoms.size() == 3) {
      return std::nullopt;
    }
    if (tops.size() == 2) {
      return m + mod(tops[0] + tops[1] - bottoms[0] - shift, m);
    }
    return mod(bottoms[0] + bottoms[1] + shift - tops[0], m);
  }
  }
  return std::nullopt;
}

std::vector<int> GroupConfig::plane_members(int a, int b, int c) const
{
  std::vector<int> out{a, b, c};
  if (const auto d = fourth(a, b, c)) {
    if (*d != a && *d != b && *d != c && present_[*d]) {
      out.push_back(*d);
    }
  } else {
    // Three points on one circle span that circle's plane.
    const int m = order_ / 2;
    const int side = a / m;
    for (int i = side * m; i < (side + 1) * m; ++i) {
      if (present_[i] && i != a && i != b && i != c) {
        out.push_back(i);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void GroupConfig::remove_member(int i)
{
  if (i < 0 || i >= order_ || !present_[i]) {
    throw PreconditionError("element " + std::to_string(i) + " is not a member");
  }
  present_[i] = false;
  members_.erase(std::find(members_.begin(), members_.end(), i));
}

std::string GroupConfig::descriptor() const
{
  switch (kind_) {
  case ModelKind::Cyclic:
    return "coset:" + std::to_string(order_) + ":" + std::to_string(offset_);
  case ModelKind::TwoComponent:
    return "coset2:" + std::to_string(order_) + ":" + std::to_string(offset_) + ":" +
           std::to_string(parity_);
  case ModelKind::CirclePair:
    return (alignment_ == CircleAlignment::Aligned ? "prism:" : "antiprism:") +
           std::to_string(order_ / 2);
  }
  return {};
}

namespace {

TwinConfig circle_pair_config(int m, CircleAlignment alignment)
{
  if (m < 3) {
    throw PreconditionError("prism/antiprism needs m >= 3");
  }
  GeomConfig geom;
  geom.is_exact = false;
  geom.family = (alignment == CircleAlignment::Aligned ? "prism:" : "antiprism:") +
                std::to_string(m);
  const double step = 2.0 * std::numbers::pi / m;
  for (int k = 0; k < m; ++k) {
    geom.approx.push_back({std::cos(k * step), std::sin(k * step), 1.0});
  }
  // The bottom polygon of an antiprism is rotated by half a step.
  const double shift = alignment == CircleAlignment::Offset ? step / 2.0 : 0.0;
  for (int k = 0; k < m; ++k) {
    geom.approx.push_back({std::cos(k * step + shift), std::sin(k * step + shift), -1.0});
  }
  return {std::move(geom), GroupConfig::circle_pair(m, alignment)};
}

}  // namespace

TwinConfig prism(int m) { return circle_pair_config(m, CircleAlignment::Aligned); }
TwinConfig antiprism(int m) { return circle_pair_config(m, CircleAlignment::Offset); }

GroupConfig coset_cyclic(int n, int offset) { return GroupConfig::cyclic(n, offset); }

GroupConfig coset_two_component(int n, int offset, int parity)
{
  return GroupConfig::two_component(n, offset, parity);
}

NodalRootsConfig nodal_roots_config(const QuarticCurve &curve, int n)
{
  if (n < 4) {
    throw PreconditionError("nodal roots config needs n >= 4");
  }
  GroupModelQuartic group = group_parametrization(curve);
  if (group.kind != GroupKind::NodalProduct) {
    throw PreconditionError("cuspidal curve: use the integer parameter set instead");
  }
  NodalRootsConfig out{GroupConfig::cyclic(n, 0), group, {}};
  for (int k = 0; k < n; ++k) {
    out.parameters.push_back(group.parameter(std::polar(1.0, 2.0 * std::numbers::pi * k / n)));
  }
  return out;
}

QuarticCurve cuspidal_reference_curve() { return QuarticCurve(0, 0, 0, 1); }

std::vector<long> integers_closest_to_zero(int n)
{
  std::vector<long> out;
  const long lo = -static_cast<long>((n - 1) / 2);
  for (long k = lo; k < lo + n; ++k) {
    out.push_back(k);
  }
  return out;
}

CuspIntegersConfig cuspidal_integers_config(int n)
{
  if (n < 4) {
    throw PreconditionError("cuspidal integer config needs n >= 4");
  }
  CuspIntegersConfig out{cuspidal_reference_curve(), integers_closest_to_zero(n), {}};
  for (long k : out.phi_values) {
    // 1/4 + 1/t = k.
    out.parameters.emplace_back(4, 4 * k - 1);
    out.parameters.back().canonicalize();
  }
  return out;
}

GeomConfig random_rational_config(int n, std::uint64_t seed, long coordinate_bound)
{
  if (n < 1) {
    throw PreconditionError("random config needs n >= 1");
  }
  if (coordinate_bound < 1) {
    throw PreconditionError("coordinate bound must be positive");
  }
  Rng rng(seed);
  GeneralPositionSampler sampler(rng, coordinate_bound);
  GeomConfig out;
  out.family = "random:" + std::to_string(n) + ":" + std::to_string(seed) + ":" +
               std::to_string(coordinate_bound);
  out.seed = seed;
  for (int i = 0; i < n; ++i) {
    IVec v;
    if (!sampler.draw(v, 10000)) {
      throw PreconditionError("coordinate bound " + std::to_string(coordinate_bound) +
                              " too small to place " + std::to_string(n) +
                              " points in general position");
    }
    out.exact.push_back(to_hpoint(v));
  }
  return out;
}

GeomConfig inject_outliers(const GeomConfig &base, std::size_t k, std::uint64_t seed,
                           OutlierMode mode, long coordinate_bound)
{
  Rng rng(seed);
  GeomConfig out = base;
  out.seed = seed;
  if (mode == OutlierMode::Remove) {
    if (k > base.size()) {
      throw PreconditionError("cannot remove more points than the configuration holds");
    }
    for (std::size_t step = 0; step < k; ++step) {
      const auto pos = static_cast<std::size_t>(draw_int(rng, 0, static_cast<long>(out.size()) - 1));
      OutlierEdit edit{OutlierEdit::Kind::Removed, pos, std::nullopt};
      if (out.is_exact) {
        edit.point = out.exact[pos];
        out.exact.erase(out.exact.begin() + static_cast<long>(pos));
      } else {
        out.approx.erase(out.approx.begin() + static_cast<long>(pos));
      }
      out.edits.push_back(std::move(edit));
    }
    return out;
  }
  if (!base.is_exact) {
    throw PreconditionError("appending outliers needs an exact configuration");
  }
  GeneralPositionSampler sampler(rng, coordinate_bound);
  for (const auto &p : base.exact) {
    sampler.add_existing(to_ivec(p));
  }
  for (std::size_t step = 0; step < k; ++step) {
    IVec v;
    if (!sampler.draw(v, 10000)) {
      throw PreconditionError("could not place an outlier in general position");
    }
    out.exact.push_back(to_hpoint(v));
    out.edits.push_back({OutlierEdit::Kind::Appended, out.exact.size() - 1, out.exact.back()});
  }
  return out;
}

GroupConfig inject_outliers(const GroupConfig &base, std::size_t k, std::uint64_t seed,
                            std::vector<OutlierEdit> *edits)
{
  if (k > base.members().size()) {
    throw PreconditionError("cannot remove more elements than the configuration holds");
  }
  Rng rng(seed);
  GroupConfig out = base;
  for (std::size_t step = 0; step < k; ++step) {
    const auto &members = out.members();
    const auto pos = static_cast<std::size_t>(draw_int(rng, 0, static_cast<long>(members.size()) - 1));
    const int element = members[pos];
    out.remove_member(element);
    if (edits) {
      edits->push_back({OutlierEdit::Kind::Removed, static_cast<std::size_t>(element), std::nullopt});
    }
  }
  return out;
}

bool float_coplanar(const Float3 &a, const Float3 &b, const Float3 &c, const Float3 &d,
                    double epsilon)
{
  // Subtract a from the others: det of the 3x3 difference matrix equals the 4x4 det.
  const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double w[3] = {d[0] - a[0], d[1] - a[1], d[2] - a[2]};
  const double det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                     u[2] * (v[0] * w[1] - v[1] * w[0]);
  return std::abs(det) < epsilon;
}

FamilyDescriptor parse_family(const std::string &text)
{
  FamilyDescriptor out;
  out.text = text;
  std::stringstream ss(text);
  std::string part;
  std::getline(ss, out.name, ':');
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      out.args.push_back(std::stol(part, &used));
      if (used != part.size()) {
        throw std::invalid_argument(part);
      }
    } catch (const std::exception &) {
      throw PreconditionError("family '" + text + "': malformed integer '" + part + "'");
    }
  }
  const auto expect = [&](std::size_t count) {
    if (out.args.size() != count) {
      throw PreconditionError("family '" + text + "' expects " + std::to_string(count) +
                              " integer argument(s)");
    }
  };
  if (out.name == "prism" || out.name == "antiprism" || out.name == "nodal-roots" ||
      out.name == "cusp-ints") {
    expect(1);
  } else if (out.name == "coset") {
    expect(2);
  } else if (out.name == "coset2" || out.name == "random") {
    expect(3);
  } else {
    throw PreconditionError("unknown family '" + out.name + "'");
  }
  return out;
}

}  // namespace qplanes
