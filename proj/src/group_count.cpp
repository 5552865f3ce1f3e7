#include "qplanes/group_count.hpp"

#include "qplanes/counting.hpp"
#include "qplanes/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace qplanes {

namespace {

// Number of 4-subsets of `items` whose combined state equals `target`, where
// states live in [0, states) and combine through `add`.
template<typename Add>
std::uint64_t four_subsets_with_state(const std::vector<int> &items, int states, int target,
                                      Add add)
{
  std::array<std::vector<std::uint64_t>, 5> dp;
  for (auto &row : dp) {
    row.assign(states, 0);
  }
  dp[0][0] = 1;
  for (const int x : items) {
    for (int k = 3; k >= 0; --k) {
      for (int s = 0; s < states; ++s) {
        if (dp[k][s] != 0) {
          dp[k + 1][add(s, x)] += dp[k][s];
        }
      }
    }
  }
  return dp[4][target];
}

}  // namespace

std::uint64_t group_four_sum_count(const GroupConfig &config)
{
  const int n = config.order();
  switch (config.kind()) {
  case ModelKind::Cyclic:
    return four_subsets_with_state(config.members(), n, config.offset(),
                                   [n](int s, int x) { return (s + x) % n; });
  case ModelKind::TwoComponent: {
    const int half = n / 2;
    // state = sum_j + half * sum_eps
    return four_subsets_with_state(config.members(), n, config.offset() + half * config.parity(),
                                   [half](int s, int x) {
                                     const int j = (s % half + x % half) % half;
                                     const int e = (s / half + x / half) % 2;
                                     return j + half * e;
                                   });
  }
  case ModelKind::CirclePair:
    break;
  }
  return group_four_sum_count_exhaustive(config);
}

std::uint64_t group_four_sum_count_exhaustive(const GroupConfig &config)
{
  const auto &m = config.members();
  const std::size_t n = m.size();
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          count += config.coplanar(m[a], m[b], m[c], m[d]) ? 1 : 0;
        }
      }
    }
  }
  return count;
}

std::uint64_t group_ordinary_count(const GroupConfig &config)
{
  const auto &m = config.members();
  const std::size_t n = m.size();
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        count += config.plane_members(m[a], m[b], m[c]).size() == 3 ? 1 : 0;
      }
    }
  }
  return count;
}

std::uint64_t formula_max_4pt(long n)
{
  if (n < 8) {
    throw PreconditionError("formula_max_4pt needs n >= 8");
  }
  const Rational x(n);
  Rational value = x * x * x / 24 - x * x / 4;
  switch (n % 8) {
  case 0:
    value += Rational(5, 6) * x;
    break;
  case 2:
  case 6:
    value += Rational(7, 12) * x - Rational(1, 2);
    break;
  case 4:
    value += Rational(5, 6) * x - 1;
    break;
  default:
    value += Rational(11, 24) * x - Rational(1, 4);
    break;
  }
  value.canonicalize();
  if (value.get_den() != 1 || value < 0) {
    throw VerificationError("formula_max_4pt(" + std::to_string(n) + ") = " + to_string(value) +
                            " is not a nonnegative integer");
  }
  return value.get_num().get_ui();
}

Max4ptResult max_4pt_search(int n)
{
  if (n < 8) {
    throw PreconditionError("max_4pt_search needs n >= 8");
  }
  Max4ptResult best{0, GroupConfig::cyclic(n, 0)};
  bool have = false;
  const auto consider = [&](GroupConfig config) {
    const std::uint64_t count = group_four_sum_count(config);
    if (!have || count > best.count) {
      best = {count, std::move(config)};
      have = true;
    }
  };
  for (int c0 = 0; c0 < n; ++c0) {
    consider(GroupConfig::cyclic(n, c0));
  }
  if (n % 2 == 0) {
    for (int c0 = 0; c0 < n / 2; ++c0) {
      for (int parity = 0; parity < 2; ++parity) {
        consider(GroupConfig::two_component(n, c0, parity));
      }
    }
  }
  return best;
}

std::uint64_t zero_sum_quadruples(std::span<const long> values)
{
  std::unordered_map<long, std::size_t> index;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!index.emplace(values[i], i).second) {
      throw PreconditionError("repeated value " + std::to_string(values[i]));
    }
  }
  std::uint64_t count = 0;
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto it = index.find(-(values[i] + values[j] + values[k]));
        count += it != index.end() && it->second > k ? 1 : 0;
      }
    }
  }
  return count;
}

std::uint64_t curve_coplanar_quadruples(const QuarticCurve &curve,
                                        std::span<const Rational> parameters)
{
  std::map<Rational, std::size_t> index;
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (!index.emplace(parameters[i], i).second) {
      throw PreconditionError("repeated parameter " + to_string(parameters[i]));
    }
  }
  std::uint64_t count = 0;
  const std::size_t n = parameters.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Param t4 = solve_t4(curve, parameters[i], parameters[j], parameters[k]);
        if (const auto *t = std::get_if<Rational>(&t4)) {
          const auto it = index.find(*t);
          count += it != index.end() && it->second > k ? 1 : 0;
        }
      }
    }
  }
  return count;
}

std::uint64_t curve_coplanar_quadruples(const QuarticCurve &curve,
                                        std::span<const Complex> parameters, double tolerance)
{
  const Complex p = curve.p().get_d();
  const Complex q = curve.q().get_d();
  const Complex r = curve.r().get_d();
  const Complex s = curve.s().get_d();
  const std::size_t n = parameters.size();
  std::vector<std::size_t> by_real(n);
  for (std::size_t i = 0; i < n; ++i) {
    by_real[i] = i;
  }
  std::sort(by_real.begin(), by_real.end(), [&](std::size_t a, std::size_t b) {
    return parameters[a].real() < parameters[b].real();
  });
  std::vector<double> reals;
  for (const auto i : by_real) {
    reals.push_back(parameters[i].real());
  }

  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Complex a = parameters[i], b = parameters[j], c = parameters[k];
        const Complex e3 = a * b * c;
        const Complex e2 = a * b + a * c + b * c;
        const Complex e1 = a + b + c;
        const Complex num = s * e3 + r * e2 + q * e1 + p;
        const Complex den = e3 + s * e2 + r * e1 + q;
        if (std::abs(den) <= tolerance * std::max(1.0, std::abs(num))) {
          continue;
        }
        const Complex t4 = -num / den;
        const double window = tolerance * std::max(1.0, std::abs(t4));
        auto it = std::lower_bound(reals.begin(), reals.end(), t4.real() - window);
        for (; it != reals.end() && *it <= t4.real() + window; ++it) {
          const std::size_t l = by_real[it - reals.begin()];
          if (l > k && std::abs(parameters[l] - t4) <= window) {
            ++count;
            break;
          }
        }
      }
    }
  }
  return count;
}

}  // namespace qplanes
