#include "qplanes/histogram.hpp"

#include "qplanes/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace qplanes {

namespace {

using u128 = unsigned __int128;

template<typename U>
U binary_gcd(U a, U b)
{
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  do {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

template<typename T>
using UnsignedOf = std::conditional_t<std::is_same_v<T, __int128>, u128, std::uint64_t>;

template<typename T>
UnsignedOf<T> magnitude(T v)
{
  using U = UnsignedOf<T>;
  return v < 0 ? U(0) - static_cast<U>(v) : static_cast<U>(v);
}

constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 40;

// Plane covector through three integer points, reduced to primitive form.
// Returns false when the triple is collinear.
template<typename T>
bool reduced_plane(const std::array<T, 6> &line, const IntCovector &x, IntCovector &out)
{
  const T x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3];
  // Cofactor expansion along x with the 2x2 minors of the first two rows
  // (column pairs 01 02 03 12 13 23).
  std::array<T, 4> c{
      -(line[3] * x3 - line[4] * x2 + line[5] * x1),
      line[1] * x3 - line[2] * x2 + line[5] * x0,
      -(line[0] * x3 - line[2] * x1 + line[4] * x0),
      line[0] * x2 - line[1] * x1 + line[3] * x0,
  };
  using U = UnsignedOf<T>;
  U g = 0;
  for (const T v : c) {
    g = binary_gcd<U>(g, magnitude(v));
  }
  if (g == 0) {
    return false;
  }
  int lead = 0;
  while (c[lead] == 0) {
    ++lead;
  }
  const bool flip = c[lead] < 0;
  for (int i = 0; i < 4; ++i) {
    T v = c[i] / static_cast<T>(g);
    if (flip) {
      v = -v;
    }
    if (v > static_cast<T>(INT64_MAX) || v < -static_cast<T>(INT64_MAX)) {
      throw PreconditionError("plane covector exceeds 64 bits; coordinates too large");
    }
    out[i] = static_cast<std::int64_t>(v);
  }
  return true;
}

template<typename T>
std::array<T, 6> pair_minors(const IntCovector &u, const IntCovector &v)
{
  const auto m = [&](int i, int j) {
    return static_cast<T>(u[i]) * static_cast<T>(v[j]) - static_cast<T>(u[j]) * static_cast<T>(v[i]);
  };
  return {m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)};
}

template<typename T>
bool on_plane(const IntCovector &key, const IntCovector &x)
{
  return static_cast<T>(key[0]) * x[0] + static_cast<T>(key[1]) * x[1] +
             static_cast<T>(key[2]) * x[2] + static_cast<T>(key[3]) * x[3] ==
         0;
}

struct WorkerResult {
  std::vector<PlaneEntry> entries;
  std::optional<CollinearTriple> collinear;
  std::exception_ptr error;
};

template<typename T>
void run_worker(const std::vector<IntCovector> &pts, unsigned worker, unsigned jobs,
                WorkerResult &result)
{
  const std::size_t n = pts.size();
  std::vector<IntCovector> keys;
  IntCovector key;
  for (std::size_t i = worker; i + 2 < n; i += jobs) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      const auto line = pair_minors<T>(pts[i], pts[j]);
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!reduced_plane<T>(line, pts[k], key)) {
          result.collinear = CollinearTriple{i, j, k};
          return;
        }
        keys.push_back(key);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t a = 0; a < keys.size();) {
    std::size_t b = a + 1;
    while (b < keys.size() && keys[b] == keys[a]) {
      ++b;
    }
    result.entries.push_back({keys[a], 0, b - a});
    a = b;
  }
  keys = {};
  for (auto &entry : result.entries) {
    std::uint32_t count = 0;
    for (const auto &x : pts) {
      count += on_plane<T>(entry.key, x) ? 1 : 0;
    }
    entry.points = count;
  }
}

std::uint64_t choose3(std::uint64_t k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; }
std::uint64_t choose4(std::uint64_t k)
{
  return k < 4 ? 0 : k * (k - 1) * (k - 2) / 6 * (k - 3) / 4;
}

}  // namespace

IntCovector primitive_integer_vector(const HPoint &p)
{
  BigInt lcm = 1;
  for (const auto &c : p.coords()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::array<BigInt, 4> scaled;
  BigInt g = 0;
  for (int i = 0; i < 4; ++i) {
    scaled[i] = BigInt(p[i] * lcm);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
  }
  IntCovector out;
  for (int i = 0; i < 4; ++i) {
    scaled[i] /= g;
    if (abs(scaled[i]) > kCoordinateLimit) {
      throw PreconditionError("point " + p.str() +
                              " exceeds the exact histogram's 2^40 integer coordinate range");
    }
    out[i] = scaled[i].get_si();
  }
  return out;
}

PlaneHistogram plane_histogram(std::span<const HPoint> points, unsigned jobs)
{
  jobs = std::max(1u, jobs);
  PlaneHistogram hist;
  std::int64_t bound = 0;
  for (const auto &p : points) {
    hist.integer_points_.push_back(primitive_integer_vector(p));
    for (auto v : hist.integer_points_.back()) {
      bound = std::max(bound, v < 0 ? -v : v);
    }
  }
  // 64-bit arithmetic suffices while 24 B^4 < 2^62 (dot products of reduced
  // covectors, bounded by 6 B^3, with points).
  const bool narrow = bound <= 20000;

  std::vector<WorkerResult> results(jobs);
  const auto work = [&](unsigned w) {
    try {
      if (narrow) {
        run_worker<std::int64_t>(hist.integer_points_, w, jobs, results[w]);
      } else {
        run_worker<__int128>(hist.integer_points_, w, jobs, results[w]);
      }
    } catch (...) {
      results[w].error = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) {
      threads.emplace_back(work, w);
    }
    for (auto &t : threads) {
      t.join();
    }
  }

  std::optional<CollinearTriple> first_collinear;
  for (auto &r : results) {
    if (r.error) {
      std::rethrow_exception(r.error);
    }
    if (r.collinear && (!first_collinear || std::tie(r.collinear->i, r.collinear->j, r.collinear->k) <
                                                std::tie(first_collinear->i, first_collinear->j,
                                                         first_collinear->k))) {
      first_collinear = r.collinear;
    }
  }
  if (first_collinear) {
    const auto &[i, j, k] = *first_collinear;
    throw CollinearError(*first_collinear, "collinear triple: points " + std::to_string(i) +
                                               ", " + std::to_string(j) + ", " +
                                               std::to_string(k) + " (" + points[i].str() + ", " +
                                               points[j].str() + ", " + points[k].str() + ")");
  }

  if (jobs == 1) {
    hist.entries_ = std::move(results[0].entries);
  } else {
    std::vector<PlaneEntry> all;
    for (auto &r : results) {
      all.insert(all.end(), r.entries.begin(), r.entries.end());
      r.entries = {};
    }
    std::sort(all.begin(), all.end(),
              [](const PlaneEntry &a, const PlaneEntry &b) { return a.key < b.key; });
    for (std::size_t a = 0; a < all.size();) {
      PlaneEntry merged = all[a];
      std::size_t b = a + 1;
      for (; b < all.size() && all[b].key == merged.key; ++b) {
        merged.triples += all[b].triples;
        merged.points = std::max(merged.points, all[b].points);
      }
      hist.entries_.push_back(merged);
      a = b;
    }
  }

  for (const auto &e : hist.entries_) {
    if (choose3(e.points) != e.triples) {
      throw VerificationError("plane with " + std::to_string(e.points) + " points received " +
                              std::to_string(e.triples) + " triples");
    }
  }
  return hist;
}

PlaneKey PlaneHistogram::plane_key(const PlaneEntry &entry) const
{
  return canonical_plane(
      Vec4{Rational(entry.key[0]), Rational(entry.key[1]), Rational(entry.key[2]), Rational(entry.key[3])});
}

bool PlaneHistogram::contains(const PlaneEntry &entry, std::size_t point_index) const
{
  return on_plane<__int128>(entry.key, integer_points_.at(point_index));
}

std::uint64_t PlaneHistogram::count_with_size(std::uint32_t k) const
{
  return static_cast<std::uint64_t>(
      std::count_if(entries_.begin(), entries_.end(), [k](const PlaneEntry &e) { return e.points == k; }));
}

std::uint64_t PlaneHistogram::coplanar_quadruples() const
{
  std::uint64_t total = 0;
  for (const auto &e : entries_) {
    total += choose4(e.points);
  }
  return total;
}

std::uint32_t PlaneHistogram::max_plane_size() const
{
  std::uint32_t best = 0;
  for (const auto &e : entries_) {
    best = std::max(best, e.points);
  }
  return best;
}

std::uint64_t PlaneHistogram::triple_total() const
{
  std::uint64_t total = 0;
  for (const auto &e : entries_) {
    total += choose3(e.points);
  }
  return total;
}

std::string PlaneHistogram::digest() const
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto feed = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto &e : entries_) {
    for (auto v : e.key) {
      feed(static_cast<std::uint64_t>(v));
    }
    feed(e.points);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string PlaneHistogram::to_csv() const
{
  std::ostringstream os;
  os << "plane_key,count\n";
  for (const auto &e : entries_) {
    os << plane_key(e).str() << ',' << e.points << '\n';
  }
  return os.str();
}

}  // namespace qplanes
