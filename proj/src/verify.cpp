#include "qplanes/verify.hpp"

#include "qplanes/configs.hpp"
#include "qplanes/counting.hpp"
#include "qplanes/errors.hpp"
#include "qplanes/group_model.hpp"
#include "qplanes/identities.hpp"
#include "qplanes/samples.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace qplanes {

namespace {

struct Tally {
  SuiteResult result;

  void record(bool ok, const std::string &what)
  {
    ++result.total;
    if (ok) {
      ++result.passed;
    } else if (result.detail.empty()) {
      result.detail = what;
    }
  }
};

Tally make_tally(const std::string &name, std::size_t required)
{
  Tally t;
  t.result.name = name;
  t.result.required = required;
  return t;
}

bool distinct_points(const std::vector<HPoint> &pts)
{
  std::set<HPoint> seen(pts.begin(), pts.end());
  return seen.size() == pts.size();
}

SuiteResult coplanar_suite(std::uint64_t seed)
{
  Tally tally = make_tally("coplanar", 1000);
  Rng rng(seed);
  while (tally.result.total < 1000) {
    const QuarticCurve curve = random_curve(rng, 9);
    const Rational t1 = random_rational(rng, 9, 5);
    const Rational t2 = random_rational(rng, 9, 5);
    const Rational t3 = random_rational(rng, 9, 5);
    Rational t4 = random_rational(rng, 9, 5);
    if (tally.result.total % 2 == 0) {
      try {
        const Param solved = solve_t4(curve, t1, t2, t3);
        if (const auto *t = std::get_if<Rational>(&solved)) {
          t4 = *t;
        }
      } catch (const PreconditionError &) {
      }
    }
    const std::vector<HPoint> pts{point_at(curve, t1), point_at(curve, t2), point_at(curve, t3),
                                  point_at(curve, t4)};
    if (!distinct_points(pts)) {
      continue;
    }
    const bool by_form = coplanarity_form(curve, t1, t2, t3, t4) == 0;
    const bool by_det = are_coplanar(pts[0], pts[1], pts[2], pts[3]);
    tally.record(by_form == by_det, curve.str() + " at t = " + to_string(t1) + ", " +
                                        to_string(t2) + ", " + to_string(t3) + ", " +
                                        to_string(t4));
  }
  return tally.result;
}

bool pencil_vanishes(const QuarticCurve &curve, const SpeciesReport &report)
{
  for (const auto &a : report.pencil_basis) {
    for (int t = 0; t < 9; ++t) {
      const Vec4 x = point_at(curve, Rational(t)).coords();
      Rational value = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          value += x[i] * a(i, j) * x[j];
        }
      }
      if (value != 0) {
        return false;
      }
    }
  }
  return true;
}

SuiteResult species_suite(std::uint64_t seed)
{
  Tally tally = make_tally("species", 250);
  Rng rng(seed);
  for (int i = 0; i < 250; ++i) {
    const QuarticCurve curve = i < 200 ? random_curve(rng, 9) : random_first_species_curve(rng, 9);
    const SpeciesReport report = classify_species(curve);
    const bool equivalence = (report.nullity >= 2) == (report.catalecticant == 0) &&
                             (report.nullity >= 2) == (report.species == Species::First);
    const bool constructed = i < 200 || report.species == Species::First;
    tally.record(equivalence && constructed && pencil_vanishes(curve, report), curve.str());
  }
  return tally.result;
}

SuiteResult minors_suite(std::uint64_t seed)
{
  Tally tally = make_tally("minors", 100);
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    const QuarticCurve curve = random_curve(rng, 20);
    tally.record(six_minors(curve) == six_minor_factored(curve), curve.str());
  }
  return tally.result;
}

SuiteResult sl2_suite(std::uint64_t seed)
{
  Tally tally = make_tally("sl2", 100);
  Rng rng(seed);
  while (tally.result.total < 100) {
    BinaryQuartic g;
    for (auto &c : g.c) {
      c = random_rational(rng, 9, 4);
    }
    const Rational a = random_rational(rng, 5, 3), b = random_rational(rng, 5, 3),
                   c = random_rational(rng, 5, 3), d = random_rational(rng, 5, 3);
    const Rational det = a * d - b * c;
    if (det == 0) {
      continue;
    }
    const BinaryQuartic moved = g.substitute(a, b, c, d);
    const Rational det2 = det * det;
    const bool ok = catalecticant(moved) == det2 * det2 * det2 * catalecticant(g) &&
                    (catalecticant(moved) == 0) == (catalecticant(g) == 0);
    tally.record(ok, "matrix (" + to_string(a) + ", " + to_string(b) + "; " + to_string(c) +
                         ", " + to_string(d) + ")");
  }
  return tally.result;
}

std::vector<SuiteResult> identity_suites(std::uint64_t seed)
{
  Rng rng(seed);
  Tally identity = make_tally("identity", 100);
  for (int curve_index = 0; curve_index < 20; ++curve_index) {
    const QuarticCurve curve = random_curve(rng, 9);
    int done = 0;
    while (done < 5) {
      const Rational t1 = random_rational(rng, 9, 4);
      const Rational t2 = random_rational(rng, 9, 4);
      const Rational t3 = random_rational(rng, 9, 4);
      if (t1 == t2 || t1 == t3 || t2 == t3) {
        continue;
      }
      try {
        identity.record(rsz_identity_check(curve, t1, t2, t3), curve.str());
        ++done;
      } catch (const GuardError &) {
      }
    }
  }

  const auto independence = [&rng](const QuarticCurve &curve) {
    for (;;) {
      std::vector<Rational> t1s;
      for (int i = 0; i < 4; ++i) {
        t1s.push_back(random_rational(rng, 9, 4));
      }
      const Rational t2 = random_rational(rng, 9, 4);
      const Rational t3 = random_rational(rng, 9, 4);
      try {
        return quotient_independence_check(curve, t1s, t2, t3);
      } catch (const GuardError &) {
      }
    }
  };
  Tally first = make_tally("identity-first-species", 20);
  for (int i = 0; i < 20; ++i) {
    const QuarticCurve curve = random_first_species_curve(rng, 9);
    first.record(independence(curve), curve.str());
  }
  Tally second = make_tally("identity-second-species", 95);
  while (second.result.total < 100) {
    const QuarticCurve curve = random_curve(rng, 9);
    if (catalecticant(fundamental_quartic(curve)) == 0) {
      continue;
    }
    second.record(!independence(curve), curve.str());
  }
  return {identity.result, first.result, second.result};
}

SuiteResult group_suite(std::uint64_t seed)
{
  Tally tally = make_tally("group", 40);
  Rng rng(seed);
  for (int i = 0; i < 40; ++i) {
    // Alternate power-sum and linear-times-cube fundamental quartics.
    QuarticCurve curve = random_first_species_curve(rng, 6);
    if (i % 2 == 1) {
      // (l + a m)(l + b m)^3 expanded in the c0..c4 basis.
      const Rational a = random_rational(rng, 6, 2);
      Rational b = random_rational(rng, 6, 2);
      if (a == b) {
        b += 1;
      }
      const Rational s = (a + 3 * b) / 4;
      const Rational r = (3 * a * b + 3 * b * b) / 6;
      const Rational q = (3 * a * b * b + b * b * b) / 4;
      const Rational p = a * b * b * b;
      curve = QuarticCurve(p, q, r, s);
    }
    try {
      const GroupModelQuartic model = group_parametrization(curve);
      const bool kind_ok =
          i % 2 == 0 || model.kind == GroupKind::CuspidalSum;
      // Converse direction: a random non-coplanar quadruple breaks the rule.
      bool converse = true;
      for (int k = 0; k < 20; ++k) {
        const Rational t1 = random_rational(rng, 9, 4), t2 = random_rational(rng, 9, 4),
                       t3 = random_rational(rng, 9, 4), t4 = random_rational(rng, 9, 4);
        if (coplanarity_form(curve, t1, t2, t3, t4) == 0) {
          continue;
        }
        const double residual =
            model.rule_residual({t1.get_d(), t2.get_d(), t3.get_d(), t4.get_d()});
        if (residual < 1e-6) {
          converse = false;
        }
      }
      tally.record(kind_ok && converse, curve.str());
    } catch (const std::exception &e) {
      tally.record(false, curve.str() + ": " + e.what());
    }
  }
  return tally.result;
}

SuiteResult projection_suite(std::uint64_t seed)
{
  Tally tally = make_tally("projection", 150);
  for (int set = 0; set < 10; ++set) {
    const GeomConfig config = random_rational_config(15, seed * 1000 + set, 50);
    const PlaneHistogram hist = plane_histogram(config.exact);
    const auto through = ordinary_planes_per_point(hist);
    for (std::size_t p = 0; p < config.exact.size(); ++p) {
      tally.record(through[p] == projected_ordinary_lines(config.exact, p),
                   config.family + " point " + std::to_string(p));
    }
  }
  return tally.result;
}

SuiteResult circles_suite(std::uint64_t seed)
{
  Tally tally = make_tally("circles", 20);
  Rng rng(seed);
  for (int set = 0; set < 20; ++set) {
    const int n = 10 + set % 16;
    std::set<Point2> pts;
    // Small coordinates make concyclic and collinear coincidences common.
    while (pts.size() < static_cast<std::size_t>(n)) {
      pts.insert({Rational(draw_int(rng, -4, 4)), Rational(draw_int(rng, -4, 4))});
    }
    const std::vector<Point2> list(pts.begin(), pts.end());
    tally.record(ordinary_circles(list) == planar_circle_counts(list),
                 "set " + std::to_string(set));
  }
  return tally.result;
}

using Runner = std::function<std::vector<SuiteResult>(std::uint64_t)>;

const std::map<std::string, Runner> &runners()
{
  static const std::map<std::string, Runner> table{
      {"coplanar", [](std::uint64_t s) { return std::vector{coplanar_suite(s)}; }},
      {"species", [](std::uint64_t s) { return std::vector{species_suite(s)}; }},
      {"minors", [](std::uint64_t s) { return std::vector{minors_suite(s)}; }},
      {"sl2", [](std::uint64_t s) { return std::vector{sl2_suite(s)}; }},
      {"identity", identity_suites},
      {"group", [](std::uint64_t s) { return std::vector{group_suite(s)}; }},
      {"projection", [](std::uint64_t s) { return std::vector{projection_suite(s)}; }},
      {"circles", [](std::uint64_t s) { return std::vector{circles_suite(s)}; }},
  };
  return table;
}

}  // namespace

const std::vector<std::string> &suite_names()
{
  static const std::vector<std::string> names{"coplanar", "species",  "minors",     "sl2",
                                              "identity", "group",    "projection", "circles"};
  return names;
}

std::vector<SuiteResult> run_suite(const std::string &name, std::uint64_t seed)
{
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const auto &n : suite_names()) {
      auto part = run_suite(n, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto it = runners().find(name);
  if (it == runners().end()) {
    throw PreconditionError("unknown suite '" + name + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  auto results = it->second(seed);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto &r : results) {
    r.seconds = seconds;
  }
  return results;
}

}  // namespace qplanes
