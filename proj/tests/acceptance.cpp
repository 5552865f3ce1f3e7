// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include "oracles.hpp"

#include "qplanes/commands.hpp"
#include "qplanes/configs.hpp"
#include "qplanes/counting.hpp"
#include "qplanes/group_count.hpp"
#include "qplanes/histogram.hpp"
#include "qplanes/identities.hpp"
#include "qplanes/quartic.hpp"
#include "qplanes/samples.hpp"
#include "qplanes/sylvester.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

using namespace qplanes;

namespace {

// Pinned limits.
constexpr double kCoplanarSeconds = 5.0;
constexpr double kSpeciesSeconds = 10.0;
constexpr double kMax4ptSeconds = 60.0;
constexpr double kBracketLow = 1.0 / 40.0;
constexpr double kBracketHigh = 1.0 / 20.0;
constexpr double kSecondSpeciesFactor = 10.0; // count < factor * n^2
constexpr std::size_t kIndependenceFalseRequired = 95;
constexpr double kSylvesterResidual = 1e-9;
constexpr double kHistogramSeconds = 120.0;
constexpr double kSpeedupRequired = 2.5;
constexpr unsigned kParallelJobs = 4;
constexpr double kComplexMatchTolerance = 1e-8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char *format, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string &title, const std::function<Outcome()> &body)
{
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  failures += !o.pass;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << ": " << o.detail
            << std::endl;
}

oracle::P4 raw(const HPoint &p) { return p.coords(); }

// Number of planes each point lies on that hold exactly three points.
std::vector<long> ordinary_through(const std::vector<HPoint> &pts)
{
  std::vector<oracle::P4> r;
  for (const auto &p : pts) {
    r.push_back(raw(p));
  }
  std::vector<long> out(pts.size(), 0);
  for (const auto &plane : oracle::plane_member_sets(r)) {
    if (plane.size() == 3) {
      for (int i : plane) {
        ++out[i];
      }
    }
  }
  return out;
}

// Quadrics through the curve: x(t)^T A x(t) has degree <= 8 in t, so it
// vanishes identically iff it vanishes at t = 0..8. Unknowns are the ten
// entries of a symmetric A.
std::size_t quadric_nullity(const QuarticCurve &c)
{
  oracle::Matrix m;
  for (int t = 0; t <= 8; ++t) {
    const auto x = oracle::curve_point(c.p(), c.q(), c.r(), c.s(), Rational(t));
    oracle::Row row;
    for (int i = 0; i < 4; ++i) {
      for (int j = i; j < 4; ++j) {
        row.push_back((i == j ? 1 : 2) * x[i] * x[j]);
      }
    }
    m.push_back(row);
  }
  return 10 - oracle::rank(m);
}

std::array<Complex, 5> fourth_power(Complex a, Complex b)
{
  std::array<Complex, 5> out;
  for (int i = 0; i < 5; ++i) {
    out[i] = std::pow(a, 4 - i) * std::pow(b, i);
  }
  return out;
}

// (a1 l + b1 m)(a2 l + b2 m)^3 in the basis c0 l^4 + 4 c1 l^3 m + 6 c2 l^2 m^2 + ...
std::array<Complex, 5> linear_times_cube(Complex a1, Complex b1, Complex a2, Complex b2)
{
  const std::array<double, 5> binom{1, 4, 6, 4, 1};
  const std::array<double, 4> b3{1, 3, 3, 1};
  std::array<Complex, 5> mono{};
  for (int j = 0; j < 4; ++j) {
    const Complex cube = b3[j] * std::pow(a2, 3 - j) * std::pow(b2, j);
    mono[j] += a1 * cube;
    mono[j + 1] += b1 * cube;
  }
  for (int i = 0; i < 5; ++i) {
    mono[i] /= binom[i];
  }
  return mono;
}

// Relative coefficient error of the returned forms, recomputed here.
double reconstruction_error(const CanonicalForm &f, const std::array<Complex, 5> &input)
{
  std::array<Complex, 5> got{};
  if (f.kind == CanonicalKind::LinearTimesCube) {
    got = linear_times_cube(f.forms[0].a, f.forms[0].b, f.forms[1].a, f.forms[1].b);
  } else {
    for (const auto &l : f.forms) {
      const auto x = fourth_power(l.a, l.b);
      for (int i = 0; i < 5; ++i) {
        got[i] += x[i];
      }
    }
  }
  double scale = 0, err = 0;
  for (int i = 0; i < 5; ++i) {
    scale = std::max(scale, std::abs(input[i]));
    err = std::max(err, std::abs(got[i] - input[i]));
  }
  return err / scale;
}

Outcome coplanarity()
{
  const auto start = Clock::now();
  Rng rng(1001);
  std::size_t agree = 0, trials = 0, coplanar = 0;
  while (trials < 1000) {
    const QuarticCurve c = random_curve(rng, 20);
    std::array<Rational, 4> t{random_rational(rng, 20, 5), random_rational(rng, 20, 5),
                              random_rational(rng, 20, 5), random_rational(rng, 20, 5)};
    if (trials % 2 == 0 && !oracle::fourth_parameter(c.p(), c.q(), c.r(), c.s(), t[0], t[1], t[2], t[3])) {
      continue;
    }
    if (std::set<Rational>(t.begin(), t.end()).size() < 4) {
      continue;
    }
    ++trials;
    oracle::Matrix rows;
    for (const auto &x : t) {
      const auto pt = oracle::curve_point(c.p(), c.q(), c.r(), c.s(), x);
      rows.emplace_back(pt.begin(), pt.end());
    }
    const bool det_zero = oracle::det(rows) == 0;
    const Rational f = coplanarity_form(c, t[0], t[1], t[2], t[3]);
    coplanar += det_zero;
    agree += (f == 0) == det_zero && f == oracle::coplanarity_form(c.p(), c.q(), c.r(), c.s(), t);
  }
  const double secs = seconds_since(start);
  return {agree == trials && coplanar > 0 && coplanar < trials && secs < kCoplanarSeconds,
          std::to_string(agree) + "/" + std::to_string(trials) + " agree (" + std::to_string(coplanar) +
              " coplanar), " + fmt("%.2f", secs) + " s (limit " + fmt("%.0f", kCoplanarSeconds) + " s)"};
}

Outcome species()
{
  const auto start = Clock::now();
  Rng rng(1002);
  std::size_t ok = 0, total = 0, first = 0;
  for (int i = 0; i < 250; ++i) {
    const QuarticCurve c = i < 200 ? random_curve(rng, 9) : random_first_species_curve(rng, 9);
    const SpeciesReport rep = classify_species(c);
    const bool cat_zero = oracle::catalecticant_formula(c.p(), c.q(), c.r(), c.s()) == 0;
    bool good = (rep.nullity >= 2) == cat_zero && rep.nullity == quadric_nullity(c) &&
                rep.pencil_basis.size() == rep.nullity && rep.catalecticant ==
                oracle::catalecticant_formula(c.p(), c.q(), c.r(), c.s());
    for (const auto &a : rep.pencil_basis) {
      for (int t = 0; t <= 8; ++t) {
        const auto x = oracle::curve_point(c.p(), c.q(), c.r(), c.s(), Rational(t));
        Rational v = 0;
        for (int r = 0; r < 4; ++r) {
          for (int k = 0; k < 4; ++k) {
            v += x[r] * a(r, k) * x[k];
          }
        }
        good = good && v == 0;
      }
    }
    first += cat_zero;
    ok += good;
    ++total;
  }
  const double secs = seconds_since(start);
  return {ok == total && first >= 50 && secs < kSpeciesSeconds,
          std::to_string(ok) + "/" + std::to_string(total) + " curves (" + std::to_string(first) +
              " with cat = 0), " + fmt("%.2f", secs) + " s (limit " + fmt("%.0f", kSpeciesSeconds) + " s)"};
}

Outcome minors()
{
  Rng rng(1003);
  const std::array<int, 6> constants{-4, 2, -4, 2, 2, -2};
  std::size_t ok = 0;
  for (int i = 0; i < 100; ++i) {
    const QuarticCurve c = random_curve(rng, 12);
    const Rational &p = c.p(), &q = c.q(), &r = c.r(), &s = c.s();
    const Rational cat = oracle::catalecticant_formula(p, q, r, s);
    const std::array<Rational, 6> factors{q * q - p * r, q * r - p * s, q * s - p,
                                          r * r - 2 * q * s + p, r * s - q, s * s - r};
    const RMatrix sys = quadric_system(c);
    const auto lib = six_minors(c);
    bool good = true;
    for (int k = 0; k < 6; ++k) {
      oracle::Matrix minor;
      for (std::size_t row = 0; row < 5; ++row) {
        oracle::Row rr;
        for (std::size_t col = 0; col < 6; ++col) {
          if (col != static_cast<std::size_t>(5 - k)) {
            rr.push_back(sys(row, col));
          }
        }
        minor.push_back(rr);
      }
      const Rational expected = constants[k] * cat * factors[k];
      good = good && oracle::det(minor) == expected && lib[k] == expected;
    }
    ok += good;
  }
  return {ok == 100, std::to_string(ok) + "/100 curves match all six factored minors"};
}

Outcome max4pt()
{
  const auto start = Clock::now();
  const bool values = formula_max_4pt(8) == 12 && formula_max_4pt(9) == 14 && formula_max_4pt(10) == 22 &&
                      formula_max_4pt(12) == 45;
  std::ostringstream table;
  bool target = true;
  std::size_t agree = 0;
  for (int n = 8; n <= 40; ++n) {
    const Max4ptResult r = max_4pt_search(n);
    const std::uint64_t f = formula_max_4pt(n);
    const bool same = r.count == f && group_four_sum_count_exhaustive(r.witness) == r.count;
    agree += same;
    if (n >= 24) {
      target = target && same;
    }
    table << "        n=" << n << " formula=" << f << " search=" << r.count << " witness=" << r.witness.descriptor()
          << (same ? "" : "  DISAGREE") << "\n";
  }
  const double secs = seconds_since(start);
  std::cout << table.str();
  return {values && target && secs < kMax4ptSeconds,
          std::string("values {12,14,22,45} ") + (values ? "ok" : "wrong") + ", search = formula for " +
              std::to_string(agree) + "/33 n in 8..40, " + fmt("%.2f", secs) + " s (limit " +
              fmt("%.0f", kMax4ptSeconds) + " s)"};
}

Outcome dichotomy()
{
  bool pass = true;
  std::ostringstream d;
  const QuarticCurve second(2, 3, 5, 7);
  for (int n : {40, 80, 160}) {
    const NodalRootsConfig nodal = nodal_roots_config(nodal_reference_curve(), n);
    const std::uint64_t nodal_model = group_four_sum_count(nodal.model);
    const std::uint64_t nodal_geom =
        curve_coplanar_quadruples(nodal_reference_curve(), nodal.parameters, kComplexMatchTolerance);
    const CuspIntegersConfig cusp = cuspidal_integers_config(n);
    const std::uint64_t cusp_geom = curve_coplanar_quadruples(cusp.curve, cusp.parameters);
    const std::uint64_t cusp_sums = static_cast<std::uint64_t>(oracle::zero_sums(cusp.phi_values));
    const std::uint64_t second_nodal =
        curve_coplanar_quadruples(second, nodal.parameters, kComplexMatchTolerance);
    const std::uint64_t second_cusp = curve_coplanar_quadruples(second, cusp.parameters);

    const double n3 = static_cast<double>(n) * n * n;
    const double rn = nodal_geom / n3, rc = cusp_geom / n3;
    const double cap = kSecondSpeciesFactor * n * n;
    const bool ok_n = nodal_geom == nodal_model && rn >= kBracketLow && rn <= kBracketHigh;
    const bool ok_c = cusp_geom == cusp_sums && rc >= kBracketLow && rc <= kBracketHigh;
    const bool ok_s = second_nodal < cap && second_cusp < cap;
    pass = pass && ok_n && ok_c && ok_s;
    d << "\n        n=" << n << " nodal " << nodal_geom << " (" << fmt("%.4f", rn) << (ok_n ? "" : " OUT") << ")"
      << " cusp " << cusp_geom << " (" << fmt("%.4f", rc) << (ok_c ? "" : " OUT") << ")"
      << " second species " << second_nodal << "/" << second_cusp << " (cap " << fmt("%.0f", cap) << ")";
  }
  return {pass, "count/n^3 bracket [1/40, 1/20]" + d.str()};
}

Outcome identity()
{
  Rng rng(1006);
  std::size_t exact = 0, samples = 0;
  for (int curve = 0; curve < 20; ++curve) {
    const QuarticCurve c = random_curve(rng, 9);
    int taken = 0;
    while (taken < 5) {
      const Rational t1 = random_rational(rng, 12, 4), t2 = random_rational(rng, 12, 4),
                     t3 = random_rational(rng, 12, 4);
      if (t1 == t2 || t1 == t3 || t2 == t3) {
        continue;
      }
      try {
        const IdentitySides sides = rsz_identity_sides(c, t1, t2, t3);
        const Rational oracle_d = oracle::quotient_derivative(c.p(), c.q(), c.r(), c.s(), t1, t2, t3);
        exact += rsz_identity_check(c, t1, t2, t3) && sides.derivative == oracle_d &&
                 sides.derivative == sides.closed_form;
      } catch (const GuardError &) {
        continue;
      }
      ++taken;
      ++samples;
    }
  }
  // Four t1 samples plus t2, t3, all distinct; redrawn when a guard trips.
  const auto independent = [&](const QuarticCurve &c) -> std::optional<bool> {
    for (int tries = 0; tries < 20; ++tries) {
      std::set<Rational> drawn;
      while (drawn.size() < 6) {
        drawn.insert(random_rational(rng, 12, 4));
      }
      std::vector<Rational> t(drawn.begin(), drawn.end());
      std::shuffle(t.begin(), t.end(), rng);
      try {
        return quotient_independence_check(c, std::span(t).first(4), t[4], t[5]);
      } catch (const GuardError &) {
      }
    }
    return std::nullopt;
  };
  std::size_t flat_true = 0, flat_total = 0, generic_false = 0;
  for (int i = 0; i < 20; ++i) {
    if (const auto r = independent(random_first_species_curve(rng, 6))) {
      ++flat_total;
      flat_true += *r;
    }
  }
  for (int i = 0; i < 100; ++i) {
    QuarticCurve c = random_curve(rng, 9);
    while (catalecticant(fundamental_quartic(c)) == 0) {
      c = random_curve(rng, 9);
    }
    const auto r = independent(c);
    generic_false += r.has_value() && !*r;
  }
  const bool pass = exact == 100 && samples == 100 && flat_true == flat_total && flat_total == 20 &&
                    generic_false >= kIndependenceFalseRequired;
  return {pass, "identity exact at " + std::to_string(exact) + "/100 samples on 20 curves; independence true on " +
                    std::to_string(flat_true) + "/" + std::to_string(flat_total) + " cat = 0 curves, false on " +
                    std::to_string(generic_false) + "/100 cat != 0 curves (need " +
                    std::to_string(kIndependenceFalseRequired) + ")"};
}

Outcome sylvester()
{
  Rng rng(1007);
  const auto draw = [&rng](bool real) {
    return Complex(static_cast<double>(draw_int(rng, -6, 6)), real ? 0.0 : static_cast<double>(draw_int(rng, -6, 6)));
  };
  std::size_t ok = 0, total = 0;
  double worst = 0;
  while (total < 100) {
    const bool real = total % 4 < 2;
    const bool sum = total % 2 == 0;
    const Complex a1 = draw(real), b1 = draw(real), a2 = draw(real), b2 = draw(real);
    if (std::abs(a1 * b2 - a2 * b1) < 0.5) {
      continue;
    }
    std::array<Complex, 5> input{};
    if (sum) {
      const auto x = fourth_power(a1, b1), y = fourth_power(a2, b2);
      for (int k = 0; k < 5; ++k) {
        input[k] = x[k] + y[k];
      }
    } else {
      input = linear_times_cube(a1, b1, a2, b2);
    }
    CanonicalForm f;
    if (real) {
      // Integer forms give rational coefficients (multiples of 1/4 and 1/6).
      BinaryQuartic bq;
      for (int k = 0; k < 5; ++k) {
        bq.c[k] = Rational(static_cast<long>(std::lround(input[k].real() * 12)), 12);
      }
      if (catalecticant(bq) != 0) {
        ++total;
        continue;
      }
      f = sylvester_decompose(bq);
    } else {
      f = sylvester_decompose(input);
    }
    const double err = reconstruction_error(f, input);
    worst = std::max(worst, err);
    ok += err < kSylvesterResidual &&
          f.kind == (sum ? CanonicalKind::PowerSum : CanonicalKind::LinearTimesCube);
    ++total;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " reconstructed, worst residual " +
                           fmt("%.2e", worst) + " (limit " + fmt("%.0e", kSylvesterResidual) + ")"};
}

Outcome projection()
{
  std::size_t ok = 0, points = 0;
  for (std::uint64_t set = 0; set < 10; ++set) {
    const auto pts = random_rational_config(15, 2000 + set, 50).exact;
    const auto expected = ordinary_through(pts);
    for (std::size_t p = 0; p < pts.size(); ++p) {
      ++points;
      ok += projected_ordinary_lines(pts, p) == static_cast<std::uint64_t>(expected[p]);
    }
  }
  return {ok == points, std::to_string(ok) + "/" + std::to_string(points) + " points on 10 sets of 15"};
}

Outcome circles()
{
  Rng rng(1009);
  std::size_t ok = 0;
  std::uint64_t seen = 0;
  for (int set = 0; set < 20; ++set) {
    const std::size_t n = 6 + static_cast<std::size_t>(set);
    std::set<Point2> chosen;
    while (chosen.size() < n) {
      const long x = draw_int(rng, -4, 4);
      const long y = draw_int(rng, -4, 4);
      chosen.insert(Point2{Rational(x), Rational(y)});
    }
    const std::vector<Point2> pts(chosen.begin(), chosen.end());
    std::vector<oracle::Pt2> raw2;
    for (const auto &p : pts) {
      raw2.push_back({p.x, p.y});
    }
    const auto expected = oracle::planar_circles(raw2);
    const CircleCounts lifted = ordinary_circles(pts);
    seen += lifted.circles3;
    ok += lifted.circles3 == static_cast<std::uint64_t>(expected[0]) &&
          lifted.lines3 == static_cast<std::uint64_t>(expected[1]) && lifted == planar_circle_counts(pts);
  }
  return {ok == 20 && seen > 0, std::to_string(ok) + "/20 sets (n = 6..25) match direct planar counting"};
}

Outcome performance()
{
  const auto pts = random_rational_config(300, 1, 1000).exact;
  auto start = Clock::now();
  const PlaneHistogram one = plane_histogram(pts, 1);
  const double t1 = seconds_since(start);
  start = Clock::now();
  const PlaneHistogram many = plane_histogram(pts, kParallelJobs);
  const double t4 = seconds_since(start);
  const bool identical = one.entries() == many.entries() && one.digest() == many.digest();
  const double speedup = t1 / t4;
  const unsigned cpus = std::thread::hardware_concurrency();
  return {t1 < kHistogramSeconds && identical && speedup >= kSpeedupRequired,
          "n=300 single-threaded " + fmt("%.1f", t1) + " s (limit " + fmt("%.0f", kHistogramSeconds) + " s), " +
              std::to_string(kParallelJobs) + " jobs " + fmt("%.1f", t4) + " s, speedup " + fmt("%.2f", speedup) +
              "x (need " + fmt("%.1f", kSpeedupRequired) + "x), output " + (identical ? "identical" : "DIFFERS") +
              ", " + std::to_string(cpus) + " hardware thread(s)"};
}

Outcome conservation()
{
  std::vector<HPoint> cube;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        cube.emplace_back(x, y, z, 1);
  const PlaneHistogram hc = plane_histogram(cube);
  const bool cube_ok = hc.ordinary_planes() == 8 && hc.four_point_planes() == 12 && hc.coplanar_quadruples() == 12;
  std::size_t ok = 0, sets = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pts = random_rational_config(10 + 5 * static_cast<int>(seed), 3000 + seed, 20).exact;
    const PlaneHistogram h = plane_histogram(pts, 1 + seed % 4);
    ++sets;
    ok += h.triple_total() == binomial(pts.size(), 3);
  }
  for (int m = 3; m <= 8; ++m) {
    for (const auto &twin : {prism(m), antiprism(m)}) {
      const PlaneCounts c = plane_counts(float_plane_members(twin.geometry.approx, 1e-9));
      ++sets;
      ok += c.triple_total == binomial(twin.geometry.size(), 3);
    }
  }
  ++sets;
  ok += hc.triple_total() == binomial(8, 3);
  return {cube_ok && ok == sets,
          "cube (" + std::to_string(hc.ordinary_planes()) + ", " + std::to_string(hc.four_point_planes()) + ", " +
              std::to_string(hc.coplanar_quadruples()) + "), sum C(k,3) = C(n,3) on " + std::to_string(ok) + "/" +
              std::to_string(sets) + " sets"};
}

}  // namespace

int main()
{
  report(1, "coplanarity equivalence", coplanarity);
  report(2, "species equivalence", species);
  report(3, "six-minor factorization", minors);
  report(4, "maximum 4-point planes", max4pt);
  report(5, "cubic growth dichotomy", dichotomy);
  report(6, "derivative identity", identity);
  report(7, "Sylvester decomposition", sylvester);
  report(8, "projection identity", projection);
  report(9, "ordinary circle lift", circles);
  report(10, "histogram performance", performance);
  report(11, "histogram conservation", conservation);
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
