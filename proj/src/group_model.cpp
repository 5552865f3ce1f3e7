#include "qplanes/group_model.hpp"

#include "qplanes/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace qplanes {

Complex GroupModelQuartic::element(Complex t) const
{
  if (kind == GroupKind::NodalProduct) {
    return (moebius[0] * t + moebius[1]) / (moebius[2] * t + moebius[3]);
  }
  const Complex s = (s_map[0] * t + s_map[1]) / (s_map[2] * t + s_map[3]);
  return c / 4.0 - d / s;
}

Complex GroupModelQuartic::parameter(Complex e) const
{
  if (kind == GroupKind::NodalProduct) {
    return (moebius[3] * e - moebius[1]) / (moebius[0] - moebius[2] * e);
  }
  const Complex s = d / (c / 4.0 - e);
  return (s_map[3] * s - s_map[1]) / (s_map[0] - s_map[2] * s);
}

double GroupModelQuartic::rule_residual(const std::array<Complex, 4> &ts) const
{
  if (kind == GroupKind::NodalProduct) {
    Complex prod = 1.0;
    for (const auto &t : ts) {
      prod *= element(t);
    }
    return std::abs(prod - 1.0);
  }
  Complex sum = 0.0;
  double mag = 0.0;
  for (const auto &t : ts) {
    const Complex e = element(t);
    sum += e;
    mag += std::abs(e);
  }
  return std::abs(sum) / std::max(1.0, mag);
}

Complex coplanarity_form(const QuarticCurve &curve, const std::array<Complex, 4> &ts)
{
  const auto &[t1, t2, t3, t4] = ts;
  const Complex e1 = t1 + t2 + t3 + t4;
  const Complex e2 = t1 * t2 + t1 * t3 + t1 * t4 + t2 * t3 + t2 * t4 + t3 * t4;
  const Complex e3 = t1 * t2 * t3 + t1 * t2 * t4 + t1 * t3 * t4 + t2 * t3 * t4;
  const Complex e4 = t1 * t2 * t3 * t4;
  return e4 + curve.s().get_d() * e3 + curve.r().get_d() * e2 + curve.q().get_d() * e1 +
         curve.p().get_d();
}

namespace {

GroupModelQuartic nodal_model(const CanonicalForm &form)
{
  const auto &l1 = form.forms[0];
  const auto &l2 = form.forms[1];
  if (std::abs(l1.a * l2.b - l1.b * l2.a) <=
      1e-12 * (std::abs(l1.a) + std::abs(l1.b)) * (std::abs(l2.a) + std::abs(l2.b))) {
    throw VerificationError("power-sum linear forms are proportional");
  }
  GroupModelQuartic model;
  model.kind = GroupKind::NodalProduct;
  // F = prod(l1(t_i)) + prod(l2(t_i)); omega^4 = -1 turns prod = -1 into prod = 1.
  model.fourth_root = std::polar(1.0, std::numbers::pi / 4.0);
  model.moebius = {model.fourth_root * l1.a, model.fourth_root * l1.b, l2.a, l2.b};
  return model;
}

GroupModelQuartic cuspidal_model(const CanonicalForm &form)
{
  const auto &l1 = form.forms[0];
  const auto &l2 = form.forms[1];
  // sigma = l2, tau = mu or lambda, whichever keeps (sigma, tau) independent.
  const bool tau_is_mu = std::abs(l2.a) >= std::abs(l2.b);
  const Complex ma = tau_is_mu ? 0.0 : 1.0;
  const Complex mb = tau_is_mu ? 1.0 : 0.0;
  // l1 = C sigma - D tau.
  const Complex det = l2.a * (-mb) - (-ma) * l2.b;
  const Complex big_c = (l1.a * (-mb) - (-ma) * l1.b) / det;
  const Complex big_d = (l2.a * l1.b - l2.b * l1.a) / det;
  GroupModelQuartic model;
  model.kind = GroupKind::CuspidalSum;
  model.s_map = {l2.a, l2.b, ma, mb};
  model.c = big_c;
  // g = C sigma^4 - D sigma^3 tau polarizes to C e4 - (D/4) e3.
  model.d = big_d / 4.0;
  return model;
}

Rational random_parameter(std::mt19937_64 &rng)
{
  const auto num = static_cast<long>(rng() % 41) - 20;
  const auto den = static_cast<long>(rng() % 7) + 1;
  Rational t(num, den);
  t.canonicalize();
  return t;
}

}  // namespace

GroupModelQuartic group_parametrization(const QuarticCurve &curve,
                                        const GroupModelOptions &options)
{
  const BinaryQuartic g = fundamental_quartic(curve);
  if (catalecticant(g) != 0) {
    throw PreconditionError("group parametrization needs a first-species curve (" + curve.str() +
                            ")");
  }
  const CanonicalForm form = sylvester_decompose(g, options.sylvester);
  GroupModelQuartic model;
  switch (form.kind) {
  case CanonicalKind::FourthPower:
    throw PreconditionError("degenerate fundamental quartic");
  case CanonicalKind::PowerSum:
    model = nodal_model(form);
    break;
  case CanonicalKind::LinearTimesCube:
    model = cuspidal_model(form);
    break;
  }

  std::mt19937_64 rng(options.seed);
  std::size_t checked = 0;
  std::size_t attempts = 0;
  while (checked < options.verification_samples) {
    if (++attempts > 50 * options.verification_samples) {
      throw VerificationError("could not draw enough admissible coplanar quadruples");
    }
    const Rational t1 = random_parameter(rng);
    const Rational t2 = random_parameter(rng);
    const Rational t3 = random_parameter(rng);
    Param t4;
    try {
      t4 = solve_t4(curve, t1, t2, t3);
    } catch (const PreconditionError &) {
      continue;
    }
    if (std::holds_alternative<AtInfinity>(t4)) {
      continue;
    }
    const std::array<Complex, 4> ts{t1.get_d(), t2.get_d(), t3.get_d(),
                                    std::get<Rational>(t4).get_d()};
    bool singular = false;
    for (const auto &t : ts) {
      const Complex e = model.element(t);
      if (!std::isfinite(std::abs(e)) || std::abs(e) < 1e-9 || std::abs(e) > 1e9) {
        singular = true;
      }
    }
    if (singular) {
      continue;
    }
    const double residual = model.rule_residual(ts);
    if (!(residual < options.rule_tolerance)) {
      std::ostringstream os;
      os << "group rule residual " << residual << " at t = (" << to_string(t1) << ", "
         << to_string(t2) << ", " << to_string(t3) << ", "
         << to_string(std::get<Rational>(t4)) << ") on " << curve.str();
      throw VerificationError(os.str());
    }
    ++checked;
  }
  return model;
}

}  // namespace qplanes
