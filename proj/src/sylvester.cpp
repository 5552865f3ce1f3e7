#include "qplanes/sylvester.hpp"

#include "qplanes/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qplanes {

namespace {

constexpr std::array<double, 5> kBinom4{1, 4, 6, 4, 1};

// c_i of (a l + b m)^4 in the binomial basis.
std::array<Complex, 5> fourth_power_coeffs(const LinearForm &l)
{
  std::array<Complex, 5> out;
  for (int i = 0; i <= 4; ++i) {
    out[i] = std::pow(l.a, 4 - i) * std::pow(l.b, i);
  }
  return out;
}

// c_i of (a1 l + b1 m)(a2 l + b2 m)^3.
std::array<Complex, 5> linear_times_cube_coeffs(const LinearForm &l1, const LinearForm &l2)
{
  const std::array<Complex, 4> cube{l2.a * l2.a * l2.a, 3.0 * l2.a * l2.a * l2.b,
                                    3.0 * l2.a * l2.b * l2.b, l2.b * l2.b * l2.b};
  std::array<Complex, 5> mono{};
  for (int j = 0; j < 4; ++j) {
    mono[j] += l1.a * cube[j];
    mono[j + 1] += l1.b * cube[j];
  }
  for (int i = 0; i <= 4; ++i) {
    mono[i] /= kBinom4[i];
  }
  return mono;
}

LinearForm unit(Complex a, Complex b)
{
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  return {a / norm, b / norm};
}

Eigen::VectorXcd least_squares(const Eigen::MatrixXcd &design, const Eigen::VectorXcd &target)
{
  return design.colPivHouseholderQr().solve(target);
}

}  // namespace

std::array<Complex, 5> CanonicalForm::reconstruct() const
{
  std::array<Complex, 5> out{};
  switch (kind) {
  case CanonicalKind::FourthPower:
    return fourth_power_coeffs(forms.at(0));
  case CanonicalKind::PowerSum: {
    const auto a = fourth_power_coeffs(forms.at(0));
    const auto b = fourth_power_coeffs(forms.at(1));
    for (int i = 0; i <= 4; ++i) {
      out[i] = a[i] + b[i];
    }
    return out;
  }
  case CanonicalKind::LinearTimesCube:
    return linear_times_cube_coeffs(forms.at(0), forms.at(1));
  }
  return out;
}

std::array<Complex, 5> to_complex(const BinaryQuartic &bq)
{
  std::array<Complex, 5> out;
  for (int i = 0; i <= 4; ++i) {
    out[i] = bq.c[i].get_d();
  }
  return out;
}

CanonicalForm sylvester_decompose(const BinaryQuartic &bq, const SylvesterOptions &options)
{
  const Rational cat = catalecticant(bq);
  if (cat != 0) {
    throw PreconditionError("second species / no canonical form of this shape (catalecticant " +
                            to_string(cat) + ")");
  }
  return sylvester_decompose(to_complex(bq), options);
}

CanonicalForm sylvester_decompose(const std::array<Complex, 5> &input,
                                  const SylvesterOptions &options)
{
  double scale = 0.0;
  for (const auto &c : input) {
    scale = std::max(scale, std::abs(c));
  }
  if (scale == 0.0) {
    throw PreconditionError("zero binary quartic has no canonical form");
  }
  std::array<Complex, 5> c;
  for (int i = 0; i <= 4; ++i) {
    c[i] = input[i] / scale;
  }

  Eigen::Matrix3cd hankel;
  hankel << c[0], c[1], c[2], c[1], c[2], c[3], c[2], c[3], c[4];
  Eigen::JacobiSVD<Eigen::Matrix3cd> svd(hankel, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sigma = svd.singularValues();
  const double s2 = sigma(1) / sigma(0);
  const double s3 = sigma(2) / sigma(0);

  if (s3 > options.residual_tolerance) {
    std::ostringstream os;
    os << "second species / no canonical form of this shape (catalecticant matrix has full rank,"
       << " sigma3/sigma1 = " << s3 << ")";
    throw PreconditionError(os.str());
  }
  if (s2 >= options.rank_tolerance && s2 <= options.ambiguity_ceiling) {
    std::ostringstream os;
    os << "numerically rank-ambiguous catalecticant kernel: sigma = (" << sigma(0) << ", "
       << sigma(1) << ", " << sigma(2) << "), sigma2/sigma1 = " << s2;
    throw VerificationError(os.str());
  }

  Eigen::VectorXcd target(5);
  for (int i = 0; i <= 4; ++i) {
    target(i) = c[i];
  }

  CanonicalForm form;
  if (s2 < options.rank_tolerance) {
    // Rank one: the column space is spanned by (a^2, ab, b^2).
    const Eigen::Vector3cd v = svd.matrixU().col(0);
    const LinearForm base = std::abs(v(0)) >= std::abs(v(2)) ? unit(v(0), v(1)) : unit(v(1), v(2));
    const auto basis = fourth_power_coeffs(base);
    Eigen::MatrixXcd design(5, 1);
    for (int i = 0; i <= 4; ++i) {
      design(i, 0) = basis[i];
    }
    const Complex w = least_squares(design, target)(0);
    const Complex root = std::pow(w, 0.25);
    form.kind = CanonicalKind::FourthPower;
    form.forms = {{root * base.a, root * base.b}};
  } else {
    // Kernel vector u gives the apolar quadratic u0 a^2 + u1 ab + u2 b^2.
    const Eigen::Vector3cd u = svd.matrixV().col(2);
    const Complex disc = u(1) * u(1) - 4.0 * u(0) * u(2);
    const double disc_scale = std::norm(u(1)) + 4.0 * std::abs(u(0)) * std::abs(u(2));
    if (std::abs(disc) <= options.double_root_tolerance * disc_scale) {
      const LinearForm cube_base = std::abs(u(0)) >= std::abs(u(2))
                                       ? unit(-u(1), 2.0 * u(0))
                                       : unit(2.0 * u(2), -u(1));
      // g = (alpha l + beta m) * cube_base^3, linear in (alpha, beta).
      const auto col_a = linear_times_cube_coeffs({1.0, 0.0}, cube_base);
      const auto col_b = linear_times_cube_coeffs({0.0, 1.0}, cube_base);
      Eigen::MatrixXcd design(5, 2);
      for (int i = 0; i <= 4; ++i) {
        design(i, 0) = col_a[i];
        design(i, 1) = col_b[i];
      }
      const Eigen::VectorXcd ab = least_squares(design, target);
      form.kind = CanonicalKind::LinearTimesCube;
      form.forms = {{ab(0), ab(1)}, cube_base};
    } else {
      // Roots (q, u0) and (u2, q) with q = -(u1 + sqrt(disc)) / 2, sign chosen
      // to keep |q| large.
      Complex root = std::sqrt(disc);
      if (std::real(std::conj(u(1)) * root) < 0.0) {
        root = -root;
      }
      const Complex q = -(u(1) + root) / 2.0;
      const LinearForm l1 = unit(q, u(0));
      const LinearForm l2 = unit(u(2), q);
      const auto b1 = fourth_power_coeffs(l1);
      const auto b2 = fourth_power_coeffs(l2);
      Eigen::MatrixXcd design(5, 2);
      for (int i = 0; i <= 4; ++i) {
        design(i, 0) = b1[i];
        design(i, 1) = b2[i];
      }
      const Eigen::VectorXcd w = least_squares(design, target);
      const Complex r1 = std::pow(w(0), 0.25);
      const Complex r2 = std::pow(w(1), 0.25);
      form.kind = CanonicalKind::PowerSum;
      form.forms = {{r1 * l1.a, r1 * l1.b}, {r2 * l2.a, r2 * l2.b}};
    }
  }

  // Undo the coefficient normalization.
  if (form.kind == CanonicalKind::LinearTimesCube) {
    form.forms[0].a *= scale;
    form.forms[0].b *= scale;
  } else {
    const double root = std::pow(scale, 0.25);
    for (auto &l : form.forms) {
      l.a *= root;
      l.b *= root;
    }
  }

  const auto rebuilt = form.reconstruct();
  double err = 0.0;
  for (int i = 0; i <= 4; ++i) {
    err = std::max(err, std::abs(rebuilt[i] - input[i]));
  }
  form.residual = err / scale;
  if (!(form.residual < options.residual_tolerance)) {
    std::ostringstream os;
    os << "canonical form reconstruction residual " << form.residual << " exceeds "
       << options.residual_tolerance;
    throw VerificationError(os.str());
  }
  return form;
}

}  // namespace qplanes
