#include <cmath>
#include <complex>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include "wittkit/analytic.hpp"
#include "wittkit/error.hpp"

namespace wittkit {

namespace {

std::vector<long double> to_ld(const std::vector<Integer>& c) {
  std::vector<long double> out;
  for (const auto& v : c) out.push_back(static_cast<long double>(v.get_d()));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

long double eval(const std::vector<long double>& c, std::complex<long double> z, long double* scale) {
  std::complex<long double> acc = 0;
  long double s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z + *it;
    s = s * std::abs(z) + std::fabs(*it);
  }
  if (scale) *scale = s;
  return std::abs(acc);
}

void finish(ConvergenceReport& rep) {
  rep.rho_ok = !rep.rho || *rep.rho > 0.5;
  rep.g_half_ok = rep.g_half && *rep.g_half < 1;
  // g(1/p) ~ |a(j0)| p^-j0, summable over primes iff j0 >= 2.
  rep.prime_sum_ok = rep.rho_ok && (rep.j0 == 0 || rep.j0 >= 2);
  if (rep.rho_ok && rep.j0 == 1) rep.notes.push_back("sum_p g(1/p) diverges since a(1) != 0");
  if (!rep.constant_term_zero) {
    rep.status = "precondition-failed";
    rep.notes.push_back("f(0) must be 0");
  } else if (rep.status.empty()) {
    rep.status = rep.rho_ok && rep.g_half_ok && rep.prime_sum_ok ? "pass" : "fail";
  }
}

}  // namespace

ConvergenceReport check_convergence_hypotheses(const RationalFunction& f) {
  if (f.den.empty() || f.den[0] == 0) throw UsageError("convergence: denominator must have a nonzero constant term");
  ConvergenceReport rep;
  rep.rho_exact = true;
  TruncatedSeries head = ratfun_expand(f, 64);
  rep.constant_term_zero = head[0] == 0;
  for (std::size_t j = 1; j <= head.order() && rep.j0 == 0; ++j) {
    if (head[j] != 0) rep.j0 = j;
  }

  // Poles: roots of the denominator that the numerator does not cancel.
  const auto num = to_ld(f.num);
  const auto den = to_ld(f.den);
  if (den.size() >= 2) {
    Eigen::Matrix<double, Eigen::Dynamic, 1> coeffs(static_cast<Eigen::Index>(den.size()));
    for (std::size_t i = 0; i < den.size(); ++i) coeffs[static_cast<Eigen::Index>(i)] = static_cast<double>(den[i]);
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    for (const auto& root : solver.roots()) {
      std::complex<long double> z(root.real(), root.imag());
      long double scale = 0;
      if (!num.empty() && eval(num, z, &scale) < 1e-9L * std::max(1.0L, scale)) continue;
      double mod = std::abs(root);
      if (!rep.rho || mod < *rep.rho) rep.rho = mod;
    }
  }

  if (!rep.rho || *rep.rho > 0.5) {
    // g(1/2) = sum_{j >= 1} |a(j)| 2^-j from the recurrence den * a = num.
    std::vector<long double> a;
    long double sum = 0;
    std::size_t quiet = 0;
    for (std::size_t j = 0; j < 200000; ++j) {
      long double v = j < num.size() ? num[j] : 0;
      for (std::size_t i = 1; i < den.size() && i <= j; ++i) v -= den[i] * a[j - i];
      v /= den[0];
      a.push_back(v);
      long double t = std::fabs(v) * std::pow(0.5L, static_cast<long double>(j));
      if (j >= 1) sum += t;
      quiet = (j >= 1 && t <= 1e-19L * std::max(sum, 1e-300L)) ? quiet + 1 : 0;
      if (j >= 64 && quiet >= 32) break;
    }
    rep.g_half = static_cast<double>(sum);
  }
  finish(rep);
  return rep;
}

ConvergenceReport check_convergence_hypotheses(const TruncatedSeries& f) {
  ConvergenceReport rep;
  rep.constant_term_zero = f[0] == 0;
  for (std::size_t j = 1; j <= f.order() && rep.j0 == 0; ++j) {
    if (f[j] != 0) rep.j0 = j;
  }
  // Root test on the upper half of the stored coefficients.
  for (std::size_t j = std::max<std::size_t>(1, f.order() / 2); j <= f.order(); ++j) {
    if (f[j] == 0) continue;
    double est = std::pow(std::fabs(f[j].get_d()), -1.0 / static_cast<double>(j));
    if (!rep.rho || est < *rep.rho) rep.rho = est;
  }
  double sum = 0;
  for (std::size_t j = 1; j <= f.order(); ++j) sum += std::fabs(f[j].get_d()) * std::ldexp(1.0, -static_cast<int>(j));
  rep.g_half = sum;
  rep.status = "inconclusive";
  rep.notes.push_back("truncated series: radius and g(1/2) are estimates from " + std::to_string(f.order()) +
                      " coefficients");
  finish(rep);
  return rep;
}

}  // namespace wittkit
