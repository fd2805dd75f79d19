#include "hyperaco/bounds.hpp"

#include <cmath>
#include <limits>

#include "hyperaco/errors.hpp"

namespace hyperaco {

namespace {

void check_m_k(int m, int k) {
  if (m < 1 || k < 0 || k > m) {
    throw PreconditionError("need 0 <= k <= m");
  }
}

/// log of ((a + k)! / (a! k!)) for real a >= 0, integer k >= 1, via the gamma
/// continuation of the factorials.
double log_binomial_like(double a, int k) {
  return std::lgamma(a + k + 1.0) - std::lgamma(a + 1.0) - std::lgamma(k + 1.0);
}

/// Exact value of ((a + k)! / (a! k!)) when a is a nonnegative integer and the
/// product fits; NaN otherwise. Every intermediate prefix is itself a
/// binomial coefficient, so the division is exact at each step.
double exact_binomial_like(double a, int k) {
  if (!(a >= 0.0) || std::floor(a) != a || a > 1e15) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  unsigned __int128 acc = 1;
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 105;
  std::uint64_t ai = static_cast<std::uint64_t>(a);
  for (int i = 1; i <= k; ++i) {
    acc = acc * (static_cast<unsigned __int128>(ai) + static_cast<unsigned>(i)) /
          static_cast<unsigned>(i);
    if (acc > cap) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  }
  return static_cast<double>(acc);
}

/// spread = ratio^beta * (m - k); floor = (1 + spread)^(-k), time bound its
/// inverse. The direct power keeps small integral cases exact (e.g. 5^2 = 25)
/// where an exp/log round-trip would not.
Bound power_bound(double spread, int k, bool inverse) {
  if (k == 0) {
    return Bound{1.0, 0.0};  // empty exponent
  }
  double log_time = static_cast<double>(k) * std::log1p(spread);
  if (inverse) {
    return Bound{std::pow(1.0 + spread, static_cast<double>(k)), log_time};
  }
  return Bound{std::pow(1.0 + spread, -static_cast<double>(k)), -log_time};
}

double heuristic_spread(int m, int k, double eta_max, double eta_min, double beta) {
  check_m_k(m, k);
  if (!(eta_min > 0.0) || !(eta_max >= eta_min)) {
    throw PreconditionError("need eta_max >= eta_min > 0");
  }
  if (!(beta >= 0.0)) {
    throw PreconditionError("beta must be >= 0");
  }
  return std::pow(eta_max / eta_min, beta) * static_cast<double>(m - k);
}

double separated_spread(int m, int k, double eta_prime_min, double eta_1_max, double beta) {
  check_m_k(m, k);
  if (!(eta_prime_min > 0.0) || !(eta_1_max >= 0.0)) {
    throw PreconditionError("need eta_prime_min > 0 and eta_1_max >= 0");
  }
  if (!(beta >= 0.0)) {
    throw PreconditionError("beta must be >= 0");
  }
  double ratio = eta_1_max / eta_prime_min;
  return (ratio == 0.0 && beta == 0.0 ? 1.0 : std::pow(ratio, beta)) *
         static_cast<double>(m - k);
}

}  // namespace

Bound pheromone_time_bound(int m, int k, double c) {
  check_m_k(m, k);
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw PreconditionError("pheromone ratio c must be finite and > 0");
  }
  if (k == 0) {
    return Bound{1.0, 0.0};  // empty product
  }
  double a = static_cast<double>(m - k) * c;
  double log_value = log_binomial_like(a, k);
  double exact = exact_binomial_like(a, k);
  double value = std::isnan(exact) ? std::exp(log_value) : exact;
  return Bound{value, log_value};
}

Bound pheromone_success_floor(int m, int k, double c) {
  Bound t = pheromone_time_bound(m, k, c);
  // 0.0 - x rather than -x so the k == 0 case yields +0.0, not -0.0.
  return Bound{1.0 / t.value, 0.0 - t.log_value};
}

Bound heuristic_success_floor(int m, int k, double eta_max, double eta_min, double beta) {
  return power_bound(heuristic_spread(m, k, eta_max, eta_min, beta), k, false);
}

Bound heuristic_time_bound(int m, int k, double eta_max, double eta_min, double beta) {
  return power_bound(heuristic_spread(m, k, eta_max, eta_min, beta), k, true);
}

Bound separated_success_floor(int m, int k, double eta_prime_min, double eta_1_max,
                              double beta) {
  return power_bound(separated_spread(m, k, eta_prime_min, eta_1_max, beta), k, false);
}

Bound separated_time_bound(int m, int k, double eta_prime_min, double eta_1_max,
                           double beta) {
  return power_bound(separated_spread(m, k, eta_prime_min, eta_1_max, beta), k, true);
}

double beta_star(int m, int k, double eta_prime_min, double eta_1_max) {
  if (k < 1 || k >= m) {
    throw PreconditionError("beta_star needs 1 <= k < m");
  }
  if (!(eta_1_max > 0.0) || !(eta_prime_min > eta_1_max)) {
    throw PreconditionError("beta_star needs eta_prime_min > eta_1_max > 0");
  }
  double num = std::log(static_cast<double>(k) * static_cast<double>(m - k));
  double den = std::log(eta_prime_min / eta_1_max);
  return num / den;
}

}  // namespace hyperaco
