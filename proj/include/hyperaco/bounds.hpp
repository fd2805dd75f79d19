#pragma once

namespace hyperaco {

/// A bound value together with its natural log, which stays finite long after
/// the plain value overflows (m beyond ~50).
struct Bound {
  double value = 0.0;
  double log_value = 0.0;
};

/// Expected-time bound for the pheromone-only regime (alpha=1, beta=0) from
/// the worst pheromone state: ((m-k)c + k)! / (((m-k)c)! k!), with c = h/l.
/// Non-integer (m-k)c is continued through the gamma function; integral
/// arguments are computed exactly in integer arithmetic when they fit.
Bound pheromone_time_bound(int m, int k, double c);

/// Per-construction success floor for the same regime:
/// k! ((m-k)c)! / ((m-k)c + k)!.
Bound pheromone_success_floor(int m, int k, double c);

/// Per-construction success floor for heuristic-guided construction:
/// [1 + (eta_max/eta_min)^beta (m-k)]^(-k). Requires eta_max >= eta_min > 0.
Bound heuristic_success_floor(int m, int k, double eta_max, double eta_min, double beta);

/// Its inverse, the expected-time bound [1 + (eta_max/eta_min)^beta (m-k)]^k.
Bound heuristic_time_bound(int m, int k, double eta_max, double eta_min, double beta);

/// Success floor when the optimum's etas are separated from the rest:
/// [1 + (eta_1_max/eta_prime_min)^beta (m-k)]^(-k). Any positive etas.
Bound separated_success_floor(int m, int k, double eta_prime_min, double eta_1_max,
                              double beta);

/// Its inverse, the expected-time bound
/// [1 + (eta_1_max/eta_prime_min)^beta (m-k)]^k.
Bound separated_time_bound(int m, int k, double eta_prime_min, double eta_1_max,
                           double beta);

/// Smallest beta guaranteeing separated_success_floor >= (1+1/k)^(-k) >= 1/e:
/// log(k(m-k)) / log(eta_prime_min / eta_1_max). Requires
/// eta_prime_min > eta_1_max and 1 <= k < m; throws PreconditionError else.
double beta_star(int m, int k, double eta_prime_min, double eta_1_max);

}  // namespace hyperaco
