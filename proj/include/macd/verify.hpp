#ifndef MACD_VERIFY_HPP
#define MACD_VERIFY_HPP

#include "macd/parallel.hpp"
#include "macd/pieri.hpp"
#include "macd/polyrep.hpp"

namespace macd {

struct VerifyOptions {
  int max_size = 6;    // |xi| bound for the T-equivariance sweep
  int k_max = 3;       // strip-length bound for the T sweep
  int max_weight = 4;  // |lambda|+|gamma| bound for the e1 and Pieri sweeps
  int pieri_k_max = 2;
  int degree_bound = 8;
  int jobs = 1;
  unsigned long seed = 20250809;
};

// Equivariance of the T_i action across the bijection, all three gamma
// cases, for every fixed point with |xi| <= max_size and k <= k_max.
std::vector<CaseReport> verify_ti(const VerifyOptions& opt);

// Three-way e_1 check per source index: geometric chain, closed-form
// coefficients pushed through the modified-basis normalization, and a direct
// expansion of e_1 Htilde by linear solve.
std::vector<CaseReport> verify_e1(const VerifyOptions& opt);

// The worked y_2 example, term by term, plus the untwisted negative control.
std::vector<CaseReport> verify_y2(const VerifyOptions& opt);

// Matching predicate, c_r consistency and operator-vs-closed geometric
// coefficients over the support sweep.
std::vector<CaseReport> verify_pieri(const VerifyOptions& opt);

// Brute-force oracle versus the closed form, at two variable counts.
std::vector<CaseReport> verify_oracle(const VerifyOptions& opt);

// The normalization chain Htilde_{(0|0^k)} = 1, Jw0_{(1|0^k)} = (1-t)e_1,
// Htilde_{(1|0^k)} = e_1 and d_- Htilde_{(0|0^k)} = Htilde_{(1|0^{k-1})}.
std::vector<CaseReport> verify_normalization(const VerifyOptions& opt);

// Seed-pinned randomized property suites.
std::vector<CaseReport> verify_props(const VerifyOptions& opt);

// Non-gating comparison against an externally quoted integral-form Pieri
// coefficient, under both index-order readings.
std::vector<CaseReport> verify_worknotes(const VerifyOptions& opt);

std::vector<CaseReport> verify_all(const VerifyOptions& opt);

bool all_ok(const std::vector<CaseReport>& reports);

}  // namespace macd

#endif  // MACD_VERIFY_HPP
