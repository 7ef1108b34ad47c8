#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/combinatorics.hpp"

namespace hecke {

struct SuiteResult {
  std::string name;
  bool pass = true;
  /// One line per checked item.
  std::vector<std::string> details;
  /// The first failure in full; empty when the suite passes.
  std::string counterexample;
  /// Set when the hypotheses of the suite do not hold for this algebra; nothing was checked.
  bool skipped = false;
};

struct VerifyOptions {
  /// Twists to check; empty means every c in {0,1}^ell.
  std::vector<std::vector<int>> twists;
  /// xi for the cellular and main2 suites; empty means every permutation (cellular) or the longest element (main2).
  std::optional<Permutation> xi;
  unsigned threads = 1;
  int samples = 200;
  std::uint64_t seed = 1;
};

/// Defining relations, associativity on random triples, and the basis count ell^r r!.
SuiteResult verify_relations(const HeckeAlgebra& alg, const VerifyOptions& opts);
/// tau_hat(z^c_lambda w_lambda^{-1}) = 1 for every lambda and c.
SuiteResult verify_trace(const HeckeAlgebra& alg, const VerifyOptions& opts);
/// <m^c_{s,t}, n_{u,v}> (n from the paired family) is 1 when (u', v') = (s, t) and 0 unless
/// u' dominates s and v' dominates t, over all tableau pairs.
SuiteResult verify_pairing(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts);
/// All four families: invertible change of basis, star symmetry, cell action, symmetric Gram forms
/// agreeing with the trace route.
SuiteResult verify_cellular(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts);
/// Crystal labels equal {lambda : Gram rank > 0} for M(c0), and D^{c0}(lambda) = D^c(eta(lambda)).
SuiteResult verify_main1(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts);
/// D^xi(lambda_A) = D^1(lambda_{R(A)}) on standard A, D^xi(lambda) = 0 otherwise, and
/// generalized_mullineux against the N(c0) / M(c0) matching. Requires omega weakly decreasing.
SuiteResult verify_main2(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts);
/// contragredient of S^c(lambda) is isomorphic to the paired cell module at lambda', and to the
/// right ideal z^c_lambda H.
SuiteResult verify_duality(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts);

/// Every 01-sequence of length ell, in lexicographic order.
std::vector<std::vector<int>> all_twists(int ell);

}  // namespace hecke
