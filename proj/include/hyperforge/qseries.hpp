#pragma once

#include <map>

#include "hyperforge/precision.hpp"
#include "hyperforge/rational.hpp"

namespace hyperforge {

// How a rational power q^r of the nome is taken: exp(r Log q) with the
// principal logarithm, or the real power |q|^r of the modulus.
enum class QPowerBranch { principal, modulus };

// q^{q_power} * prod_d (q^d; q^d)_inf^{e_d}
struct EtaQuotientSpec {
  void validate() const;
  // Sum of the exponents, i.e. twice the weight.
  int total_exponent() const;

  std::map<int, int> exponents;
  ExactRational q_power;
};

// (x; q)_inf = prod_{n>=0} (1 - x q^n), |q| < 1.
AppValue qpoch_inf(const Complex& x, const Complex& q, const PrecisionContext& ctx);

AppValue eta_quotient_value(const EtaQuotientSpec& spec, const Complex& q,
                            const PrecisionContext& ctx,
                            QPowerBranch branch = QPowerBranch::principal);

// G(q) = -log|q| + 240 sum n^2 log|1 - q^n|, real valued.
AppValue eisenstein_G(const Complex& q, const PrecisionContext& ctx);
// M(q) = 1 + 240 sum n^3 q^n / (1 - q^n).
AppValue eisenstein_M(const Complex& q, const PrecisionContext& ctx);

// Elliptic nome of signature j in {2, 3, 4} for 0 < alpha < 1.
AppValue nome(int j, const Real& alpha, const PrecisionContext& ctx);

// s_j(q) for j in {2, 3, 4}; the branch applies to the leading power of q.
AppValue s_function(int j, const Complex& q, const PrecisionContext& ctx,
                    QPowerBranch branch = QPowerBranch::principal);
// v_j(q) for j in {1, 2}.
AppValue v_function(int j, const Complex& q, const PrecisionContext& ctx,
                    QPowerBranch branch = QPowerBranch::principal);
// t_1 = v_1 + 1/v_1, t_2 = -(v_2 - 1/v_2)^2.
AppValue t_function(int j, const Complex& q, const PrecisionContext& ctx,
                    QPowerBranch branch = QPowerBranch::principal);

EtaQuotientSpec v_spec(int j);

}  // namespace hyperforge
