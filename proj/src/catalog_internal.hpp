#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hyperforge/catalog.hpp"
#include "hyperforge/interval.hpp"
#include "hyperforge/lseries.hpp"
#include "hyperforge/rational.hpp"
#include "hyperforge/summation.hpp"

namespace hyperforge::catalog_detail {

ExactRational rational_param(const ParamPoint& p, const std::string& name);
// "a", "a+bi" or "a-bi" with rational a, b.
Complex complex_param(const ParamPoint& p, const std::string& name, Bits prec);

// sum_i c_i * v_i
AppValue combine(const std::vector<std::pair<ExactRational, AppValue>>& terms, Bits prec);
AppValue constant(const Real& v);
AppValue constant(const ExactRational& v, Bits prec);

// Bound on sum_{m>n} K (A m + B) rho^m for 0 <= rho < 1.
TailMajorant poly_geometric_majorant(long double A, long double B, long double rho, long double K = 1);

// Direct summation with a rigorous majorant within `budget` terms; when the
// target is out of reach the first `budget` terms are Levin-accelerated.
AppValue bounded_series(const TermGenerator& term, const TailMajorant& majorant,
                        const PrecisionContext& ctx, std::size_t budget, std::string* note);

// Coefficients of a named cusp form up to the configured N, shared between
// checks and computed once per process.
std::shared_ptr<const CoefficientSeries> form_series(const std::string& name, const EvalContext& ec);

void register_modular(std::vector<IdentityCheck>& out);
void register_hypergeometric(std::vector<IdentityCheck>& out);
void register_pi(std::vector<IdentityCheck>& out);

}  // namespace hyperforge::catalog_detail
