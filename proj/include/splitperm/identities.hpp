#pragma once

#include "splitperm/report.hpp"
#include "splitperm/series.hpp"

namespace splitperm {

inline constexpr int kDefaultSeriesOrder = 12;

/// Product identity and its diagonal specialization, on [0,order]^2:
///   binomial_egf = exp_sum * bessel_i0
///   sum_{r+s=m} C(r+s,r)/(r! s!) = C(2m,m)/m!
VerificationReport verify_bessel(int order);

/// The generating-function chain for K, on [0,order]^2:
///   partial_xy(L) = binomial_egf
///   integrate_xy(binomial_egf) = L
///   (1-x-y+xy) A = L
///   K = (L + 1) / (1-x-y+xy)
/// L carries zero boundary values. The report notes also record the residual
/// binomial_egf, bessel_i0, geometric, L, K and A are symmetric in (r,s).
VerificationReport check_series_symmetry(int order);

/// K - (L_e + 1)/(1-x-y+xy) for the alternative L_e = L + e^x + e^y - 1, whose
/// boundary rows are e^x and e^y.
VerificationReport verify_main_theorem(int order);

/// verify_bessel followed by verify_main_theorem. Throws
/// std::invalid_argument for order < 2.
VerificationReport verify_identities(int order);

/// binomial_egf, bessel_i0, geometric, L, K and A are symmetric in (r,s).
VerificationReport check_series_symmetry(int order);

/// K - (L_e + 1)/(1-x-y+xy) on [0,order]^2, with L_e as above.
BivariateSeries exponential_boundary_residual(int order);

}  // namespace splitperm
