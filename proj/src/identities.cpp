#include "splitperm/identities.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace splitperm {

namespace {

void require_order(int order) {
  if (order < 2) throw std::invalid_argument("series checks need order >= 2");
}

CheckResult compare(std::string id, std::string description, const BivariateSeries& lhs,
                    const BivariateSeries& rhs, int order) {
  CheckResult res{std::move(id), std::move(description)};
  if (lhs.nx() < order || lhs.ny() < order || rhs.nx() < order || rhs.ny() < order) {
    res.fail("window smaller than the requested order");
    return res;
  }
  for (int r = 0; r <= order; ++r) {
    for (int s = 0; s <= order; ++s) {
      ++res.cells_checked;
      if (lhs(r, s) != rhs(r, s)) {
        res.fail("(" + std::to_string(r) + "," + std::to_string(s) + "): " +
                 to_string(lhs(r, s)) + " != " + to_string(rhs(r, s)));
      }
    }
  }
  return res;
}

}  // namespace

VerificationReport verify_bessel(int order) {
  require_order(order);
  VerificationReport report;
  const auto egf = binomial_egf_series(order, order);
  report.checks.push_back(compare("bessel_product", "binomial_egf = e^{x+y} I0(2 sqrt(xy))", egf,
                                  mul(exp_sum_series(order, order),
                                      bessel_i0_series(order, order)),
                                  order));

  CheckResult central{"central_binomial", "diagonal of binomial_egf = C(2m,m)/m!"};
  const auto diagonal = diagonal_collapse(egf);
  for (int m = 0; m <= order; ++m) {
    ++central.cells_checked;
    const Rational expected = make_rational(binomial(2 * m, m), factorial(m));
    if (diagonal[m] != expected) {
      central.fail("m=" + std::to_string(m) + ": " + to_string(diagonal[m]) + " != " +
                   to_string(expected));
    }
  }
  report.checks.push_back(std::move(central));
  return report;
}

BivariateSeries exponential_boundary_residual(int order) {
  const auto L = L_series(order, order);
  const auto boundary = sub(add(exp_x_series(order, order), exp_y_series(order, order)),
                            series_const(1, order, order));
  const auto L_e = add(L, boundary);
  const auto K_e = divide_by_unit(add(L_e, series_const(1, order, order)),
                                  unit_denominator(order, order));
  return sub(K_series(order, order), K_e);
}

VerificationReport verify_main_theorem(int order) {
  require_order(order);
  VerificationReport report;
  const auto L = L_series(order, order);
  const auto L_wide = L_series(order + 1, order + 1);
  const auto egf = binomial_egf_series(order, order);
  const auto den = unit_denominator(order, order);
  const auto K = K_series(order, order);

  report.checks.push_back(compare("partial_L", "partial_xy(L) = binomial_egf",
                                  partial_xy(L_wide), egf, order));
  report.checks.push_back(compare("integrate_binomial_egf", "integrate_xy(binomial_egf) = L",
                                  integrate_xy(egf), L, order));
  report.checks.push_back(compare("A_times_denominator", "(1-x-y+xy) A = L",
                                  mul(den, A_series(order, order)), L, order));
  report.checks.push_back(compare("main_theorem", "K = (L + 1)/(1-x-y+xy), L zero on the axes",
                                  K, divide_by_unit(add(L, series_const(1, order, order)), den),
                                  order));

  const auto residual = exponential_boundary_residual(order);
  int nonzero = 0;
  for (int r = 0; r <= order; ++r) {
    for (int s = 0; s <= order; ++s) {
      if (residual(r, s) != 0) ++nonzero;
    }
  }
  const int cells = (order + 1) * (order + 1);
  std::string note = "boundary variant L(x,0)=e^x, L(0,y)=e^y: residual K - (L_e+1)/(1-x-y+xy) is " +
                     std::string(residual.is_zero() ? "zero" : "nonzero") + " on " +
                     std::to_string(nonzero) + "/" + std::to_string(cells) +
                     " coefficients; low-order terms:";
  for (auto [r, s] : std::initializer_list<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 2}}) {
    note += " (" + std::to_string(r) + "," + std::to_string(s) + ")=" + to_string(residual(r, s));
  }
  report.notes.push_back(std::move(note));
  report.notes.push_back(
      "main_theorem uses L with zero boundary values, the convention under which "
      "K(x,0) = 1/(1-x)");
  return report;
}

VerificationReport check_series_symmetry(int order) {
  require_order(order);
  CheckResult res{"series_symmetry", "named series are invariant under (r,s) <-> (s,r)"};
  const std::pair<const char*, BivariateSeries> named[] = {
      {"binomial_egf", binomial_egf_series(order, order)},
      {"bessel_i0", bessel_i0_series(order, order)},
      {"geometric", geometric_series(order, order)},
      {"L", L_series(order, order)},
      {"K", K_series(order, order)},
      {"A", A_series(order, order)},
  };
  for (const auto& [name, series] : named) {
    for (int r = 0; r <= order; ++r) {
      for (int s = 0; s <= order; ++s) {
        ++res.cells_checked;
        if (series(r, s) != series(s, r)) {
          res.fail(std::string(name) + " at (" + std::to_string(r) + "," + std::to_string(s) + ")");
        }
      }
    }
  }
  VerificationReport report;
  report.checks.push_back(std::move(res));
  return report;
}

VerificationReport verify_identities(int order) {
  VerificationReport report = verify_bessel(order);
  report.append(verify_main_theorem(order));
  return report;
}

}  // namespace splitperm
