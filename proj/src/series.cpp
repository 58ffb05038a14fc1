#include "splitperm/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "splitperm/counting.hpp"

namespace splitperm {

BivariateSeries::BivariateSeries(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 0 || ny < 0) throw std::invalid_argument("series window must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1));
}

std::size_t BivariateSeries::index(int r, int s) const {
  if (r < 0 || r > nx_ || s < 0 || s > ny_) {
    throw std::out_of_range("coefficient (" + std::to_string(r) + "," + std::to_string(s) +
                            ") outside window [0," + std::to_string(nx_) + "]x[0," +
                            std::to_string(ny_) + "]");
  }
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(ny_ + 1) +
         static_cast<std::size_t>(s);
}

BivariateSeries BivariateSeries::truncated(int nx, int ny) const {
  if (nx > nx_ || ny > ny_) throw std::invalid_argument("truncated: window grows");
  BivariateSeries out(nx, ny);
  for (int r = 0; r <= nx; ++r) {
    for (int s = 0; s <= ny; ++s) out(r, s) = (*this)(r, s);
  }
  return out;
}

bool BivariateSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  const int nx = std::min(a.nx(), b.nx());
  const int ny = std::min(a.ny(), b.ny());
  for (int r = 0; r <= nx; ++r) {
    for (int s = 0; s <= ny; ++s) {
      if (a(r, s) != b(r, s)) return false;
    }
  }
  return true;
}

BivariateSeries series_const(const Rational& c, int nx, int ny) {
  BivariateSeries out(nx, ny);
  out(0, 0) = c;
  return out;
}

BivariateSeries unit_denominator(int nx, int ny) {
  BivariateSeries out(nx, ny);
  out(0, 0) = 1;
  if (nx >= 1) out(1, 0) = -1;
  if (ny >= 1) out(0, 1) = -1;
  if (nx >= 1 && ny >= 1) out(1, 1) = 1;
  return out;
}

namespace {

template <typename Op>
BivariateSeries zip(const BivariateSeries& a, const BivariateSeries& b, Op op) {
  BivariateSeries out(std::min(a.nx(), b.nx()), std::min(a.ny(), b.ny()));
  for (int r = 0; r <= out.nx(); ++r) {
    for (int s = 0; s <= out.ny(); ++s) out(r, s) = op(a(r, s), b(r, s));
  }
  return out;
}

template <typename Coeff>
BivariateSeries tabulate(int nx, int ny, Coeff coeff) {
  BivariateSeries out(nx, ny);
  for (int r = 0; r <= nx; ++r) {
    for (int s = 0; s <= ny; ++s) out(r, s) = coeff(r, s);
  }
  return out;
}

Rational inverse_factorials(long r, long s) {
  return make_rational(1, factorial(r) * factorial(s));
}

}  // namespace

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) -> Rational { return x + y; });
}

BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) -> Rational { return x - y; });
}

BivariateSeries scale(const BivariateSeries& a, const Rational& c) {
  return tabulate(a.nx(), a.ny(), [&](int r, int s) -> Rational { return a(r, s) * c; });
}

BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b) {
  const int nx = std::min(a.nx(), b.nx());
  const int ny = std::min(a.ny(), b.ny());
  BivariateSeries out(nx, ny);
  for (int r = 0; r <= nx; ++r) {
    for (int s = 0; s <= ny; ++s) {
      Rational acc = 0;
      for (int p = 0; p <= r; ++p) {
        for (int q = 0; q <= s; ++q) {
          if (a(p, q) != 0 && b(r - p, s - q) != 0) acc += a(p, q) * b(r - p, s - q);
        }
      }
      out(r, s) = acc;
    }
  }
  return out;
}

BivariateSeries divide_by_unit(const BivariateSeries& num, const BivariateSeries& den) {
  if (den(0, 0) == 0) throw std::domain_error("divide_by_unit: zero constant term");
  const int nx = std::min(num.nx(), den.nx());
  const int ny = std::min(num.ny(), den.ny());
  BivariateSeries q(nx, ny);
  // Solve (q * den)(r,s) = num(r,s) in order of total degree; every term of the
  // convolution other than q(r,s) den(0,0) has lower total degree.
  for (int d = 0; d <= nx + ny; ++d) {
    for (int r = std::max(0, d - ny); r <= std::min(d, nx); ++r) {
      const int s = d - r;
      Rational acc = num(r, s);
      for (int p = 0; p <= r; ++p) {
        for (int t = 0; t <= s; ++t) {
          if ((p == 0 && t == 0) || den(p, t) == 0) continue;
          acc -= den(p, t) * q(r - p, s - t);
        }
      }
      q(r, s) = acc / den(0, 0);
    }
  }
  return q;
}

BivariateSeries integrate_xy(const BivariateSeries& in) {
  BivariateSeries out(in.nx(), in.ny());
  for (int r = 1; r <= in.nx(); ++r) {
    for (int s = 1; s <= in.ny(); ++s) out(r, s) = in(r - 1, s - 1) / Rational(r * s);
  }
  return out;
}

BivariateSeries partial_xy(const BivariateSeries& in) {
  if (in.nx() < 1 || in.ny() < 1) {
    throw std::invalid_argument("partial_xy needs a window of at least 1 in each variable");
  }
  BivariateSeries out(in.nx() - 1, in.ny() - 1);
  for (int r = 0; r <= out.nx(); ++r) {
    for (int s = 0; s <= out.ny(); ++s) out(r, s) = in(r + 1, s + 1) * Rational((r + 1) * (s + 1));
  }
  return out;
}

std::vector<Rational> diagonal_collapse(const BivariateSeries& in) {
  if (in.nx() != in.ny()) throw std::invalid_argument("diagonal_collapse needs a square window");
  std::vector<Rational> out(static_cast<std::size_t>(in.nx()) + 1);
  for (int m = 0; m <= in.nx(); ++m) {
    for (int r = 0; r <= m; ++r) out[m] += in(r, m - r);
  }
  return out;
}

BivariateSeries exp_sum_series(int nx, int ny) {
  return tabulate(nx, ny, [](int r, int s) { return inverse_factorials(r, s); });
}

BivariateSeries exp_x_series(int nx, int ny) {
  return tabulate(nx, ny, [](int r, int s) -> Rational {
    return s == 0 ? inverse_factorials(r, 0) : Rational(0);
  });
}

BivariateSeries exp_y_series(int nx, int ny) {
  return tabulate(nx, ny, [](int r, int s) -> Rational {
    return r == 0 ? inverse_factorials(0, s) : Rational(0);
  });
}

BivariateSeries bessel_i0_series(int nx, int ny) {
  return tabulate(nx, ny, [](int r, int s) -> Rational {
    return r == s ? inverse_factorials(r, r) : Rational(0);
  });
}

BivariateSeries binomial_egf_series(int nx, int ny) {
  return tabulate(nx, ny, [](int r, int s) -> Rational {
    return binomial(r + s, r) * inverse_factorials(r, s);
  });
}

BivariateSeries geometric_series(int nx, int ny) {
  return tabulate(nx, ny, [](int, int) { return Rational(1); });
}

BivariateSeries L_series(int nx, int ny) {
  return tabulate(nx, ny, [](int r, int s) -> Rational {
    if (r == 0 || s == 0) return 0;
    return binomial(r + s - 2, r - 1) * inverse_factorials(r, s);
  });
}

BivariateSeries K_series(int nx, int ny) {
  return tabulate(nx, ny, [](int r, int s) -> Rational {
    return k_closed(r, r + s) * inverse_factorials(r, s);
  });
}

BivariateSeries A_series(int nx, int ny) {
  return tabulate(nx, ny, [](int r, int s) { return a_value(r, s); });
}

std::string to_json(const BivariateSeries& in) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r <= in.nx(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int s = 0; s <= in.ny(); ++s) {
      row.push_back({in(r, s).get_num().get_str(10), in(r, s).get_den().get_str(10)});
    }
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["nx"] = in.nx();
  doc["ny"] = in.ny();
  doc["coeffs"] = std::move(rows);
  return doc.dump();
}

BivariateSeries series_from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    BivariateSeries out(doc.at("nx").get<int>(), doc.at("ny").get<int>());
    const auto& rows = doc.at("coeffs");
    if (rows.size() != static_cast<std::size_t>(out.nx()) + 1) {
      throw std::invalid_argument("series JSON: row count does not match nx");
    }
    for (int r = 0; r <= out.nx(); ++r) {
      const auto& row = rows.at(r);
      if (row.size() != static_cast<std::size_t>(out.ny()) + 1) {
        throw std::invalid_argument("series JSON: column count does not match ny");
      }
      for (int s = 0; s <= out.ny(); ++s) {
        out(r, s) = make_rational(Integer(row.at(s).at(0).get<std::string>(), 10),
                                  Integer(row.at(s).at(1).get<std::string>(), 10));
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("series JSON: ") + e.what());
  }
}

}  // namespace splitperm
