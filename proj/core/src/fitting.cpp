#include "genuscount/fitting.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

#include "genuscount/classic.hpp"
#include "genuscount/series.hpp"

namespace genuscount {

using nlohmann::json;

std::string gf_family_name(GfFamily family) {
  switch (family) {
    case GfFamily::Bell: return "bell";
    case GfFamily::AssocBell: return "assoc-bell";
    case GfFamily::Pairings: return "pairings";
  }
  throw std::logic_error("gf_family_name: bad family");
}

GfFamily gf_family_from_name(const std::string& name) {
  if (name == "bell") return GfFamily::Bell;
  if (name == "assoc-bell" || name == "assoc_bell") return GfFamily::AssocBell;
  if (name == "pairings") return GfFamily::Pairings;
  throw std::invalid_argument("gf_family_from_name: unknown family '" + name + "'");
}

std::string NumeratorFit::to_json() const {
  json j;
  j["schema"] = "genuscount/fit-numerator-v1";
  j["ok"] = ok;
  if (ok) {
    json coeffs = json::array();
    for (int i = 0; i <= numerator.degree(); ++i) {
      coeffs.push_back(rational_to_int(numerator.coeff(i)).str());
    }
    j["numerator"] = std::move(coeffs);
  } else {
    j["first_bad_index"] = first_bad_index;
    j["message"] = message;
  }
  j["provenance"] = {{"consumed_to", consumed_to},
                     {"residual_checked_to", residual_checked_to}};
  return j.dump(2);
}

NumeratorFit fit_numerator(const std::vector<BigInt>& counts, int g, GfFamily family) {
  if (g < 1) throw std::invalid_argument("fit_numerator: g must be >= 1");
  NumeratorFit fit;
  const int prefactor_degree = (family == GfFamily::Pairings) ? 2 * g : 2 * g + 2;
  const int numerator_degree = (family == GfFamily::Pairings) ? g - 1 : 3 * (g - 1);
  const int needed = prefactor_degree + numerator_degree + 2;
  const int N = static_cast<int>(counts.size()) - 1;
  if (N < needed) {
    fit.message = "insufficient data: need coefficients through index " + std::to_string(needed);
    return fit;
  }

  RationalSeries series(N);
  for (int i = 0; i <= N; ++i) series.set(i, Rational(counts[static_cast<std::size_t>(i)]));

  // Multiply by the ansatz denominator; the result must reduce to the bare
  // prefactor times a polynomial of the expected degree.
  RationalSeries cleared(N);
  switch (family) {
    case GfFamily::Bell:
    case GfFamily::Pairings:
      cleared = series * half_power(6 * g - 1, false, N);
      break;
    case GfFamily::AssocBell: {
      RationalSeries delta(N);
      delta.set(0, Rational(1));
      if (N >= 1) delta.set(1, Rational(-2));
      if (N >= 2) delta.set(2, Rational(-3));
      RationalSeries one_plus_x(N);
      one_plus_x.set(0, Rational(1));
      if (N >= 1) one_plus_x.set(1, Rational(1));
      cleared = series * delta.pow_alpha(Rational(6 * g - 1, 2)) / one_plus_x.pow(g - 1);
      break;
    }
  }

  fit.consumed_to = prefactor_degree + numerator_degree;
  fit.residual_checked_to = N;
  for (int i = 0; i < prefactor_degree; ++i) {
    if (cleared.coeff(i) != 0) {
      fit.message = "coefficient below the x^" + std::to_string(prefactor_degree) +
                    " prefactor is nonzero";
      fit.first_bad_index = i;
      return fit;
    }
  }
  for (int i = fit.consumed_to + 1; i <= N; ++i) {
    if (cleared.coeff(i) != 0) {
      fit.message = "excess coefficient beyond the expected numerator degree";
      fit.first_bad_index = i;
      return fit;
    }
  }
  std::vector<Rational> coeffs;
  for (int i = 0; i <= numerator_degree; ++i) coeffs.push_back(cleared.coeff(prefactor_degree + i));
  fit.numerator = RationalPolynomial(std::move(coeffs));
  fit.ok = true;
  return fit;
}

namespace {

// Mirrors the term evaluator in genus_forms.cpp (binomial form of the
// Gamma-ratio); kept separate because the fit side needs it for arbitrary
// (t, s) including cells whose chi entry is unknown.
BigInt gamma_term(long n, long k, int g, int t, int s) {
  const long u = n - k + s - t;
  return factorial(3 * g - 1) * binomial(u + g - 1, u - 2 * g) *
         binomial(n - t + g - 3, k - s - 2) * binomial(n - t + 4 * g - 4, u + g - 1);
}

struct LinearSystem {
  int variables = 0;
  std::vector<std::vector<Rational>> rows;  // each row: variables coefficients + rhs

  void add_row(std::vector<Rational> row) { rows.push_back(std::move(row)); }
};

// Reduced row echelon form, in place.  Returns pivot column per row.
std::vector<int> rref(LinearSystem& sys) {
  std::vector<int> pivots;
  int row = 0;
  const int cols = sys.variables;
  for (int col = 0; col < cols && row < static_cast<int>(sys.rows.size()); ++col) {
    int pivot_row = -1;
    for (int r = row; r < static_cast<int>(sys.rows.size()); ++r) {
      if (sys.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(sys.rows[static_cast<std::size_t>(row)], sys.rows[static_cast<std::size_t>(pivot_row)]);
    auto& prow = sys.rows[static_cast<std::size_t>(row)];
    const Rational inv = Rational(1) / prow[static_cast<std::size_t>(col)];
    for (auto& v : prow) v *= inv;
    for (int r = 0; r < static_cast<int>(sys.rows.size()); ++r) {
      if (r == row) continue;
      auto& other = sys.rows[static_cast<std::size_t>(r)];
      const Rational factor = other[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (std::size_t cidx = 0; cidx < other.size(); ++cidx) {
        other[cidx] -= factor * prow[cidx];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::string ChiFit::to_json() const {
  json j;
  j["schema"] = "genuscount/fit-chi-v1";
  j["consistent"] = consistent;
  j["complete"] = complete;
  if (consistent) j["chi"] = json::parse(array.to_json());
  else j["inconsistency"] = inconsistency;
  json missing = json::array();
  for (const auto& [t, s] : undetermined) missing.push_back({{"t", t}, {"s", s}});
  j["undetermined"] = std::move(missing);
  j["provenance"] = {{"cells_used", cells_used},
                     {"cells_checked", cells_checked},
                     {"max_n_used", max_n_used}};
  return j.dump(2);
}

ChiFit fit_chi(int g, const std::map<std::pair<long, long>, BigInt>& data,
               const ChiAssumptions& assume) {
  if (g < 1) throw std::invalid_argument("fit_chi: g must be >= 1");
  const int T = 4 * (g - 1);
  const int variables = (T + 1) * (T + 2) / 2;
  const auto var_index = [T](int t, int s) {
    (void)T;
    return t * (t + 1) / 2 + s;
  };

  ChiFit fit{false, false, ChiArray(g, [&] {
               std::vector<std::vector<std::pair<BigInt, bool>>> rows;
               for (int t = 0; t <= T; ++t) {
                 rows.emplace_back(static_cast<std::size_t>(t) + 1,
                                   std::make_pair(BigInt(0), false));
               }
               return rows;
             }()),
             {}, "", 0, 0, 0};

  LinearSystem sys;
  sys.variables = variables;
  const BigInt denom = stirling_genus_denominator(g);
  for (const auto& [cell, count] : data) {
    const auto& [n, k] = cell;
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("fit_chi: bad data cell");
    std::vector<Rational> row(static_cast<std::size_t>(variables) + 1, Rational(0));
    bool nontrivial = false;
    for (int t = 0; t <= T; ++t) {
      for (int s = 0; s <= t; ++s) {
        const BigInt term = gamma_term(n, k, g, t, s);
        if (term != 0) {
          row[static_cast<std::size_t>(var_index(t, s))] = Rational(term);
          nontrivial = true;
        }
      }
    }
    row[static_cast<std::size_t>(variables)] = Rational(denom * count);
    if (!nontrivial && count != 0) {
      fit.inconsistency = "cell (" + std::to_string(n) + "," + std::to_string(k) +
                          ") has a nonzero count but every formula term vanishes";
      return fit;
    }
    if (nontrivial) {
      sys.add_row(std::move(row));
      ++fit.cells_used;
      if (n > fit.max_n_used) fit.max_n_used = n;
    }
    ++fit.cells_checked;
  }

  const auto push_fixed = [&](int t, int s, const BigInt& value) {
    std::vector<Rational> row(static_cast<std::size_t>(variables) + 1, Rational(0));
    row[static_cast<std::size_t>(var_index(t, s))] = 1;
    row[static_cast<std::size_t>(variables)] = Rational(value);
    sys.add_row(std::move(row));
  };

  if (assume.column_symmetry) {
    for (int s = 0; s <= T; ++s) {
      for (int i = 0; s + i < T - i; ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(variables) + 1, Rational(0));
        row[static_cast<std::size_t>(var_index(s + i, s))] = 1;
        row[static_cast<std::size_t>(var_index(T - i, s))] -= 1;
        sys.add_row(std::move(row));
      }
    }
  }
  if (assume.first_column) {
    for (int t = 0; t <= T; ++t) {
      push_fixed(t, 0, (t % 2 == 0) ? binomial(T, t) : -binomial(T, t));
    }
  }
  if (assume.second_column && g >= 2) {
    const BigInt d = chi_column_two_factor(g);
    const std::vector<BigInt> sub = sub_pascal_row(g);
    for (int t = 1; t <= T; ++t) push_fixed(t, 1, d * sub[static_cast<std::size_t>(t - 1)]);
  }
  if (assume.last_line && g >= 2) {
    const RationalPolynomial last = chi_last_line(g);
    for (int s = 0; s <= T; ++s) push_fixed(T, s, rational_to_int(last.coeff(s)));
  }

  const std::vector<int> pivots = rref(sys);

  // Inconsistency: a row with zero coefficients but nonzero rhs.
  for (const auto& row : sys.rows) {
    bool all_zero = true;
    for (int c = 0; c < variables; ++c) {
      if (row[static_cast<std::size_t>(c)] != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero && row[static_cast<std::size_t>(variables)] != 0) {
      fit.inconsistency = "data refutes the ansatz: contradictory linear system";
      return fit;
    }
  }
  fit.consistent = true;

  // A pivot variable is pinned when its row involves no free variables.
  std::vector<char> determined(static_cast<std::size_t>(variables), 0);
  std::vector<Rational> solution(static_cast<std::size_t>(variables), Rational(0));
  std::vector<char> is_pivot(static_cast<std::size_t>(variables), 0);
  for (int col : pivots) is_pivot[static_cast<std::size_t>(col)] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const int col = pivots[r];
    const auto& row = sys.rows[r];
    bool depends_on_free = false;
    for (int c = 0; c < variables; ++c) {
      if (c != col && row[static_cast<std::size_t>(c)] != 0 && !is_pivot[static_cast<std::size_t>(c)]) {
        depends_on_free = true;
        break;
      }
      // dependence on another pivot cannot survive RREF
    }
    if (!depends_on_free) {
      determined[static_cast<std::size_t>(col)] = 1;
      solution[static_cast<std::size_t>(col)] = row[static_cast<std::size_t>(variables)];
    }
  }

  std::vector<std::vector<std::pair<BigInt, bool>>> rows;
  bool complete = true;
  for (int t = 0; t <= T; ++t) {
    std::vector<std::pair<BigInt, bool>> out_row;
    for (int s = 0; s <= t; ++s) {
      const int v = var_index(t, s);
      if (determined[static_cast<std::size_t>(v)]) {
        const Rational& value = solution[static_cast<std::size_t>(v)];
        if (boost::multiprecision::denominator(value) != 1) {
          fit.consistent = false;
          fit.inconsistency = "entry (" + std::to_string(t) + "," + std::to_string(s) +
                              ") solves to a non-integer";
          return fit;
        }
        out_row.emplace_back(boost::multiprecision::numerator(value), true);
      } else {
        out_row.emplace_back(BigInt(0), false);
        fit.undetermined.emplace_back(t, s);
        complete = false;
      }
    }
    rows.push_back(std::move(out_row));
  }
  fit.array = ChiArray(g, std::move(rows));
  fit.complete = complete;
  return fit;
}

}  // namespace genuscount
