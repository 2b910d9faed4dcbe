#include "genuscount/chi.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

#include "genuscount/classic.hpp"

namespace genuscount {

using nlohmann::json;

ChiArray::ChiArray(int g, std::vector<std::vector<std::pair<BigInt, bool>>> rows)
    : g_(g), rows_(std::move(rows)) {
  if (g < 1) throw std::invalid_argument("ChiArray: genus must be >= 1");
  const int expected = 4 * g - 3;
  if (static_cast<int>(rows_.size()) != expected) {
    throw std::invalid_argument("ChiArray: wrong number of rows");
  }
  for (int t = 0; t < expected; ++t) {
    if (static_cast<int>(rows_[static_cast<std::size_t>(t)].size()) != t + 1) {
      throw std::invalid_argument("ChiArray: row length mismatch");
    }
  }
}

bool ChiArray::known(int t, int s) const {
  if (t < 0 || t >= row_count() || s < 0 || s > t) return false;
  return rows_[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)].second;
}

const BigInt& ChiArray::value(int t, int s) const {
  if (t < 0 || t >= row_count() || s < 0 || s > t) {
    throw std::out_of_range("ChiArray::value: index out of range");
  }
  const auto& entry = rows_[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
  if (!entry.second) throw std::logic_error("ChiArray::value: entry is UNKNOWN");
  return entry.first;
}

BigInt ChiArray::entry_sum() const {
  BigInt sum = 0;
  for (int t = 0; t < row_count(); ++t) {
    for (int s = 0; s <= t; ++s) sum += value(t, s);
  }
  return sum;
}

std::string ChiArray::to_json() const {
  json j;
  j["schema"] = "genuscount/chi-v1";
  j["genus"] = g_;
  json rows = json::array();
  for (int t = 0; t < row_count(); ++t) {
    json row = json::array();
    for (int s = 0; s <= t; ++s) {
      if (known(t, s)) row.push_back(value(t, s).str());
      else row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

ChiArray ChiArray::from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("schema", "") != "genuscount/chi-v1") {
    throw std::invalid_argument("ChiArray: unknown schema");
  }
  const int g = j.at("genus").get<int>();
  std::vector<std::vector<std::pair<BigInt, bool>>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<std::pair<BigInt, bool>> out;
    for (const auto& cell : row) {
      if (cell.is_null()) out.emplace_back(BigInt(0), false);
      else out.emplace_back(parse_bigint(cell.get<std::string>()), true);
    }
    rows.push_back(std::move(out));
  }
  return ChiArray(g, std::move(rows));
}

namespace {

constexpr long kChi2[5][5] = {
    {1},
    {-4, 10},
    {6, -10, -15},
    {-4, -10, 39, -4},
    {1, 10, -15, -4, 8},
};

constexpr long kChi3[9][9] = {
    {1},
    {-8, 68},
    {28, -340, 246},
    {-56, 612, 294, -980},
    {70, -340, -3390, 4480, 245},
    {-56, -340, 5700, -3500, -5530, 1464},
    {28, 612, -3390, -3500, 11020, -1824, -1208},
    {-8, -340, 294, 4480, -5530, -1824, 2944, -16},
    {1, 68, 246, -980, 245, 1464, -1208, -16, 180},
};

// chi^(4): published entries only; 9999999 marks UNKNOWN.  The last row is
// replaced by the closed-form construction at load time.
constexpr long kUnknown = 9999999;
constexpr long kChi4[13][13] = {
    {1},
    {-12, 318},
    {66, -2862, 6831},
    {-220, 11130, -33651, 6072},
    {495, -23850, 30123, 156660, -99693},
    {-792, 28620, kUnknown, kUnknown, kUnknown, kUnknown},
    {924, -13356, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown},
    {-792, -13356, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown},
    {495, 28620, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown},
    {-220, -23850, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown},
    {66, 11130, 30123, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown,
     kUnknown},
    {-12, -2862, -33651, 156660, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown,
     kUnknown, kUnknown},
    {kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown, kUnknown,
     kUnknown, kUnknown, kUnknown, kUnknown},
};

template <std::size_t N>
std::vector<std::vector<std::pair<BigInt, bool>>> load_rows(const long (&data)[N][N]) {
  std::vector<std::vector<std::pair<BigInt, bool>>> rows;
  for (std::size_t t = 0; t < N; ++t) {
    std::vector<std::pair<BigInt, bool>> row;
    for (std::size_t s = 0; s <= t; ++s) {
      if (data[t][s] == kUnknown) row.emplace_back(BigInt(0), false);
      else row.emplace_back(BigInt(data[t][s]), true);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ChiArray chi_array(int g) {
  switch (g) {
    case 1:
      return ChiArray(1, {{{BigInt(1), true}}});
    case 2:
      return ChiArray(2, load_rows(kChi2));
    case 3:
      return ChiArray(3, load_rows(kChi3));
    case 4: {
      auto rows = load_rows(kChi4);
      const RationalPolynomial last = chi_last_line(4);
      for (int s = 0; s <= 12; ++s) {
        rows[12][static_cast<std::size_t>(s)] = {rational_to_int(last.coeff(s)), true};
      }
      return ChiArray(4, std::move(rows));
    }
    default:
      throw std::invalid_argument("chi_array: only 1 <= g <= 4 are available");
  }
}

BigInt chi_column_two_factor(int g) {
  if (g < 1) throw std::invalid_argument("chi_column_two_factor: g must be >= 1");
  return (pow_int(BigInt(4), static_cast<unsigned long>(g) + 1) - 1 - 3 * (6 * g - 1)) / 3;
}

BigInt stirling_genus_denominator(int g) {
  if (g < 1) throw std::invalid_argument("stirling_genus_denominator: g must be >= 1");
  return 12 * BigInt(2 * g - 1) * factorial(6 * g - 5) / factorial(3 * g - 3);
}

std::vector<BigInt> sub_pascal_row(int g) {
  if (g < 2) throw std::invalid_argument("sub_pascal_row: g must be >= 2");
  // (1+x)(1-x)^{4g-6}: palindromic up to sign, length 4(g-1)
  const int m = 4 * g - 6;
  std::vector<BigInt> row(static_cast<std::size_t>(m) + 2, BigInt(0));
  for (int i = 0; i <= m; ++i) {
    const BigInt b = (i % 2 == 0) ? binomial(m, i) : -binomial(m, i);
    row[static_cast<std::size_t>(i)] += b;
    row[static_cast<std::size_t>(i) + 1] += b;
  }
  return row;
}

RationalPolynomial chi_last_line(int g) {
  if (g < 2) throw std::invalid_argument("chi_last_line: g must be >= 2");
  // (1-y)^{4g+1}
  const int m = 4 * g + 1;
  std::vector<Rational> pow_coeffs(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    pow_coeffs[static_cast<std::size_t>(i)] =
        (i % 2 == 0) ? Rational(binomial(m, i)) : Rational(-binomial(m, i));
  }
  // polynomial part of (1-y)^{4g+1} * sum_j c_j y^{-(2g+3+j)}
  std::vector<Rational> acc(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int j = 0; j <= 2 * g - 2; ++j) {
    const Rational cj = Rational(2 * stirling1_signed(2 * g + 2 + j, j + 1),
                                 BigInt(2 * g + j + 2) * (2 * g + j + 1));
    const int shift = 2 * g + 3 + j;
    for (int i = shift; i <= m; ++i) {
      acc[static_cast<std::size_t>(i - shift)] += cj * pow_coeffs[static_cast<std::size_t>(i)];
    }
  }
  RationalPolynomial poly_part{std::vector<Rational>(acc.begin(), acc.end())};
  // times (1-y)^{2(g-1)}
  RationalPolynomial one_minus_y{Rational(1), Rational(-1)};
  RationalPolynomial factor{Rational(1)};
  for (int i = 0; i < 2 * (g - 1); ++i) factor = factor * one_minus_y;
  return factor * poly_part;
}

bool ChiCheckReport::all_pass() const {
  for (const auto& item : items) {
    if (!item.pass) return false;
  }
  return true;
}

std::string ChiCheckReport::to_text() const {
  std::ostringstream out;
  for (const auto& item : items) {
    out << (item.pass ? "[ok]   " : "[FAIL] ") << item.name;
    if (!item.detail.empty()) out << " -- " << item.detail;
    out << '\n';
  }
  return out.str();
}

ChiCheckReport chi_structure_checks(const ChiArray& chi) {
  ChiCheckReport report;
  const int g = chi.genus();
  const int T = chi.last_row();

  {
    ChiCheckItem item{"column symmetry", true, ""};
    for (int s = 0; s <= T && item.pass; ++s) {
      const int len = T - s + 1;  // rows s..T
      for (int i = 0; i < len / 2 + 1; ++i) {
        const int t1 = s + i, t2 = T - i;
        if (t2 < t1) break;
        if (chi.known(t1, s) && chi.known(t2, s) && chi.value(t1, s) != chi.value(t2, s)) {
          item.pass = false;
          item.detail = "column " + std::to_string(s) + " rows " + std::to_string(t1) + "/" +
                        std::to_string(t2);
          break;
        }
      }
    }
    report.items.push_back(std::move(item));
  }

  {
    ChiCheckItem item{"first column = signed binomials", true, ""};
    for (int t = 0; t <= T; ++t) {
      if (!chi.known(t, 0)) continue;
      const BigInt expected = (t % 2 == 0) ? binomial(T, t) : -binomial(T, t);
      if (chi.value(t, 0) != expected) {
        item.pass = false;
        item.detail = "row " + std::to_string(t);
        break;
      }
    }
    report.items.push_back(std::move(item));
  }

  if (g >= 2) {
    ChiCheckItem item{"second column = d(g) * sub-Pascal row", true, ""};
    const BigInt d = chi_column_two_factor(g);
    const std::vector<BigInt> row = sub_pascal_row(g);
    for (int t = 1; t <= T; ++t) {
      if (!chi.known(t, 1)) continue;
      if (chi.value(t, 1) != d * row[static_cast<std::size_t>(t - 1)]) {
        item.pass = false;
        item.detail = "row " + std::to_string(t);
        break;
      }
    }
    report.items.push_back(std::move(item));
  }

  {
    ChiCheckItem item{"last g-1 rows sum to zero", true, ""};
    for (int t = T - (g - 2); t <= T; ++t) {
      if (t < 0 || t > T) continue;
      bool fully_known = true;
      BigInt sum = 0;
      for (int s = 0; s <= t; ++s) {
        if (!chi.known(t, s)) {
          fully_known = false;
          break;
        }
        sum += chi.value(t, s);
      }
      if (fully_known && sum != 0) {
        item.pass = false;
        item.detail = "row " + std::to_string(t) + " sums to " + sum.str();
        break;
      }
    }
    report.items.push_back(std::move(item));
  }

  return report;
}

BigInt contract(const std::vector<std::vector<BigInt>>& a,
                const std::vector<std::vector<BigInt>>& b, int p) {
  if (p < 0) throw std::invalid_argument("contract: p must be >= 0");
  BigInt sum = 0;
  for (int t = 0; t <= p; ++t) {
    if (t >= static_cast<int>(a.size()) || t >= static_cast<int>(b.size())) {
      throw std::invalid_argument("contract: array has fewer rows than p+1");
    }
    for (int s = 0; s <= t; ++s) {
      const auto& row_a = a[static_cast<std::size_t>(t)];
      const auto& row_b = b[static_cast<std::size_t>(t)];
      if (s >= static_cast<int>(row_a.size()) || s >= static_cast<int>(row_b.size())) {
        throw std::invalid_argument("contract: row shorter than required");
      }
      sum += row_a[static_cast<std::size_t>(s)] * row_b[static_cast<std::size_t>(s)];
    }
  }
  return sum;
}

}  // namespace genuscount
