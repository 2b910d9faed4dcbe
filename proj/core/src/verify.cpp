#include "genuscount/verify.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <sstream>
#include <stdexcept>

#include "genuscount/chi.hpp"
#include "genuscount/classic.hpp"
#include "genuscount/enumerate.hpp"
#include "genuscount/expansions.hpp"
#include "genuscount/fitting.hpp"
#include "genuscount/genus.hpp"
#include "genuscount/genus_forms.hpp"
#include "genuscount/golden.hpp"
#include "genuscount/kappa_series.hpp"
#include "genuscount/pairings.hpp"

namespace genuscount {

using nlohmann::json;

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::ExactMatch: return "exact-match";
    case CheckStatus::ConjectureConfirmed: return "conjecture-confirmed";
    case CheckStatus::Mismatch: return "mismatch";
    case CheckStatus::Unavailable: return "unavailable";
  }
  throw std::logic_error("check_status_name: bad status");
}

std::string CheckRecord::to_text() const {
  std::ostringstream out;
  switch (status) {
    case CheckStatus::Mismatch: out << "[MISMATCH] "; break;
    case CheckStatus::ConjectureConfirmed: out << "[confirmed] "; break;
    case CheckStatus::Unavailable: out << "[n/a]      "; break;
    default: out << "[ok]       "; break;
  }
  out << subject << ": " << method_a << " vs " << method_b << " (" << range << ")";
  if (!first_divergence.empty()) out << " -- first divergence: " << first_divergence;
  return out.str();
}

bool VerificationReport::ok() const {
  for (const auto& r : records) {
    if (r.status == CheckStatus::Mismatch) return false;
  }
  return true;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : records) out << r.to_text() << '\n';
  out << (ok() ? "VERIFICATION PASSED" : "VERIFICATION FAILED") << " (" << records.size()
      << " checks)\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  json j;
  j["schema"] = "genuscount/verification-v1";
  j["ok"] = ok();
  json rows = json::array();
  for (const auto& r : records) {
    rows.push_back({{"group", r.group},
                    {"subject", r.subject},
                    {"method_a", r.method_a},
                    {"method_b", r.method_b},
                    {"range", r.range},
                    {"status", check_status_name(r.status)},
                    {"first_divergence", r.first_divergence}});
  }
  j["checks"] = std::move(rows);
  return j.dump(2);
}

int scope_n_max(Scope scope) {
  switch (scope) {
    case Scope::Fast: return 10;
    case Scope::Standard: return 12;
    case Scope::Extended: return 13;
    case Scope::Full: return 15;
  }
  throw std::logic_error("scope_n_max: bad scope");
}

Scope scope_from_name(const std::string& name) {
  if (name == "fast") return Scope::Fast;
  if (name == "standard") return Scope::Standard;
  if (name == "extended") return Scope::Extended;
  if (name == "full") return Scope::Full;
  throw std::invalid_argument("scope: expected fast|standard|extended|full");
}

std::string scope_name(Scope scope) {
  switch (scope) {
    case Scope::Fast: return "fast";
    case Scope::Standard: return "standard";
    case Scope::Extended: return "extended";
    case Scope::Full: return "full";
  }
  throw std::logic_error("scope_name: bad scope");
}

namespace {

// Shared brute-force results: one full by-type pass per n serves the C, S and
// Shat comparisons plus every count-backed conjecture check.
class VerifyContext {
 public:
  VerifyContext(int n_max, int threads) : n_max_(n_max), threads_(threads) {}

  int n_max() const { return n_max_; }

  const GenusCountTable& types(int n) {
    auto it = tables_.find(n);
    if (it == tables_.end()) {
      it = tables_.emplace(n, count_types(n, 1, threads_)).first;
    }
    return it->second;
  }

  BigInt c_cell(int n, const PartitionType& type, int g) { return types(n).type_count(type, g); }

  BigInt s_cell(int n, int k, int g) {
    BigInt total = 0;
    for (const auto& [key, value] : types(n).counts) {
      if (key.genus == g && key.type.parts() == k) total += value;
    }
    return total;
  }

  BigInt shat_cell(int n, int k, int g) {
    BigInt total = 0;
    for (const auto& [key, value] : types(n).counts) {
      if (key.genus == g && key.type.parts() == k && !key.type.has_singletons()) total += value;
    }
    return total;
  }

  BigInt bell_cell(int n, int g) {
    BigInt total = 0;
    for (const auto& [key, value] : types(n).counts) {
      if (key.genus == g) total += value;
    }
    return total;
  }

  BigInt assoc_bell_cell(int n, int g) {
    BigInt total = 0;
    for (const auto& [key, value] : types(n).counts) {
      if (key.genus == g && !key.type.has_singletons()) total += value;
    }
    return total;
  }

 private:
  int n_max_;
  int threads_;
  std::map<int, GenusCountTable> tables_;
};

class Runner {
 public:
  Runner(VerificationReport& report, const std::function<void(const CheckRecord&)>& progress)
      : report_(report), progress_(progress) {}

  // Reports one record; `mismatch` empty means pass with `pass_status`.
  void record(const std::string& group, const std::string& subject, const std::string& method_a,
              const std::string& method_b, const std::string& range, const std::string& mismatch,
              CheckStatus pass_status = CheckStatus::ExactMatch) {
    CheckRecord r{group,
                  subject,
                  method_a,
                  method_b,
                  range,
                  mismatch.empty() ? pass_status : CheckStatus::Mismatch,
                  mismatch};
    if (progress_) progress_(r);
    report_.records.push_back(std::move(r));
  }

 private:
  VerificationReport& report_;
  const std::function<void(const CheckRecord&)>& progress_;
};

std::string cell_str(long n, long k, int g) {
  std::ostringstream out;
  out << "(n=" << n << ", k=" << k << ", g=" << g << ")";
  return out.str();
}

// ---------- golden tables vs enumeration ----------

void check_golden_vs_enumeration(Runner& run, VerifyContext& ctx) {
  const GoldenData& golden = GoldenData::instance();
  const int n_hi = std::min(ctx.n_max(), 15);

  {
    std::string bad;
    for (int n = 2; n <= n_hi && bad.empty(); ++n) {
      const GoldenCTable* table = golden.find_c(n);
      if (!table) continue;
      // every golden cell matches, and enumeration has no extra no-singleton cells
      for (const auto& row : table->rows) {
        for (int g = 0; g < static_cast<int>(row.counts.size()); ++g) {
          const BigInt brute = ctx.c_cell(n, row.type, g);
          if (brute != row.counts[static_cast<std::size_t>(g)]) {
            bad = "C[" + row.type.key() + "] n=" + std::to_string(n) + " g=" + std::to_string(g) +
                  ": golden " + row.counts[static_cast<std::size_t>(g)].str() + " vs brute " +
                  brute.str();
            break;
          }
        }
        if (!bad.empty()) break;
      }
      for (const auto& [key, value] : ctx.types(n).counts) {
        if (key.type.has_singletons() || value == 0) continue;
        if (golden.c_value(n, key.type, key.genus) != value) {
          bad = "enumeration cell C[" + key.type.key() + "] g=" + std::to_string(key.genus) +
                " missing from golden table n=" + std::to_string(n);
          break;
        }
      }
    }
    run.record("golden", "C-tables", "embedded appendix data", "brute-force enumeration",
               "2<=n<=" + std::to_string(n_hi), bad);
  }
  {
    std::string bad;
    for (int n = 1; n <= n_hi && bad.empty(); ++n) {
      const GoldenSTable* table = golden.find_s(n);
      if (!table) continue;
      for (int k = 1; k <= n && bad.empty(); ++k) {
        for (int g = 0; 2 * g <= n; ++g) {
          const BigInt want = golden.s_value(n, k, g);
          const BigInt brute = ctx.s_cell(n, k, g);
          if (want != brute) {
            bad = "S" + cell_str(n, k, g) + ": golden " + want.str() + " vs brute " + brute.str();
            break;
          }
        }
      }
    }
    run.record("golden", "S-tables", "embedded appendix data", "brute-force enumeration",
               "1<=n<=" + std::to_string(n_hi), bad);
  }
  {
    std::string bad;
    for (int n = 2; n <= n_hi && bad.empty(); ++n) {
      const GoldenSTable* table = golden.find_shat(n);
      if (!table) continue;
      for (int k = 1; 2 * k <= n && bad.empty(); ++k) {
        for (int g = 0; 2 * g <= n; ++g) {
          const BigInt want = golden.shat_value(n, k, g);
          const BigInt brute = ctx.shat_cell(n, k, g);
          if (want != brute) {
            bad = "Shat" + cell_str(n, k, g) + ": golden " + want.str() + " vs brute " +
                  brute.str();
            break;
          }
        }
      }
    }
    run.record("golden", "Shat-tables", "embedded appendix data", "brute-force enumeration",
               "2<=n<=" + std::to_string(n_hi), bad);
  }
  {
    // Table 3: partial rows (printed with "...") are checked on their printed
    // prefix only.
    std::string bad;
    int cells = 0;
    for (const auto& cell : golden.pk_table()) {
      const int n = cell.p * cell.k;
      if (n > ctx.n_max() || !bad.empty()) continue;
      const PartitionType type{{std::map<int, int>{{cell.p, cell.k}}}};
      for (int g = 0; g < static_cast<int>(cell.counts.size()); ++g) {
        if (ctx.c_cell(n, type, g) != cell.counts[static_cast<std::size_t>(g)]) {
          bad = "[p^k] (p=" + std::to_string(cell.p) + ", k=" + std::to_string(cell.k) +
                ", g=" + std::to_string(g) + ")";
          break;
        }
      }
      if (!cell.partial) {
        for (int g = static_cast<int>(cell.counts.size()); 2 * g <= n; ++g) {
          if (ctx.c_cell(n, type, g) != 0) {
            bad = "[p^k] complete row has extra genus entries (p=" + std::to_string(cell.p) +
                  ", k=" + std::to_string(cell.k) + ")";
            break;
          }
        }
      }
      ++cells;
    }
    run.record("golden", "Table 3 ([p^k] rows)", "embedded appendix data",
               "brute-force enumeration",
               "pk<=" + std::to_string(ctx.n_max()) + ", " + std::to_string(cells) +
                   " rows, printed prefixes only",
               bad);
  }
}

// ---------- Table 1: three routes ----------

void check_pairings_table(Runner& run, VerifyContext& ctx) {
  const GoldenData& golden = GoldenData::instance();
  {
    std::string bad;
    for (const auto& [k, counts] : golden.pairings_table()) {
      for (int g = 0; g < static_cast<int>(counts.size()); ++g) {
        if (epsilon(k, g) != counts[static_cast<std::size_t>(g)]) {
          bad = "epsilon(k=" + std::to_string(k) + ", g=" + std::to_string(g) + ")";
          break;
        }
      }
      for (int g = static_cast<int>(counts.size()); 2 * g <= k; ++g) {
        if (epsilon(k, g) != 0) bad = "epsilon nonzero beyond printed row k=" + std::to_string(k);
      }
      if (!bad.empty()) break;
    }
    run.record("pairings-table", "Table 1", "coefficient extraction",
               "embedded appendix data", "k<=8", bad);
  }
  {
    std::string bad;
    for (const auto& [k, counts] : golden.pairings_table()) {
      for (int g = 0; g < static_cast<int>(counts.size()); ++g) {
        if (epsilon_recurrence_hz(k, g) != counts[static_cast<std::size_t>(g)]) {
          bad = "recurrence at (k=" + std::to_string(k) + ", g=" + std::to_string(g) + ")";
          break;
        }
      }
      if (!bad.empty()) break;
    }
    run.record("pairings-table", "Table 1", "Harer-Zagier recurrence", "embedded appendix data",
               "k<=8", bad);
  }
  {
    std::string bad;
    const int k_hi = std::min(ctx.n_max() / 2, 8);
    for (int k = 1; k <= k_hi && bad.empty(); ++k) {
      std::map<int, int> mult{{2, k}};
      const PartitionType pairs{mult};
      for (int g = 0; 2 * g <= k; ++g) {
        if (ctx.c_cell(2 * k, pairs, g) != epsilon(k, g)) {
          bad = "brute force at (k=" + std::to_string(k) + ", g=" + std::to_string(g) + ")";
          break;
        }
      }
    }
    run.record("pairings-table", "Table 1", "brute-force enumeration", "coefficient extraction",
               "2k<=" + std::to_string(2 * (std::min(ctx.n_max() / 2, 8))), bad);
  }
}

// ---------- Table 2 and the two-part machinery ----------

void check_twopart(Runner& run) {
  const GoldenData& golden = GoldenData::instance();
  {
    std::string bad;
    for (const auto& [n, counts] : golden.twopart_table()) {
      for (int g = 0; g <= (n - 1) / 2 + 1 && bad.empty(); ++g) {
        const BigInt want =
            g < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(g)] : BigInt(0);
        if (two_part(n, 5, g) != want) {
          bad = "two_part(n=" + std::to_string(n) + ", p=5, g=" + std::to_string(g) + ")";
        }
      }
    }
    run.record("twopart-table", "Table 2", "two-part closed form", "embedded appendix data",
               "6<=n<=15", bad);
  }
  {
    std::string bad;
    for (long n = 2; n <= 20 && bad.empty(); ++n) {
      for (long p = 1; p < n && bad.empty(); ++p) {
        for (int g = 0; g <= static_cast<int>(n) && bad.empty(); ++g) {
          if (two_part(n, p, g) != two_part_transfer(n, p, g)) {
            bad = "(n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                  ", g=" + std::to_string(g) + ")";
          }
        }
      }
    }
    run.record("twopart-table", "two-part counts", "closed form", "transfer-matrix oracle",
               "1<=p<n<=20, all g", bad);
  }
  {
    std::string bad;
    for (long n = 4; n <= 20 && bad.empty(); ++n) {
      for (long p = 2; p <= n - 2 && bad.empty(); ++p) {
        BigInt total = 0;
        for (int g = 0; g <= static_cast<int>(n); ++g) total += two_part(n, p, g);
        const BigInt want = (n == 2 * p)
                                ? faa_di_bruno(n, PartitionType::from_parts({static_cast<int>(p),
                                                                             static_cast<int>(p)}))
                                : binomial(n, p);
        if (total != want) {
          bad = "(n=" + std::to_string(n) + ", p=" + std::to_string(p) + "): sum " + total.str() +
                " vs " + want.str();
        }
      }
    }
    run.record("twopart-table", "two-part genus sum", "sum over genus",
               "binomial (Vandermonde)", "2<=p<=n-2, n<=20", bad);
  }
  {
    std::string bad;
    for (int g = 0; g <= 3 && bad.empty(); ++g) {
      const LaurentBiSeries gf = two_part_gf(g, 16);
      for (long n = 2; n <= 16 && bad.empty(); ++n) {
        for (long p = 1; p < n; ++p) {
          if (two_part_gf_count(gf, n, p) != two_part(n, p, g)) {
            bad = "gf count (n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                  ", g=" + std::to_string(g) + ")";
            break;
          }
        }
      }
      // v = 1 row sums collapse to the S_{n,2} generating function
      for (long n = 2 * g + 2; n <= 16 && bad.empty(); ++n) {
        Rational total = 0;
        for (const auto& [w, c] : gf.by_x[static_cast<std::size_t>(n)]) total += c;
        if (total != Rational(stirling_k2(n, g))) {
          bad = "v=1 specialization at (n=" + std::to_string(n) + ", g=" + std::to_string(g) + ")";
        }
      }
    }
    run.record("twopart-table", "two-part G.F.", "Laurent expansion", "closed form / S_{n,2}",
               "n<=16, g<=3", bad);
  }
}

// ---------- generating functions vs closed forms and counts ----------

void check_gf(Runner& run, VerifyContext& ctx) {
  {
    std::string bad;
    for (int g = 0; g <= 3 && bad.empty(); ++g) {
      const BoundedSeries gf = expand_bell_gf(g, 15);
      for (int n = 1; n <= 15; ++n) {
        const FormulaResult direct = bell_genus(n, g);
        if (gf.coeff_int(n) != direct.value) {
          bad = "B^(" + std::to_string(g) + ") at n=" + std::to_string(n);
          break;
        }
      }
    }
    run.record("gf", "bell G.F.", "series expansion", "closed forms", "g<=3, n<=15", bad);
  }
  {
    std::string bad;
    for (int g = 0; g <= 3 && bad.empty(); ++g) {
      const BoundedSeries gf = expand_bell_gf(g, 15);
      const BoundedBiSeries s = expand_stirling_gf(g, 15);
      for (int n = 1; n <= 15; ++n) {
        BigInt row = 0;
        for (int k = 0; k <= n; ++k) row += s.coeff_int(n, k);
        if (row != gf.coeff_int(n)) {
          bad = "S^(" + std::to_string(g) + ")(x,1) at n=" + std::to_string(n);
          break;
        }
      }
    }
    run.record("gf", "stirling G.F. at y=1", "bivariate expansion", "bell G.F.",
               "g<=3, n<=15", bad);
  }
  {
    std::string bad;
    const GoldenData& golden = GoldenData::instance();
    for (int g = 0; g <= 3 && bad.empty(); ++g) {
      const BoundedBiSeries s = expand_stirling_gf(g, 15);
      for (int n = 1; n <= 15 && bad.empty(); ++n) {
        for (int k = 1; k <= n; ++k) {
          if (s.coeff_int(n, k) != golden.s_value(n, k, g)) {
            bad = "S" + cell_str(n, k, g);
            break;
          }
        }
      }
    }
    run.record("gf", "stirling G.F. cells", "bivariate expansion", "embedded appendix data",
               "g<=3, n<=15", bad);
  }
  {
    std::string bad;
    const GoldenData& golden = GoldenData::instance();
    for (int g = 0; g <= 2 && bad.empty(); ++g) {
      const BoundedBiSeries s = expand_assoc_stirling_gf(g, 15);
      for (int n = 2; n <= 15 && bad.empty(); ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
          if (s.coeff_int(n, k) != golden.shat_value(n, k, g)) {
            bad = "Shat" + cell_str(n, k, g);
            break;
          }
        }
      }
    }
    run.record("gf", "associated stirling G.F.", "bivariate expansion",
               "embedded appendix data", "g<=2, n<=15", bad);
  }
  {
    std::string bad;
    for (int g = 0; g <= 3 && bad.empty(); ++g) {
      const BoundedSeries gf = expand_assoc_bell_gf(g, 15);
      for (int n = 0; n <= gf.valid_to; ++n) {
        const FormulaResult rec = assoc_bell_genus(n, g);
        if (!rec.available()) continue;
        if (gf.coeff_int(n) != rec.value) {
          bad = "iB^(" + std::to_string(g) + ") at n=" + std::to_string(n);
          break;
        }
      }
    }
    run.record("gf", "associated bell G.F.", "series expansion", "removal recurrence",
               "g<=3, n<=15", bad);
  }
  {
    const int n_hi = std::min(ctx.n_max(), 10);
    std::string bad;
    const KappaSeries z0 = solve_Z0(n_hi, n_hi);
    for (int n = 1; n <= n_hi && bad.empty(); ++n) {
      for (const auto& [key, value] : ctx.types(n).counts) {
        if (key.genus != 0) continue;
        if (z0.coeff(n, key.type) != Rational(value)) {
          bad = "Z0[" + key.type.key() + "] at n=" + std::to_string(n);
          break;
        }
      }
      for (const auto& [type, value] : z0.slice(n)) {
        if (Rational(ctx.types(n).type_count(type, 0)) != value) {
          bad = "Z0 spurious [" + type.key() + "] at n=" + std::to_string(n);
          break;
        }
      }
    }
    run.record("gf", "planar functional equation Z0", "fixed-point solution",
               "brute-force enumeration", "all types, n<=" + std::to_string(n_hi), bad);

    std::string bad1;
    const KappaSeries z1 = solve_Z1(n_hi, n_hi);
    for (int n = 1; n <= n_hi && bad1.empty(); ++n) {
      for (const auto& [key, value] : ctx.types(n).counts) {
        if (key.genus != 1) continue;
        if (z1.coeff(n, key.type) != Rational(value)) {
          bad1 = "Z1[" + key.type.key() + "] at n=" + std::to_string(n);
          break;
        }
      }
      for (const auto& [type, value] : z1.slice(n)) {
        if (Rational(ctx.types(n).type_count(type, 1)) != value) {
          bad1 = "Z1 spurious [" + type.key() + "] at n=" + std::to_string(n);
          break;
        }
      }
    }
    run.record("gf", "genus-1 G.F. Z1", "assembled closed form", "brute-force enumeration",
               "all types, n<=" + std::to_string(n_hi), bad1);
  }
}

// ---------- fits ----------

void check_fits(Runner& run, VerifyContext& ctx, bool include_chi_fit) {
  {
    std::string bad;
    std::vector<BigInt> counts;
    for (int n = 0; n <= 16; ++n) counts.push_back(n == 0 ? BigInt(0) : bell_genus(n, 2).value);
    const NumeratorFit fit = fit_numerator(counts, 2, GfFamily::Bell);
    if (!fit.ok || fit.numerator.coeff(0) != 1 || fit.numerator.coeff(1) != 6 ||
        fit.numerator.coeff(2) != -19 || fit.numerator.coeff(3) != 21 ||
        fit.numerator.degree() != 3) {
      bad = "B^(2) numerator";
    }
    run.record("fit", "fit_numerator B^(2)", "ansatz division", "published numerator",
               "n<=16", bad);
  }
  {
    std::string bad;
    std::vector<BigInt> counts;
    for (int n = 0; n <= 16; ++n) counts.push_back(assoc_bell_genus(n, 2).value);
    const NumeratorFit fit = fit_numerator(counts, 2, GfFamily::AssocBell);
    if (!fit.ok || fit.numerator.coeff(0) != 1 || fit.numerator.coeff(1) != 9 ||
        fit.numerator.coeff(2) != -4 || fit.numerator.coeff(3) != 9) {
      bad = "iB^(2) numerator";
    }
    run.record("fit", "fit_numerator iB^(2)", "ansatz division", "published numerator",
               "n<=16", bad);
  }
  {
    std::string bad;
    std::vector<BigInt> counts;
    for (int k = 0; k <= 10; ++k) counts.push_back(k == 0 ? BigInt(0) : epsilon(k, 2));
    const NumeratorFit fit = fit_numerator(counts, 2, GfFamily::Pairings);
    if (!fit.ok || fit.numerator.coeff(0) != 21 || fit.numerator.coeff(1) != 21 ||
        fit.numerator.degree() != 1) {
      bad = "Q^(2)";
    }
    run.record("fit", "fit_numerator Q^(2)", "ansatz division", "published polynomial",
               "k<=10", bad);
  }
  if (include_chi_fit) {
    std::string bad;
    std::map<std::pair<long, long>, BigInt> data;
    const int n_hi = std::min(ctx.n_max(), 12);
    for (long n = 6; n <= n_hi; ++n) {
      for (long k = 2; k <= n; ++k) data[{n, k}] = ctx.s_cell(static_cast<int>(n),
                                                              static_cast<int>(k), 2);
    }
    const ChiFit fit = fit_chi(2, data);
    if (!fit.consistent || !fit.complete) {
      bad = "chi(2) system not fully determined from brute-force data";
    } else {
      const ChiArray want = chi_array(2);
      for (int t = 0; t <= 4 && bad.empty(); ++t) {
        for (int s = 0; s <= t; ++s) {
          if (fit.array.value(t, s) != want.value(t, s)) {
            bad = "chi(2) entry (" + std::to_string(t) + "," + std::to_string(s) + ")";
            break;
          }
        }
      }
    }
    run.record("fit", "fit_chi g=2", "linear solve on brute-force data", "published chi array",
               "n<=" + std::to_string(n_hi), bad);
  }
}

// ---------- Q polynomials ----------

void check_qpoly(Runner& run) {
  {
    std::string bad;
    // published factored forms
    const std::vector<std::vector<BigInt>> published = {
        {1},
        {21, 21},
        {BigInt(11) * 135, BigInt(11) * 558, BigInt(11) * 158},
        {BigInt(143) * 1575, BigInt(143) * 13689, BigInt(143) * 18378, BigInt(143) * 2339},
        {BigInt(12597) * 4725, BigInt(12597) * 67620, BigInt(12597) * 201348,
         BigInt(12597) * 132356, BigInt(12597) * 9478},
    };
    for (int g = 1; g <= 5 && bad.empty(); ++g) {
      const RationalPolynomial q = Q_poly(g);
      const auto& want = published[static_cast<std::size_t>(g - 1)];
      if (q.degree() != static_cast<int>(want.size()) - 1) {
        bad = "Q^(" + std::to_string(g) + ") degree";
        break;
      }
      for (int r = 0; r < static_cast<int>(want.size()); ++r) {
        if (q.coeff(r) != Rational(want[static_cast<std::size_t>(r)])) {
          bad = "Q^(" + std::to_string(g) + ") coefficient of u^" + std::to_string(r);
          break;
        }
      }
    }
    run.record("qpoly", "Q polynomials", "coefficient recurrence", "published factored forms",
               "g<=5", bad);
  }
  {
    std::string bad;
    for (int g = 1; g <= 8; ++g) {
      if (Q_poly(g).coeff(0) != Rational(pairings_q0(g))) {
        bad = "Q^(" + std::to_string(g) + ")(0)";
        break;
      }
    }
    run.record("qpoly", "Q(0) values", "coefficient recurrence", "(4g)!/(2^{2g}(2g+1)!)",
               "g<=8", bad);
  }
  {
    std::string bad;
    for (int g = 1; g <= 5 && bad.empty(); ++g) {
      const RationalSeries gf = pairings_gf(g, 20);
      if (gf.coeff(0) != 0) bad = "pairings G.F. constant term (g=" + std::to_string(g) + ")";
      for (int k = 1; k <= 20 && bad.empty(); ++k) {
        if (gf.coeff(k) != Rational(epsilon(k, g))) {
          bad = "pairings G.F. coefficient (k=" + std::to_string(k) + ", g=" + std::to_string(g) +
                ")";
        }
      }
    }
    run.record("qpoly", "pairings G.F.", "series expansion", "coefficient extraction",
               "g<=5, k<=20", bad);
  }
}

// ---------- conjecture confirmations ----------

void check_conjectures(Runner& run, VerifyContext& ctx) {
  const int n_max = ctx.n_max();
  {
    std::string bad;
    for (int n = 1; n <= n_max && bad.empty(); ++n) {
      if (bell_genus(n, 3).value != ctx.bell_cell(n, 3)) bad = "B^(3) at n=" + std::to_string(n);
    }
    run.record("conjecture", "B^(3) closed form", "conjectured formula",
               "brute-force enumeration", "n<=" + std::to_string(n_max), bad,
               CheckStatus::ConjectureConfirmed);
  }
  {
    std::string bad;
    for (int n = 10; n <= std::min(n_max, 15) && bad.empty(); ++n) {
      if (bell_genus(n, 4).value != ctx.bell_cell(n, 4)) bad = "B^(4) at n=" + std::to_string(n);
    }
    run.record("conjecture", "B^(4) values", "conjectured values", "brute-force enumeration",
               "10<=n<=" + std::to_string(std::min(n_max, 15)), bad,
               CheckStatus::ConjectureConfirmed);
  }
  {
    std::string bad;
    for (int n = 1; n <= n_max && bad.empty(); ++n) {
      for (int k = 1; k <= n; ++k) {
        const FormulaResult f = stirling_genus(n, k, 3);
        if (f.value != ctx.s_cell(n, k, 3)) {
          bad = "S^(3)" + cell_str(n, k, 3);
          break;
        }
      }
    }
    run.record("conjecture", "S^(3) via chi(3)", "chi-contraction formula",
               "brute-force enumeration", "n<=" + std::to_string(n_max), bad,
               CheckStatus::ConjectureConfirmed);
  }
  {
    std::string bad;
    for (int n = 1; n <= n_max && bad.empty(); ++n) {
      for (int k = 1; k <= n; ++k) {
        const FormulaResult f = stirling_genus(n, k, 4);
        if (!f.available()) continue;
        if (f.value != ctx.s_cell(n, k, 4)) {
          bad = "S^(4)" + cell_str(n, k, 4);
          break;
        }
      }
    }
    run.record("conjecture", "S^(4) via partial chi(4)", "chi-contraction formula",
               "brute-force enumeration", "computable cells, n<=" + std::to_string(n_max), bad,
               CheckStatus::ConjectureConfirmed);
  }
  {
    std::string bad;
    for (int g = 0; 2 * g + 3 <= n_max && bad.empty(); ++g) {
      for (int n = 3; n <= n_max; ++n) {
        if (stirling_k3_conjecture(n, g).value != ctx.s_cell(n, 3, g)) {
          bad = "k=3 ansatz (n=" + std::to_string(n) + ", g=" + std::to_string(g) + ")";
          break;
        }
      }
    }
    run.record("conjecture", "k=3 ansatz", "conjectured closed form", "brute-force enumeration",
               "n<=" + std::to_string(n_max) + ", all g", bad, CheckStatus::ConjectureConfirmed);
  }
  {
    std::string bad;
    for (int p = 2; p <= 7 && bad.empty(); ++p) {
      for (int k = 2; k <= 7; ++k) {
        if (p * k > n_max) continue;
        const PartitionType type{{std::map<int, int>{{p, k}}}};
        const FormulaResult f = pk_genus1(p, k);
        if (f.value != ctx.c_cell(p * k, type, 1)) {
          bad = "[p^k] genus 1 (p=" + std::to_string(p) + ", k=" + std::to_string(k) + ")";
          break;
        }
      }
    }
    run.record("conjecture", "[p^k] genus-1 formulas", "pentagonal-factor formulas",
               "brute-force enumeration", "pk<=" + std::to_string(n_max), bad,
               CheckStatus::ConjectureConfirmed);
  }
  {
    std::string bad;
    for (int p = 2; p <= 7 && bad.empty(); ++p) {
      for (int k = 3; k <= 5; ++k) {
        if (p * k > n_max) continue;
        const PartitionType type{{std::map<int, int>{{p, k}}}};
        const FormulaResult f = pk_genus2(p, k);
        if (f.value != ctx.c_cell(p * k, type, 2)) {
          bad = "[p^k] genus 2 (p=" + std::to_string(p) + ", k=" + std::to_string(k) + ")";
          break;
        }
      }
    }
    run.record("conjecture", "[p^k] genus-2 formulas", "conjectured polynomials",
               "brute-force enumeration", "pk<=" + std::to_string(n_max), bad,
               CheckStatus::ConjectureConfirmed);
  }
  {
    std::string bad;
    for (int n = 3; n <= n_max && bad.empty(); ++n) {
      for (int p = 1; p < n && bad.empty(); ++p) {
        for (int q = p; p + q < n; ++q) {
          const int r = n - p - q;
          if (q > r) continue;  // canonical p<=q<=r
          std::vector<int> parts{p, q, r};
          const PartitionType type = PartitionType::from_parts(parts);
          for (int g = 0; g <= 1; ++g) {
            if (three_part(n, p, q, g).value != ctx.c_cell(n, type, g)) {
              bad = "three-part (n=" + std::to_string(n) + ", [" + type.key() + "], g=" +
                    std::to_string(g) + ")";
              break;
            }
          }
        }
      }
    }
    run.record("conjecture", "three-part formulas", "closed forms (genus 0,1)",
               "brute-force enumeration", "n<=" + std::to_string(n_max), bad,
               CheckStatus::ConjectureConfirmed);
  }
  {
    std::string bad;
    const BoundedBiSeries s = expand_assoc_stirling_gf(2, std::min(n_max, 15));
    for (int n = 2; n <= std::min(n_max, 15) && bad.empty(); ++n) {
      for (int k = 1; 2 * k <= n; ++k) {
        if (s.coeff_int(n, k) != ctx.shat_cell(n, k, 2)) {
          bad = "Shat^(2)" + cell_str(n, k, 2);
          break;
        }
      }
    }
    run.record("conjecture", "Shat^(2) G.F.", "bivariate expansion", "brute-force enumeration",
               "n<=" + std::to_string(std::min(n_max, 15)), bad,
               CheckStatus::ConjectureConfirmed);
  }
}

// ---------- structural invariants ----------

void check_structural(Runner& run, VerifyContext& ctx) {
  const int n_max = ctx.n_max();
  {
    std::string bad;
    for (int n = 1; n <= std::min(n_max, 12) && bad.empty(); ++n) {
      for (const auto& [key, value] : ctx.types(n).counts) {
        const int k = key.type.parts();
        const int g = key.genus;
        if (value == 0) continue;
        if (2 * g > n - k || (g > 0 && n < 2 * g + k)) {
          bad = "bound violated at n=" + std::to_string(n) + " [" + key.type.key() + "] g=" +
                std::to_string(g);
          break;
        }
      }
    }
    run.record("structural", "genus bounds", "enumerated cells", "g<=(n-k)/2 and n>=2g+k",
               "n<=" + std::to_string(std::min(n_max, 12)), bad);
  }
  {
    std::string bad;
    for (int n = 2; n <= std::min(n_max, 12) && bad.empty(); ++n) {
      visit_partitions(n, Constraint::with_parts(2), [&](const SetPartition& p) {
        const TwoPartStats stats = two_part_stats(p);
        if (stats.f_prime != 1) {
          bad = "f' != 1 for " + p.to_text();
          return false;
        }
        const int q = static_cast<int>(p.block(0).size());
        if (genus_of(p) != q - stats.s1 - 1) {
          bad = "g != p - s1 - 1 for " + p.to_text();
          return false;
        }
        return true;
      });
    }
    run.record("structural", "two-block lemma", "exhaustive two-block partitions",
               "f'=1 and g=p-s1-1", "n<=" + std::to_string(std::min(n_max, 12)), bad);
  }
  {
    std::string bad;
    const int hi = std::min(n_max, 11);
    for (int n = 2; n <= hi && bad.empty(); ++n) {
      for (const auto& [key, value] : ctx.types(n).counts) {
        const int r = key.type.multiplicity(1);
        if (r < 1 || r > 3) continue;
        const PartitionType stripped = key.type.without_singletons(r);
        if (stripped.empty()) continue;
        const BigInt want = binomial(n, r) * ctx.c_cell(n - r, stripped, key.genus);
        if (value != want) {
          bad = "singleton removal at n=" + std::to_string(n) + " [" + key.type.key() + "] g=" +
                std::to_string(key.genus);
          break;
        }
      }
    }
    run.record("structural", "singleton-removal identity",
               "C(n,[1^r a']) vs binom(n,r) C(n-r,[a'])", "enumerated cells",
               "n<=" + std::to_string(hi) + ", r<=3", bad);
  }
  {
    std::string bad;
    for (int n = 1; n <= std::min(n_max, 12) && bad.empty(); ++n) {
      if (ctx.types(n).total() != bell(n)) bad = "Bell sum at n=" + std::to_string(n);
      for (int k = 1; k <= n; ++k) {
        BigInt s = 0, sh = 0;
        for (int g = 0; 2 * g <= n; ++g) {
          s += ctx.s_cell(n, k, g);
          sh += ctx.shat_cell(n, k, g);
        }
        if (s != stirling2(n, k)) {
          bad = "Stirling sum at " + cell_str(n, k, -1);
          break;
        }
        if (sh != ward(n, k)) {
          bad = "Ward sum at " + cell_str(n, k, -1);
          break;
        }
      }
      for (const auto& [key, value] : ctx.types(n).counts) {
        BigInt total = 0;
        for (int g = 0; 2 * g <= n; ++g) total += ctx.c_cell(n, key.type, g);
        if (total != faa_di_bruno(n, key.type)) {
          bad = "Faa di Bruno sum at n=" + std::to_string(n) + " [" + key.type.key() + "]";
          break;
        }
      }
    }
    run.record("structural", "genus sum rules", "enumerated tables",
               "Bell / Stirling / Ward / Faa di Bruno", "n<=" + std::to_string(std::min(n_max, 12)),
               bad);
  }
  {
    std::string bad;
    const int hi = std::min(n_max, 11);
    for (int n = 1; n <= hi && bad.empty(); ++n) {
      BigInt bhat_n = 0, bhat_n1 = 0;
      for (int g = 0; 2 * g <= n + 1; ++g) {
        bhat_n += ctx.assoc_bell_cell(n, g);
        bhat_n1 += ctx.assoc_bell_cell(n + 1, g);
      }
      if (bhat_n + bhat_n1 != bell(n)) bad = "B_n = iB_n + iB_{n+1} at n=" + std::to_string(n);
    }
    run.record("structural", "associated-number identity", "enumerated no-singleton counts",
               "B_n = iB_n + iB_{n+1}", "n<=" + std::to_string(hi), bad);
  }
  {
    std::string bad;
    const int hi = std::min(n_max, 11);
    for (int n = 6; n <= hi && bad.empty(); ++n) {
      const GenusCountTable serial = count_partitions(n, Constraint::none(), TableMode::ByGenus, 1);
      for (int depth : {2, 4, 6}) {
        if (depth >= n) continue;
        const GenusCountTable par =
            count_partitions(n, Constraint::none(), TableMode::ByGenus, 4, depth);
        if (!serial.same_counts(par)) {
          bad = "depth " + std::to_string(depth) + " at n=" + std::to_string(n);
          break;
        }
      }
    }
    run.record("structural", "parallel determinism", "split+merge counts", "serial counts",
               "n<=" + std::to_string(hi) + ", depths {2,4,6}", bad);
  }
  {
    std::string bad;
    for (int g = 2; g <= 4; ++g) {
      if (!chi_structure_checks(chi_array(g)).all_pass()) {
        bad = "chi(" + std::to_string(g) + ")";
        break;
      }
    }
    run.record("structural", "chi structural checks", "column symmetry/binomials/sums",
               "published arrays", "g=2,3,4", bad);
  }
}

// ---------- golden internal audit (no enumeration; catches transcription slips) ----------

void check_golden_audit(Runner& run) {
  const GoldenData& golden = GoldenData::instance();
  std::string bad;
  for (const auto& table : golden.c_tables()) {
    const int n = table.n;
    for (const auto& row : table.rows) {
      BigInt sum = 0;
      for (const auto& v : row.counts) sum += v;
      if (sum != faa_di_bruno(n, row.type)) {
        bad = "C row sum n=" + std::to_string(n) + " [" + row.type.key() + "]";
        break;
      }
    }
    if (!bad.empty()) break;
    // Shat consistency
    for (const auto& srow : golden.find_shat(n)->rows) {
      for (int g = 0; 2 * g <= n; ++g) {
        BigInt total = 0;
        for (const auto& row : table.rows) {
          if (row.type.parts() == srow.k && g < static_cast<int>(row.counts.size())) {
            total += row.counts[static_cast<std::size_t>(g)];
          }
        }
        if (total != golden.shat_value(n, srow.k, g)) {
          bad = "C/Shat consistency " + cell_str(n, srow.k, g);
          break;
        }
      }
      if (!bad.empty()) break;
    }
    if (!bad.empty()) break;
  }
  if (bad.empty()) {
    // singleton-dressing: S_{n,k}^g = sum_r binom(n,r) Shat_{n-r,k-r}^g, with
    // Shat_{0,0}^0 = 1 and Shat vanishing for n < 2k.
    const auto shat_conv = [&golden](int m, int kk, int g) -> BigInt {
      if (kk == 0) return (m == 0 && g == 0) ? 1 : 0;
      if (m < 2 * kk) return 0;
      return golden.shat_value(m, kk, g);
    };
    for (const auto& table : golden.s_tables()) {
      const int n = table.n;
      for (const auto& row : table.rows) {
        BigInt sum = 0;
        for (const auto& v : row.counts) sum += v;
        if (sum != stirling2(n, row.k)) {
          bad = "S row sum " + cell_str(n, row.k, -1);
          break;
        }
        for (int g = 0; 2 * g <= n; ++g) {
          BigInt want = 0;
          for (int r = 0; r <= row.k; ++r) want += binomial(n, r) * shat_conv(n - r, row.k - r, g);
          const BigInt have = g < static_cast<int>(row.counts.size())
                                  ? row.counts[static_cast<std::size_t>(g)]
                                  : BigInt(0);
          if (want != have) {
            bad = "S/Shat dressing " + cell_str(n, row.k, g);
            break;
          }
        }
        if (!bad.empty()) break;
      }
      if (!bad.empty()) break;
    }
  }
  if (bad.empty()) {
    for (const auto& table : golden.shat_tables()) {
      for (const auto& row : table.rows) {
        BigInt sum = 0;
        for (const auto& v : row.counts) sum += v;
        if (sum != ward(table.n, row.k)) {
          bad = "Shat row sum " + cell_str(table.n, row.k, -1);
          break;
        }
      }
      if (!bad.empty()) break;
    }
  }
  if (bad.empty()) {
    for (const auto& [k, counts] : golden.pairings_table()) {
      BigInt sum = 0;
      for (const auto& v : counts) sum += v;
      if (sum != double_factorial_odd(k)) {
        bad = "Table 1 row sum k=" + std::to_string(k);
        break;
      }
    }
  }
  if (bad.empty()) {
    for (const auto& cell : golden.pk_table()) {
      if (cell.partial) continue;
      BigInt sum = 0;
      for (const auto& v : cell.counts) sum += v;
      const PartitionType type{{std::map<int, int>{{cell.p, cell.k}}}};
      if (sum != faa_di_bruno(cell.p * cell.k, type)) {
        bad = "Table 3 row sum p=" + std::to_string(cell.p) + " k=" + std::to_string(cell.k);
        break;
      }
    }
  }
  run.record("audit", "golden transcription audit", "embedded tables",
             "classical sum rules + cross-table identities", "all embedded data", bad);
}

}  // namespace

VerificationReport run_verification(Scope scope, int threads,
                                    const std::function<void(const CheckRecord&)>& progress) {
  VerificationReport report;
  Runner run(report, progress);
  VerifyContext ctx(scope_n_max(scope), threads);

  check_golden_audit(run);
  check_golden_vs_enumeration(run, ctx);
  check_pairings_table(run, ctx);
  check_twopart(run);
  check_gf(run, ctx);
  check_fits(run, ctx, scope != Scope::Fast);
  check_qpoly(run);
  check_conjectures(run, ctx);
  check_structural(run, ctx);

  return report;
}

}  // namespace genuscount
