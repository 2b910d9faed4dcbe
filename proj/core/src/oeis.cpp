#include "genuscount/oeis.hpp"

#include <sstream>

#include "genuscount/classic.hpp"
#include "genuscount/genus_forms.hpp"
#include "genuscount/pairings.hpp"

namespace genuscount {

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream parts(line.substr(start));
    long index = 0;
    std::string value;
    if (!(parts >> index >> value)) {
      throw std::invalid_argument("b-file: malformed data line " + std::to_string(line_no));
    }
    std::string rest;
    if (parts >> rest) {
      throw std::invalid_argument("b-file: trailing tokens on line " + std::to_string(line_no));
    }
    try {
      entries.push_back({index, parse_bigint(value)});
    } catch (const std::exception&) {
      throw std::invalid_argument("b-file: bad integer on line " + std::to_string(line_no));
    }
  }
  return entries;
}

std::vector<BFileEntry> parse_bfile_text(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

std::string OeisReport::to_text() const {
  std::ostringstream out;
  out << sequence << ": ";
  if (diverged) {
    out << "DIVERGES at index " << first_divergence_index << " (file " << expected
        << ", generated " << actual << ") after " << compared << " matching terms";
  } else {
    out << compared << " terms match";
    if (skipped) out << " (" << skipped << " outside generator domain)";
  }
  return out.str();
}

OeisReport oeis_check(const std::vector<BFileEntry>& entries, const SequenceGenerator& generator,
                      const std::string& sequence_id, long index_shift, long max_terms) {
  OeisReport report;
  report.sequence = sequence_id;
  long done = 0;
  for (const auto& entry : entries) {
    if (max_terms >= 0 && done >= max_terms) break;
    ++done;
    const std::optional<BigInt> generated = generator(entry.index + index_shift);
    if (!generated) {
      ++report.skipped;
      continue;
    }
    if (*generated != entry.value) {
      report.diverged = true;
      report.first_divergence_index = entry.index;
      report.expected = entry.value.str();
      report.actual = generated->str();
      return report;
    }
    ++report.compared;
  }
  return report;
}

namespace {

std::vector<OeisBinding> make_bindings() {
  std::vector<OeisBinding> bindings;
  bindings.push_back({"A000108", "Catalan numbers C_i = B_i^(0)", [](long i) -> std::optional<BigInt> {
                        if (i < 0) return std::nullopt;
                        return catalan(i);
                      }});
  bindings.push_back({"A000110", "Bell numbers B_i", [](long i) -> std::optional<BigInt> {
                        if (i < 0) return std::nullopt;
                        return bell(i);
                      }});
  bindings.push_back({"A000296", "associated Bell numbers iB_i", [](long i) -> std::optional<BigInt> {
                        if (i < 0) return std::nullopt;
                        return assoc_bell(i);
                      }});
  bindings.push_back({"A005043", "Riordan numbers iB_i^(0)", [](long i) -> std::optional<BigInt> {
                        if (i < 0) return std::nullopt;
                        return assoc_bell_genus(i, 0).value;
                      }});
  bindings.push_back(
      {"A002802", "B_{i+4}^(1) (equivalently epsilon_1(i+2))", [](long i) -> std::optional<BigInt> {
         if (i < 0) return std::nullopt;
         return bell_genus(i + 4, 1).value;
       }});
  bindings.push_back({"A245551", "iB_i^(1), indexed by n", [](long i) -> std::optional<BigInt> {
                        if (i < 0) return std::nullopt;
                        return assoc_bell_genus(i, 1).value;
                      }});
  bindings.push_back({"A035319", "Q^(i)(0) = (4i)!/(2^{2i}(2i+1)!)", [](long i) -> std::optional<BigInt> {
                        if (i < 1) return std::nullopt;
                        return pairings_q0(static_cast<int>(i));
                      }});
  bindings.push_back({"A002411", "C_{2p,[p^2]}^(1) at p=i+1 (pentagonal pyramidal)",
                      [](long i) -> std::optional<BigInt> {
                        if (i < 1) return std::nullopt;
                        return p_squared(i + 1, 1);
                      }});
  bindings.push_back({"A001700", "sum over genus of C_{2p,[p^2]} = binom(2p-1,p) at p=i+1",
                      [](long i) -> std::optional<BigInt> {
                        if (i < 0) return std::nullopt;
                        return binomial(2 * i + 1, i + 1);
                      }});
  return bindings;
}

}  // namespace

const std::vector<OeisBinding>& oeis_bindings() {
  static const std::vector<OeisBinding> bindings = make_bindings();
  return bindings;
}

const OeisBinding* find_oeis_binding(const std::string& id) {
  for (const auto& binding : oeis_bindings()) {
    if (binding.id == id) return &binding;
  }
  return nullptr;
}

}  // namespace genuscount
