// genuscount CLI: exact enumeration and closed-form evaluation of set
// partitions classified by genus.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "genuscount/cache.hpp"
#include "genuscount/chi.hpp"
#include "genuscount/classic.hpp"
#include "genuscount/enumerate.hpp"
#include "genuscount/fitting.hpp"
#include "genuscount/genus_forms.hpp"
#include "genuscount/golden.hpp"
#include "genuscount/oeis.hpp"
#include "genuscount/pairings.hpp"
#include "genuscount/tables.hpp"
#include "genuscount/verify.hpp"

namespace {

using namespace genuscount;

int threads_or_default(int threads) {
  return threads > 0 ? threads : default_thread_count();
}

// ---------------- count ----------------

struct CountOptions {
  int n = 0;
  int parts = 0;
  std::string type;
  bool no_singletons = false;
  int threads = 0;
  std::string format = "text";
  std::string cache_dir;
  int depth = 0;
  std::string checkpoint_dir;
};

void print_count_table(const GenusCountTable& table, const std::string& format,
                       std::ostream& out) {
  if (format == "json") {
    out << table.to_json() << '\n';
    return;
  }
  const char sep = format == "csv" ? ',' : ' ';
  if (format == "csv") out << "key,genus,count\n";
  for (const auto& [key, value] : table.counts) {
    std::ostringstream prefix;
    if (table.mode == TableMode::ByParts) prefix << key.k << sep;
    if (table.mode == TableMode::ByType) prefix << key.type.key() << sep;
    if (format == "csv") {
      out << prefix.str() << key.genus << sep << value << '\n';
    } else {
      if (!prefix.str().empty()) out << prefix.str();
      out << key.genus << ':' << value << ' ';
    }
  }
  if (format != "csv") out << '\n';
}

int run_count(const CountOptions& opt) {
  Constraint constraint;
  if (opt.no_singletons) constraint.min_block_size = 2;
  if (opt.parts > 0) constraint.parts = opt.parts;
  if (!opt.type.empty()) constraint.ctype = PartitionType::parse(opt.type);
  constraint.validate(opt.n);

  TableMode mode = TableMode::ByGenus;
  const int threads = threads_or_default(opt.threads);

  std::filesystem::path cache_dir =
      opt.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opt.cache_dir);
  const std::string key = cache_key(opt.n, constraint, mode);
  if (auto cached = cache_load(cache_dir, key)) {
    print_count_table(*cached, opt.format, std::cout);
    return 0;
  }

  GenusCountTable table;
  if (!opt.checkpoint_dir.empty()) {
    // resumable long run: one JSON per work unit
    const std::filesystem::path ckpt(opt.checkpoint_dir);
    std::filesystem::create_directories(ckpt);
    const int depth = opt.depth > 0 ? opt.depth : std::min(6, opt.n - 1);
    const auto units = split_workload(opt.n, constraint, depth);
    table.n = opt.n;
    table.constraint = constraint;
    table.mode = mode;
    std::size_t done = 0;
    for (const auto& unit : units) {
      const std::string unit_key = key + "_unit" + unit.prefix_key();
      GenusCountTable part;
      if (auto cached = cache_load(ckpt, unit_key)) {
        part = *cached;
      } else {
        part = count_unit(unit, mode);
        cache_store(ckpt, unit_key, part);
      }
      table.merge(part);
      ++done;
      std::cerr << "\r" << done << "/" << units.size() << " work units" << std::flush;
    }
    std::cerr << '\n';
    table.workers = 1;
  } else {
    table = count_partitions(opt.n, constraint, mode, threads, opt.depth);
  }
  cache_store(cache_dir, key, table);
  print_count_table(table, opt.format, std::cout);
  return 0;
}

// ---------------- formula ----------------

void print_result(const FormulaResult& result) {
  if (result.status == Status::Unavailable) {
    std::cout << "unavailable\n";
  } else {
    std::cout << result.value << " (" << status_name(result.status) << ")\n";
  }
}

void print_exact(const BigInt& value) { std::cout << value << " (exact)\n"; }

// ---------------- verify ----------------

int run_verify(const std::string& scope_str, int threads, const std::string& format) {
  const Scope scope = scope_from_name(scope_str);
  VerificationReport report;
  if (format == "json") {
    report = run_verification(scope, threads_or_default(threads));
    std::cout << report.to_json() << '\n';
  } else {
    report = run_verification(scope, threads_or_default(threads),
                              [](const CheckRecord& r) { std::cout << r.to_text() << '\n'; });
    std::cout << (report.ok() ? "VERIFICATION PASSED" : "VERIFICATION FAILED") << " (scope "
              << scope_str << ", " << report.records.size() << " checks)\n";
  }
  return report.ok() ? 0 : 1;
}

// ---------------- fit ----------------

int run_fit_numerator(const std::string& family_str, int g, const std::string& source, int n_max) {
  const GfFamily family = gf_family_from_name(family_str);
  std::vector<BigInt> counts;
  const int hi = n_max > 0 ? n_max : (family == GfFamily::Pairings ? 3 * g + 6 : 2 * g + 2 + 3 * g + 3);
  for (int i = 0; i <= hi; ++i) {
    BigInt value = 0;
    switch (family) {
      case GfFamily::Bell: {
        if (i >= 1) {
          const FormulaResult r = bell_genus(i, g);
          if (!r.available()) {
            std::cerr << "bell_genus unavailable at n=" << i << "; lower --max-n\n";
            return 2;
          }
          value = r.value;
        }
        break;
      }
      case GfFamily::AssocBell: {
        const FormulaResult r = assoc_bell_genus(i, g);
        if (!r.available()) {
          std::cerr << "assoc_bell_genus unavailable at n=" << i << "; lower --max-n\n";
          return 2;
        }
        value = r.value;
        break;
      }
      case GfFamily::Pairings:
        if (i >= 1) value = epsilon(i, g);
        break;
    }
    counts.push_back(value);
  }
  (void)source;
  const NumeratorFit fit = fit_numerator(counts, g, family);
  std::cout << fit.to_json() << '\n';
  return fit.ok ? 0 : 1;
}

int run_fit_chi(int g, const std::string& source, int max_n, int threads, bool assume_symmetry,
                bool assume_first, bool assume_second, bool assume_last) {
  std::map<std::pair<long, long>, BigInt> data;
  const int hi = max_n > 0 ? max_n : 12;
  if (source == "brute") {
    for (int n = 2 * g + 2; n <= hi; ++n) {
      const GenusCountTable table = count_stirling(n, false, threads_or_default(threads));
      for (long k = 2; k <= n; ++k) data[{n, k}] = table.parts_count(static_cast<int>(k), g);
    }
  } else if (source == "golden") {
    const GoldenData& golden = GoldenData::instance();
    for (int n = 2 * g + 2; n <= std::min(hi, 15); ++n) {
      for (long k = 2; k <= n; ++k) data[{n, k}] = golden.s_value(n, static_cast<int>(k), g);
    }
  } else if (source == "formula") {
    for (int n = 2 * g + 2; n <= hi; ++n) {
      for (long k = 2; k <= n; ++k) {
        const FormulaResult r = stirling_genus(n, k, g);
        if (r.available()) data[{n, k}] = r.value;
      }
    }
  } else {
    std::cerr << "unknown --source (expected brute|golden|formula)\n";
    return 2;
  }
  ChiAssumptions assume;
  assume.column_symmetry = assume_symmetry;
  assume.first_column = assume_first;
  assume.second_column = assume_second;
  assume.last_line = assume_last;
  const ChiFit fit = fit_chi(g, data, assume);
  std::cout << fit.to_json() << '\n';
  return fit.consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact set-partition counts by genus: enumeration, closed forms, verification"};
  app.require_subcommand(1);

  // count
  CountOptions count_opt;
  CLI::App* count = app.add_subcommand("count", "enumerate partitions and count by genus");
  count->add_option("--n", count_opt.n, "ground-set size")->required();
  count->add_option("--parts", count_opt.parts, "exact number of blocks");
  count->add_option("--type", count_opt.type, "exact cyclic type, e.g. 2^2,3");
  count->add_flag("--no-singletons", count_opt.no_singletons, "forbid singleton blocks");
  count->add_option("--threads", count_opt.threads, "worker threads (default GENUSCOUNT_THREADS)");
  count->add_option("--format", count_opt.format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  count->add_option("--cache", count_opt.cache_dir, "cache directory (default GENUSCOUNT_CACHE)");
  count->add_option("--depth", count_opt.depth, "work-splitting prefix depth");
  count->add_option("--checkpoint", count_opt.checkpoint_dir,
                    "directory for resumable per-unit checkpoints (long runs)");

  // formula
  CLI::App* formula = app.add_subcommand("formula", "evaluate a closed form");
  formula->require_subcommand(1);
  struct {
    long n = 0, k = 0, p = 0, q = 0;
    int g = 0;
    std::string type;
  } f;
  const auto add_formula = [&](const std::string& name, const std::string& desc,
                               std::vector<std::string> args, std::function<void()> eval) {
    CLI::App* sub = formula->add_subcommand(name, desc);
    for (const auto& a : args) {
      if (a == "n") sub->add_option("--n", f.n)->required();
      if (a == "k") sub->add_option("--k", f.k)->required();
      if (a == "p") sub->add_option("--p", f.p)->required();
      if (a == "q") sub->add_option("--q", f.q)->required();
      if (a == "g") sub->add_option("--g", f.g)->required();
      if (a == "type") sub->add_option("--type", f.type)->required();
    }
    sub->callback(eval);
  };
  add_formula("bell", "Bell number B_n", {"n"}, [&] { print_exact(bell(f.n)); });
  add_formula("stirling2", "Stirling number S_{n,k}", {"n", "k"},
              [&] { print_exact(stirling2(f.n, f.k)); });
  add_formula("faa-di-bruno", "Faa di Bruno coefficient C_{n,[type]}", {"n", "type"},
              [&] { print_exact(faa_di_bruno(f.n, PartitionType::parse(f.type))); });
  add_formula("assoc-bell", "associated Bell number", {"n"}, [&] { print_exact(assoc_bell(f.n)); });
  add_formula("ward", "Ward number (associated Stirling)", {"n", "k"},
              [&] { print_exact(ward(f.n, f.k)); });
  add_formula("eulerian2", "second-order Eulerian number", {"n", "k"},
              [&] { print_exact(eulerian2(f.n, f.k)); });
  add_formula("stirling1", "unsigned Stirling number of the first kind", {"p", "q"},
              [&] { print_exact(stirling1_unsigned(f.p, f.q)); });
  add_formula("bell-genus", "B_n^(g)", {"n", "g"}, [&] { print_result(bell_genus(f.n, f.g)); });
  add_formula("assoc-bell-genus", "no-singleton B_n^(g)", {"n", "g"},
              [&] { print_result(assoc_bell_genus(f.n, f.g)); });
  add_formula("stirling-genus", "S_{n,k}^(g)", {"n", "k", "g"},
              [&] { print_result(stirling_genus(f.n, f.k, f.g)); });
  add_formula("stirling-k2", "S_{n,2}^(g) = binom(n, 2g+2)", {"n", "g"},
              [&] { print_exact(stirling_k2(f.n, f.g)); });
  add_formula("stirling-k3", "conjectured S_{n,3}^(g)", {"n", "g"},
              [&] { print_result(stirling_k3_conjecture(f.n, f.g)); });
  add_formula("assoc-stirling-genus", "no-singleton S_{n,k}^(g), g<=1", {"n", "k", "g"},
              [&] { print_result(assoc_stirling_genus(f.n, f.k, f.g)); });
  add_formula("kreweras", "noncrossing partitions of a type", {"n", "type"},
              [&] { print_exact(kreweras(f.n, PartitionType::parse(f.type))); });
  add_formula("two-part", "C_{n,[p,n-p]}^(g)", {"n", "p", "g"},
              [&] { print_exact(two_part(f.n, f.p, f.g)); });
  add_formula("two-part-transfer", "transfer-matrix oracle for two parts", {"n", "p", "g"},
              [&] { print_exact(two_part_transfer(f.n, f.p, f.g)); });
  add_formula("three-part", "C_{n,[p,q,n-p-q]}^(g), g<=1", {"n", "p", "q", "g"},
              [&] { print_result(three_part(f.n, f.p, f.q, f.g)); });
  add_formula("p-squared", "C_{2p,[p^2]}^(g)", {"p", "g"}, [&] { print_exact(p_squared(f.p, f.g)); });
  add_formula("pk-genus1", "C_{pk,[p^k]}^(1)", {"p", "k"},
              [&] { print_result(pk_genus1(f.p, static_cast<int>(f.k))); });
  add_formula("pk-genus2", "C_{pk,[p^k]}^(2)", {"p", "k"},
              [&] { print_result(pk_genus2(f.p, static_cast<int>(f.k))); });
  add_formula("epsilon", "pairings count for type [2^k]", {"k", "g"},
              [&] { print_exact(epsilon(static_cast<int>(f.k), f.g)); });
  add_formula("q-poly", "numerator polynomial Q^(g)(u)", {"g"}, [&] {
    std::cout << to_string(Q_poly(f.g), "u") << " (exact)\n";
  });
  add_formula("r-poly", "polynomial R_g(k)", {"g"}, [&] {
    std::cout << to_string(R_poly(f.g), "k") << " (exact)\n";
  });

  // table
  std::string table_kind = "c", table_format = "csv", table_out;
  int table_n = 0, table_threads = 0;
  CLI::App* table = app.add_subcommand("table", "emit an appendix-format table");
  table->add_option("--kind", table_kind, "c|s|shat")->check(CLI::IsMember({"c", "s", "shat"}));
  table->add_option("--n", table_n, "ground-set size")->required();
  table->add_option("--format", table_format, "csv|json|markdown")
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  table->add_option("--out", table_out, "write to file instead of stdout");
  table->add_option("--threads", table_threads, "worker threads");

  // verify
  std::string verify_scope = "standard", verify_format = "text";
  int verify_threads = 0;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--scope", verify_scope, "fast|standard|extended|full")
      ->check(CLI::IsMember({"fast", "standard", "extended", "full"}));
  verify->add_option("--threads", verify_threads, "worker threads");
  verify->add_option("--format", verify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // fit
  CLI::App* fit = app.add_subcommand("fit", "solve an inverse problem");
  fit->require_subcommand(1);
  std::string fit_family = "bell", fit_source = "formula";
  int fit_g = 2, fit_max_n = 0, fit_threads = 0;
  bool as_sym = false, as_first = false, as_second = false, as_last = false;
  CLI::App* fit_num = fit->add_subcommand("numerator", "recover an ansatz numerator polynomial");
  fit_num->add_option("--family", fit_family, "bell|assoc-bell|pairings")
      ->check(CLI::IsMember({"bell", "assoc-bell", "pairings"}));
  fit_num->add_option("--g", fit_g)->required();
  fit_num->add_option("--source", fit_source, "formula (counts from closed forms)");
  fit_num->add_option("--max-n", fit_max_n, "highest count index to use");
  CLI::App* fit_chi_cmd = fit->add_subcommand("chi", "solve for the chi array");
  fit_chi_cmd->add_option("--g", fit_g)->required();
  fit_chi_cmd->add_option("--source", fit_source, "brute|golden|formula");
  fit_chi_cmd->add_option("--max-n", fit_max_n, "highest n of data cells");
  fit_chi_cmd->add_option("--threads", fit_threads, "worker threads (brute source)");
  fit_chi_cmd->add_flag("--assume-symmetry", as_sym, "impose column symmetry");
  fit_chi_cmd->add_flag("--assume-first-column", as_first, "impose the signed-binomial column");
  fit_chi_cmd->add_flag("--assume-second-column", as_second, "impose the d(g) sub-Pascal column");
  fit_chi_cmd->add_flag("--assume-last-line", as_last, "impose the closed-form last line");

  // oeis
  std::string oeis_file, oeis_seq;
  long oeis_offset = 0, oeis_limit = -1;
  bool oeis_list = false;
  CLI::App* oeis = app.add_subcommand("oeis", "check a b-file against a built-in sequence");
  oeis->add_option("--bfile", oeis_file, "path to the OEIS b-file");
  oeis->add_option("--seq", oeis_seq, "sequence id, e.g. A000108");
  oeis->add_option("--offset", oeis_offset, "shift added to file indices before generating");
  oeis->add_option("--limit", oeis_limit, "compare at most this many entries");
  oeis->add_flag("--list", oeis_list, "list available sequence bindings");

  // bench
  int bench_n = 12, bench_threads = 0;
  CLI::App* bench = app.add_subcommand("bench", "time a full enumeration");
  bench->add_option("--n", bench_n, "ground-set size");
  bench->add_option("--threads", bench_threads, "worker threads");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return app.exit(e);  // --help
      app.exit(e);
      return 2;
    }
    if (*formula) return 0;  // formula subcommands execute via callbacks
    if (*count) return run_count(count_opt);
    if (*table) {
      const EmittedTable t =
          build_table(table_kind_from_name(table_kind), table_n, threads_or_default(table_threads));
      const std::string rendered = render_table(t, emit_format_from_name(table_format));
      if (table_out.empty()) {
        std::cout << rendered;
      } else {
        std::ofstream out(table_out);
        out << rendered;
      }
      return 0;
    }
    if (*verify) return run_verify(verify_scope, verify_threads, verify_format);
    if (*fit) {
      if (*fit_num) return run_fit_numerator(fit_family, fit_g, fit_source, fit_max_n);
      return run_fit_chi(fit_g, fit_source.empty() ? "golden" : fit_source, fit_max_n, fit_threads,
                         as_sym, as_first, as_second, as_last);
    }
    if (*oeis) {
      if (oeis_list) {
        for (const auto& binding : oeis_bindings()) {
          std::cout << binding.id << "  " << binding.description << '\n';
        }
        return 0;
      }
      if (oeis_file.empty() || oeis_seq.empty()) {
        std::cerr << "oeis: --bfile and --seq are required (or --list)\n";
        return 2;
      }
      const OeisBinding* binding = find_oeis_binding(oeis_seq);
      if (!binding) {
        std::cerr << "oeis: no binding for " << oeis_seq << " (see --list)\n";
        return 2;
      }
      std::ifstream in(oeis_file);
      if (!in) {
        std::cerr << "oeis: cannot open " << oeis_file << '\n';
        return 2;
      }
      const auto entries = parse_bfile(in);
      const OeisReport report =
          oeis_check(entries, binding->generator, oeis_seq, oeis_offset, oeis_limit);
      std::cout << report.to_text() << '\n';
      return report.diverged ? 1 : 0;
    }
    if (*bench) {
      const int threads = threads_or_default(bench_threads);
      const auto start = std::chrono::steady_clock::now();
      const GenusCountTable t = count_by_genus(bench_n, Constraint::none(), threads);
      const auto stop = std::chrono::steady_clock::now();
      const double secs = std::chrono::duration<double>(stop - start).count();
      BigInt total = t.total();
      std::cout << "n=" << bench_n << ": " << total << " partitions in " << secs << "s ("
                << threads << " threads, "
                << static_cast<double>(total.convert_to<double>()) / secs << " partitions/s)\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
