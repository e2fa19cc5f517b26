#pragma once

#include <algorithm>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ompstat/json_io.hpp"
#include "ompstat/verify.hpp"

namespace ompstat::cli {

struct RunConfig {
  std::string format = "pretty";  // pretty | json | csv
  int jobs = 1;
  int seed_bound = 0;  // 0 = no cap; otherwise caps verification bounds
  bool verbose = false;
};

namespace detail {

enum class ObjectKind { word, segmented, omp, colored_word, colored_osp };

inline ObjectKind classify(const std::string& text) {
  bool colored = text.find('^') != std::string::npos;
  bool barred = text.find('|') != std::string::npos;
  if (colored) return barred ? ObjectKind::colored_osp : ObjectKind::colored_word;
  if (barred) return ObjectKind::omp;
  if (text.find('.') != std::string::npos) return ObjectKind::segmented;
  return ObjectKind::word;
}

inline void emit_value(const RunConfig& cfg, const std::string& object,
                       const std::string& statistic, long long value,
                       std::ostream& out) {
  if (cfg.format == "json") {
    json j;
    j["object"] = object;
    j["statistic"] = statistic;
    j["value"] = value;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "object,statistic,value\n"
        << csv_escape(object) << ',' << statistic << ',' << value << "\n";
  } else {
    out << value << "\n";
  }
}

inline void emit_positions(const RunConfig& cfg, const std::string& object,
                           const std::string& statistic,
                           const std::vector<int>& positions,
                           std::ostream& out) {
  if (cfg.format == "json") {
    json j;
    j["object"] = object;
    j["statistic"] = statistic;
    j["value"] = positions;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "object,statistic,value\n"
        << csv_escape(object) << ',' << statistic << ','
        << csv_escape(format_parts(positions)) << "\n";
  } else {
    out << format_parts(positions) << "\n";
  }
}

inline int run_stat(const RunConfig& cfg, const std::string& object,
                    const std::string& statistic, int r, std::ostream& out) {
  ObjectKind kind = classify(object);
  switch (kind) {
    case ObjectKind::word:
    case ObjectKind::segmented: {
      Word w = kind == ObjectKind::word ? parse_word(object)
                                        : parse_segmented(object).word;
      if (statistic == "inv") {
        emit_value(cfg, object, statistic, inv_word(w), out);
      } else if (statistic == "maj") {
        emit_value(cfg, object, statistic, maj_word(w), out);
      } else if (statistic == "des") {
        emit_positions(cfg, object, statistic, descent_set(w).positions, out);
      } else {
        throw std::invalid_argument("minimaj is defined on partitions, not bare words");
      }
      return 0;
    }
    case ObjectKind::omp: {
      OrderedMultisetPartition mu = parse_omp(object);
      if (statistic == "inv") {
        emit_value(cfg, object, statistic, inv_omp(mu), out);
      } else if (statistic == "minimaj") {
        emit_value(cfg, object, statistic, minimaj(mu), out);
      } else if (statistic == "des") {
        emit_positions(cfg, object, statistic,
                       descent_set(segmented_word(mu).word).positions, out);
      } else {
        throw std::invalid_argument(
            "maj is not defined on partitions; use --minimaj");
      }
      return 0;
    }
    case ObjectKind::colored_word: {
      ColoredWord w = parse_colored_word(object);
      int rr = r;
      if (rr == 0)
        for (const ColoredLetter& x : w) rr = std::max(rr, x.color + 1);
      if (statistic == "maj") {
        emit_value(cfg, object, statistic, flag_maj(w, rr), out);
      } else if (statistic == "des") {
        std::vector<int> pos;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
          if (prec(w[i + 1], w[i])) pos.push_back(static_cast<int>(i) + 1);
        emit_positions(cfg, object, statistic, pos, out);
      } else {
        throw std::invalid_argument(
            "colored words support --maj (flag major index) and --des");
      }
      return 0;
    }
    case ObjectKind::colored_osp: {
      ColoredOSP sigma = parse_colored_osp(object, r);
      if (statistic == "inv") {
        emit_value(cfg, object, statistic, colored_inv(sigma), out);
      } else if (statistic == "minimaj") {
        emit_value(cfg, object, statistic, colored_minimaj(sigma), out);
      } else {
        throw std::invalid_argument(
            "colored partitions support --inv and --minimaj");
      }
      return 0;
    }
  }
  return 2;
}

inline WeakComposition beta_or_ones(const std::vector<int>& beta, int n) {
  if (!beta.empty() && n > 0)
    throw std::invalid_argument("give either --beta or --n, not both");
  if (!beta.empty()) {
    for (int x : beta)
      if (x < 0) throw std::invalid_argument("--beta parts must be >= 0");
    return WeakComposition{beta};
  }
  if (n > 0) return ones(n);
  throw std::invalid_argument("a family needs --beta or --n");
}

}  // namespace detail

// Runs the command line given as `args` (without the program name), writing
// results to `out` and diagnostics to `err`.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 arithmetic overflow.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"exact statistics and identity verification for ordered "
               "multiset partitions"};
  app.name("ompstat");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "parallel workers for sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed-bound", cfg.seed_bound,
                 "cap on verification sweep bounds (0 = none)");
  app.add_flag("--verbose", cfg.verbose,
               "list every verification instance, not only failures");
  app.require_subcommand(1);

  // ---- stat
  std::string stat_object;
  bool f_inv = false, f_maj = false, f_minimaj = false, f_des = false;
  int stat_r = 0;
  CLI::App* stat = app.add_subcommand(
      "stat", "evaluate a statistic on one parsed object");
  stat->add_option("object", stat_object,
                   "word, w1.w2 segmented word, b1|b2 partition, or colored "
                   "form with carets")
      ->required();
  stat->add_flag("--inv", f_inv, "inversion statistic");
  stat->add_flag("--maj", f_maj, "major index (flag major index if colored)");
  stat->add_flag("--minimaj", f_minimaj, "minimum major index over the class");
  stat->add_flag("--des", f_des, "descent set");
  stat->add_option("--r", stat_r, "number of colors (default: inferred)");

  // ---- dist
  std::vector<int> dist_beta, dist_shape;
  int dist_n = 0, dist_k = -1, dist_last = 0;
  std::string dist_stat;
  CLI::App* dist = app.add_subcommand(
      "dist", "distribution of a statistic over a partition family");
  dist->add_option("--beta", dist_beta, "weight composition")->delimiter(',');
  dist->add_option("--n", dist_n, "weight (1,...,1) of length n");
  dist->add_option("--k", dist_k, "restrict to k blocks");
  dist->add_option("--shape", dist_shape, "restrict to an exact shape")
      ->delimiter(',');
  dist->add_option("--last", dist_last,
                   "restrict to last block size (needs --k)");
  dist->add_option("--stat", dist_stat, "statistic")
      ->check(CLI::IsMember({"inv", "minimaj"}))
      ->required();

  // ---- enum
  std::string enum_family = "omp";
  std::vector<int> enum_beta, enum_shape, enum_lambda;
  int enum_n = 0, enum_m = 0, enum_k = -1, enum_size = -1;
  CLI::App* enum_cmd =
      app.add_subcommand("enum", "list the members of a family");
  enum_cmd->add_option("--family", enum_family, "family kind")
      ->check(CLI::IsMember({"omp", "words", "compositions",
                             "weak-compositions", "subsets", "syt"}))
      ->capture_default_str();
  enum_cmd->add_option("--beta", enum_beta, "weight composition")
      ->delimiter(',');
  enum_cmd->add_option("--n", enum_n, "size");
  enum_cmd->add_option("--m", enum_m, "number of parts / ground set size");
  enum_cmd->add_option("--k", enum_k, "number of blocks");
  enum_cmd->add_option("--shape", enum_shape, "exact shape")->delimiter(',');
  enum_cmd->add_option("--size", enum_size, "subset size");
  enum_cmd->add_option("--lambda", enum_lambda, "partition shape")
      ->delimiter(',');

  // ---- val
  int val_n = 0, val_k = 0;
  std::string val_basis = "monomial", val_stat = "minimaj";
  CLI::App* val = app.add_subcommand(
      "val", "expansion of the valley polynomial at one parameter");
  val->add_option("--n", val_n, "degree")->required();
  val->add_option("--k", val_k, "valley parameter (k+1 blocks)")->required();
  val->add_option("--basis", val_basis, "output basis")
      ->check(CLI::IsMember({"monomial", "schur"}))
      ->capture_default_str();
  val->add_option("--stat", val_stat, "statistic")
      ->check(CLI::IsMember({"inv", "minimaj"}))
      ->capture_default_str();

  // ---- schur
  int schur_n = 0, schur_k = 0;
  std::vector<int> schur_lambda;
  CLI::App* schur = app.add_subcommand(
      "schur", "Schur coefficients from the tableau formula");
  schur->add_option("--n", schur_n, "degree")->required();
  schur->add_option("--k", schur_k, "valley parameter")->required();
  schur->add_option("--lambda", schur_lambda, "single partition")
      ->delimiter(',');

  // ---- verify
  std::string verify_suite = "all";
  VerifyBounds bounds;
  CLI::App* verify = app.add_subcommand(
      "verify", "run a verification suite and report pass/fail");
  std::string suite_help = "suite: all";
  for (const Suite& s : verify_suites()) suite_help += ", " + s.name;
  verify->add_option("suite", verify_suite, suite_help);
  verify->add_option("--n", bounds.n, "size bound")->capture_default_str();
  verify->add_option("--r", bounds.r, "color bound")->capture_default_str();

  // global flags are accepted after the subcommand as well
  for (CLI::App* sub : {stat, dist, enum_cmd, val, schur, verify})
    sub->fallthrough();

  std::vector<std::string> argv_store = args;
  std::vector<const char*> argv;
  argv.push_back("ompstat");
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*stat) {
      int picked = (f_inv ? 1 : 0) + (f_maj ? 1 : 0) + (f_minimaj ? 1 : 0) +
                   (f_des ? 1 : 0);
      if (picked != 1)
        throw std::invalid_argument(
            "pick exactly one of --inv, --maj, --minimaj, --des");
      std::string statistic = f_inv ? "inv"
                              : f_maj ? "maj"
                              : f_minimaj ? "minimaj"
                                          : "des";
      return detail::run_stat(cfg, stat_object, statistic, stat_r, out);
    }

    if (*dist) {
      WeakComposition beta = detail::beta_or_ones(dist_beta, dist_n);
      Statistic s = dist_stat == "inv" ? Statistic::inv : Statistic::minimaj;
      DistributionKey key = DistributionKey::whole_family(s, beta);
      std::string constraint = "all";
      if (!dist_shape.empty()) {
        if (dist_k >= 0 || dist_last > 0)
          throw std::invalid_argument("--shape excludes --k/--last");
        key = DistributionKey::with_shape(s, beta, Composition{dist_shape});
        constraint = "shape=" + format_parts(dist_shape);
      } else if (dist_last > 0) {
        if (dist_k < 0)
          throw std::invalid_argument("--last needs --k");
        key = DistributionKey::with_blocks_last(s, beta, dist_k, dist_last);
        constraint = "k=" + std::to_string(dist_k) +
                     " last=" + std::to_string(dist_last);
      } else if (dist_k >= 0) {
        key = DistributionKey::with_blocks(s, beta, dist_k);
        constraint = "k=" + std::to_string(dist_k);
      }
      QPoly p = distribution(key);
      if (cfg.format == "json") {
        json j;
        j["beta"] = beta.parts;
        j["constraint"] = constraint;
        j["statistic"] = dist_stat;
        j["poly"] = qpoly_json(p);
        j["pretty"] = p.pretty();
        out << j.dump(2) << "\n";
      } else if (cfg.format == "csv") {
        out << "beta,constraint,statistic,poly\n"
            << csv_escape(format_parts(beta.parts)) << ','
            << csv_escape(constraint) << ',' << dist_stat << ','
            << csv_escape(p.pretty()) << "\n";
      } else {
        out << p.pretty() << "\n";
      }
      return 0;
    }

    if (*enum_cmd) {
      std::vector<std::string> lines;
      json items = json::array();
      if (enum_family == "omp") {
        WeakComposition beta = detail::beta_or_ones(enum_beta, enum_n);
        OmpStream st = !enum_shape.empty()
                           ? OmpStream::with_shape(beta,
                                                   Composition{enum_shape})
                       : enum_k >= 0 ? OmpStream::with_blocks(beta, enum_k)
                                     : OmpStream::all(beta);
        OrderedMultisetPartition mu;
        while (st.next(mu)) {
          lines.push_back(print_omp(mu));
          if (cfg.format == "json") items.push_back(omp_json(mu));
        }
      } else if (enum_family == "words") {
        WeakComposition beta = detail::beta_or_ones(enum_beta, enum_n);
        Word w;
        for (WordStream st(beta); st.next(w);) {
          lines.push_back(print_word(w));
          if (cfg.format == "json") items.push_back(w.letters);
        }
      } else if (enum_family == "compositions") {
        Composition a;
        for (CompositionStream st(enum_n); st.next(a);) {
          lines.push_back(format_parts(a.parts));
          if (cfg.format == "json") items.push_back(a.parts);
        }
      } else if (enum_family == "weak-compositions") {
        WeakComposition b;
        for (WeakCompositionStream st(enum_n, enum_m); st.next(b);) {
          lines.push_back(format_parts(b.parts));
          if (cfg.format == "json") items.push_back(b.parts);
        }
      } else if (enum_family == "subsets") {
        if (enum_size < 0)
          throw std::invalid_argument("subsets need --m and --size");
        Subset s;
        for (SubsetStream st(enum_m, enum_size); st.next(s);) {
          lines.push_back(format_parts(s.elements));
          if (cfg.format == "json") items.push_back(s.elements);
        }
      } else if (enum_family == "syt") {
        if (enum_lambda.empty())
          throw std::invalid_argument("syt needs --lambda");
        for (const StandardTableau& t :
             syt_enumerate(IntegerPartition{enum_lambda})) {
          std::string s;
          for (std::size_t r = 0; r < t.rows.size(); ++r) {
            if (r > 0) s += '/';
            for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
              if (c > 0) s += ',';
              s += std::to_string(t.rows[r][c]);
            }
          }
          lines.push_back(s);
          if (cfg.format == "json") items.push_back(t.rows);
        }
      }
      if (cfg.format == "json") {
        out << items.dump(2) << "\n";
      } else {
        for (const std::string& l : lines) out << l << "\n";
      }
      return 0;
    }

    if (*val) {
      Statistic s = val_stat == "inv" ? Statistic::inv : Statistic::minimaj;
      SymFuncExpansion e = val_expansion(val_n, val_k, s);
      if (val_basis == "schur") e = monomial_to_schur(e);
      if (cfg.format == "json") {
        out << expansion_json(e, val_k).dump(2) << "\n";
      } else if (cfg.format == "csv") {
        out << "basis,partition,poly\n";
        for (const auto& [lambda, poly] : e.coefficients)
          out << val_basis << ',' << csv_escape(format_partition(lambda))
              << ',' << csv_escape(poly.pretty()) << "\n";
      } else {
        const char* tag = val_basis == "schur" ? "s" : "m";
        for (const auto& [lambda, poly] : e.coefficients)
          out << tag << format_partition(lambda) << ": " << poly.pretty()
              << "\n";
      }
      return 0;
    }

    if (*schur) {
      SymFuncExpansion e;
      e.basis = Basis::schur;
      e.degree = schur_n;
      for (const IntegerPartition& lambda : partitions_of(schur_n)) {
        if (!schur_lambda.empty() && lambda.parts != schur_lambda) continue;
        e.coefficients[lambda] =
            schur_coeff_formula(lambda, schur_n, schur_k + 1);
      }
      if (cfg.format == "json") {
        out << expansion_json(e, schur_k).dump(2) << "\n";
      } else if (cfg.format == "csv") {
        out << "partition,poly\n";
        for (const auto& [lambda, poly] : e.coefficients)
          out << csv_escape(format_partition(lambda)) << ','
              << csv_escape(poly.pretty()) << "\n";
      } else {
        for (const auto& [lambda, poly] : e.coefficients)
          out << "s" << format_partition(lambda) << ": " << poly.pretty()
              << "\n";
      }
      return 0;
    }

    if (*verify) {
      if (cfg.seed_bound > 0) {
        bounds.n = std::min(bounds.n, cfg.seed_bound);
        bounds.r = std::min(bounds.r, cfg.seed_bound);
      }
      VerifyReport report = run_suite(verify_suite, bounds, cfg.jobs);
      long long passed = 0;
      for (const VerifyEntry& e : report)
        if (e.pass) ++passed;
      if (cfg.format == "json") {
        out << report_json(report).dump(2) << "\n";
      } else if (cfg.format == "csv") {
        out << report_csv(report);
      } else {
        for (const VerifyEntry& e : report)
          if (!e.pass || cfg.verbose)
            out << (e.pass ? "pass " : "FAIL ") << e.theorem << " "
                << e.instance << " lhs=" << e.lhs.pretty()
                << " rhs=" << e.rhs.pretty() << "\n";
        out << verify_suite << ": " << passed << "/" << report.size()
            << " instances pass\n";
      }
      return passed == static_cast<long long>(report.size()) ? 0 : 1;
    }
  } catch (const std::overflow_error& e) {
    err << "arithmetic overflow: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ompstat::cli
