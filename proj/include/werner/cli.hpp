// Copyright 2026 The Werner Decomposition Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "werner/decomposition.hpp"
#include "werner/errors.hpp"
#include "werner/io.hpp"
#include "werner/partition.hpp"
#include "werner/sweep.hpp"
#include "werner/verification.hpp"
#include "werner/werner_state.hpp"

namespace werner::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

inline constexpr int kMinCliP = 1;
inline constexpr int kMaxCliP = 5;
inline constexpr std::uint64_t kDefaultSeed = 42;
/// Largest p for which the CLI also runs dense diagonalization or U⊗U
/// conjugation.
inline constexpr int kNumericMaxP = 4;

struct CliConfig {
  int p = 1;
  std::optional<double> f;
  std::string scheme = "auto";
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultVerifyTolerance;
  std::string output;
  std::string format;
  std::string input;
  bool pt = false;
  std::string basis = "dense";
  bool refine = false;
  bool strict_pure = false;
  double f_start = -1.0;
  double f_end = 1.0;
  double f_step = 0.05;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::string path)
      : std::runtime_error(what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A verification-style failure: the payload is still emitted, the exit
/// code becomes 2 and the diagnostic goes to stderr.
struct Result {
  std::string payload;
  int code = kExitOk;
  std::optional<io::json> diagnostic;
};

namespace detail {

inline Result success(std::string payload) {
  Result r;
  r.payload = std::move(payload);
  return r;
}

inline WernerParams params(const CliConfig& c) {
  if (!c.f) throw UsageError("--f is required for this subcommand");
  return WernerParams(c.p, *c.f);
}

inline std::string format_or(const CliConfig& c, const std::string& fallback,
                             std::initializer_list<const char*> allowed) {
  const std::string fmt = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed) {
    if (fmt == a) return fmt;
  }
  throw UsageError("format \"" + fmt + "\" is not supported by this subcommand");
}

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file " + path, path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline Decomposition load_decomposition(const std::string& path) {
  const std::string text = read_input(path);
  io::json j;
  try {
    j = io::json::parse(text);
  } catch (const io::json::parse_error& e) {
    throw PreconditionError("cannot parse " + path + ": " + e.what());
  }
  return io::decomposition_from_json(j);
}

inline std::optional<double> invariance_check(const WernerParams& w,
                                              std::uint64_t seed) {
  if (w.p > kNumericMaxP) return std::nullopt;
  return invariance_residual(werner_dense(w), random_unitary(w.dim(), seed));
}

inline Decomposition decomposition_for(const CliConfig& c) {
  if (!c.input.empty()) return load_decomposition(c.input);
  return decompose(params(c), scheme_from_name(c.scheme));
}

inline io::json verification_document(const Decomposition& dec,
                                      const VerificationReport& r) {
  io::json j{{"p", dec.params.p},
             {"f", dec.params.f},
             {"scheme", scheme_name(dec.scheme)},
             {"n_terms", dec.terms.size()}};
  const io::json body = io::verification_to_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

inline std::string decomposition_text(const Decomposition& dec) {
  std::ostringstream os;
  os << "scheme " << scheme_name(dec.scheme) << "  p=" << dec.params.p
     << "  f=" << io::format_double_short(dec.params.f)
     << "  scale=" << io::format_double_short(dec.scale)
     << "  terms=" << dec.terms.size() << "\n";
  for (const auto& t : dec.terms) {
    os << "  " << io::format_double_short(t.weight) << "  " << t.label << "\n";
  }
  return os.str();
}

// Subcommand bodies.

inline Result cmd_build(const CliConfig& c) {
  const auto w = params(c);
  const auto fmt = format_or(c, "json", {"json", "text"});
  DenseMatrix m;
  if (c.basis == "spinor") {
    m = c.pt ? werner_pt(w) : werner_spinor(w);
  } else if (c.basis == "dense") {
    m = werner_dense(w);
    if (c.pt) m = partial_transpose_b(m, w.dim(), w.dim());
  } else {
    throw UsageError("--basis must be dense or spinor");
  }
  const auto inv = invariance_check(w, c.seed);
  if (fmt == "text") {
    std::ostringstream os;
    os << (c.pt ? "partial transpose of " : "") << "Werner state p=" << w.p
       << " d=" << w.dim() << " f=" << io::format_double_short(w.f)
       << " basis=" << c.basis << "\n"
       << "  dimension " << m.dim() << "\n"
       << "  trace " << io::format_double_short(trace(m).real()) << "\n"
       << "  flip expectation "
       << io::format_double_short(extract_f(c.pt ? partial_transpose_b(m, w.dim(), w.dim()) : m, w.p))
       << "\n";
    if (inv) os << "  invariance residual " << io::format_double_short(*inv) << "\n";
    return success(os.str());
  }
  io::json j{{"p", w.p},
             {"f", w.f},
             {"kind", c.pt ? "rho_pt" : "rho"},
             {"basis", c.basis},
             {"seed", c.seed},
             {"trace", trace(m).real()}};
  j["invariance_residual"] = inv ? io::json(*inv) : io::json(nullptr);
  j["matrix"] = io::matrix_to_json(m);
  return success(io::dump(j));
}

inline Result cmd_spectrum(const CliConfig& c) {
  const auto w = params(c);
  const auto fmt = format_or(c, "json", {"json", "text"});
  const Spectrum closed = spectrum_closed_form(w);
  const Spectrum transformed = spectrum_via_transform(w);
  const Spectrum pt_closed = pt_spectrum_closed_form(w);
  std::optional<Spectrum> numeric;
  std::optional<Spectrum> pt_numeric;
  if (w.p <= kNumericMaxP) {
    numeric = hermitian_eigenvalues(werner_dense(w));
    pt_numeric = hermitian_eigenvalues(werner_pt(w));
  }
  double disagreement = spectrum_distance(closed, transformed);
  if (numeric) {
    disagreement = std::max({disagreement, spectrum_distance(closed, *numeric),
                             spectrum_distance(transformed, *numeric),
                             spectrum_distance(pt_closed, *pt_numeric)});
  }
  double trace_error = 0.0;
  for (const Spectrum* s : {&closed, &transformed, &pt_closed}) {
    trace_error = std::max(trace_error, std::abs(s->trace() - 1.0));
  }
  if (numeric) {
    trace_error = std::max({trace_error, std::abs(numeric->trace() - 1.0),
                            std::abs(pt_numeric->trace() - 1.0)});
  }
  const bool ok = disagreement <= c.tol && trace_error < 1e-10;

  Result res;
  if (fmt == "text") {
    std::ostringstream os;
    os << "Werner state p=" << w.p << " d=" << w.dim()
       << " f=" << io::format_double_short(w.f) << "\n";
    os << "  rho, closed form\n" << io::spectrum_to_text(closed);
    os << "  rho, H.M transform\n" << io::spectrum_to_text(transformed);
    if (numeric) os << "  rho, Jacobi\n" << io::spectrum_to_text(*numeric);
    os << "  partial transpose, closed form\n" << io::spectrum_to_text(pt_closed);
    if (pt_numeric) {
      os << "  partial transpose, Jacobi\n" << io::spectrum_to_text(*pt_numeric);
    }
    os << "  max disagreement " << io::format_double_short(disagreement) << "\n";
    os << "  max unit-trace error " << io::format_double_short(trace_error) << "\n";
    res.payload = os.str();
  } else {
    io::json rho{{"closed_form", io::spectrum_to_json(closed)},
                 {"transform", io::spectrum_to_json(transformed)}};
    rho["jacobi"] = numeric ? io::spectrum_to_json(*numeric) : io::json(nullptr);
    io::json pt{{"closed_form", io::spectrum_to_json(pt_closed)}};
    pt["jacobi"] =
        pt_numeric ? io::spectrum_to_json(*pt_numeric) : io::json(nullptr);
    io::json j{{"p", w.p}, {"f", w.f}, {"rho", rho}, {"pt", pt},
               {"max_disagreement", disagreement},
               {"max_unit_trace_error", trace_error},
               {"consistent", ok}};
    res.payload = io::dump(j);
  }
  if (!ok) {
    res.code = kExitFailed;
    res.diagnostic = io::json{{"error", "verification"},
                              {"message", "spectrum routes disagree"},
                              {"max_disagreement", disagreement},
                              {"max_unit_trace_error", trace_error}};
  }
  return res;
}

inline Result cmd_ppt(const CliConfig& c) {
  const auto w = params(c);
  const auto fmt = format_or(c, "json", {"json", "text"});
  const bool ppt = ppt_check(w);
  const double lo = min_pt_eigenvalue(w);
  std::optional<double> numeric;
  if (w.p <= kNumericMaxP) numeric = min_eigenvalue(werner_pt(w));
  const std::string verdict = ppt ? "PPT" : "NOT PPT";
  Result res;
  if (fmt == "text") {
    res.payload = verdict + "  (min PT eigenvalue " +
                  io::format_double_short(lo) + ")\n";
  } else {
    io::json j{{"p", w.p}, {"f", w.f}, {"min_pt_eigenvalue", lo}};
    j["min_pt_eigenvalue_numeric"] = numeric ? io::json(*numeric) : io::json(nullptr);
    j["verdict"] = verdict;
    res.payload = io::dump(j);
  }
  if (!ppt) {
    res.code = kExitFailed;
    res.diagnostic = io::json{{"error", "not_ppt"},
                              {"message", "partial transpose is not positive"},
                              {"f", w.f},
                              {"min_pt_eigenvalue", lo}};
  }
  return res;
}

inline Result cmd_partition(const CliConfig& c) {
  const auto fmt = format_or(c, "text", {"text", "json"});
  const Partition part = build_partition(c.p);
  const auto v = validate_partition(part, c.p);
  Result res;
  if (fmt == "text") {
    res.payload = partition_to_text(part);
  } else {
    auto j = io::partition_to_json(part);
    j["valid"] = v.ok;
    j["diagnostics"] = v.diagnostics;
    res.payload = io::dump(j);
  }
  if (!v.ok) {
    res.code = kExitFailed;
    res.diagnostic = io::json{{"error", "verification"},
                              {"message", "partition failed validation"},
                              {"diagnostics", v.diagnostics}};
  }
  return res;
}

inline Result cmd_decompose(const CliConfig& c) {
  const auto w = params(c);
  const auto fmt = format_or(c, "json", {"json", "text"});
  const Decomposition dec = decompose(w, scheme_from_name(c.scheme));
  return success(fmt == "text" ? decomposition_text(dec)
                                : io::dump(io::decomposition_to_json(dec)));
}

inline Result cmd_verify(const CliConfig& c) {
  const auto fmt = format_or(c, "json", {"json", "text"});
  Decomposition dec = decomposition_for(c);
  werner::detail::require_physical(dec.params, "verify");
  // An explicit --f names the target; a loaded file is checked against it.
  const WernerParams target = c.f ? params(c) : dec.params;
  const auto r = verify_decomposition(werner_dense(target), dec,
                                      {c.tol, c.strict_pure});
  dec.params = target;
  Result res;
  if (fmt == "text") {
    std::ostringstream os;
    os << "verification of " << dec.terms.size() << " terms against p="
       << dec.params.p << " f=" << io::format_double_short(dec.params.f) << "\n"
       << "  convex " << (r.convex_ok ? "yes" : "no") << "\n"
       << "  min local eigenvalue "
       << io::format_double_short(r.min_component_eigenvalue) << "\n"
       << "  residual " << io::format_double_short(r.reconstruction_residual)
       << "\n"
       << "  pure factors " << (r.purity_ok ? "yes" : "no") << "\n"
       << "  verdict " << (r.verdict ? "VERIFIED" : "FAILED") << "\n";
    res.payload = os.str();
  } else {
    res.payload = io::dump(verification_document(dec, r));
  }
  if (!r.verdict) {
    res.code = kExitFailed;
    res.diagnostic = io::json{{"error", "verification"},
                              {"message", "decomposition failed verification"},
                              {"diagnostics", r.diagnostics}};
  }
  return res;
}

inline Result cmd_refine(const CliConfig& c) {
  const auto fmt = format_or(c, "json", {"json", "text"});
  const Decomposition dec = decomposition_for(c);
  werner::detail::require_physical(dec.params, "refine");
  const Decomposition refined = refine_to_pure(dec, {c.tol});
  return success(fmt == "text" ? decomposition_text(refined)
                                : io::dump(io::decomposition_to_json(refined)));
}

inline Result cmd_report(const CliConfig& c) {
  const auto w = params(c);
  const auto fmt = format_or(c, "text", {"text", "json"});
  ReportOptions opts;
  opts.tol = c.tol;
  opts.refine = c.refine;
  opts.numeric_max_p = kNumericMaxP - 1;
  const auto rep = separability_report(w, opts);
  const auto inv = invariance_check(w, c.seed);
  Result res;
  res.payload = fmt == "json" ? io::dump(io::report_to_json(rep, inv))
                              : io::report_to_text(rep, inv);
  if (rep.verdict != Verdict::separable) {
    res.code = kExitFailed;
    res.diagnostic = io::json{{"error", rep.verdict == Verdict::entangled
                                            ? "entangled"
                                            : "verification"},
                              {"message", verdict_name(rep.verdict)},
                              {"f", w.f},
                              {"min_pt_eigenvalue", rep.min_pt_eigenvalue}};
  }
  return res;
}

inline Result cmd_sweep(const CliConfig& c) {
  format_or(c, "csv", {"csv"});
  SweepOptions opts;
  opts.tol = c.tol;
  const auto rows = sweep(c.p, c.f_start, c.f_end, c.f_step, opts);
  return success(sweep_to_csv(rows));
}

inline void emit(const std::string& payload, const std::string& path,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file " + path, path);
  file << payload;
  if (!file) throw IoError("failed writing output file " + path, path);
}

inline void diagnose(std::ostream& err, const io::json& j) {
  err << j.dump() << "\n";
}

}  // namespace detail

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name; `env_seed` is the value of WERNER_SEED, if set.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, const char* env_seed = std::getenv("WERNER_SEED")) {
  CLI::App app{"Werner states on 2^p x 2^p systems: spectra, PPT and "
               "certified product-state decompositions",
               "werner"};
  app.require_subcommand(1, 1);
  CliConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_f) {
    sub->add_option("--p", cfg.p, "qubits per party (d = 2^p)")
        ->check(CLI::Range(kMinCliP, kMaxCliP));
    if (needs_f) {
      sub->add_option_function<double>(
          "--f", [&](const double& v) { cfg.f = v; }, "flip expectation Tr(rho P)");
    }
    sub->add_option("--seed", cfg.seed, "random-unitary seed (WERNER_SEED overrides)");
    sub->add_option("--tol", cfg.tol, "verification tolerance");
    sub->add_option("--output", cfg.output, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json, csv or text");
  };

  struct Entry {
    CLI::App* app;
    Result (*fn)(const CliConfig&);
  };
  std::vector<Entry> entries;

  auto* build = app.add_subcommand("build", "emit the density matrix");
  common(build, true);
  build->add_flag("--pt", cfg.pt, "partial transpose on B");
  build->add_option("--basis", cfg.basis, "dense or spinor");
  entries.push_back({build, detail::cmd_build});

  auto* spectrum = app.add_subcommand("spectrum", "spectra by three routes");
  common(spectrum, true);
  entries.push_back({spectrum, detail::cmd_spectrum});

  auto* ppt = app.add_subcommand("ppt", "positive-partial-transpose test");
  common(ppt, true);
  entries.push_back({ppt, detail::cmd_ppt});

  auto* partition = app.add_subcommand("partition", "commuting-class partition");
  common(partition, false);
  entries.push_back({partition, detail::cmd_partition});

  auto* decompose_cmd = app.add_subcommand("decompose", "product-state decomposition");
  common(decompose_cmd, true);
  decompose_cmd->add_option("--scheme", cfg.scheme, "auto, per-string or class")
      ->check(CLI::IsMember({"auto", "per-string", "class"}));
  entries.push_back({decompose_cmd, detail::cmd_decompose});

  auto* verify = app.add_subcommand("verify", "verify a decomposition");
  common(verify, true);
  verify->add_option("--input", cfg.input, "decomposition JSON ('-' for stdin)");
  verify->add_option("--scheme", cfg.scheme, "scheme when building in place")
      ->check(CLI::IsMember({"auto", "per-string", "class"}));
  verify->add_flag("--strict-pure", cfg.strict_pure, "require pure factors");
  entries.push_back({verify, detail::cmd_verify});

  auto* refine = app.add_subcommand("refine", "split factors into pure states");
  common(refine, true);
  refine->add_option("--input", cfg.input, "decomposition JSON ('-' for stdin)");
  refine->add_option("--scheme", cfg.scheme, "scheme when building in place")
      ->check(CLI::IsMember({"auto", "per-string", "class"}));
  entries.push_back({refine, detail::cmd_refine});

  auto* report = app.add_subcommand("report", "end-to-end separability report");
  common(report, true);
  report->add_flag("--refine", cfg.refine, "also refine to pure product terms");
  entries.push_back({report, detail::cmd_report});

  auto* sweep_cmd = app.add_subcommand("sweep", "tabulate a range of f as CSV");
  common(sweep_cmd, false);
  sweep_cmd->add_option("--f-start", cfg.f_start, "first f (default -1)");
  sweep_cmd->add_option("--f-end", cfg.f_end, "last f (default 1)");
  sweep_cmd->add_option("--f-step", cfg.f_step, "step (default 0.05)");
  entries.push_back({sweep_cmd, detail::cmd_sweep});

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("werner");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    detail::diagnose(err, io::json{{"error", "usage"}, {"message", e.what()}});
    return kExitUsage;
  }

  try {
    if (env_seed != nullptr && *env_seed != '\0') {
      try {
        std::size_t used = 0;
        cfg.seed = std::stoull(env_seed, &used);
        if (used != std::string(env_seed).size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw UsageError(std::string("WERNER_SEED is not a 64-bit integer: ") +
                         env_seed);
      }
    }
    for (const auto& e : entries) {
      if (!e.app->parsed()) continue;
      Result res = e.fn(cfg);
      detail::emit(res.payload, cfg.output, out);
      if (res.diagnostic) detail::diagnose(err, *res.diagnostic);
      return res.code;
    }
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    detail::diagnose(err, io::json{{"error", "usage"}, {"message", e.what()}});
    return kExitUsage;
  } catch (const IoError& e) {
    detail::diagnose(err, io::json{{"error", "io"},
                                   {"message", e.what()},
                                   {"path", e.path()}});
    return kExitUsage;
  } catch (const RangeError& e) {
    detail::diagnose(err, io::json{{"error", "range"},
                                   {"message", e.what()},
                                   {"f", e.f()},
                                   {"valid_range", {e.lower(), e.upper()}}});
    return kExitFailed;
  } catch (const RefinementRefused& e) {
    detail::diagnose(err, io::json{{"error", "verification"},
                                   {"message", e.what()},
                                   {"report", io::verification_to_json(e.report())}});
    return kExitFailed;
  } catch (const PreconditionError& e) {
    detail::diagnose(err, io::json{{"error", "invalid_input"}, {"message", e.what()}});
    return kExitUsage;
  } catch (const DimensionError& e) {
    detail::diagnose(err, io::json{{"error", "invalid_input"}, {"message", e.what()}});
    return kExitUsage;
  } catch (const std::exception& e) {
    detail::diagnose(err, io::json{{"error", "internal"}, {"message", e.what()}});
    return kExitFailed;
  }
}

}  // namespace werner::cli
