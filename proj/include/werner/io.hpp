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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "werner/decomposition.hpp"
#include "werner/dense_matrix.hpp"
#include "werner/errors.hpp"
#include "werner/linalg.hpp"
#include "werner/partition.hpp"
#include "werner/verification.hpp"
#include "werner/werner_state.hpp"

namespace werner::io {

using json = nlohmann::ordered_json;

/// binary64 as 17 significant digits; non-finite values become null.
inline std::string format_double17(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Shortest decimal text that round-trips.
inline std::string format_double_short(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace detail {

inline bool is_flat(const json& j) {
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

inline void write(std::ostream& os, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        write(os, it.value(), indent, depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      if (is_flat(j)) {
        os << "[";
        bool first = true;
        for (const auto& e : j) {
          if (!first) os << ", ";
          first = false;
          write(os, e, indent, depth + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        write(os, e, indent, depth + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case json::value_t::number_float:
      os << format_double17(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace detail

/// Pretty-prints with every floating-point number at 17 significant digits.
inline std::string dump(const json& j, int indent = 2) {
  std::ostringstream os;
  detail::write(os, j, indent, 0);
  os << "\n";
  return os.str();
}

inline json matrix_to_json(const DenseMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json rrow = json::array();
    json irow = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

namespace detail {

[[noreturn]] inline void schema_error(const std::string& what) {
  throw PreconditionError("schema: " + what);
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    schema_error(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

inline double number(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number()) schema_error(std::string("\"") + key + "\" is not a number");
  return v.get<double>();
}

}  // namespace detail

inline DenseMatrix matrix_from_json(const json& j) {
  const auto& dim_field = detail::field(j, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() <= 0) {
    detail::schema_error("\"dim\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(dim_field.get<long long>());
  const auto& re = detail::field(j, "re");
  const auto& im = detail::field(j, "im");
  if (!re.is_array() || !im.is_array() || re.size() != n || im.size() != n) {
    detail::schema_error("matrix rows do not match \"dim\"");
  }
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!re[i].is_array() || !im[i].is_array() || re[i].size() != n ||
        im[i].size() != n) {
      detail::schema_error("matrix row " + std::to_string(i) +
                           " does not match \"dim\"");
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!re[i][k].is_number() || !im[i][k].is_number()) {
        detail::schema_error("non-numeric matrix entry");
      }
      m(i, k) = Complex{re[i][k].get<double>(), im[i][k].get<double>()};
    }
  }
  return m;
}

inline json decomposition_to_json(const Decomposition& dec) {
  json terms = json::array();
  for (const auto& t : dec.terms) {
    terms.push_back(json{{"weight", t.weight},
                         {"label", t.label},
                         {"state_a", matrix_to_json(t.state_a)},
                         {"state_b", matrix_to_json(t.state_b)}});
  }
  return json{{"p", dec.params.p},
              {"f", dec.params.f},
              {"scheme", scheme_name(dec.scheme)},
              {"scale", dec.scale},
              {"terms", std::move(terms)}};
}

inline Decomposition decomposition_from_json(const json& j) {
  const auto& p_field = detail::field(j, "p");
  if (!p_field.is_number_integer()) detail::schema_error("\"p\" must be an integer");
  Decomposition dec;
  dec.params = WernerParams(p_field.get<int>(), detail::number(j, "f"));
  const auto& scheme = detail::field(j, "scheme");
  if (!scheme.is_string()) detail::schema_error("\"scheme\" must be a string");
  dec.scheme = scheme_from_name(scheme.get<std::string>());
  dec.scale = detail::number(j, "scale");
  const auto& terms = detail::field(j, "terms");
  if (!terms.is_array()) detail::schema_error("\"terms\" must be an array");
  for (const auto& t : terms) {
    ProductTerm term;
    term.weight = detail::number(t, "weight");
    const auto& label = detail::field(t, "label");
    if (!label.is_string()) detail::schema_error("\"label\" must be a string");
    term.label = label.get<std::string>();
    term.state_a = matrix_from_json(detail::field(t, "state_a"));
    term.state_b = matrix_from_json(detail::field(t, "state_b"));
    dec.terms.push_back(std::move(term));
  }
  return dec;
}

inline json spectrum_to_json(const Spectrum& s) {
  json out = json::array();
  for (const auto& l : s.levels()) {
    out.push_back(json{{"value", l.value}, {"multiplicity", l.multiplicity}});
  }
  return out;
}

inline json verification_to_json(const VerificationReport& r) {
  return json{{"convex_ok", r.convex_ok},
              {"min_weight", r.min_weight},
              {"weight_sum_error", r.weight_sum_error},
              {"positivity_ok", r.positivity_ok},
              {"min_component_eigenvalue", r.min_component_eigenvalue},
              {"reconstruction_residual", r.reconstruction_residual},
              {"purity_ok", r.purity_ok},
              {"max_purity_defect", r.max_purity_defect},
              {"verdict", r.verdict},
              {"diagnostics", r.diagnostics}};
}

inline json partition_to_json(const Partition& part) {
  json classes = json::array();
  for (const auto& cls : part.classes) {
    json members = json::array();
    json gens = json::array();
    for (const auto& s : cls.members) members.push_back(s.letter_string());
    for (const auto& s : cls.generators) gens.push_back(s.letter_string());
    classes.push_back(
        json{{"id", cls.id()}, {"members", members}, {"generators", gens}});
  }
  return json{{"p", part.p}, {"classes", std::move(classes)}};
}

inline json report_to_json(const SeparabilityReport& rep,
                           std::optional<double> invariance_residual = {}) {
  json j{{"p", rep.params.p},
         {"d", rep.params.dim()},
         {"f", rep.params.f},
         {"verdict", verdict_name(rep.verdict)},
         {"ppt", rep.ppt},
         {"min_pt_eigenvalue", rep.min_pt_eigenvalue}};
  j["min_pt_eigenvalue_numeric"] =
      rep.min_pt_eigenvalue_numeric ? json(*rep.min_pt_eigenvalue_numeric)
                                    : json(nullptr);
  j["invariance_residual"] =
      invariance_residual ? json(*invariance_residual) : json(nullptr);
  if (rep.certificate) {
    j["scheme"] = scheme_name(rep.certificate->scheme);
    j["scale"] = rep.certificate->scale;
    j["n_terms"] = rep.certificate->terms.size();
    j["residual"] = rep.verification->reconstruction_residual;
    j["verification"] = verification_to_json(*rep.verification);
  } else {
    j["scheme"] = nullptr;
    j["scale"] = nullptr;
    j["n_terms"] = 0;
    j["residual"] = nullptr;
    j["verification"] = nullptr;
  }
  if (rep.refined) {
    j["refined"] = json{{"n_terms", rep.refined->terms.size()},
                        {"verification",
                         verification_to_json(*rep.refined_verification)}};
  } else {
    j["refined"] = nullptr;
  }
  j["diagnostics"] = rep.diagnostics;
  return j;
}

inline std::string report_to_text(const SeparabilityReport& rep,
                                  std::optional<double> invariance_residual = {}) {
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& value) {
    os << "  " << std::left << std::setw(30) << key << value << "\n";
  };
  os << "Werner state p=" << rep.params.p << " d=" << rep.params.dim()
     << " f=" << format_double_short(rep.params.f) << "\n";
  row("PPT", std::string(rep.ppt ? "yes" : "no") + " (min PT eigenvalue " +
                 format_double_short(rep.min_pt_eigenvalue) + ")");
  if (rep.min_pt_eigenvalue_numeric) {
    row("min PT eigenvalue (Jacobi)",
        format_double_short(*rep.min_pt_eigenvalue_numeric));
  }
  if (invariance_residual) {
    row("U(x)U invariance residual", format_double_short(*invariance_residual));
  }
  if (rep.certificate) {
    const auto& v = *rep.verification;
    row("scheme", scheme_name(rep.certificate->scheme) + " (scale " +
                      format_double_short(rep.certificate->scale) + ")");
    row("terms", std::to_string(rep.certificate->terms.size()));
    row("weights", std::string(v.convex_ok ? "convex" : "NOT convex") +
                       " (min " + format_double_short(v.min_weight) +
                       ", sum error " + format_double_short(v.weight_sum_error) +
                       ")");
    row("min local eigenvalue", format_double_short(v.min_component_eigenvalue));
    row("reconstruction residual",
        format_double_short(v.reconstruction_residual));
    row("pure factors", v.purity_ok ? "yes" : "no");
  }
  if (rep.refined) {
    const auto& v = *rep.refined_verification;
    row("refined terms", std::to_string(rep.refined->terms.size()));
    row("refined residual", format_double_short(v.reconstruction_residual));
    row("refined max purity defect", format_double_short(v.max_purity_defect));
  }
  row("verdict", verdict_name(rep.verdict));
  for (const auto& d : rep.diagnostics) row("note", d);
  return os.str();
}

inline std::string spectrum_to_text(const Spectrum& s) {
  std::ostringstream os;
  for (const auto& l : s.levels()) {
    os << "    " << std::left << std::setw(26) << format_double_short(l.value)
       << "x" << l.multiplicity << "\n";
  }
  return os.str();
}

}  // namespace werner::io
