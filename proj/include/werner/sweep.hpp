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

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "werner/decomposition.hpp"
#include "werner/io.hpp"
#include "werner/linalg.hpp"
#include "werner/verification.hpp"
#include "werner/werner_state.hpp"

namespace werner {

struct SweepRow {
  double f = 0.0;
  double min_eig_rho = 0.0;
  double min_eig_pt = 0.0;
  bool ppt = false;
  std::optional<Scheme> scheme;
  std::size_t n_terms = 0;
  std::optional<double> min_component_eig;
  std::optional<double> reconstruction_residual;
  Verdict verdict = Verdict::unverified;
};

struct SweepOptions {
  double tol = kDefaultVerifyTolerance;
  /// Largest p whose closed-form columns are re-derived by diagonalization.
  int numeric_max_p = 3;
};

/// Grid points start + i·step up to `end`, rounded to 12 decimals so that
/// decimal steps land on their nominal values.
inline std::vector<double> sweep_grid(double start, double end, double step) {
  if (!(step > 0.0)) throw PreconditionError("sweep: step must be positive");
  if (start > end) throw PreconditionError("sweep: start exceeds end");
  if (start < -1.0 || end > 1.0) {
    throw RangeError("sweep: range [" + io::format_double_short(start) + ", " +
                         io::format_double_short(end) +
                         "] leaves the physical interval [-1, 1]",
                     start < -1.0 ? start : end, -1.0, 1.0);
  }
  const auto count =
      static_cast<long long>(std::floor((end - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) /
                   1e12);
  }
  return grid;
}

inline SweepRow sweep_row(int p, double f, SweepOptions opts = {}) {
  const WernerParams w(p, f);
  SweepRow row;
  row.f = f;
  row.min_eig_rho = spectrum_closed_form(w).min();
  row.min_eig_pt = pt_spectrum_closed_form(w).min();
  row.ppt = row.min_eig_pt >= -kPptTolerance;
  if (p <= opts.numeric_max_p) {
    const double rho_numeric = min_eigenvalue(werner_dense(w));
    const double pt_numeric = min_eigenvalue(werner_pt(w));
    if (std::abs(rho_numeric - row.min_eig_rho) > opts.tol ||
        std::abs(pt_numeric - row.min_eig_pt) > opts.tol) {
      throw std::logic_error("sweep: closed-form and numeric spectra disagree at f = " +
                             io::format_double_short(f));
    }
  }
  if (f < 0.0) {
    row.verdict = Verdict::entangled;
    return row;
  }
  const Decomposition dec = decompose_auto(w);
  const auto report = verify_decomposition(werner_dense(w), dec, {opts.tol});
  row.scheme = dec.scheme;
  row.n_terms = dec.terms.size();
  row.min_component_eig = report.min_component_eigenvalue;
  row.reconstruction_residual = report.reconstruction_residual;
  row.verdict = report.verdict ? Verdict::separable : Verdict::unverified;
  return row;
}

inline std::vector<SweepRow> sweep(int p, double start, double end, double step,
                                   SweepOptions opts = {}) {
  std::vector<SweepRow> rows;
  for (double f : sweep_grid(start, end, step)) rows.push_back(sweep_row(p, f, opts));
  return rows;
}

/// Header row, ',' separators, '.' decimals, LF line endings.
inline std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "f,min_eig_rho,min_eig_pt,ppt,scheme,n_terms,min_component_eig,"
        "reconstruction_residual,verdict\n";
  for (const auto& r : rows) {
    os << io::format_double_short(r.f) << ','
       << io::format_double_short(r.min_eig_rho) << ','
       << io::format_double_short(r.min_eig_pt) << ','
       << (r.ppt ? "true" : "false") << ','
       << (r.scheme ? scheme_name(*r.scheme) : "none") << ',' << r.n_terms
       << ','
       << (r.min_component_eig ? io::format_double_short(*r.min_component_eig)
                               : "")
       << ','
       << (r.reconstruction_residual
               ? io::format_double_short(*r.reconstruction_residual)
               : "")
       << ',' << verdict_name(r.verdict) << '\n';
  }
  return os.str();
}

}  // namespace werner
