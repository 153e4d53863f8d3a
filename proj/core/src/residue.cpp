// Copyright 2026 The Authors.
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

#include "visco/residue.hpp"

#include <algorithm>

#include "visco/errors.hpp"

namespace visco {

namespace {

// Minimal exact univariate layer: polynomials as ascending coefficient
// vectors, rational functions as unreduced quotients. Degrees stay below
// the number of hyperplanes, so no simplification is needed.
using Poly = std::vector<Rat>;

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly p_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

Poly p_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(std::move(out));
}

Rat p_eval(const Poly& a, const Rat& x) {
  Rat out = 0;
  for (std::size_t i = a.size(); i-- > 0;) out = out * x + a[i];
  return out;
}

Poly p_derive(const Poly& a) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(Rat(Int(i)) * a[i]);
  return out;
}

struct RatFunc {
  Poly num{};         // zero function by default
  Poly den{Rat(1)};
};

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  RatFunc out;
  out.num = p_add(p_mul(a.num, b.den), p_mul(b.num, a.den));
  out.den = p_mul(a.den, b.den);
  return out;
}

// Residue at x0 of num/den with squarefree den: num(x0)/den'(x0) at a
// simple zero, 0 where the function is regular.
Rat simple_pole_residue(const RatFunc& f, const Rat& x0) {
  if (p_eval(f.den, x0) != 0) return 0;
  const Rat dprime = p_eval(p_derive(f.den), x0);
  if (dprime == 0) throw OnDegenerate("pole is not simple");
  return p_eval(f.num, x0) / dprime;
}

void check_form(const Arrangement& a, const LogForm& w) {
  if (static_cast<int>(w.factors.size()) != a.r - 1) {
    throw BadParams("form needs r-1 factors");
  }
  for (const QVec& lambda : w.factors) {
    if (static_cast<int>(lambda.size()) != a.n) {
      throw BadParams("factor length mismatch");
    }
    Rat sum = 0;
    for (const Rat& x : lambda) sum += x;
    if (sum != 0) throw BadParams("factor coefficients must sum to zero");
  }
}

// Residue on the projective line: after a shear making every hyperplane
// finite in the chart, the form is sum_j lambda_j f_j'(x)/f_j(x) dx and the
// residue at the root of f_i is read off by partial fractions.
Rat line_residue(const Arrangement& a, const QVec& lambda, int i) {
  Rat shear = 0;
  for (int t = 0;; ++t) {
    bool ok = true;
    for (int j = 0; j < a.n; ++j) {
      ok = ok && a.forms.at(j, 0) + Rat(t) * a.forms.at(j, 1) != 0;
    }
    if (ok) {
      shear = t;
      break;
    }
  }
  std::vector<Rat> slope(a.n), offset(a.n);
  for (int j = 0; j < a.n; ++j) {
    slope[j] = a.forms.at(j, 0) + shear * a.forms.at(j, 1);
    offset[j] = a.forms.at(j, 1);
  }
  RatFunc sum;
  for (int j = 0; j < a.n; ++j) {
    if (lambda[j] == 0) continue;
    RatFunc term;
    term.num = {lambda[j] * slope[j]};
    term.den = {offset[j], slope[j]};
    sum = rf_add(sum, term);
  }
  return simple_pole_residue(sum, -offset[i] / slope[i]);
}

// Two-step residue on the projective plane in coordinates adapted to
// I = {i1 < i2}: with u = F_{i1}, v = F_{i2} the inner residue along
// (u = 0) of the 2-form is the function of v assembled below, and the
// outer residue is its simple-pole coefficient at v = 0.
Rat plane_residue(const Arrangement& a, const LogForm& w, const Subset& I) {
  const int i1 = I[0];
  const int i2 = I[1];

  // Third coordinate: a covector nonvanishing on the meeting point of the
  // two hyperplanes.
  RationalMatrix pair(2, 3);
  for (int c = 0; c < 3; ++c) {
    pair.at(0, c) = a.forms.at(i1, c);
    pair.at(1, c) = a.forms.at(i2, c);
  }
  const std::vector<QVec> meet = kernel_basis(pair);
  if (meet.size() != 1) throw OnDegenerate("hyperplanes do not meet in a point");
  int third = -1;
  for (int c = 0; c < 3 && third < 0; ++c) {
    if (meet.front()[c] != 0) third = c;
  }

  RationalMatrix change(3, 3);
  for (int c = 0; c < 3; ++c) {
    change.at(0, c) = a.forms.at(i1, c);
    change.at(1, c) = a.forms.at(i2, c);
    change.at(2, c) = third == c ? 1 : 0;
  }
  if (determinant(change) == 0) throw OnDegenerate("no adapted chart");

  // Every form in the adapted coordinates: G = forms * change^{-1}; solve
  // change^T g_j = forms_j.
  const RationalMatrix change_t = change.transposed();
  std::vector<QVec> g(a.n);
  for (int j = 0; j < a.n; ++j) {
    if (!solve(change_t, a.forms.row(j), g[j])) {
      throw OnDegenerate("coordinate change failed");
    }
  }

  const QVec& l1 = w.factors[0];
  const QVec& l2 = w.factors[1];
  // f_j(0, v) = g_j[1] v + g_j[2]; the factor with f = u contributes its
  // v-slope over the surviving linear form.
  RatFunc inner;
  for (int j = 0; j < a.n; ++j) {
    if (j == i1) continue;
    const Rat weight = l1[i1] * l2[j] - l2[i1] * l1[j];
    if (weight == 0) continue;
    RatFunc term;
    term.num = {weight * g[j][1]};
    term.den = {g[j][2], g[j][1]};
    inner = rf_add(inner, term);
  }
  return simple_pole_residue(inner, Rat(0));
}

}  // namespace

LogForm wedge_basis_form(int r, int n, const Subset& J) {
  if (static_cast<int>(J.size()) != r - 1) throw BadIndex("need an (r-1)-subset");
  LogForm w;
  for (int j : J) {
    if (j < 0 || j >= n - 1) throw BadIndex("basis index out of range");
    QVec lambda(n, Rat(0));
    lambda[j] = 1;
    lambda[n - 1] = -1;
    w.factors.push_back(std::move(lambda));
  }
  return w;
}

Rat iterated_residue(const Arrangement& a, const LogForm& w, const Subset& I) {
  check_form(a, w);
  if (static_cast<int>(I.size()) != a.r - 1 ||
      !std::is_sorted(I.begin(), I.end()) ||
      (!I.empty() && (I.front() < 0 || I.back() >= a.n))) {
    throw BadIndex("need a sorted (r-1)-subset of the hyperplanes");
  }
  if (!is_general_position(a)) {
    throw OnDegenerate("arrangement is not in general position");
  }
  if (a.r == 2) return line_residue(a, w.factors[0], I[0]);
  if (a.r == 3) return plane_residue(a, w, I);
  throw UnsupportedRank("symbolic residues cover r = 2 and r = 3");
}

Rat residue_determinant_oracle(const LogForm& w, const Subset& I) {
  const int k = static_cast<int>(I.size());
  RationalMatrix m(k, k);
  for (int row = 0; row < k; ++row) {
    for (int col = 0; col < k; ++col) m.at(row, col) = w.factors[row][I[col]];
  }
  return determinant(m);
}

RationalMatrix residue_matrix(const Arrangement& a) {
  if (!is_general_position(a)) {
    throw OnDegenerate("arrangement is not in general position");
  }
  const int r = a.r;
  const int n = a.n;
  const auto rows = k_subsets(n - 1, r - 1);
  const auto cols = k_subsets(n, r - 1);
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const LogForm w = wedge_basis_form(r, n, rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(i, j) = (r == 2 || r == 3)
                         ? iterated_residue(a, w, cols[j])
                         : residue_determinant_oracle(w, cols[j]);
    }
  }
  return out;
}

RationalMatrix inclusion_matrix(int r, int n) {
  const auto rows = k_subsets(n - 1, r - 1);
  const auto cols = k_subsets(n, r - 1);
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // The wedge over J of (e_j - e_{n-1}), expanded in the standard wedges.
    RationalMatrix factors(r - 1, n);
    for (int m = 0; m < r - 1; ++m) {
      factors.at(m, rows[i][m]) = 1;
      factors.at(m, n - 1) = -1;
    }
    Subset all_rows(r - 1);
    for (int m = 0; m < r - 1; ++m) all_rows[m] = m;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(i, j) = r == 1 ? Rat(1) : minor_det(factors, all_rows, cols[j]);
    }
  }
  return out;
}

bool verify_residue_theorem(const Arrangement& a) {
  const RationalMatrix res = residue_matrix(a);
  if (!(res == inclusion_matrix(a.r, a.n))) return false;
  return rank(res) == binomial(a.n - 1, a.r - 1);
}

long long toric_residue(const CharacterVector& m, int i) {
  long long sum = 0;
  for (long long x : m.m) sum += x;
  if (sum != 0) throw BadParams("character must have coordinate sum zero");
  if (i < 0 || i >= static_cast<int>(m.m.size())) {
    throw BadIndex("facet index out of range");
  }
  return m.m[i];
}

}  // namespace visco
