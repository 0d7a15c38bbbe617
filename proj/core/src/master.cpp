// Copyright 2026 The tlhad Authors
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

#include "tlhad/master.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "tlhad/hadamard.hpp"

namespace tlhad {

MasterSpec::MasterSpec(std::vector<Complex> lambdas, std::vector<std::int64_t> exponents)
    : lambdas_(std::move(lambdas)), exponents_(std::move(exponents)) {
  if (lambdas_.empty()) throw DomainError("MasterSpec: empty eigenvalue list");
  if (lambdas_.size() != exponents_.size()) {
    throw DimensionError("MasterSpec: " + std::to_string(lambdas_.size()) +
                         " eigenvalues but " + std::to_string(exponents_.size()) +
                         " exponents");
  }
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    const Complex li = lambdas_[i];
    if (!std::isfinite(li.real()) || !std::isfinite(li.imag())) {
      throw DomainError("MasterSpec: non-finite eigenvalue");
    }
    if (li == Complex{}) throw DomainError("MasterSpec: zero eigenvalue");
    for (std::size_t j = 0; j < i; ++j) {
      const double scale = std::max(std::abs(li), std::abs(lambdas_[j]));
      if (std::abs(li - lambdas_[j]) <= 1e-12 * scale) {
        throw DomainError("MasterSpec: repeated eigenvalue at positions " +
                          std::to_string(j) + " and " + std::to_string(i));
      }
    }
  }
  for (std::size_t a = 0; a < exponents_.size(); ++a) {
    if (exponents_[a] < 0) throw DomainError("MasterSpec: negative exponent");
    for (std::size_t b = 0; b < a; ++b) {
      if (exponents_[a] == exponents_[b]) {
        throw DomainError("MasterSpec: repeated exponent " + std::to_string(exponents_[a]));
      }
    }
  }
}

std::vector<std::int64_t> normalize_exponents(std::vector<std::int64_t> exponents) {
  if (exponents.empty()) return exponents;
  const auto lo = *std::min_element(exponents.begin(), exponents.end());
  for (auto& e : exponents) e -= lo;
  std::sort(exponents.begin(), exponents.end());
  return exponents;
}

MasterSpec normalized(const MasterSpec& spec) {
  return MasterSpec({spec.lambdas().begin(), spec.lambdas().end()},
                    normalize_exponents({spec.exponents().begin(), spec.exponents().end()}));
}

Matrix master_matrix(const MasterSpec& spec) {
  const std::size_t n = spec.size();
  Matrix omega(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega(i, j) = ipow(spec.lambdas()[i], spec.exponents()[j]);
  return omega;
}

Complex master_polynomial_eval(std::span<const std::int64_t> exponents, Complex z) {
  Complex sum{};
  for (auto e : exponents) sum += ipow(z, e);
  return sum;
}

MasterCheck check_master_condition(const MasterSpec& spec, double tol) {
  MasterCheck out;
  const std::size_t n = spec.size();
  out.n = n;
  out.residuals.assign(n * n, 0.0);
  const auto nd = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex ratio = spec.lambdas()[i] / spec.lambdas()[j];
      const Complex target = i == j ? Complex{nd} : Complex{};
      const double r = std::abs(master_polynomial_eval(spec.exponents(), ratio) - target);
      out.residuals[i * n + j] = r;
      out.max_residual = std::max(out.max_residual, r);
    }
  }
  out.passed = out.max_residual <= tol;
  return out;
}

MasterSpec fourier_master(std::int64_t n, std::int64_t ell) {
  if (n < 1) throw DomainError("fourier_master: size must be positive");
  if (std::gcd(ell, n) != 1) {
    throw DomainError("fourier_master: ell=" + std::to_string(ell) +
                      " is not coprime to n=" + std::to_string(n));
  }
  std::vector<Complex> lambdas;
  std::vector<std::int64_t> exponents;
  for (std::int64_t a = 0; a < n; ++a) {
    lambdas.push_back(unit_root(((ell % n) * a) % n, n));
    exponents.push_back(a);
  }
  return {std::move(lambdas), std::move(exponents)};
}

MasterSpec f4_master(std::int64_t k, std::int64_t m) {
  if (k < 1) throw DomainError("f4_master: k must be >= 1");
  if (m % 2 == 0) throw DomainError("f4_master: m must be odd");
  // a = e^{iπm/2k} = e^{2πi m/4k}
  const Complex a = unit_root(m, 4 * k);
  return {{1.0, -1.0, a, -a}, {0, 1, 2 * k, 2 * k + 1}};
}

MasterSpec f6_master(std::int64_t k, std::int64_t r, std::int64_t s) {
  if (!(0 < r && r < k && 0 < s && s < k)) {
    throw DomainError("f6_master: need 0 < r, s < k");
  }
  const Complex c = unit_root(1, 6 * k);  // e^{iπ/3k}
  const Complex w2 = unit_root(2, 6);
  const Complex w4 = unit_root(4, 6);
  // Common-denominator forms keep the products exact to the last ulp.
  const Complex w2c = unit_root(2 * k + 1, 6 * k);
  const Complex w4c = unit_root(4 * k + 1, 6 * k);
  return {{1.0, w2, w4, c, w2c, w4c},
          {0, 3 * r + 1, 3 * s + 2, 3 * k, 3 * k + 3 * r + 1, 3 * k + 3 * s + 2}};
}

void validate(const NestingSpec& spec) {
  if (spec.stages.empty()) throw DomainError("NestingSpec: at least one stage required");
  for (std::size_t j = 0; j < spec.stages.size(); ++j) {
    const auto& st = spec.stages[j];
    const std::string where = "NestingSpec stage " + std::to_string(j) + ": ";
    if (st.p < 2) throw DomainError(where + "p must be >= 2");
    if (st.k < 1) throw DomainError(where + "k must be >= 1");
    if (st.g.size() != static_cast<std::size_t>(st.p) ||
        st.f.size() != static_cast<std::size_t>(st.p)) {
      throw DimensionError(where + "g and f must have length p");
    }
    for (auto x : st.g)
      if (x < 0) throw DomainError(where + "g entries must be nonnegative");
    for (auto x : st.f)
      if (x < 0) throw DomainError(where + "f entries must be nonnegative");
  }
}

MasterSpec nest(const NestingSpec& spec) {
  validate(spec);
  const std::size_t stages = spec.stages.size();
  std::vector<std::int64_t> eta(stages);
  eta[0] = 1;
  for (std::size_t j = 1; j < stages; ++j)
    eta[j] = spec.stages[j - 1].k * spec.stages[j - 1].p * eta[j - 1];
  // Every ω_j has order η_j p_j, which divides the last one.
  const std::int64_t common = eta.back() * spec.stages.back().p;

  std::size_t total = 1;
  for (const auto& st : spec.stages) total *= static_cast<std::size_t>(st.p);

  std::vector<Complex> lambdas(total);
  std::vector<std::int64_t> exponents(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    std::int64_t exponent = 0;
    std::int64_t phase = 0;
    for (std::size_t j = 0; j < stages; ++j) {
      const auto& st = spec.stages[j];
      const auto i = static_cast<std::int64_t>(rest % static_cast<std::size_t>(st.p));
      rest /= static_cast<std::size_t>(st.p);
      const auto idx = static_cast<std::size_t>(i);
      exponent += eta[j] * (st.g[idx] * st.p + i);
      phase += (st.f[idx] * st.p + i) * (common / (eta[j] * st.p));
    }
    lambdas[flat] = unit_root(phase, common);
    exponents[flat] = exponent;
  }
  return normalized(MasterSpec(std::move(lambdas), std::move(exponents)));
}

namespace {

bool entries_are_roots(const Matrix& u, std::int64_t q, double tol) {
  for (const auto& e : u.entries()) {
    const double turns = std::arg(e) / (2.0 * std::numbers::pi);
    const auto k = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(q)));
    if (std::abs(e - unit_root(k, q)) > tol) return false;
  }
  return true;
}

std::size_t count_distinct_rows(const Matrix& u, double tol) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    bool seen = false;
    for (auto r : reps) {
      double d = 0.0;
      for (std::size_t j = 0; j < u.cols(); ++j) d = std::max(d, std::abs(u(i, j) - u(r, j)));
      if (d <= tol) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(i);
  }
  return reps.size();
}

}  // namespace

std::optional<ObstructionReport> pigeonhole_obstruction(const Matrix& u, double tol,
                                                        std::int64_t max_order) {
  if (!u.is_square() || u.empty()) throw DimensionError("pigeonhole_obstruction: not square");
  for (std::int64_t m = 1; m <= max_order; ++m) {
    if (!entries_are_roots(u, m, tol)) continue;
    const std::size_t distinct = count_distinct_rows(u, tol);
    if (distinct > static_cast<std::size_t>(m)) return ObstructionReport{m, distinct};
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// Fixed-width bitset over λ candidates.
using Mask = std::vector<std::uint64_t>;

bool any(const Mask& m) {
  return std::any_of(m.begin(), m.end(), [](std::uint64_t w) { return w != 0; });
}

class MasterSearch {
 public:
  MasterSearch(const Matrix& u, std::int64_t exponent_bound, std::int64_t root_order_bound,
               double tol)
      : u_(u), n_(u.rows()), bound_(exponent_bound), tol_(tol) {
    for (std::int64_t m = 1; m <= root_order_bound; ++m)
      for (std::int64_t k = 0; k < m; ++k)
        if (std::gcd(k, m) == 1) roots_.push_back({k, m});
    words_ = (roots_.size() + 63) / 64;

    // match_[(i*n + j)*(bound+1) + e] has bit c set iff root_c^e ≈ u(i, j).
    match_.assign(n_ * n_ * static_cast<std::size_t>(bound_ + 1), Mask(words_, 0));
    for (std::size_t c = 0; c < roots_.size(); ++c) {
      const auto [k, m] = roots_[c];
      for (std::int64_t e = 0; e <= bound_; ++e) {
        const Complex value = unit_root(k * e, m);
        for (std::size_t i = 0; i < n_; ++i)
          for (std::size_t j = 0; j < n_; ++j)
            if (std::abs(value - u_(i, j)) <= tol_)
              slot(i, j, e)[c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
  }

  std::optional<MasterSpec> run() {
    if (n_ > 1 && bound_ < static_cast<std::int64_t>(n_) - 1) return std::nullopt;
    std::vector<Mask> rows(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      rows[i] = slot(i, 0, 0);
      if (!any(rows[i])) return std::nullopt;
    }
    exponents_.assign(n_, 0);
    used_.assign(static_cast<std::size_t>(bound_ + 1), false);
    used_[0] = true;
    return descend(1, rows);
  }

 private:
  Mask& slot(std::size_t i, std::size_t j, std::int64_t e) {
    return match_[(i * n_ + j) * static_cast<std::size_t>(bound_ + 1) +
                  static_cast<std::size_t>(e)];
  }

  std::optional<MasterSpec> descend(std::size_t col, const std::vector<Mask>& rows) {
    if (col == n_) return finish(rows);
    std::vector<Mask> next(n_, Mask(words_));
    for (std::int64_t e = 1; e <= bound_; ++e) {
      if (used_[static_cast<std::size_t>(e)]) continue;
      bool alive = true;
      for (std::size_t i = 0; i < n_ && alive; ++i) {
        const Mask& m = slot(i, col, e);
        for (std::size_t w = 0; w < words_; ++w) next[i][w] = rows[i][w] & m[w];
        alive = any(next[i]);
      }
      if (!alive) continue;
      exponents_[col] = e;
      used_[static_cast<std::size_t>(e)] = true;
      auto found = descend(col + 1, next);
      used_[static_cast<std::size_t>(e)] = false;
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<MasterSpec> finish(const std::vector<Mask>& rows) {
    if (n_ > 1) {
      std::int64_t g = 0;
      for (auto e : exponents_) g = std::gcd(g, e);
      if (g != 1) return std::nullopt;
    }
    std::vector<std::size_t> choice(n_);
    std::vector<bool> taken(roots_.size(), false);
    if (!assign(0, rows, choice, taken)) return std::nullopt;
    std::vector<Complex> lambdas(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto [k, m] = roots_[choice[i]];
      lambdas[i] = unit_root(k, m);
    }
    MasterSpec spec(std::move(lambdas), exponents_);
    if (!approx_eq(master_matrix(spec), u_, tol_)) return std::nullopt;
    return spec;
  }

  // Distinct representatives, first in row order then candidate order.
  bool assign(std::size_t row, const std::vector<Mask>& rows, std::vector<std::size_t>& choice,
              std::vector<bool>& taken) {
    if (row == n_) return true;
    for (std::size_t c = 0; c < roots_.size(); ++c) {
      if (taken[c] || !((rows[row][c / 64] >> (c % 64)) & 1U)) continue;
      taken[c] = true;
      choice[row] = c;
      if (assign(row + 1, rows, choice, taken)) return true;
      taken[c] = false;
    }
    return false;
  }

  const Matrix& u_;
  std::size_t n_;
  std::int64_t bound_;
  double tol_;
  std::vector<std::pair<std::int64_t, std::int64_t>> roots_;
  std::size_t words_ = 0;
  std::vector<Mask> match_;
  std::vector<std::int64_t> exponents_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<MasterSpec> search_master_representation(const Matrix& u,
                                                       std::int64_t exponent_bound,
                                                       std::int64_t root_order_bound,
                                                       double tol) {
  if (exponent_bound <= 0 || root_order_bound <= 0) {
    throw DomainError("search_master_representation: bounds must be positive");
  }
  if (!u.is_square() || u.empty()) {
    throw DimensionError("search_master_representation: matrix is not square");
  }
  for (const auto& e : u.entries())
    if (e == Complex{}) return std::nullopt;
  const Matrix target = is_dephased(u, tol) ? u : dephase(u).first;
  return MasterSearch(target, exponent_bound, root_order_bound, tol).run();
}

Matrix h0() {
  const Complex j = unit_root(1, 3);
  const Complex j2 = unit_root(2, 3);
  return Matrix{{1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
                {1.0, 1.0, j, j, j2, j2},
                {1.0, j, 1.0, j2, j2, j},
                {1.0, j, j2, 1.0, j, j2},
                {1.0, j2, j2, j, 1.0, j},
                {1.0, j2, j, j2, j, 1.0}};
}

Matrix h1(Complex a) {
  if (a == Complex{}) throw DomainError("h1: parameter must be nonzero");
  const Complex i{0.0, 1.0};
  const Complex ab = std::conj(a);
  return Matrix{{1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
                {1.0, -1.0, i, -i, -i, i},
                {1.0, i, -1.0, a, -a, -i},
                {1.0, -i, -ab, -1.0, i, ab},
                {1.0, -i, ab, i, -1.0, -ab},
                {1.0, i, -i, -a, a, -1.0}};
}

}  // namespace tlhad
