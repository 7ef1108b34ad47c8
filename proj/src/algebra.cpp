#include "hecke/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

void add_into(Element::Terms& t, MonomialIndex m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

void add_into(Element::Terms& t, const Element::Terms& src, const Rational& c) {
  for (const auto& [m, v] : src) add_into(t, m, c * v);
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

// Lexicographic rank of a permutation among all permutations of its size.
std::size_t lehmer_rank(const std::vector<int>& img) {
  const std::size_t n = img.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (img[j] < img[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

}  // namespace

// ------------------------------------------------------------------ Element

Element::Element(const HeckeAlgebra* alg, Terms terms) : alg_(alg) {
  for (auto& [m, c] : terms)
    if (c != 0) terms_.emplace(m, std::move(c));
}

Rational Element::coefficient(MonomialIndex m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(MonomialIndex m, const Rational& c) { add_into(terms_, m, c); }

namespace {

const HeckeAlgebra* common_algebra(const Element& a, const Element& b) {
  if (a.algebra() == nullptr || b.algebra() == nullptr || a.algebra() != b.algebra())
    throw std::invalid_argument("elements belong to different algebras");
  return a.algebra();
}

}  // namespace

Element& Element::operator+=(const Element& o) {
  common_algebra(*this, o);
  add_into(terms_, o.terms_, Rational(1));
  return *this;
}

Element& Element::operator-=(const Element& o) {
  common_algebra(*this, o);
  add_into(terms_, o.terms_, Rational(-1));
  return *this;
}

Element operator*(const Rational& c, const Element& h) {
  Element out(h.alg_);
  if (c == 0) return out;
  for (const auto& [m, v] : h.terms_) out.terms_.emplace(m, c * v);
  return out;
}

Element operator*(const Element& a, const Element& b) { return common_algebra(a, b)->multiply(a, b); }

// ------------------------------------------------------------- HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(int ell, int r, std::vector<long> omega) : ell_(ell), r_(r), omega_(std::move(omega)) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (static_cast<int>(omega_.size()) != ell) throw std::invalid_argument("omega must have ell entries");
  if (r > 8) throw std::invalid_argument("r too large to materialize the algebra");

  // f(x) = prod (x - omega_i), coefficients f_0 .. f_ell.
  fcoef_.assign(1, Rational(1));
  for (long w : omega_) {
    std::vector<Rational> next(fcoef_.size() + 1, Rational(0));
    for (std::size_t k = 0; k < fcoef_.size(); ++k) {
      next[k + 1] += fcoef_[k];
      next[k] -= fcoef_[k] * Rational(w);
    }
    fcoef_ = std::move(next);
  }

  num_perms_ = factorial(r);
  num_exps_ = 1;
  for (int i = 0; i < r; ++i) num_exps_ *= static_cast<std::size_t>(ell);
  if (num_perms_ * num_exps_ > (1u << 22)) throw std::invalid_argument("algebra too large to materialize");

  build_permutations();
  if (!load_cache()) {
    build_x_powers();
    store_cache();
  }
  build_pushes();
  build_reductions();
}

void HeckeAlgebra::build_permutations() {
  std::vector<int> img(static_cast<std::size_t>(r_));
  std::iota(img.begin(), img.end(), 0);
  perms_.reserve(num_perms_);
  do {
    perms_.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  perm_mul_.resize(num_perms_ * num_perms_);
  perm_inv_.resize(num_perms_);
  for (std::size_t a = 0; a < num_perms_; ++a) {
    perm_inv_[a] = static_cast<std::uint32_t>(permutation_index(perms_[a].inverse()));
    for (std::size_t b = 0; b < num_perms_; ++b)
      perm_mul_[a * num_perms_ + b] = static_cast<std::uint32_t>(permutation_index(perms_[a] * perms_[b]));
  }
  perm_simple_left_.resize(static_cast<std::size_t>(std::max(r_ - 1, 0)) * num_perms_);
  for (int i = 0; i + 1 < r_; ++i) {
    const std::size_t si = permutation_index(Permutation::simple(r_, i));
    for (std::size_t w = 0; w < num_perms_; ++w)
      perm_simple_left_[static_cast<std::size_t>(i) * num_perms_ + w] = perm_mul_[si * num_perms_ + w];
  }
}

std::size_t HeckeAlgebra::permutation_index(const Permutation& w) const {
  if (w.size() != r_) throw std::invalid_argument("permutation of wrong size");
  return lehmer_rank(w.images());
}

std::vector<int> HeckeAlgebra::exponent(std::size_t index) const {
  std::vector<int> a(static_cast<std::size_t>(r_));
  for (int k = r_ - 1; k >= 0; --k) {
    a[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(ell_));
    index /= static_cast<std::size_t>(ell_);
  }
  return a;
}

std::size_t HeckeAlgebra::exponent_index(const std::vector<int>& a) const {
  if (static_cast<int>(a.size()) != r_) throw std::invalid_argument("exponent vector of wrong length");
  std::size_t idx = 0;
  for (int v : a) {
    if (v < 0 || v >= ell_) throw std::invalid_argument("exponent outside normal-form range");
    idx = idx * static_cast<std::size_t>(ell_) + static_cast<std::size_t>(v);
  }
  return idx;
}

MonomialIndex HeckeAlgebra::monomial_index(const std::vector<int>& a, const Permutation& w) const {
  return static_cast<MonomialIndex>(exponent_index(a) * num_perms_ + permutation_index(w));
}

MonomialIndex HeckeAlgebra::top_monomial() const {
  return static_cast<MonomialIndex>((num_exps_ - 1) * num_perms_);
}

void HeckeAlgebra::left_simple(int i, const std::vector<int>& e, std::size_t w, const Rational& c, Terms& out) const {
  const std::size_t ii = static_cast<std::size_t>(i);
  const std::size_t sw = perm_simple_left_[ii * num_perms_ + w];
  std::vector<int> f = e;
  std::swap(f[ii], f[ii + 1]);
  add_into(out, static_cast<MonomialIndex>(exponent_index(f) * num_perms_ + sw), c);

  // Divided difference (s_i p - p) / (x_i - x_{i+1}) of p = x_i^p x_{i+1}^q.
  const int p = e[ii];
  const int q = e[ii + 1];
  if (p == q) return;
  const int lo = std::min(p, q);
  const int d = std::abs(p - q);
  const Rational sign = p > q ? Rational(-1) : Rational(1);
  f = e;
  for (int k = 0; k < d; ++k) {
    f[ii] = lo + k;
    f[ii + 1] = lo + d - 1 - k;
    add_into(out, static_cast<MonomialIndex>(exponent_index(f) * num_perms_ + w), sign * c);
  }
}

HeckeAlgebra::Terms HeckeAlgebra::times_perm(const Terms& t, std::size_t v) const {
  Terms out;
  for (const auto& [m, c] : t) {
    const std::size_t e = m / num_perms_;
    const std::size_t u = m % num_perms_;
    add_into(out, static_cast<MonomialIndex>(e * num_perms_ + perm_mul_[u * num_perms_ + v]), c);
  }
  return out;
}

void HeckeAlgebra::build_x_powers() {
  xpow_.assign(static_cast<std::size_t>(r_), Element(this));
  const std::size_t id = 0;
  // x_1^ell = -(f_0 + f_1 x_1 + ... + f_{ell-1} x_1^{ell-1}).
  Terms n1;
  for (int k = 0; k < ell_; ++k) {
    std::vector<int> a(static_cast<std::size_t>(r_), 0);
    a[0] = k;
    add_into(n1, static_cast<MonomialIndex>(exponent_index(a) * num_perms_ + id), -fcoef_[static_cast<std::size_t>(k)]);
  }
  xpow_[0] = Element(this, n1);

  // x_j^ell = s x_{j-1}^ell s + sum_k x_{j-1}^k x_j^{ell-1-k} s, s = s_{j-1}.
  for (int j = 1; j < r_; ++j) {
    const int i = j - 1;
    const std::size_t s = permutation_index(Permutation::simple(r_, i));
    Terms left;
    for (const auto& [m, c] : xpow_[static_cast<std::size_t>(i)].terms())
      left_simple(i, exponent(m / num_perms_), m % num_perms_, c, left);
    Terms nj = times_perm(left, s);
    for (int k = 0; k < ell_; ++k) {
      std::vector<int> a(static_cast<std::size_t>(r_), 0);
      a[static_cast<std::size_t>(i)] = k;
      a[static_cast<std::size_t>(j)] = ell_ - 1 - k;
      add_into(nj, static_cast<MonomialIndex>(exponent_index(a) * num_perms_ + s), Rational(1));
    }
    xpow_[static_cast<std::size_t>(j)] = Element(this, nj);
  }
}

void HeckeAlgebra::build_pushes() {
  // w x^b computed through the first left descent, shortest permutations first.
  std::vector<std::size_t> order(num_perms_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return perms_[a].length() < perms_[b].length(); });
  push_.assign(num_perms_ * num_exps_, Terms{});
  for (std::size_t w : order) {
    const int i = perms_[w].first_left_descent();
    for (std::size_t b = 0; b < num_exps_; ++b) {
      Terms& out = push_[w * num_exps_ + b];
      if (i < 0) {
        out.emplace(static_cast<MonomialIndex>(b * num_perms_ + w), Rational(1));
        continue;
      }
      const std::size_t shorter = perm_simple_left_[static_cast<std::size_t>(i) * num_perms_ + w];
      for (const auto& [m, c] : push_[shorter * num_exps_ + b])
        left_simple(i, exponent(m / num_perms_), m % num_perms_, c, out);
    }
  }
}

namespace {

struct Reducer {
  const HeckeAlgebra& alg;
  std::map<std::vector<int>, Element::Terms> memo;

  const Element::Terms& run(const std::vector<int>& e) {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    Element::Terms out;
    int j = -1;
    for (int k = alg.r() - 1; k >= 0; --k)
      if (e[static_cast<std::size_t>(k)] >= alg.ell()) {
        j = k;
        break;
      }
    if (j < 0) {
      out.emplace(static_cast<MonomialIndex>(alg.exponent_index(e) * alg.num_permutations()), Rational(1));
    } else {
      std::vector<int> base = e;
      base[static_cast<std::size_t>(j)] -= alg.ell();
      for (const auto& [m, c] : alg.x_power_rewrite(j).terms()) {
        const auto b = alg.monomial_exponent(m);
        std::vector<int> f = base;
        for (std::size_t k = 0; k < f.size(); ++k) f[k] += b[k];
        const std::size_t u = m % alg.num_permutations();
        const Element::Terms sub = run(f);
        for (const auto& [m2, c2] : sub) {
          const std::size_t ex = m2 / alg.num_permutations();
          const std::size_t v = m2 % alg.num_permutations();
          const std::size_t vu = alg.permutation_index(alg.permutation(v) * alg.permutation(u));
          add_into(out, static_cast<MonomialIndex>(ex * alg.num_permutations() + vu), c * c2);
        }
      }
    }
    return memo.emplace(e, std::move(out)).first->second;
  }
};

}  // namespace

void HeckeAlgebra::build_reductions() {
  red_base_ = 2 * ell_ - 1;
  std::size_t count = 1;
  for (int i = 0; i < r_; ++i) count *= static_cast<std::size_t>(red_base_);
  reduce_.assign(count, Terms{});
  Reducer red{*this, {}};
  std::vector<int> e(static_cast<std::size_t>(r_), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (int k = r_ - 1; k >= 0; --k) {
      e[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(red_base_));
      rest /= static_cast<std::size_t>(red_base_);
    }
    reduce_[idx] = red.run(e);
  }
}

const HeckeAlgebra::Terms& HeckeAlgebra::reduced(const std::vector<int>& e) const {
  std::size_t idx = 0;
  for (int v : e) idx = idx * static_cast<std::size_t>(red_base_) + static_cast<std::size_t>(v);
  return reduce_[idx];
}

HeckeAlgebra::Terms HeckeAlgebra::multiply_monomials(MonomialIndex a, MonomialIndex b) const {
  const std::vector<int> ea = exponent(a / num_perms_);
  const std::size_t w = a % num_perms_;
  const std::size_t eb = b / num_perms_;
  const std::size_t v = b % num_perms_;
  Terms out;
  std::vector<int> sum(static_cast<std::size_t>(r_));
  for (const auto& [m, c] : push_[w * num_exps_ + eb]) {
    const std::vector<int> e = exponent(m / num_perms_);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + e[k];
    const std::size_t uv = perm_mul_[(m % num_perms_) * num_perms_ + v];
    for (const auto& [m2, c2] : reduced(sum)) {
      const std::size_t ex = m2 / num_perms_;
      const std::size_t z = m2 % num_perms_;
      add_into(out, static_cast<MonomialIndex>(ex * num_perms_ + perm_mul_[z * num_perms_ + uv]), c * c2);
    }
  }
  return out;
}

Element HeckeAlgebra::one() const { return basis_element(0); }

Element HeckeAlgebra::s(int i) const { return from_permutation(Permutation::simple(r_, i)); }

Element HeckeAlgebra::x(int k) const {
  if (k < 0 || k >= r_) throw std::invalid_argument("x index out of range");
  std::vector<int> a(static_cast<std::size_t>(r_), 0);
  a[static_cast<std::size_t>(k)] = 1;
  return from_x_monomial(a);
}

Element HeckeAlgebra::from_permutation(const Permutation& w) const {
  return basis_element(static_cast<MonomialIndex>(permutation_index(w)));
}

Element HeckeAlgebra::from_x_monomial(const std::vector<int>& a) const {
  if (static_cast<int>(a.size()) != r_) throw std::invalid_argument("exponent vector of wrong length");
  for (int v : a)
    if (v < 0) throw std::invalid_argument("negative exponent");
  Reducer red{*this, {}};
  return Element(this, red.run(a));
}

Element HeckeAlgebra::monomial(const std::vector<int>& a, const Permutation& w) const {
  return basis_element(monomial_index(a, w));
}

Element HeckeAlgebra::basis_element(MonomialIndex m) const {
  if (m >= dimension()) throw std::invalid_argument("monomial index out of range");
  Element h(this);
  h.add_term(m, Rational(1));
  return h;
}

Element HeckeAlgebra::multiply(const Element& a, const Element& b) const {
  if (a.algebra() != this || b.algebra() != this) throw std::invalid_argument("elements belong to different algebras");
  Terms out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) add_into(out, multiply_monomials(ma, mb), ca * cb);
  return Element(this, std::move(out));
}

Element HeckeAlgebra::star(const Element& h) const {
  if (h.algebra() != this) throw std::invalid_argument("element belongs to a different algebra");
  // (x^a w)* = w^{-1} x^a.
  Terms out;
  for (const auto& [m, c] : h.terms()) add_into(out, push_[perm_inv_[m % num_perms_] * num_exps_ + m / num_perms_], c);
  return Element(this, std::move(out));
}

Rational HeckeAlgebra::tau_hat(const Element& h) const {
  if (h.algebra() != this) throw std::invalid_argument("element belongs to a different algebra");
  return h.coefficient(top_monomial());
}

Rational HeckeAlgebra::pairing(const Element& a, const Element& b) const { return tau_hat(multiply(a, star(b))); }

std::vector<Rational> HeckeAlgebra::to_vector(const Element& h) const {
  if (h.algebra() != this) throw std::invalid_argument("element belongs to a different algebra");
  std::vector<Rational> v(dimension(), Rational(0));
  for (const auto& [m, c] : h.terms()) v[m] = c;
  return v;
}

Element HeckeAlgebra::from_vector(const std::vector<Rational>& v) const {
  if (v.size() != dimension()) throw std::invalid_argument("vector length differs from the algebra dimension");
  Element h(this);
  for (std::size_t m = 0; m < v.size(); ++m) h.add_term(static_cast<MonomialIndex>(m), v[m]);
  return h;
}

// -------------------------------------------------------------------- cache

namespace {

std::filesystem::path cache_file(int ell, int r, const std::vector<long>& omega) {
  const char* dir = std::getenv("CELLULAR_HECKE_CACHE");
  if (dir == nullptr || *dir == '\0') return {};
  std::ostringstream name;
  name << "xpow-l" << ell << "-r" << r << "-w";
  for (std::size_t i = 0; i < omega.size(); ++i) name << (i ? "_" : "") << omega[i];
  name << ".txt";
  return std::filesystem::path(dir) / name.str();
}

}  // namespace

bool HeckeAlgebra::load_cache() {
  const auto path = cache_file(ell_, r_, omega_);
  if (path.empty()) return false;
  std::ifstream in(path);
  if (!in) return false;
  std::vector<Element> loaded(static_cast<std::size_t>(r_), Element(this));
  std::string line;
  try {
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::size_t j = 0;
      std::size_t m = 0;
      std::string coef;
      if (!(ls >> j >> m >> coef) || j >= loaded.size() || m >= dimension()) return false;
      loaded[j].add_term(static_cast<MonomialIndex>(m), parse_rational(coef));
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  xpow_ = std::move(loaded);
  return true;
}

void HeckeAlgebra::store_cache() const {
  const auto path = cache_file(ell_, r_, omega_);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    for (std::size_t j = 0; j < xpow_.size(); ++j)
      for (const auto& [m, c] : xpow_[j].terms()) out << j << ' ' << m << ' ' << to_string(c) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

// ------------------------------------------------------------------- checks

std::optional<std::string> check_relations(const HeckeAlgebra& alg) {
  const int r = alg.r();
  auto vanishes = [](const Element& h) { return h.is_zero(); };
  const Element one = alg.one();
  for (int i = 0; i + 1 < r; ++i) {
    const Element si = alg.s(i);
    if (!vanishes(si * si - one)) return "s_" + std::to_string(i + 1) + "^2 = 1";
    for (int j = i + 1; j + 1 < r; ++j) {
      const Element sj = alg.s(j);
      if (j == i + 1) {
        if (!vanishes(si * sj * si - sj * si * sj)) return "braid s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1);
      } else if (!vanishes(si * sj - sj * si)) {
        return "s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1) + " commute";
      }
    }
    for (int j = 0; j < r; ++j) {
      const Element xj = alg.x(j);
      if (j == i) {
        if (!vanishes(si * xj - (alg.x(i + 1) * si - one))) return "s_i x_i = x_{i+1} s_i - 1 at i=" + std::to_string(i + 1);
      } else if (j == i + 1) {
        if (!vanishes(si * xj - (alg.x(i) * si + one))) return "s_i x_{i+1} = x_i s_i + 1 at i=" + std::to_string(i + 1);
      } else if (!vanishes(si * xj - xj * si)) {
        return "s_" + std::to_string(i + 1) + " x_" + std::to_string(j + 1) + " commute";
      }
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!vanishes(alg.x(i) * alg.x(j) - alg.x(j) * alg.x(i)))
        return "x_" + std::to_string(i + 1) + " x_" + std::to_string(j + 1) + " commute";

  Element f = alg.zero();
  Element power = one;
  const Element x1 = alg.x(0);
  for (const auto& c : alg.cyclotomic_coefficients()) {
    f += c * power;
    power = power * x1;
  }
  if (!vanishes(f)) return "f(x_1) = 0";
  return std::nullopt;
}

std::optional<std::string> check_associativity(const HeckeAlgebra& alg, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alg.dimension() - 1);
  for (int n = 0; n < samples; ++n) {
    const auto a = static_cast<MonomialIndex>(pick(rng));
    const auto b = static_cast<MonomialIndex>(pick(rng));
    const auto c = static_cast<MonomialIndex>(pick(rng));
    const Element ea = alg.basis_element(a);
    const Element eb = alg.basis_element(b);
    const Element ec = alg.basis_element(c);
    if ((ea * eb) * ec != ea * (eb * ec))
      return "monomials " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c);
  }
  return std::nullopt;
}

bool verify_basis(const HeckeAlgebra& alg, int samples, std::uint64_t seed) {
  std::size_t expected = 1;
  for (int i = 0; i < alg.r(); ++i) expected *= static_cast<std::size_t>(alg.ell());
  for (int i = 2; i <= alg.r(); ++i) expected *= static_cast<std::size_t>(i);
  if (alg.dimension() != expected) return false;
  if (check_relations(alg)) return false;
  if (check_associativity(alg, samples, seed)) return false;
  // Closure: products of basis monomials stay inside the normal-form span.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, alg.dimension() - 1);
  for (int n = 0; n < samples; ++n) {
    const Element p = alg.basis_element(static_cast<MonomialIndex>(pick(rng))) *
                      alg.basis_element(static_cast<MonomialIndex>(pick(rng)));
    for (const auto& [m, c] : p.terms())
      if (m >= alg.dimension() || c == 0) return false;
  }
  return true;
}

std::string to_string(const Element& h) {
  if (h.is_zero()) return "0";
  const HeckeAlgebra& alg = *h.algebra();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : h.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    const auto a = alg.monomial_exponent(m);
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > 0) os << "*x" << k + 1 << (a[k] > 1 ? "^" + std::to_string(a[k]) : "");
    const Permutation& w = alg.monomial_permutation(m);
    if (!w.is_identity()) {
      os << "*w[";
      const auto img = w.one_based();
      for (std::size_t k = 0; k < img.size(); ++k) os << (k ? "," : "") << img[k];
      os << ']';
    }
  }
  return os.str();
}

}  // namespace hecke
