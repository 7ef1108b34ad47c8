#include "hecke/cellular.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hecke {

// -------------------------------------------------------------- BasisFamily

BasisFamily BasisFamily::M(std::vector<int> c) {
  for (int v : c)
    if (v != 0 && v != 1) throw std::invalid_argument("c must be a 01-sequence");
  const int ell = static_cast<int>(c.size());
  return BasisFamily{FamilyKind::M, std::move(c), Permutation::identity(ell)};
}

BasisFamily BasisFamily::N(std::vector<int> c) {
  BasisFamily f = M(std::move(c));
  f.kind = FamilyKind::N;
  return f;
}

BasisFamily BasisFamily::MXi(const Permutation& xi) {
  return BasisFamily{FamilyKind::MXi, std::vector<int>(static_cast<std::size_t>(xi.size()), 0), xi};
}

BasisFamily BasisFamily::NXi(const Permutation& xi) {
  return BasisFamily{FamilyKind::NXi, std::vector<int>(static_cast<std::size_t>(xi.size()), 0), xi};
}

BasisFamily BasisFamily::dual() const {
  BasisFamily d = *this;
  // Conjugation reverses the component order, so the twist is read backwards.
  if (kind == FamilyKind::M || kind == FamilyKind::N) d.c.assign(c.rbegin(), c.rend());
  switch (kind) {
    case FamilyKind::M: d.kind = FamilyKind::N; break;
    case FamilyKind::N: d.kind = FamilyKind::M; break;
    case FamilyKind::MXi: d.kind = FamilyKind::NXi; break;
    case FamilyKind::NXi: d.kind = FamilyKind::MXi; break;
  }
  return d;
}

std::string BasisFamily::to_string() const {
  std::ostringstream os;
  std::vector<int> tail;
  switch (kind) {
    case FamilyKind::M: os << "m"; tail = c; break;
    case FamilyKind::N: os << "n"; tail = c; break;
    case FamilyKind::MXi: os << "mxi"; tail = xi.one_based(); break;
    case FamilyKind::NXi: os << "nxi"; tail = xi.one_based(); break;
  }
  os << ':';
  for (std::size_t i = 0; i < tail.size(); ++i) os << (i ? "," : "") << tail[i];
  return os.str();
}

BasisFamily BasisFamily::parse(const std::string& text, int ell) {
  if (ell < 1) throw std::invalid_argument("family: ell must be positive");
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  std::vector<int> values;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("family: malformed entry '" + item + "'");
      }
      if (used != item.size()) throw std::invalid_argument("family: malformed entry '" + item + "'");
      values.push_back(v);
    }
    if (static_cast<int>(values.size()) != ell) throw std::invalid_argument("family: expected " + std::to_string(ell) + " entries");
  }
  if (head == "m" || head == "n") {
    if (values.empty()) values.assign(static_cast<std::size_t>(ell), 0);
    return head == "m" ? M(values) : N(values);
  }
  if (head == "mxi" || head == "nxi") {
    const Permutation xi = values.empty() ? Permutation::identity(ell) : Permutation::from_one_based(values);
    return head == "mxi" ? MXi(xi) : NXi(xi);
  }
  throw std::invalid_argument("family: unknown kind '" + head + "' (expected m, n, mxi or nxi)");
}

// ------------------------------------------------------ distinguished elements

namespace {

// Sum over the row stabilizer of t^lambda; component i is sign-twisted when twist[i].
Element young_sum(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<bool>& twist) {
  struct Block {
    int start;
    int len;
    bool sign;
  };
  std::vector<Block> blocks;
  int start = 0;
  for (int i = 0; i < lambda.ell(); ++i)
    for (int part : lambda[i].parts()) {
      blocks.push_back({start, part, twist[static_cast<std::size_t>(i)]});
      start += part;
    }
  Element out = alg.zero();
  std::vector<int> img(static_cast<std::size_t>(alg.r()));
  for (int k = 0; k < alg.r(); ++k) img[static_cast<std::size_t>(k)] = k;
  std::function<void(std::size_t, int)> rec = [&](std::size_t b, int sign) {
    if (b == blocks.size()) {
      out.add_term(static_cast<MonomialIndex>(alg.permutation_index(Permutation(img))), Rational(sign));
      return;
    }
    const auto first = img.begin() + blocks[b].start;
    const auto last = first + blocks[b].len;
    std::sort(first, last);
    do {
      int s = 1;
      if (blocks[b].sign) {
        int inv = 0;
        for (auto i = first; i != last; ++i)
          for (auto j = i + 1; j != last; ++j)
            if (*i > *j) ++inv;
        s = inv % 2 ? -1 : 1;
      }
      rec(b + 1, sign * s);
    } while (std::next_permutation(first, last));
  };
  rec(0, 1);
  return out;
}

Element pi_product(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<long>& omega, bool tilde) {
  if (static_cast<int>(omega.size()) != lambda.ell()) throw std::invalid_argument("omega length differs from ell");
  if (lambda.size() != alg.r()) throw std::invalid_argument("label size differs from r");
  const auto a = lambda.bracket();
  const int ell = lambda.ell();
  Element out = alg.one();
  for (int i = 1; i <= ell - 1; ++i) {
    // Factor pi_{a_i, i} uses omega_{i+1}; the tilde variant pi_{a_i, ell-1-i} uses omega_{ell-i}.
    const long w = tilde ? omega[static_cast<std::size_t>(ell - i - 1)] : omega[static_cast<std::size_t>(i)];
    for (int k = 0; k < a[static_cast<std::size_t>(i)]; ++k) out = out * (alg.x(k) - Rational(w) * alg.one());
  }
  return out;
}

void check_c(const Multipartition& lambda, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != lambda.ell()) throw std::invalid_argument("c length differs from ell");
}

}  // namespace

Element x_lambda_c(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<int>& c) {
  check_c(lambda, c);
  std::vector<bool> twist;
  for (int v : c) twist.push_back(v == 1);
  return young_sum(alg, lambda, twist);
}

Element y_lambda_c(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<int>& c) {
  check_c(lambda, c);
  std::vector<bool> twist;
  for (int v : c) twist.push_back(v == 0);
  return young_sum(alg, lambda, twist);
}

Element pi_bracket(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<long>& omega) {
  return pi_product(alg, lambda, omega, false);
}

Element pi_tilde_bracket(const HeckeAlgebra& alg, const Multipartition& lambda, const std::vector<long>& omega) {
  return pi_product(alg, lambda, omega, true);
}

std::vector<long> twisted_omega(const BasisFamily& family, const std::vector<long>& omega) {
  if (family.xi.size() != static_cast<int>(omega.size())) throw std::invalid_argument("xi length differs from ell");
  std::vector<long> out(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) out[i] = omega[static_cast<std::size_t>(family.xi[static_cast<int>(i)])];
  return out;
}

Element cellular_core(const HeckeAlgebra& alg, const BasisFamily& family, const Multipartition& lambda) {
  const auto w = twisted_omega(family, alg.omega());
  if (family.is_n()) return pi_tilde_bracket(alg, lambda, w) * y_lambda_c(alg, lambda, family.c);
  return pi_bracket(alg, lambda, w) * x_lambda_c(alg, lambda, family.c);
}

Element cellular_element(const HeckeAlgebra& alg, const BasisFamily& family, const Tableau& s, const Tableau& t) {
  if (!(s.shape() == t.shape())) throw std::invalid_argument("cellular_element: tableaux of different shapes");
  return alg.from_permutation(d_of(s).inverse()) * cellular_core(alg, family, s.shape()) * alg.from_permutation(d_of(t));
}

Element z_lambda(const HeckeAlgebra& alg, const std::vector<int>& c, const Multipartition& lambda) {
  const Multipartition dual = conjugate(lambda);
  const Element m = cellular_core(alg, BasisFamily::M(c), lambda);
  const Element n = cellular_core(alg, BasisFamily::M(c).dual(), dual);
  return m * alg.from_permutation(w_lambda(lambda)) * n;
}

// ------------------------------------------------------------ CellularBasis

CellularBasis::CellularBasis(std::shared_ptr<const HeckeAlgebra> alg, BasisFamily family)
    : alg_(std::move(alg)), family_(std::move(family)) {
  const HeckeAlgebra& A = *alg_;
  if (family_.ell() != A.ell()) throw std::invalid_argument("family ell differs from the algebra");
  labels_ = enumerate_multipartitions(A.ell(), A.r());
  for (const auto& lambda : labels_) {
    offset_.push_back(elems_.size());
    std_.push_back(standard_tableaux(lambda));
    const auto& tabs = std_.back();
    const Element core = cellular_core(A, family_, lambda);
    std::vector<Element> right;
    for (const auto& t : tabs) right.push_back(A.from_permutation(d_of(t)));
    for (const auto& s : tabs) {
      const Element left = A.from_permutation(d_of(s).inverse()) * core;
      for (const auto& rt : right) elems_.push_back(left * rt);
    }
  }
  if (elems_.size() != A.dimension())
    throw std::logic_error("cellular basis: element count differs from the algebra dimension");
  change_ = Matrix(elems_.size(), A.dimension());
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (const auto& [m, c] : elems_[i].terms()) change_(i, m) = c;
  auto inv = inverse(change_);
  if (!inv) throw std::logic_error("cellular basis " + family_.to_string() + ": change of basis is singular");
  inverse_ = std::move(*inv);
}

std::size_t CellularBasis::label_index(const Multipartition& lambda) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == lambda) return i;
  throw std::invalid_argument("label " + lambda.to_string() + " is not an ell-partition of r");
}

std::size_t CellularBasis::index(std::size_t label, std::size_t s, std::size_t t) const {
  return offset_[label] + s * std_[label].size() + t;
}

std::vector<Rational> CellularBasis::expand(const Element& h) const {
  std::vector<Rational> out(elems_.size(), Rational(0));
  for (const auto& [m, c] : h.terms())
    for (std::size_t j = 0; j < out.size(); ++j)
      if (inverse_(m, j) != 0) out[j] += c * inverse_(m, j);
  return out;
}

std::vector<Rational> CellularBasis::expand(const Element& h, const std::vector<std::size_t>& cols) const {
  std::vector<Rational> out(cols.size(), Rational(0));
  for (const auto& [m, c] : h.terms())
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (inverse_(m, cols[j]) != 0) out[j] += c * inverse_(m, cols[j]);
  return out;
}

namespace {

std::string tableau_text(const Tableau& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t c = 0; c < t.fillings().size(); ++c) {
    os << (c ? "," : "") << '[';
    const auto& rows = t.fillings()[c];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << (i ? "," : "") << '[';
      for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? "," : "") << rows[i][j];
      os << ']';
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Element> generators(const HeckeAlgebra& alg) {
  std::vector<Element> g;
  for (int i = 0; i + 1 < alg.r(); ++i) g.push_back(alg.s(i));
  for (int k = 0; k < alg.r(); ++k) g.push_back(alg.x(k));
  return g;
}

std::string generator_name(const HeckeAlgebra& alg, std::size_t g) {
  const int ns = alg.r() - 1;
  return static_cast<int>(g) < ns ? "s_" + std::to_string(g + 1) : "x_" + std::to_string(g - static_cast<std::size_t>(ns) + 1);
}

}  // namespace

std::optional<std::string> check_star_symmetry(const CellularBasis& basis) {
  const HeckeAlgebra& alg = basis.algebra();
  for (std::size_t L = 0; L < basis.labels().size(); ++L) {
    const auto& tabs = basis.tableaux(L);
    for (std::size_t s = 0; s < tabs.size(); ++s)
      for (std::size_t t = 0; t < tabs.size(); ++t)
        if (alg.star(basis.element(L, s, t)) != basis.element(L, t, s))
          return basis.family().to_string() + " label " + basis.labels()[L].to_string() + " s=" + tableau_text(tabs[s]) +
                 " t=" + tableau_text(tabs[t]);
  }
  return std::nullopt;
}

std::optional<std::string> check_cell_action(const CellularBasis& basis) {
  const HeckeAlgebra& alg = basis.algebra();
  const auto gens = generators(alg);
  const auto& labels = basis.labels();
  // Label owning each cellular index, and its (s, t) position.
  std::vector<std::size_t> owner(basis.size());
  for (std::size_t L = 0; L < labels.size(); ++L) {
    const std::size_t n = basis.tableaux(L).size();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) owner[basis.index(L, s, t)] = L;
  }
  for (std::size_t L = 0; L < labels.size(); ++L) {
    const auto& tabs = basis.tableaux(L);
    const std::size_t n = tabs.size();
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t t = 0; t < n; ++t) {
        std::vector<Rational> reference;
        for (std::size_t s = 0; s < n; ++s) {
          const auto coeffs = basis.expand(basis.element(L, s, t) * gens[g]);
          auto where = [&] {
            return basis.family().to_string() + " label " + labels[L].to_string() + " s=" + tableau_text(tabs[s]) +
                   " t=" + tableau_text(tabs[t]) + " g=" + generator_name(alg, g);
          };
          std::vector<Rational> row(n, Rational(0));
          for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) continue;
            const std::size_t M = owner[j];
            if (M != L) {
              if (!(dominance_ge(labels[M], labels[L]))) return where() + ": term in cell " + labels[M].to_string() + " not above";
              continue;
            }
            const std::size_t rel = j - basis.index(L, 0, 0);
            if (rel / n != s) return where() + ": left index changed";
            row[rel % n] = coeffs[j];
          }
          if (s == 0)
            reference = row;
          else if (row != reference)
            return where() + ": coefficients depend on the left index";
        }
      }
  }
  return std::nullopt;
}

// --------------------------------------------------------------- cell modules

Matrix gram_matrix(const CellularBasis& basis, const Multipartition& lambda) {
  const std::size_t L = basis.label_index(lambda);
  const std::size_t n = basis.tableaux(L).size();
  Matrix g(n, n);
  const std::vector<std::size_t> col{basis.index(L, 0, 0)};
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s; t < n; ++t) {
      const auto v = basis.expand(basis.element(L, 0, s) * basis.element(L, t, 0), col);
      g(s, t) = v[0];
      g(t, s) = v[0];
    }
  // Symmetry is a property of the form; verify the half not computed above.
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < s; ++t) {
      const auto v = basis.expand(basis.element(L, 0, s) * basis.element(L, t, 0), col);
      if (v[0] != g(s, t)) throw std::logic_error("gram_matrix: form is not symmetric at " + lambda.to_string());
    }
  return g;
}

Matrix gram_matrix_by_trace(const CellularBasis& basis, const Multipartition& lambda) {
  const HeckeAlgebra& alg = basis.algebra();
  const std::size_t L = basis.label_index(lambda);
  const std::size_t n = basis.tableaux(L).size();
  const Tableau u = tableau_conjugate(row_reading_tableau(lambda));
  const Element d = cellular_element(alg, basis.family().dual(), u, u);
  Matrix g(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) g(s, t) = alg.tau_hat(basis.element(L, 0, s) * basis.element(L, t, 0) * d);
  return g;
}

CellModule cell_module(const CellularBasis& basis, const Multipartition& lambda) {
  const HeckeAlgebra& alg = basis.algebra();
  const std::size_t L = basis.label_index(lambda);
  const auto& tabs = basis.tableaux(L);
  const std::size_t n = tabs.size();
  std::vector<std::size_t> cols;
  for (std::size_t u = 0; u < n; ++u) cols.push_back(basis.index(L, 0, u));

  CellModule mod;
  mod.label = lambda;
  mod.family = basis.family();
  mod.basis = tabs;
  mod.action.dim = n;
  const auto gens = generators(alg);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix m(n, n);
    for (std::size_t t = 0; t < n; ++t) {
      const auto row = basis.expand(basis.element(L, 0, t) * gens[g], cols);
      for (std::size_t u = 0; u < n; ++u) m(t, u) = row[u];
    }
    if (static_cast<int>(g) < alg.r() - 1)
      mod.action.s.push_back(std::move(m));
    else
      mod.action.x.push_back(std::move(m));
  }
  mod.gram = gram_matrix(basis, lambda);
  return mod;
}

std::size_t simple_dim(const CellModule& module) { return rank(module.gram); }

ModuleRealization simple_module(const CellModule& module) {
  const auto pivots = independent_rows(module.gram);
  if (pivots.empty()) throw std::invalid_argument("simple_module: D(" + module.label.to_string() + ") is zero");
  const Matrix top = module.gram.submatrix_rows(pivots);
  // e_j = sum_p coeff(j, p) e_p modulo the radical.
  const auto coeff = solve_left(top, module.gram);
  if (!coeff) throw std::logic_error("simple_module: Gram rows outside their own span");
  ModuleRealization out;
  out.dim = pivots.size();
  for (const auto& g : module.action.s) out.s.push_back(g.submatrix_rows(pivots) * *coeff);
  for (const auto& g : module.action.x) out.x.push_back(g.submatrix_rows(pivots) * *coeff);
  return out;
}

ModuleRealization subcell_module(const HeckeAlgebra& alg, const std::vector<int>& c, const Multipartition& lambda) {
  const Element z = z_lambda(alg, c, lambda);
  const auto tabs = standard_tableaux(conjugate(lambda));
  const std::size_t k = tabs.size();
  Matrix span(k, alg.dimension());
  for (std::size_t i = 0; i < k; ++i) {
    const Element b = z * alg.from_permutation(d_of(tabs[i]));
    for (const auto& [m, v] : b.terms()) span(i, m) = v;
  }
  if (rank(span) != k) throw std::logic_error("subcell_module: z d(t) are linearly dependent");
  ModuleRealization out;
  out.dim = k;
  const auto gens = generators(alg);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix image(k, alg.dimension());
    for (std::size_t i = 0; i < k; ++i) {
      const Element b = alg.from_vector(span.row(i)) * gens[g];
      for (const auto& [m, v] : b.terms()) image(i, m) = v;
    }
    auto action = solve_left(span, image);
    if (!action) throw std::logic_error("subcell_module: span is not stable under " + generator_name(alg, g));
    if (static_cast<int>(g) < alg.r() - 1)
      out.s.push_back(std::move(*action));
    else
      out.x.push_back(std::move(*action));
  }
  return out;
}

}  // namespace hecke
