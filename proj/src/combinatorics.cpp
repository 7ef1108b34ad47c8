#include "hecke/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// ----------------------------------------------------------- Multipartition

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("multipartition needs ell >= 1");
  for (const auto& p : components_) size_ += p.size();
}

Multipartition::Multipartition(std::initializer_list<std::vector<int>> components) {
  for (const auto& c : components) components_.emplace_back(c);
  if (components_.empty()) throw std::invalid_argument("multipartition needs ell >= 1");
  for (const auto& p : components_) size_ += p.size();
}

Multipartition Multipartition::empty(int ell) {
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(ell)));
}

std::vector<int> Multipartition::bracket() const {
  std::vector<int> a{0};
  for (const auto& p : components_) a.push_back(a.back() + p.size());
  return a;
}

std::string Multipartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << ',';
    const auto& parts = components_[i].parts();
    if (parts.empty()) {
      os << "0";
      continue;
    }
    os << '(';
    for (std::size_t j = 0; j < parts.size(); ++j) os << (j ? "," : "") << parts[j];
    os << ')';
  }
  os << ')';
  return os.str();
}

std::vector<Multipartition> enumerate_multipartitions(int ell, int r) {
  if (ell < 1) throw std::invalid_argument("enumerate_multipartitions: ell must be positive");
  if (r < 0) throw std::invalid_argument("enumerate_multipartitions: negative size");
  std::vector<std::vector<Partition>> by_size;
  for (int n = 0; n <= r; ++n) by_size.push_back(enumerate_partitions(n));

  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int comp, int left) {
    if (comp == ell - 1) {
      for (const auto& p : by_size[static_cast<std::size_t>(left)]) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int n = 0; n <= left; ++n)
      for (const auto& p : by_size[static_cast<std::size_t>(n)]) {
        cur.push_back(p);
        rec(comp + 1, left - n);
        cur.pop_back();
      }
  };
  rec(0, r);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Multipartition conjugate(const Multipartition& lambda) {
  std::vector<Partition> comps;
  for (int i = lambda.ell() - 1; i >= 0; --i) comps.push_back(lambda[i].conjugate());
  return Multipartition(std::move(comps));
}

bool dominance_ge(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.ell() != mu.ell() || lambda.size() != mu.size())
    throw std::invalid_argument("dominance_ge: labels of different size or level");
  int base_l = 0;
  int base_m = 0;
  for (int s = 0; s < lambda.ell(); ++s) {
    const int rows = std::max(lambda[s].length(), mu[s].length());
    int sl = base_l;
    int sm = base_m;
    if (sl < sm) return false;
    for (int k = 0; k < rows; ++k) {
      sl += lambda[s][k];
      sm += mu[s][k];
      if (sl < sm) return false;
    }
    base_l += lambda[s].size();
    base_m += mu[s].size();
  }
  return true;
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 0 || i + 1 >= n) throw std::invalid_argument("simple transposition out of range");
  auto p = identity(n);
  std::swap(p.img_[static_cast<std::size_t>(i)], p.img_[static_cast<std::size_t>(i + 1)]);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> img;
  img.reserve(images.size());
  for (int v : images) img.push_back(v - 1);
  return Permutation(std::move(img));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(img_.size());
  for (int v : img_) out.push_back(v + 1);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::first_left_descent() const {
  // s_i w has the image table of w with positions i and i+1 swapped.
  for (std::size_t i = 0; i + 1 < img_.size(); ++i)
    if (img_[i] > img_[i + 1]) return static_cast<int>(i);
  return -1;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  std::vector<int> img = img_;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < img.size() && img[i] < img[i + 1]) ++i;
    if (i + 1 >= img.size()) break;
    word.push_back(static_cast<int>(i));
    std::swap(img[i], img[i + 1]);
  }
  return word;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation product: size mismatch");
  std::vector<int> img(a.img_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.img_[static_cast<std::size_t>(a.img_[i])];
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

// ------------------------------------------------------------------ Tableau

Tableau::Tableau(Multipartition shape, std::vector<Rows> fillings)
    : shape_(std::move(shape)), fill_(std::move(fillings)) {
  if (static_cast<int>(fill_.size()) != shape_.ell()) throw std::invalid_argument("tableau: wrong number of components");
  const int r = shape_.size();
  pos_.assign(static_cast<std::size_t>(r), Box{-1, -1, -1});
  for (int c = 0; c < shape_.ell(); ++c) {
    const auto& rows = fill_[static_cast<std::size_t>(c)];
    if (static_cast<int>(rows.size()) != shape_[c].length()) throw std::invalid_argument("tableau: shape mismatch");
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) != shape_[c][i]) throw std::invalid_argument("tableau: shape mismatch");
      for (int j = 0; j < static_cast<int>(row.size()); ++j) {
        const int e = row[static_cast<std::size_t>(j)];
        if (e < 1 || e > r || pos_[static_cast<std::size_t>(e - 1)].comp != -1)
          throw std::invalid_argument("tableau: entries must be 1..r, each once");
        pos_[static_cast<std::size_t>(e - 1)] = Box{c, i, j};
      }
    }
  }
}

bool Tableau::is_standard() const {
  for (const auto& rows : fill_)
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j > 0 && rows[i][j - 1] >= rows[i][j]) return false;
        if (i > 0 && rows[i - 1][j] >= rows[i][j]) return false;
      }
  return true;
}

Multipartition Tableau::up_shape(int i) const {
  std::vector<Partition> comps;
  for (const auto& rows : fill_) {
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(std::count_if(row.begin(), row.end(), [i](int e) { return e <= i; })));
    // Rows of a non-standard tableau may give non-partition counts; sort to stay total.
    std::sort(parts.begin(), parts.end(), std::greater<>());
    comps.emplace_back(std::move(parts));
  }
  return Multipartition(std::move(comps));
}

Tableau Tableau::act(const Permutation& w) const {
  if (w.size() != size()) throw std::invalid_argument("tableau action: size mismatch");
  auto f = fill_;
  for (auto& rows : f)
    for (auto& row : rows)
      for (auto& e : row) e = w[e - 1] + 1;
  return Tableau(shape_, std::move(f));
}

namespace {

std::vector<Tableau::Rows> empty_fill(const Multipartition& lambda) {
  std::vector<Tableau::Rows> fill;
  for (const auto& p : lambda.components()) {
    Tableau::Rows rows;
    for (int part : p.parts()) rows.emplace_back(static_cast<std::size_t>(part), 0);
    fill.push_back(std::move(rows));
  }
  return fill;
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Multipartition& lambda) {
  const int r = lambda.size();
  std::vector<std::vector<Box>> placements;
  std::vector<Box> cur(static_cast<std::size_t>(r));
  // shape[c][i] = current row lengths while removing entries r, r-1, ...
  std::vector<std::vector<int>> shape;
  for (const auto& p : lambda.components()) shape.push_back(p.parts());

  std::function<void(int)> rec = [&](int k) {
    if (k == 0) {
      placements.push_back(cur);
      return;
    }
    for (int c = 0; c < lambda.ell(); ++c) {
      auto& rows = shape[static_cast<std::size_t>(c)];
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] == 0) continue;
        const bool corner = i + 1 == rows.size() || rows[i + 1] < rows[i];
        if (!corner) continue;
        --rows[i];
        cur[static_cast<std::size_t>(k - 1)] = Box{c, static_cast<int>(i), rows[i]};
        rec(k - 1);
        ++rows[i];
      }
    }
  };
  rec(r);

  auto key = [](const std::vector<Box>& p) {
    std::vector<std::pair<int, int>> k;
    for (const auto& b : p) k.emplace_back(b.comp, b.row);
    return k;
  };
  std::sort(placements.begin(), placements.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

  std::vector<Tableau> out;
  out.reserve(placements.size());
  for (const auto& p : placements) {
    auto fill = empty_fill(lambda);
    for (int k = 1; k <= r; ++k) {
      const Box& b = p[static_cast<std::size_t>(k - 1)];
      fill[static_cast<std::size_t>(b.comp)][static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)] = k;
    }
    out.emplace_back(lambda, std::move(fill));
  }
  return out;
}

bool tableau_dominance_ge(const Tableau& s, const Tableau& t) {
  if (s.size() != t.size() || s.shape().ell() != t.shape().ell())
    throw std::invalid_argument("tableau_dominance_ge: tableaux of different size");
  for (int i = 1; i <= s.size(); ++i)
    if (!dominance_ge(s.up_shape(i), t.up_shape(i))) return false;
  return true;
}

Tableau row_reading_tableau(const Multipartition& lambda) {
  auto fill = empty_fill(lambda);
  int k = 1;
  for (auto& rows : fill)
    for (auto& row : rows)
      for (auto& e : row) e = k++;
  return Tableau(lambda, std::move(fill));
}

Tableau column_reading_tableau(const Multipartition& lambda) {
  auto fill = empty_fill(lambda);
  int k = 1;
  for (int c = lambda.ell() - 1; c >= 0; --c) {
    auto& rows = fill[static_cast<std::size_t>(c)];
    const int width = lambda[c][0];
    for (int j = 0; j < width; ++j)
      for (auto& row : rows)
        if (j < static_cast<int>(row.size())) row[static_cast<std::size_t>(j)] = k++;
  }
  return Tableau(lambda, std::move(fill));
}

Permutation d_of(const Tableau& t) {
  const Tableau top = row_reading_tableau(t.shape());
  std::vector<int> img(static_cast<std::size_t>(t.size()));
  for (int e = 1; e <= t.size(); ++e) {
    const Box& b = top.position(e);
    img[static_cast<std::size_t>(e - 1)] =
        t.fillings()[static_cast<std::size_t>(b.comp)][static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)] - 1;
  }
  return Permutation(std::move(img));
}

Permutation w_bracket(const Multipartition& lambda) {
  const auto a = lambda.bracket();
  const int r = lambda.size();
  std::vector<int> img(static_cast<std::size_t>(r));
  for (std::size_t i = 1; i < a.size(); ++i)
    for (int l = 1; l <= a[i] - a[i - 1]; ++l) img[static_cast<std::size_t>(a[i - 1] + l - 1)] = r - a[i] + l - 1;
  return Permutation(std::move(img));
}

Permutation w_lambda(const Multipartition& lambda) { return d_of(column_reading_tableau(lambda)); }

Tableau tableau_conjugate(const Tableau& t) {
  const int ell = t.shape().ell();
  std::vector<Tableau::Rows> fill;
  for (int s = 0; s < ell; ++s) {
    const auto& src = t.fillings()[static_cast<std::size_t>(ell - 1 - s)];
    Tableau::Rows rows;
    if (!src.empty()) {
      rows.resize(src[0].size());
      for (const auto& row : src)
        for (std::size_t j = 0; j < row.size(); ++j) rows[j].push_back(row[j]);
    }
    fill.push_back(std::move(rows));
  }
  return Tableau(conjugate(t.shape()), std::move(fill));
}

std::vector<long> residue_sequence(const Tableau& t, std::span<const long> omega) {
  if (static_cast<int>(omega.size()) != t.shape().ell()) throw std::invalid_argument("residue_sequence: omega length");
  std::vector<long> res;
  for (int k = 1; k <= t.size(); ++k) {
    const Box& b = t.position(k);
    res.push_back(omega[static_cast<std::size_t>(b.comp)] + b.col - b.row);
  }
  return res;
}

RowTableau rsk_insert(std::span<const int> word) {
  RowTableau p;
  for (int x : word) {
    int bump = x;
    for (std::size_t i = 0;; ++i) {
      if (i == p.size()) {
        p.push_back({bump});
        break;
      }
      auto& row = p[i];
      auto it = std::upper_bound(row.begin(), row.end(), bump);
      if (it == row.end()) {
        row.push_back(bump);
        break;
      }
      std::swap(*it, bump);
    }
  }
  return p;
}

std::vector<int> row_shape(const RowTableau& p) {
  std::vector<int> s;
  for (const auto& row : p) s.push_back(static_cast<int>(row.size()));
  return s;
}

}  // namespace hecke
