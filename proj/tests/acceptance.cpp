// Acceptance criteria 1-9, one PASS/FAIL line each. Exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <thread>

#include "hecke/algebra.hpp"
#include "hecke/cellular.hpp"
#include "hecke/crystal.hpp"
#include "hecke/label_maps.hpp"
#include "hecke/parallel.hpp"
#include "hecke/serialization.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

unsigned threads() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

std::optional<ModuleRealization> simple_of(const CellularBasis& basis, const Multipartition& lambda) {
  const CellModule cm = cell_module(basis, lambda);
  if (simple_dim(cm) == 0) return std::nullopt;
  return simple_module(cm);
}

Permutation s1() { return Permutation::from_one_based({2, 1}); }

Outcome algebra_soundness() {
  Outcome out;
  const std::vector<std::pair<int, std::vector<long>>> cases{{1, {0}}, {2, {0, 1}}, {2, {0, 1}}, {3, {0, 1, 2}}};
  const std::vector<int> ranks{4, 2, 3, 2};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto alg = HeckeAlgebra::create(cases[i].first, ranks[i], cases[i].second);
    VerifyOptions opts;
    opts.samples = 200;
    const auto res = verify_relations(*alg, opts);
    if (!res.pass) out.fail("(" + std::to_string(cases[i].first) + "," + std::to_string(ranks[i]) + "): " + res.counterexample);
  }
  return out;
}

Outcome trace_pairing() {
  Outcome out;
  const auto alg = HeckeAlgebra::create(2, 3, {0, 1});
  VerifyOptions opts;
  opts.threads = threads();
  const auto t = verify_trace(*alg, opts);
  if (!t.pass) out.fail(t.counterexample);
  const auto p = verify_pairing(alg, opts);
  if (!p.pass) out.fail(p.counterexample);
  return out;
}

Outcome cellularity() {
  Outcome out;
  for (int r : {2, 3}) {
    const auto alg = HeckeAlgebra::create(2, r, {0, 1});
    VerifyOptions opts;
    opts.threads = threads();
    const auto res = verify_cellular(alg, opts);
    if (!res.pass) out.fail("r=" + std::to_string(r) + ": " + res.counterexample);
  }
  return out;
}

Outcome semisimple() {
  Outcome out;
  const auto alg = HeckeAlgebra::create(2, 3, {0, 5});
  std::vector<BasisFamily> families;
  for (const auto& c : all_twists(2)) {
    families.push_back(BasisFamily::M(c));
    families.push_back(BasisFamily::N(c));
  }
  for (const auto& xi : {Permutation::identity(2), s1()}) {
    families.push_back(BasisFamily::MXi(xi));
    families.push_back(BasisFamily::NXi(xi));
  }
  for (const auto& fam : families) {
    const CellularBasis basis(alg, fam);
    std::size_t squares = 0;
    for (const auto& lambda : basis.labels()) {
      const CellModule cm = cell_module(basis, lambda);
      if (simple_dim(cm) != cm.basis.size()) out.fail(fam.to_string() + " " + label_text(lambda) + ": singular Gram");
      squares += cm.basis.size() * cm.basis.size();
    }
    if (squares != 48 || alg->dimension() != 48) out.fail(fam.to_string() + ": sum of squares " + std::to_string(squares));
  }
  return out;
}

Outcome classification() {
  Outcome out;
  for (const auto& omega : {std::vector<long>{0, 1}, std::vector<long>{0, 0}})
    for (int r = 1; r <= 3; ++r) {
      const auto alg = HeckeAlgebra::create(2, r, omega);
      const CellularBasis basis(alg, BasisFamily::M({0, 0}));
      const auto ranks = parallel_map(basis.labels().size(), threads(),
                                      [&](std::size_t i) { return simple_dim(cell_module(basis, basis.labels()[i])); });
      std::vector<Multipartition> by_gram;
      for (std::size_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] > 0) by_gram.push_back(basis.labels()[i]);
      if (nonzero_labels(omega, r, kDefaultOrientation) != by_gram)
        out.fail("omega=(" + std::to_string(omega[0]) + "," + std::to_string(omega[1]) + ") r=" + std::to_string(r));
    }
  if (out.pass) out.note = "orientation " + to_string(kDefaultOrientation);
  return out;
}

Outcome main1_iso() {
  Outcome out;
  for (int r = 1; r <= 3; ++r) {
    const auto alg = HeckeAlgebra::create(2, r, {0, 1});
    const CellularBasis m0(alg, BasisFamily::M({0, 0}));
    for (const auto& c : {std::vector<int>{0, 1}, std::vector<int>{1, 1}}) {
      const CellularBasis mc(alg, BasisFamily::M(c));
      const auto bad = parallel_map(m0.labels().size(), threads(), [&](std::size_t i) -> std::string {
        const auto& lambda = m0.labels()[i];
        const auto d0 = simple_of(m0, lambda);
        if (!d0) return {};
        const auto dc = simple_of(mc, eta(lambda, c));
        if (!dc) return label_text(lambda) + ": D^c(eta) is zero";
        if (dc->dim != d0->dim) return label_text(lambda) + ": dimensions differ";
        if (intertwiner_dim(*d0, *dc) != 1) return label_text(lambda) + ": intertwiner_dim != 1";
        return {};
      });
      for (const auto& b : bad)
        if (!b.empty()) out.fail("r=" + std::to_string(r) + " c=" + std::to_string(c[0]) + std::to_string(c[1]) + " " + b);
    }
  }
  return out;
}

Outcome main2_iso() {
  Outcome out;
  // Module half.
  for (int r = 1; r <= 3; ++r) {
    const auto alg = HeckeAlgebra::create(2, r, {1, 0});
    const XiContext ctx = XiContext::for_size({1, 0}, s1(), r);
    const CellularBasis mx(alg, BasisFamily::MXi(s1()));
    const CellularBasis m1(alg, BasisFamily::MXi(Permutation::identity(2)));
    std::size_t standard = 0;
    for (const auto& lambda : mx.labels()) {
      const ColumnStrictTableau a = A_of_lambda(lambda, ctx);
      const auto dx = simple_of(mx, lambda);
      if (!is_standard(a, ctx)) {
        if (dx) out.fail("r=" + std::to_string(r) + " " + label_text(lambda) + ": nonzero D^xi for a non-standard A");
        continue;
      }
      ++standard;
      const Multipartition mu = lambda_of_A(r_map(a, ctx), ctx.untwisted());
      const auto d1 = simple_of(m1, mu);
      if (!dx || !d1 || intertwiner_dim(*dx, *d1) != 1)
        out.fail("r=" + std::to_string(r) + " " + label_text(lambda) + " -> " + label_text(mu) + ": intertwiner_dim != 1");
    }
    if (standard == 0) out.fail("r=" + std::to_string(r) + ": no standard A");
  }
  // Combinatorial half: the worked example with omega = (3,2,2), xi = s_1, lo = 1.
  const XiContext ctx({3, 2, 2}, Permutation::from_one_based({2, 1, 3}), 1);
  const ColumnStrictTableau a({{3, 1}, {4, 3, 1}, {3, 1}});
  const ColumnStrictTableau b({{3, 1}, {4, 3, 2}, {2, 1}});
  if (gamma_word(a) != std::vector<int>{3, 1, 4, 3, 1, 3, 1}) out.fail("gamma(A)");
  const auto word = gamma_word(a);
  if (rsk_insert(word) != RowTableau{{1, 1, 1}, {3, 3, 3}, {4}}) out.fail("P(gamma(A))");
  if (lambda_of_A(a, ctx) != Multipartition{{1}, {1, 1}, {1}}) out.fail("lambda_A");
  if (lambda_of_A(r_map(a, ctx), ctx.untwisted()) != Multipartition{{1, 1}, {1}, {1}}) out.fail("lambda_R(A)");
  if (mullineux_xi(Multipartition{{1}, {1, 1}, {1}}, ctx) != Multipartition{{1, 1}, {1}, {1}}) out.fail("mullineux_xi");
  if (is_standard(b, ctx)) out.fail("B accepted as standard");
  return out;
}

Outcome duality() {
  Outcome out;
  const auto alg = HeckeAlgebra::create(2, 2, {0, 1});
  for (const auto& c : all_twists(2)) {
    const CellularBasis m(alg, BasisFamily::M(c));
    const CellularBasis n(alg, m.family().dual());
    for (const auto& lambda : m.labels()) {
      const CellModule s = cell_module(m, lambda);
      const CellModule t = cell_module(n, conjugate(lambda));
      if (intertwiner_dim(contragredient(s.action), t.action) < 1)
        out.fail("c=" + std::to_string(c[0]) + std::to_string(c[1]) + " " + label_text(lambda));
    }
  }
  return out;
}

Outcome oracle_agreement() {
  Outcome out;
  for (int r = 1; r <= 3; ++r) {
    const auto alg = HeckeAlgebra::create(2, r, {0, 1});
    const CellularBasis m0(alg, BasisFamily::M({0, 0}));
    for (const auto& c : {std::vector<int>{0, 1}, std::vector<int>{1, 1}}) {
      const CellularBasis mc(alg, BasisFamily::M(c));
      for (const auto& e : match_simples(m0, mc, threads()))
        if (e.to != eta(e.from, c)) out.fail("eta table at r=" + std::to_string(r) + ": " + label_text(e.from));
    }
  }
  for (int r = 1; r <= 3; ++r) {
    const auto alg = HeckeAlgebra::create(2, r, {1, 0});
    const XiContext ctx = XiContext::for_size({1, 0}, s1(), r);
    const CellularBasis mx(alg, BasisFamily::MXi(s1()));
    const CellularBasis m1(alg, BasisFamily::MXi(Permutation::identity(2)));
    const auto table = match_simples(mx, m1, threads());
    std::size_t closed = 0;
    for (const auto& lambda : mx.labels())
      if (mullineux_xi(lambda, ctx)) ++closed;
    if (closed != table.size()) out.fail("mullineux table size at r=" + std::to_string(r));
    for (const auto& e : table)
      if (mullineux_xi(e.from, ctx) != e.to) out.fail("mullineux table at r=" + std::to_string(r) + ": " + label_text(e.from));
  }
  for (int r = 1; r <= 2; ++r) {
    const auto alg = HeckeAlgebra::create(2, r, {1, 0});
    const CellularBasis n0(alg, BasisFamily::N({0, 0}));
    const CellularBasis m0(alg, BasisFamily::M({0, 0}));
    for (const auto& e : match_simples(n0, m0, threads()))
      if (generalized_mullineux(e.from, {1, 0}) != e.to) out.fail("generalized Mullineux at r=" + std::to_string(r) + ": " + label_text(e.from));
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 algebra soundness", algebra_soundness},
      {"2 trace and pairing", trace_pairing},
      {"3 cellularity of all four families", cellularity},
      {"4 semisimple sanity", semisimple},
      {"5 nonzero classification by the crystal", classification},
      {"6 D^c0(lambda) = D^c(eta(lambda))", main1_iso},
      {"7 D^xi(lambda_A) = D^1(lambda_R(A))", main2_iso},
      {"8 duality of cell modules", duality},
      {"9 oracle agreement of label maps", oracle_agreement},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << " [" << std::fixed << std::setprecision(2) << secs << " s]\n";
  }
  return all ? 0 : 1;
}
