#include "hecke/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "hecke/cellular.hpp"
#include "hecke/crystal.hpp"
#include "hecke/label_maps.hpp"
#include "hecke/parallel.hpp"
#include "hecke/serialization.hpp"

namespace hecke {

namespace {

std::string twist_text(const std::vector<int>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out;
}

std::string tableau_text(const Tableau& t) { return to_json(t).dump(); }

std::vector<std::vector<int>> twists_of(const HeckeAlgebra& alg, const VerifyOptions& opts) {
  return opts.twists.empty() ? all_twists(alg.ell()) : opts.twists;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation longest_element(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - 1 - i;
  return Permutation(img);
}

void fail(SuiteResult& res, const std::string& what) {
  if (res.pass) res.counterexample = what;
  res.pass = false;
}

std::string match_text(const std::vector<SimpleMatch>& table) {
  std::string out;
  for (const auto& m : table) out += (out.empty() ? "" : " ") + label_text(m.from) + "->" + label_text(m.to);
  return out;
}

}  // namespace

std::vector<std::vector<int>> all_twists(int ell) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << ell); ++mask) {
    std::vector<int> c(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) c[static_cast<std::size_t>(i)] = (mask >> (ell - 1 - i)) & 1u;
    out.push_back(std::move(c));
  }
  return out;
}

SuiteResult verify_relations(const HeckeAlgebra& alg, const VerifyOptions& opts) {
  SuiteResult res{"relations", true, {}, {}};
  std::size_t expected = 1;
  for (int i = 0; i < alg.r(); ++i) expected *= static_cast<std::size_t>(alg.ell());
  for (int i = 2; i <= alg.r(); ++i) expected *= static_cast<std::size_t>(i);
  res.details.push_back("dimension " + std::to_string(alg.dimension()) + " (expected " + std::to_string(expected) + ")");
  if (alg.dimension() != expected) fail(res, "basis count " + std::to_string(alg.dimension()) + " != " + std::to_string(expected));
  if (auto bad = check_relations(alg)) {
    fail(res, "relation does not vanish: " + *bad);
  } else {
    res.details.push_back("all defining relations vanish in normal form");
  }
  if (auto bad = check_associativity(alg, opts.samples, opts.seed)) {
    fail(res, "associativity fails on " + *bad);
  } else {
    res.details.push_back("associativity holds on " + std::to_string(opts.samples) + " random monomial triples");
  }
  return res;
}

SuiteResult verify_trace(const HeckeAlgebra& alg, const VerifyOptions& opts) {
  SuiteResult res{"trace", true, {}, {}};
  const auto labels = enumerate_multipartitions(alg.ell(), alg.r());
  for (const auto& c : twists_of(alg, opts)) {
    const auto values = parallel_map(labels.size(), opts.threads, [&](std::size_t i) {
      return alg.tau_hat(z_lambda(alg, c, labels[i]) * alg.from_permutation(w_lambda(labels[i]).inverse()));
    });
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const std::string line = "c=" + twist_text(c) + " lambda=" + label_text(labels[i]) + " tau_hat(z w^-1)=" + to_string(values[i]);
      res.details.push_back(line);
      if (values[i] != 1) fail(res, line);
    }
  }
  return res;
}

namespace {

// T(i, j) = tau_hat(b_i b_j) on the normal basis.
Matrix trace_form(const HeckeAlgebra& alg, std::size_t threads) {
  const std::size_t d = alg.dimension();
  const auto rows = parallel_map(d, threads, [&](std::size_t i) {
    const Element bi = alg.basis_element(static_cast<MonomialIndex>(i));
    std::vector<Rational> row(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) row[j] = alg.tau_hat(alg.multiply(bi, alg.basis_element(static_cast<MonomialIndex>(j))));
    return row;
  });
  Matrix t(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t(i, j) = rows[i][j];
  return t;
}

}  // namespace

SuiteResult verify_pairing(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts) {
  SuiteResult res{"pairing", true, {}, {}};
  const Matrix form = trace_form(*alg, opts.threads);
  const std::size_t dim = alg->dimension();
  for (const auto& c : twists_of(*alg, opts)) {
    const CellularBasis m(alg, BasisFamily::M(c));
    const CellularBasis n(alg, m.family().dual());
    // T * star(n_{u,v}) for every n basis element, in label order.
    std::vector<std::pair<std::size_t, std::size_t>> nidx;
    for (std::size_t k = 0; k < n.labels().size(); ++k) nidx.emplace_back(k, n.tableaux(k).size());
    std::vector<std::size_t> offset(nidx.size() + 1, 0);
    for (std::size_t k = 0; k < nidx.size(); ++k) offset[k + 1] = offset[k] + nidx[k].second * nidx[k].second;
    const auto paired = parallel_map(offset.back(), opts.threads, [&](std::size_t i) {
      const std::size_t k = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), i) - offset.begin()) - 1;
      const std::size_t f = nidx[k].second;
      const std::size_t u = (i - offset[k]) / f;
      const std::size_t v = (i - offset[k]) % f;
      const Element y = alg->star(n.element(k, u, v));
      std::vector<Rational> out(dim, Rational(0));
      for (const auto& [mono, coef] : y.terms())
        for (std::size_t a = 0; a < dim; ++a)
          if (form(a, mono) != 0) out[a] += form(a, mono) * coef;
      return out;
    });
    struct Entry {
      std::size_t label;
      std::size_t s;
      std::size_t t;
    };
    std::vector<Entry> ms;
    for (std::size_t l = 0; l < m.labels().size(); ++l)
      for (std::size_t s = 0; s < m.tableaux(l).size(); ++s)
        for (std::size_t t = 0; t < m.tableaux(l).size(); ++t) ms.push_back({l, s, t});
    // Each row: count of checked entries and the first violation.
    const auto rows = parallel_map(ms.size(), opts.threads, [&](std::size_t i) {
      std::pair<std::size_t, std::string> out{0, {}};
      const auto& e = ms[i];
      const Tableau& s = m.tableaux(e.label)[e.s];
      const Tableau& t = m.tableaux(e.label)[e.t];
      const Element x = m.element(e.label, e.s, e.t);
      for (std::size_t k = 0; k < n.labels().size(); ++k) {
        const auto& tabs = n.tableaux(k);
        for (std::size_t u = 0; u < tabs.size(); ++u)
          for (std::size_t v = 0; v < tabs.size(); ++v) {
            const Tableau up = tableau_conjugate(tabs[u]);
            const Tableau vp = tableau_conjugate(tabs[v]);
            const bool diag = up == s && vp == t;
            const bool vanish = !tableau_dominance_ge(up, s) || !tableau_dominance_ge(vp, t);
            if (!diag && !vanish) continue;
            ++out.first;
            const auto& y = paired[offset[k] + u * tabs.size() + v];
            Rational p(0);
            for (const auto& [mono, coef] : x.terms()) p += coef * y[mono];
            if ((diag && p != 1) || (vanish && p != 0)) {
              if (out.second.empty())
                out.second = "c=" + twist_text(c) + " <m_{s,t}, n_{u,v}> = " + to_string(p) + " (expected " + (diag ? "1" : "0") +
                             ") with s=" + tableau_text(s) + " t=" + tableau_text(t) + " u=" + tableau_text(tabs[u]) +
                             " v=" + tableau_text(tabs[v]);
            }
          }
      }
      return out;
    });
    std::size_t checked = 0;
    for (const auto& [count, bad] : rows) {
      checked += count;
      if (!bad.empty()) fail(res, bad);
    }
    res.details.push_back("c=" + twist_text(c) + " paired with " + n.family().to_string() + ": " + std::to_string(checked) +
                          " constrained entries checked");
  }
  return res;
}

SuiteResult verify_cellular(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts) {
  SuiteResult res{"cellular", true, {}, {}};
  std::vector<BasisFamily> families;
  for (const auto& c : twists_of(*alg, opts)) {
    families.push_back(BasisFamily::M(c));
    families.push_back(BasisFamily::N(c));
  }
  const auto xis = opts.xi ? std::vector<Permutation>{*opts.xi} : all_permutations(alg->ell());
  for (const auto& xi : xis) {
    families.push_back(BasisFamily::MXi(xi));
    families.push_back(BasisFamily::NXi(xi));
  }
  const auto reports = parallel_map(families.size(), opts.threads, [&](std::size_t i) {
    const BasisFamily& fam = families[i];
    std::string bad;
    try {
      const CellularBasis basis(alg, fam);
      if (auto e = check_star_symmetry(basis)) return fam.to_string() + ": star symmetry fails at " + *e;
      if (auto e = check_cell_action(basis)) return fam.to_string() + ": cell action fails: " + *e;
      for (const auto& lambda : basis.labels()) {
        const Matrix g = gram_matrix(basis, lambda);
        if (g != gram_matrix_by_trace(basis, lambda)) return fam.to_string() + ": trace-route Gram differs at lambda=" + label_text(lambda);
      }
    } catch (const std::exception& e) {
      return fam.to_string() + ": " + e.what();
    }
    return bad;
  });
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (reports[i].empty()) {
      res.details.push_back(families[i].to_string() + ": invertible, star-symmetric, cellular action, Gram forms agree");
    } else {
      res.details.push_back(reports[i]);
      fail(res, reports[i]);
    }
  }
  return res;
}

SuiteResult verify_main1(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts) {
  SuiteResult res{"main1", true, {}, {}};
  const int ell = alg->ell();
  const std::vector<int> c0(static_cast<std::size_t>(ell), 0);
  const CellularBasis m0(alg, BasisFamily::M(c0));
  const auto ranks = parallel_map(m0.labels().size(), opts.threads,
                                  [&](std::size_t i) { return simple_dim(cell_module(m0, m0.labels()[i])); });
  std::vector<Multipartition> by_gram;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (ranks[i] > 0) by_gram.push_back(m0.labels()[i]);
  const auto by_crystal = nonzero_labels(alg->omega(), alg->r());
  std::string gram_text, crystal_text;
  for (const auto& l : by_gram) gram_text += label_text(l) + " ";
  for (const auto& l : by_crystal) crystal_text += label_text(l) + " ";
  res.details.push_back("nonzero by Gram rank: " + gram_text);
  res.details.push_back("nonzero by crystal (" + to_string(kDefaultOrientation) + "): " + crystal_text);
  if (by_gram != by_crystal) fail(res, "classification differs: Gram {" + gram_text + "} crystal {" + crystal_text + "}");

  for (const auto& c : twists_of(*alg, opts)) {
    if (c == c0) continue;
    const CellularBasis mc(alg, BasisFamily::M(c));
    std::vector<SimpleMatch> table;
    try {
      table = match_simples(m0, mc, opts.threads);
    } catch (const std::logic_error& e) {
      fail(res, "c=" + twist_text(c) + ": " + e.what());
      continue;
    }
    bool ok = table.size() == by_gram.size();
    for (const auto& m : table) {
      if (m.to != eta(m.from, c) || m.intertwiners != 1) {
        ok = false;
        fail(res, "c=" + twist_text(c) + ": D^c0(" + label_text(m.from) + ") matches D^c(" + label_text(m.to) + ") with " +
                      std::to_string(m.intertwiners) + " intertwiners, eta gives " + label_text(eta(m.from, c)));
      }
    }
    res.details.push_back("c=" + twist_text(c) + (ok ? " eta confirmed: " : " FAILED: ") + match_text(table));
  }
  return res;
}

SuiteResult verify_main2(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts) {
  SuiteResult res{"main2", true, {}, {}};
  const int ell = alg->ell();
  if (!std::is_sorted(alg->omega().begin(), alg->omega().end(), std::greater<>())) {
    res.skipped = true;
    res.details.push_back("skipped: omega is not weakly decreasing");
    return res;
  }
  const Permutation xi = opts.xi ? *opts.xi : longest_element(ell);
  const XiContext ctx = XiContext::for_size(alg->omega(), xi, alg->r());
  const CellularBasis mx(alg, BasisFamily::MXi(xi));
  const CellularBasis m1(alg, BasisFamily::MXi(Permutation::identity(ell)));

  std::vector<SimpleMatch> expected;
  for (const auto& lambda : mx.labels())
    if (auto mu = mullineux_xi(lambda, ctx)) expected.push_back({lambda, *mu, 1});
  std::vector<SimpleMatch> table;
  try {
    table = match_simples(mx, m1, opts.threads);
  } catch (const std::logic_error& e) {
    fail(res, e.what());
    return res;
  }
  res.details.push_back("xi=" + twist_text(xi.one_based()) + " closed form: " + match_text(expected));
  res.details.push_back("xi=" + twist_text(xi.one_based()) + " intertwiners: " + match_text(table));
  if (table.size() != expected.size()) fail(res, std::to_string(expected.size()) + " standard A but " + std::to_string(table.size()) + " nonzero D^xi");
  for (std::size_t i = 0; i < std::min(table.size(), expected.size()); ++i)
    if (table[i].from != expected[i].from || table[i].to != expected[i].to || table[i].intertwiners != 1)
      fail(res, "D^xi(" + label_text(table[i].from) + ") matches D^1(" + label_text(table[i].to) + ") with " +
                    std::to_string(table[i].intertwiners) + " intertwiners; R map gives " + label_text(expected[i].from) + "->" +
                    label_text(expected[i].to));

  const std::vector<int> c0(static_cast<std::size_t>(ell), 0);
  const CellularBasis n0(alg, BasisFamily::N(c0));
  const CellularBasis m0(alg, BasisFamily::M(c0));
  try {
    const auto gm = match_simples(n0, m0, opts.threads);
    bool ok = true;
    for (const auto& m : gm) {
      const auto closed = generalized_mullineux(m.from, alg->omega());
      if (!closed || *closed != m.to) {
        ok = false;
        fail(res, "generalized Mullineux: D~(" + label_text(m.from) + ") matches D(" + label_text(m.to) + "), closed form gives " +
                      (closed ? label_text(*closed) : std::string("none")));
      }
    }
    res.details.push_back(std::string("generalized Mullineux ") + (ok ? "confirmed: " : "FAILED: ") + match_text(gm));
  } catch (const std::logic_error& e) {
    fail(res, std::string("generalized Mullineux: ") + e.what());
  }
  return res;
}

SuiteResult verify_duality(std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts) {
  SuiteResult res{"duality", true, {}, {}};
  const auto labels = enumerate_multipartitions(alg->ell(), alg->r());
  for (const auto& c : twists_of(*alg, opts)) {
    const CellularBasis m(alg, BasisFamily::M(c));
    const CellularBasis n(alg, m.family().dual());
    const auto lines = parallel_map(labels.size(), opts.threads, [&](std::size_t i) {
      const Multipartition& lambda = labels[i];
      const CellModule s = cell_module(m, lambda);
      const CellModule t = cell_module(n, conjugate(lambda));
      const std::size_t d = intertwiner_dim(contragredient(s.action), t.action);
      std::size_t z = 0;
      std::string note;
      try {
        z = intertwiner_dim(subcell_module(*alg, c, lambda), t.action);
      } catch (const std::exception& e) {
        note = std::string(" (z H: ") + e.what() + ")";
      }
      return std::make_pair(d >= 1 && z >= 1, "c=" + twist_text(c) + " lambda=" + label_text(lambda) + " Hom(S^dual, S~(lambda'))=" +
                                                  std::to_string(d) + " Hom(zH, S~(lambda'))=" + std::to_string(z) + note);
    });
    for (const auto& [ok, line] : lines) {
      res.details.push_back(line);
      if (!ok) fail(res, line);
    }
  }
  return res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "trace", "pairing", "cellular", "main1", "main2", "duality"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::shared_ptr<const HeckeAlgebra> alg, const VerifyOptions& opts) {
  if (name == "relations") return verify_relations(*alg, opts);
  if (name == "trace") return verify_trace(*alg, opts);
  if (name == "pairing") return verify_pairing(alg, opts);
  if (name == "cellular") return verify_cellular(alg, opts);
  if (name == "main1") return verify_main1(alg, opts);
  if (name == "main2") return verify_main2(alg, opts);
  if (name == "duality") return verify_duality(alg, opts);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace hecke
