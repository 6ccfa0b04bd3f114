#include "lcgp/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lcgp/errors.hpp"

namespace lcgp {

namespace {

struct Term {
  std::size_t comp;
  Monomial mono;
  Rational coeff;
};

/// Terms sorted by strictly decreasing (component, monomial) under an order.
using Vec = std::vector<Term>;

class Engine {
 public:
  Engine(const MonomialOrder& order, std::size_t nvars) : ord_(order), nvars_(nvars) {}

  int cmp(const Term& a, const Term& b) const {
    auto c = ord_.compare(a.comp, a.mono, b.comp, b.mono);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }

  Vec to_vec(const ModuleElement& m) const {
    Vec v;
    for (std::size_t c = 0; c < m.rank(); ++c)
      for (const auto& [mono, coeff] : m[c].terms()) v.push_back({c, mono, coeff});
    std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return cmp(a, b) > 0; });
    return v;
  }

  ModuleElement to_element(const Vec& v, std::size_t rank) const {
    ModuleElement m(rank, nvars_);
    for (const auto& t : v) m[t.comp].add_term(t.mono, t.coeff);
    return m;
  }

  /// p[start..] - coeff * mono * g, merged in order.
  Vec axpy(const Vec& p, std::size_t start, const Rational& coeff, const Monomial& mono,
           const Vec& g) const {
    Vec out;
    out.reserve(p.size() - start + g.size());
    std::size_t i = start, j = 0;
    Term scaled;
    while (i < p.size() || j < g.size()) {
      if (j < g.size()) {
        scaled.comp = g[j].comp;
        scaled.mono = g[j].mono * mono;
      }
      int c = i >= p.size() ? -1 : (j >= g.size() ? 1 : cmp(p[i], scaled));
      if (c > 0) {
        out.push_back(p[i++]);
      } else if (c < 0) {
        scaled.coeff = -coeff * g[j].coeff;
        out.push_back(std::move(scaled));
        scaled = Term{};
        ++j;
      } else {
        Rational sum = p[i].coeff - coeff * g[j].coeff;
        if (sum != 0) out.push_back({p[i].comp, p[i].mono, sum});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static void make_monic(Vec& v) {
    if (v.empty() || v.front().coeff == 1) return;
    Rational inv = 1 / v.front().coeff;
    for (auto& t : v) t.coeff *= inv;
  }

  /// Index of the first basis element whose leading term divides `t`.
  static std::optional<std::size_t> find_reducer(const Term& t, const std::vector<Vec>& basis,
                                                 std::size_t skip = static_cast<std::size_t>(-1)) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const Term& lead = basis[k].front();
      if (lead.comp == t.comp && lead.mono.divides(t.mono)) return k;
    }
    return std::nullopt;
  }

  Vec reduce(Vec p, const std::vector<Vec>& basis,
             std::size_t skip = static_cast<std::size_t>(-1)) const {
    Vec result;
    std::size_t start = 0;
    while (start < p.size()) {
      const Term& lead = p[start];
      if (auto k = find_reducer(lead, basis, skip)) {
        const Term& glead = basis[*k].front();
        Rational factor = lead.coeff / glead.coeff;
        Monomial shift = lead.mono / glead.mono;
        p = axpy(p, start, factor, shift, basis[*k]);
        start = 0;
      } else {
        result.push_back(p[start++]);
      }
    }
    return result;
  }

  Vec spoly(const Vec& f, const Vec& g) const {
    const Term& lf = f.front();
    const Term& lg = g.front();
    Monomial l = lcm(lf.mono, lg.mono);
    Vec left = axpy(Vec{}, 0, Rational(-1) / lf.coeff, l / lf.mono, f);
    return axpy(left, 0, Rational(1) / lg.coeff, l / lg.mono, g);
  }

  const MonomialOrder& order() const { return ord_; }

 private:
  const MonomialOrder& ord_;
  std::size_t nvars_;
};

struct Pair {
  std::size_t i, j;  // i < j
  std::size_t comp;
  Monomial lcm;
};

std::vector<Vec> compute_basis(std::vector<Vec> gens, const Engine& eng, std::size_t rank,
                               const GroebnerOptions& options) {
  std::vector<Vec> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;

  auto add_element = [&](Vec v) {
    Engine::make_monic(v);
    std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].front().comp != v.front().comp) continue;
      pending.push_back({i, k, v.front().comp, lcm(basis[i].front().mono, v.front().mono)});
      pending_keys.emplace(i, k);
    }
    basis.push_back(std::move(v));
  };

  for (auto& g : gens)
    if (!g.empty()) add_element(std::move(g));

  std::size_t processed = 0;
  while (!pending.empty()) {
    // Normal strategy: smallest lcm under the order, then by indices.
    std::size_t best = 0;
    for (std::size_t p = 1; p < pending.size(); ++p) {
      auto c = eng.order().compare(pending[p].comp, pending[p].lcm, pending[best].comp,
                                   pending[best].lcm);
      if (c < 0 || (c == 0 && std::pair(pending[p].j, pending[p].i) <
                                  std::pair(pending[best].j, pending[best].i)))
        best = p;
    }
    Pair pair = std::move(pending[best]);
    pending[best] = std::move(pending.back());
    pending.pop_back();
    pending_keys.erase({pair.i, pair.j});

    if (++processed > options.pair_budget)
      throw ResourceError("Groebner basis computation exceeded the budget of " +
                          std::to_string(options.pair_budget) + " S-pairs");

    const Vec& f = basis[pair.i];
    const Vec& g = basis[pair.j];
    // Coprime leading monomials: only sound for ideals, not for modules.
    if (rank == 1 && coprime(f.front().mono, g.front().mono)) continue;

    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      const Term& lk = basis[k].front();
      if (lk.comp != pair.comp || !lk.mono.divides(pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_keys.contains(key(pair.i, k)) && !pending_keys.contains(key(pair.j, k));
    }
    if (chain) continue;

    Vec h = eng.reduce(eng.spoly(f, g), basis);
    if (!h.empty()) add_element(std::move(h));
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<Vec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Term& li = basis[i].front();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Term& lj = basis[j].front();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      redundant = lj.mono != li.mono || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails; leading terms are untouched.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Vec v = eng.reduce(minimal[i], minimal, i);
    // The lead is irreducible by the others, so reduce() kept it in front.
    Engine::make_monic(v);
    minimal[i] = std::move(v);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Vec& a, const Vec& b) { return eng.cmp(a.front(), b.front()) > 0; });
  return minimal;
}

void check_gens(const std::vector<ModuleElement>& gens, std::size_t rank, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.rank() != rank || g.nvars() != nvars)
      throw DimensionError("generators do not lie in the same free module");
}

}  // namespace

ModuleElement normal_form(const ModuleElement& m, const GroebnerBasis& basis) {
  if (m.rank() != basis.rank() || m.nvars() != basis.nvars())
    throw DimensionError("element and basis live in different free modules");
  Engine eng(basis.order(), basis.nvars());
  std::vector<Vec> vecs;
  for (const auto& g : basis.elements()) vecs.push_back(eng.to_vec(g));
  return eng.to_element(eng.reduce(eng.to_vec(m), vecs), basis.rank());
}

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, std::size_t rank,
                         std::size_t nvars, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  check_gens(gens, rank, nvars);
  Engine eng(order, nvars);
  std::vector<Vec> vecs;
  for (const auto& g : gens) vecs.push_back(eng.to_vec(g));
  auto basis = compute_basis(std::move(vecs), eng, rank, options);
  std::vector<ModuleElement> elems;
  for (const auto& v : basis) elems.push_back(eng.to_element(v, rank));
  return GroebnerBasis(std::move(elems), order, rank, nvars, true);
}

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list needs a rank");
  return buchberger(gens, gens.front().rank(), gens.front().nvars(), order, options);
}

std::optional<ModuleElement> s_vector(const ModuleElement& f, const ModuleElement& g,
                                      const MonomialOrder& order) {
  Engine eng(order, f.nvars());
  Vec vf = eng.to_vec(f), vg = eng.to_vec(g);
  if (vf.empty() || vg.empty() || vf.front().comp != vg.front().comp) return std::nullopt;
  return eng.to_element(eng.spoly(vf, vg), f.rank());
}

Submodule::Submodule(std::vector<ModuleElement> gens, std::size_t rank, std::size_t nvars,
                     BaseOrder base, const GroebnerOptions& options)
    : gens_(std::move(gens)), rank_(rank), nvars_(nvars) {
  check_gens(gens_, rank_, nvars_);
  const std::size_t count = gens_.size();
  std::vector<ModuleElement> augmented;
  augmented.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ModuleElement a(rank_ + count, nvars_);
    for (std::size_t c = 0; c < rank_; ++c) a[c] = gens_[i][c];
    a[rank_ + i] = Polynomial(nvars_, Rational(1));
    augmented.push_back(std::move(a));
  }
  // Identity priority under POT puts every original component first.
  MonomialOrder order(base, ModuleExtension::PositionOverTerm);
  augmented_.emplace(buchberger(augmented, rank_ + count, nvars_, order, options));

  for (const auto& e : augmented_->elements()) {
    bool original_zero = true;
    for (std::size_t c = 0; c < rank_ && original_zero; ++c) original_zero = e[c].is_zero();
    if (!original_zero) continue;
    ModuleElement syz(count, nvars_);
    for (std::size_t i = 0; i < count; ++i) syz[i] = e[rank_ + i];
    syzygies_.push_back(std::move(syz));
  }
}

Membership Submodule::membership(const ModuleElement& m) const {
  if (m.rank() != rank_ || m.nvars() != nvars_)
    throw DimensionError("membership test across different free modules");
  const std::size_t count = gens_.size();
  ModuleElement lifted(rank_ + count, nvars_);
  for (std::size_t c = 0; c < rank_; ++c) lifted[c] = m[c];
  ModuleElement rem = normal_form(lifted, *augmented_);
  Membership result;
  for (std::size_t c = 0; c < rank_; ++c)
    if (!rem[c].is_zero()) return result;
  result.member = true;
  for (std::size_t i = 0; i < count; ++i) result.cofactors.push_back(-rem[rank_ + i]);
  return result;
}

std::vector<ModuleElement> syzygy_basis(const std::vector<ModuleElement>& gens, std::size_t rank,
                                        std::size_t nvars, const GroebnerOptions& options) {
  return Submodule(gens, rank, nvars, BaseOrder::DegRevLex, options).syzygies();
}

Membership submodule_membership(const ModuleElement& m, const std::vector<ModuleElement>& gens,
                                const GroebnerOptions& options) {
  return Submodule(gens, m.rank(), m.nvars(), BaseOrder::DegRevLex, options).membership(m);
}

bool module_equal(const std::vector<ModuleElement>& a, const std::vector<ModuleElement>& b,
                  std::size_t rank, std::size_t nvars, const MonomialOrder& order,
                  const GroebnerOptions& options) {
  return buchberger(a, rank, nvars, order, options) == buchberger(b, rank, nvars, order, options);
}

}  // namespace lcgp
