#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lcgp/module_element.hpp"
#include "lcgp/monomial_order.hpp"

namespace lcgp {

struct GroebnerOptions {
  /// Maximum number of S-pairs taken from the queue before giving up with
  /// a ResourceError.
  std::size_t pair_budget = 1'000'000;
};

/// Groebner basis of a submodule of R^s. Produced by `buchberger`, always
/// reduced, with elements sorted by decreasing leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<ModuleElement> elements, MonomialOrder order, std::size_t rank,
                std::size_t nvars, bool reduced)
      : elements_(std::move(elements)),
        order_(std::move(order)),
        rank_(rank),
        nvars_(nvars),
        reduced_(reduced) {}

  const std::vector<ModuleElement>& elements() const { return elements_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t rank() const { return rank_; }
  std::size_t nvars() const { return nvars_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elements_.size(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.rank_ == b.rank_ && a.nvars_ == b.nvars_ && a.elements_ == b.elements_;
  }

 private:
  std::vector<ModuleElement> elements_;
  MonomialOrder order_;
  std::size_t rank_;
  std::size_t nvars_;
  bool reduced_;
};

/// Full reduction of `m` by `basis`. Among several reducers the one with the
/// smallest index wins.
ModuleElement normal_form(const ModuleElement& m, const GroebnerBasis& basis);

/// Reduced Groebner basis of the submodule generated by `gens` in R^rank.
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, std::size_t rank,
                         std::size_t nvars, const MonomialOrder& order = {},
                         const GroebnerOptions& options = {});

/// Convenience overload; `gens` must be nonempty.
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const MonomialOrder& order = {},
                         const GroebnerOptions& options = {});

/// S-vector of two elements whose leading terms share a component,
/// nullopt otherwise.
std::optional<ModuleElement> s_vector(const ModuleElement& f, const ModuleElement& g,
                                      const MonomialOrder& order);

struct Membership {
  bool member = false;
  /// When `member`: m = sum_i cofactors[i] * gens[i].
  std::vector<Polynomial> cofactors;
};

/// A finitely generated submodule together with a Groebner basis of the
/// generators augmented by tag vectors: g_i (+) e_i in R^(rank + count).
///
/// The basis is computed once under a position-over-term order that ranks
/// every original component above every tag component. Basis elements with
/// a vanishing original block are syzygies; reducing (m, 0) leaves an
/// original part that is zero exactly when m is a member, and the tag part
/// then holds the negated cofactors.
class Submodule {
 public:
  Submodule(std::vector<ModuleElement> gens, std::size_t rank, std::size_t nvars,
            BaseOrder base = BaseOrder::DegRevLex, const GroebnerOptions& options = {});

  std::size_t rank() const { return rank_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<ModuleElement>& generators() const { return gens_; }

  /// Generators of {c in R^count : sum_i c_i gens_i = 0}, reduced and sorted.
  const std::vector<ModuleElement>& syzygies() const { return syzygies_; }

  Membership membership(const ModuleElement& m) const;

 private:
  std::vector<ModuleElement> gens_;
  std::size_t rank_;
  std::size_t nvars_;
  std::optional<GroebnerBasis> augmented_;
  std::vector<ModuleElement> syzygies_;
};

/// Generators of the syzygy module of `gens` (elements of R^rank); the
/// result lives in R^gens.size().
std::vector<ModuleElement> syzygy_basis(const std::vector<ModuleElement>& gens, std::size_t rank,
                                        std::size_t nvars, const GroebnerOptions& options = {});

Membership submodule_membership(const ModuleElement& m, const std::vector<ModuleElement>& gens,
                                const GroebnerOptions& options = {});

/// Equality of generated submodules via reduced Groebner bases.
bool module_equal(const std::vector<ModuleElement>& a, const std::vector<ModuleElement>& b,
                  std::size_t rank, std::size_t nvars, const MonomialOrder& order = {},
                  const GroebnerOptions& options = {});

}  // namespace lcgp
