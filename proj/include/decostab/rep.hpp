#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "decostab/rational.hpp"

namespace decostab {

/// A character of the diagonal torus of GL(r): entry i is the exponent of
/// the i-th coordinate.
struct TorusWeight {
  IntVector entries;

  std::size_t rank() const { return entries.size(); }
  std::int64_t degree() const;

  friend auto operator<=>(const TorusWeight&, const TorusWeight&) = default;
  friend bool operator==(const TorusWeight&, const TorusWeight&) = default;
};

TorusWeight unit_weight(int r, int i);  // e_i, 1-based
TorusWeight zero_weight(int r);

/// Finite multiset of torus weights, ordered lexicographically.
class StateSet {
 public:
  using Multiplicity = std::uint64_t;
  using Map = std::map<TorusWeight, Multiplicity>;

  explicit StateSet(int rank = 0) : rank_(rank) {}
  static StateSet from_weights(int rank, const std::vector<TorusWeight>& weights);

  int rank() const { return rank_; }
  bool empty() const { return states_.empty(); }
  std::size_t distinct() const { return states_.size(); }
  Multiplicity total() const;
  Multiplicity multiplicity(const TorusWeight& w) const;
  bool contains(const TorusWeight& w) const { return states_.count(w) != 0; }

  void insert(const TorusWeight& w, Multiplicity mult = 1);
  std::vector<TorusWeight> weights() const;
  const Map& map() const { return states_; }

  /// Same weights, every multiplicity reset to one.
  StateSet as_set() const;

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  int rank_;
  Map states_;
};

/// Immutable syntax tree of a GL(r)-representation built from the standard
/// representation. Construction validates rank agreement and non-vanishing.
class RepExpr {
 public:
  enum class Kind { Std, Trivial, Dual, Tensor, Sym, Wedge, DirectSum, DetPow };

  static RepExpr standard(int r);
  static RepExpr trivial(int r);
  static RepExpr dual(const RepExpr& inner);
  static RepExpr tensor(const RepExpr& left, const RepExpr& right);
  static RepExpr sym(std::int64_t k, const RepExpr& inner);
  static RepExpr wedge(std::int64_t k, const RepExpr& inner);
  static RepExpr direct_sum(const std::vector<RepExpr>& summands);
  static RepExpr det_pow(int r, std::int64_t b);

  Kind kind() const { return node_->kind; }
  int rank() const { return node_->rank; }
  const Integer& dimension() const { return node_->dimension; }
  /// k for Sym/Wedge, b for DetPow, zero otherwise.
  std::int64_t power() const { return node_->power; }
  const std::vector<RepExpr>& children() const { return node_->children; }

  friend bool operator==(const RepExpr& a, const RepExpr& b);

 private:
  struct Node {
    Kind kind;
    int rank;
    std::int64_t power;
    Integer dimension;
    std::vector<RepExpr> children;
  };
  explicit RepExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static RepExpr make(Kind kind, int rank, std::int64_t power,
                      std::vector<RepExpr> children);

  std::shared_ptr<const Node> node_;
};

StateSet enumerate_states(const RepExpr& rep);

/// Distinct values of the coordinate sum over all states.
std::set<std::int64_t> state_degrees(const RepExpr& rep);

/// The common degree alpha with rho(z id) = z^alpha id. Throws Inhomogeneous.
std::int64_t homogeneity_degree(const RepExpr& rep);

/// Direct sum over all non-negative nu with sum nu_i deg_i = kappa of
/// S^{nu_1} rho_1 (x) ... (x) S^{nu_n} rho_n.
RepExpr homogenize(const std::vector<RepExpr>& summands, std::int64_t kappa);

/// States of ((C^r)^{(x)a} (x) det^{-b})^{(+)c}.
StateSet envelope_states(int r, std::int64_t a, std::int64_t b, std::int64_t c);

/// Multiset inclusion of the states of rep in the envelope representation.
bool state_containment(const RepExpr& rep, std::int64_t a, std::int64_t b, std::int64_t c);

/// Multiset inclusion.
bool is_submultiset(const StateSet& part, const StateSet& whole);

}  // namespace decostab
