#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circmagic/circulant.h"

namespace circmagic {

// A bijection Z_n -> {1, ..., n}; values()[x] is the label of vertex x.
class Labeling {
 public:
  // Throws DomainError unless `values` is a permutation of 1..n.
  explicit Labeling(std::vector<Int> values);

  Int n() const { return static_cast<Int>(values_.size()); }
  Int operator()(Int x) const { return values_[static_cast<size_t>(mod(x, n()))]; }
  const std::vector<Int>& values() const { return values_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Int> values_;
};

// The common neighbour-label sum kappa if every vertex has the same one.
// For valency k this is necessarily k(n+1)/2. Throws DomainError when the
// orders differ.
std::optional<Int> verify(const Circulant& g, const Labeling& l);

// Magic constant a distance magic labeling of g must have.
Int magic_constant(const Circulant& g);

// Given a labeling of Circ(n; T) and a unit q with qS = T, the labeling
// x -> l_T(q x) of Circ(n; S).
Labeling transport_labeling(const Labeling& l_t, const ConnectionSet& s, const ConnectionSet& t,
                            Int q);

// Coordinates on the subgroup H = <step> of Z_n: every x in H is written
// uniquely as x = zeta * lambda + xi * mu with 0 <= zeta < rows and
// 0 <= xi < cols, and labelled ell_H(x) = 1 + zeta + xi * rows.
class CoordinateScaffold {
 public:
  Int n() const { return n_; }
  Int step() const { return step_; }
  Int lambda() const { return lambda_; }
  Int mu() const { return mu_; }
  Int rows() const { return rows_; }
  Int cols() const { return cols_; }

  // x must lie in H; throws DomainError otherwise.
  Int zeta(Int x) const { return zeta_[index(x)]; }
  Int xi(Int x) const { return xi_[index(x)]; }
  Int ell_h(Int x) const { return 1 + zeta(x) + xi(x) * rows_; }

  bool in_subgroup(Int x) const { return mod(x, step_) == 0; }

 private:
  friend CoordinateScaffold build_scaffold(Int n, Int step, Int lambda, Int mu, Int rows,
                                           Int cols);
  size_t index(Int x) const;

  Int n_ = 0, step_ = 1, lambda_ = 0, mu_ = 0, rows_ = 0, cols_ = 0;
  std::vector<Int> zeta_, xi_;  // indexed by x / step
};

// Fills the tables by iterating over every (zeta, xi). Throws DomainError if
// step does not divide n or the coordinate map is not a bijection onto H.
CoordinateScaffold build_scaffold(Int n, Int step, Int lambda, Int mu, Int rows, Int cols);

// Serialization: a JSON array of n labels (index = vertex), or two-column
// CSV "vertex,label" with an optional header line.
std::string labeling_to_json(const Labeling& l);
std::string labeling_to_csv(const Labeling& l);
Labeling labeling_from_json(std::string_view text);
Labeling labeling_from_csv(std::string_view text);
// Detects the format from the first non-blank character.
Labeling labeling_from_text(std::string_view text);

}  // namespace circmagic
