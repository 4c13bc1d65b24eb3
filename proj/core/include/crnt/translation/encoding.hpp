#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "crnt/milp/model.hpp"
#include "crnt/milp/solver.hpp"
#include "crnt/network.hpp"
#include "crnt/translation/split_translation.hpp"

namespace crnt {

struct EncodingParams {
  std::size_t q = 1;
  std::optional<std::size_t> n_vertices;  // defaults to the original vertex count
  Rational epsilon{1};
  Rational big_m{1000};
  bool integral_complexes = false;
  // Source-order rule, slice ordering of Lambda, and the extra orderings built on them.
  bool symmetry_breaking = true;
};

// The MILP plus the column index of every named decision variable. All
// indices below are 0-based; variable names in the model are 1-based.
class Encoding {
 public:
  milp::Model model;
  std::size_t m = 0, n = 0, r = 0, q = 0;

  std::size_t Y(std::size_t i, std::size_t j) const { return y_[i * n + j]; }
  std::size_t Gt(std::size_t i, std::size_t k, std::size_t l) const { return gt_[(i * r + k) * q + l]; }
  std::size_t Gs(std::size_t i, std::size_t k) const { return gs_[i * r + k]; }
  std::size_t Bt(std::size_t j, std::size_t k) const { return bt_[j * r + k]; }
  std::size_t Bs(std::size_t j, std::size_t k) const { return bs_[j * r + k]; }
  std::size_t As(std::size_t j, std::size_t k) const { return as_[j * r + k]; }
  std::size_t At(std::size_t j, std::size_t k, std::size_t l) const { return at_[(j * r + k) * q + l]; }
  std::size_t D(std::size_t j, std::size_t k, std::size_t l) const { return d_[(j * r + k) * q + l]; }
  std::size_t L(std::size_t k, std::size_t l) const { return lambda_[k * q + l]; }

  // Reactions sharing a source complex share a group; groups are numbered by first reaction.
  std::vector<std::size_t> group_of;
  // Vertex each source group is pinned to, when symmetry breaking could pin them.
  std::vector<std::size_t> pinned;

 private:
  friend Encoding encode(const ReactionNetwork&, const EncodingParams&);
  std::vector<std::size_t> y_, gt_, gs_, bt_, bs_, as_, at_, d_, lambda_;
};

// Throws std::invalid_argument when the parameters cannot describe a translation.
void validate_params(const ReactionNetwork& net, const EncodingParams& p);

Encoding encode(const ReactionNetwork& net, const EncodingParams& p);

// Reads a translation off an optimal assignment. Throws std::runtime_error if
// the assignment fails exact re-verification against the model.
// Node filter for the built-in solver. It prunes partial assignments in
// which a fixed non-trivial edge can no longer lie on a cycle, or whose fixed
// vertex choices admit no consistent complexes. Conflicts of the second kind
// are shrunk to minimal sets and remembered for the rest of the search.
std::function<bool(std::vector<signed char>&)> node_filter(const ReactionNetwork& net, const Encoding& enc);

// Dive ranks for the targets: a trivial copy first, then vertices that
// already carry a source complex, then fresh vertices.
std::vector<int> dive_rank(const Encoding& enc);

// The non-trivial indicators of the later slices: the dive settles which
// reactions split before choosing any target.
std::vector<std::size_t> dive_first(const Encoding& enc);

SplitTranslation decode(const ReactionNetwork& net, const Encoding& enc, const milp::Solution& sol);

}  // namespace crnt
