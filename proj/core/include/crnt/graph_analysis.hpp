#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crnt/matrix.hpp"
#include "crnt/network.hpp"

namespace crnt {

// Classes are sorted internally and ordered by their smallest vertex.
using Partition = std::vector<std::vector<std::size_t>>;

Partition linkage_classes(const MultiGraph& g);
Partition strong_linkage_classes(const MultiGraph& g);
bool is_weakly_reversible(const MultiGraph& g);

// Incidence matrix A = A_t - A_s (n x r); self-loop columns are zero.
Matrix incidence_matrix(const MultiGraph& g);

struct CertificateOptions {
  Rational epsilon = Rational(1);
  Rational bound = Rational(1000);
};

struct WrCertificate {
  Matrix flow;  // B = A diag(c)
  Rational bound;  // the bound the entries finally satisfy
  std::vector<std::string> warnings;
};

// LP certificate of weak reversibility: a flow B with the sign pattern of A
// whose row sums vanish. Absent when the graph is not weakly reversible.
std::optional<WrCertificate> wr_certificate(const MultiGraph& g, const CertificateOptions& opt = {});

bool structurally_equivalent(const Matrix& a, const Matrix& b);
bool rows_balanced(const Matrix& b);

struct SubspaceDims {
  std::size_t stoich = 0;
  std::size_t kinetic = 0;
};

SubspaceDims subspace_dims(const GeneralizedNetwork& net);

struct StructuralReport {
  std::size_t n = 0;
  std::size_t r = 0;
  Partition linkage;
  Partition strong_linkage;
  bool weakly_reversible = false;
  std::size_t dim_stoich = 0;
  std::optional<std::size_t> dim_kinetic;
  long deficiency = 0;
  std::optional<long> kinetic_deficiency;

  std::size_t l() const { return linkage.size(); }
};

StructuralReport analyze(const ReactionNetwork& net);
StructuralReport analyze(const GeneralizedNetwork& net);

// Stable JSON: {n, r, l, dimS, dimSprime, delta, deltaPrime, weaklyReversible,
// linkageClasses, strongLinkageClasses}; vertex indices are 1-based.
std::string report_to_json(const StructuralReport& rep);

}  // namespace crnt
