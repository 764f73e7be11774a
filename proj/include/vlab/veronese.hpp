#pragma once

#include <vector>

#include "vlab/polynomial.hpp"
#include "vlab/series.hpp"

namespace vlab {

// The r-section decomposition of f: parts[k] collects the coefficients of f
// in positions congruent to k mod r, reindexed, so that
//   f(x) = sum_k x^k * parts[k](x^r).
struct SectionDecomposition {
  int r = 1;
  std::vector<Polynomial> parts;
};

SectionDecomposition sections(const Polynomial& f, int r);
Polynomial recompose(const SectionDecomposition& d);

struct VeroneseResult {
  int r = 1;
  int n = 0;
  int k = 0;
  Polynomial numerator;
};

// The section operator applied to h: the k-th r-section of
// (1 + x + ... + x^{r-1})^n * h(x). Requires 0 <= k <= r-1; n = 0 degenerates
// to plain sections.
VeroneseResult veronese(const Polynomial& h, int n, int r, int k);

// Independent computation through the defining property: expand h/(1-x)^n,
// extract the (ri+k)-indexed subsequence, and clear the (1-x)^n denominator
// again. Throws InternalInconsistencyError if the trailing coefficients that
// must vanish do not (truncation order M too small, or an arithmetic bug).
Polynomial veronese_oracle(const Polynomial& h, int n, int r, int k, int M);

// Smallest truncation order accepted by veronese_oracle for these inputs.
int veronese_oracle_min_order(const Polynomial& h, int n, int r, int k);

// Same operator computed through the proof decomposition
//   U_{r,i}^n h = sum_{j<=i} h^<r,i-j> U_{r,j}^n I
//               + x * sum_{j>i} h^<r,r-(j-i)> U_{r,j}^n I.
Polynomial veronese_via_uri(const Polynomial& h, int n, int r, int i);

// (U_{r,r-1}^n h, ..., U_{r,1}^n h, U_{r,0}^n h), the sequence order used by
// the interlacing statements.
std::vector<Polynomial> veronese_sequence(const Polynomial& h, int n, int r);

} // namespace vlab
