#pragma once

// Hot loops in two flavours: a plain serial reference and an OpenMP version.
// Both produce identical results; the serial one is what the tests compare to.

#include <vector>

#include "ncs/hyperlog.hpp"
#include "ncs/rational_series.hpp"

namespace ncs::kernels {

// Number of OpenMP threads used by the parallel kernels (<= 0 keeps the runtime default).
void set_jobs(int jobs);
int jobs();

TruncSeries eval_truncated_serial(const LinRep& r, int n);
// Prefix subtrees are evaluated independently and merged in a fixed order.
TruncSeries eval_truncated_parallel(const LinRep& r, int n);

// out[t][j] = integral from z0 to node j of u_{letters[t]} * src[t], on the grid.
using NodeValues = std::vector<cplx>;
void chen_layer_serial(const ChenGrid& g, const std::vector<NodeValues>& u, const std::vector<int>& letters,
                       const std::vector<const NodeValues*>& src, std::vector<NodeValues>& out);
void chen_layer_parallel(const ChenGrid& g, const std::vector<NodeValues>& u, const std::vector<int>& letters,
                         const std::vector<const NodeValues*>& src, std::vector<NodeValues>& out);

std::vector<ComplexVal> harmonic_sums_serial(const std::vector<Word>& words, long n, const SingularitySet& sigma);
std::vector<ComplexVal> harmonic_sums_parallel(const std::vector<Word>& words, long n, const SingularitySet& sigma);

}  // namespace ncs::kernels
