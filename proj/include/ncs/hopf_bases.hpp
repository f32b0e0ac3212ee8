#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "ncs/ncpoly.hpp"

namespace ncs {

// Shuffle-side PBW basis P_w and its dual S_w (any alphabet; for Y these are
// the phi = 0 bases). P_l is the standard bracketing of a Lyndon word.
NCPoly build_P(const Word& w);
NCPoly build_S(const Word& w);

// Phi-shuffle bases over Y: Pi_w is the image of P_w under y_k -> pi1(y_k),
// Sigma_w solves <Sigma_u, Pi_v> = delta_uv on each graded piece.
NCPoly build_Pi(const Word& w, const PhiTable& phi);
NCPoly build_Sigma(const Word& w, const PhiTable& phi);

// Memoized basis elements, shared across threads. Keyed by alphabet and phi.
class BasisCache {
 public:
  static BasisCache& global();

  NCPoly P(const Word& w);
  NCPoly S(const Word& w);
  NCPoly Pi(const Word& w, const PhiTable& phi);
  NCPoly Sigma(const Word& w, const PhiTable& phi);
  void clear();

 private:
  struct Entry {
    std::unordered_map<Word, NCPoly, WordHash> p, s, pi, sigma;
  };
  Entry& entry(const Alphabet& a, const std::string& phi_key);

  std::mutex mu_;
  std::unordered_map<std::string, std::unique_ptr<Entry>> entries_;
};

struct CheckReport {
  bool ok = true;
  // First discrepancy found, empty when ok.
  std::string detail;
};

// <S_u, P_v> = delta_uv for X (or phi = 0) and <Sigma_u, Pi_v> = delta_uv for Y,
// over all words of grading <= n.
CheckReport duality_check(const Alphabet& a, int n, const PhiTable& phi = PhiTable::zero());

// Truncated at grading n:
//   sum_w w (x) w  =  sum_w S_w (x) P_w  =  prod_{l Lyndon, decreasing} exp(S_l (x) P_l)
// (Sigma/Pi and the phi-shuffle on the left factor for Y). `increasing` flips the
// product order; it exists so tests can see the check fail.
CheckReport diagonal_factorization_check(const Alphabet& a, int n, const PhiTable& phi = PhiTable::zero(),
                                         bool increasing = false);

}  // namespace ncs
