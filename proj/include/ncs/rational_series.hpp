#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncs/hopf_bases.hpp"
#include "ncs/matrix.hpp"
#include "ncs/ncpoly.hpp"

namespace ncs {

// Linear representation (nu, mu, eta): <S, w> = nu mu(w) eta with nu a 1xn row,
// eta an nx1 column. Over X every letter carries a matrix; over Y the letters
// of weight <= max_weight do.
class LinRep {
 public:
  LinRep(Alphabet alphabet, QMatrix nu, std::map<Letter, QMatrix> mu, QMatrix eta, int max_weight = 0);

  // Rank-n representation with all entries zero.
  static LinRep zero(const Alphabet& a, std::size_t n, int max_weight = 0);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t rank() const { return nu_.cols(); }
  // Largest letter weight available (1 for X).
  int max_weight() const { return max_weight_; }
  const QMatrix& nu() const { return nu_; }
  const QMatrix& eta() const { return eta_; }
  const std::map<Letter, QMatrix>& mu() const { return mu_; }
  const QMatrix& mu(const Letter& l) const;
  std::vector<Letter> letters() const;

  // mu extended to words and (linearly) to polynomials.
  QMatrix mu_word(const Word& w) const;
  QMatrix mu_poly(const NCPoly& p) const;

  friend bool operator==(const LinRep&, const LinRep&) = default;

 private:
  Alphabet alphabet_;
  QMatrix nu_;
  std::map<Letter, QMatrix> mu_;
  QMatrix eta_;
  int max_weight_;
};

Rational coeff(const LinRep& r, const Word& w);
// All coefficients of grading <= n, sharing prefix products.
TruncSeries eval_truncated(const LinRep& r, int n);

// Prefix-tree realization of a polynomial.
LinRep rep_of_poly(const NCPoly& p, int max_weight = 0);

// <S <| P, w> = <S, P w>  and  <P |> S, w> = <S, w P>.
LinRep left_shift(const LinRep& r, const NCPoly& p);
LinRep right_shift(const LinRep& r, const NCPoly& p);

LinRep rat_sum(const LinRep& a, const LinRep& b);
LinRep rat_conc(const LinRep& a, const LinRep& b);
// Requires <R, 1> = 0.
LinRep rat_star(const LinRep& r);
LinRep rat_shuffle(const LinRep& a, const LinRep& b);
LinRep rat_phi_shuffle(const LinRep& a, const LinRep& b, const PhiTable& phi);

// Reachable part, then observable part; the result has minimal rank.
LinRep minimize(const LinRep& r);

// Pairs (G_i, D_i) = ((nu, mu, e_i), (e_i^t, mu, eta)), so <S, uv> = sum_i <G_i, u><D_i, v>.
std::vector<std::pair<LinRep, LinRep>> delta_conc_decompose(const LinRep& r);

// Tested straight from the coproduct of each word, not through the product.
bool is_grouplike(const TruncSeries& s, Law law, int n, const PhiTable& phi = PhiTable::zero());
bool is_primitive(const TruncSeries& s, Law law, int n, const PhiTable& phi = PhiTable::zero());

// Concatenation log / exp at the series' own truncation.
TruncSeries log_trunc(const TruncSeries& s);
TruncSeries exp_trunc(const TruncSeries& s);

struct LieDiagnostics {
  std::vector<QMatrix> basis;
  // Dimensions of L^1 = L, L^{k+1} = [L, L^k] (resp. L^(1) = L, L^(k+1) = [L^(k), L^(k)])
  // until the sequence stabilizes.
  std::vector<std::size_t> lower_central;
  std::vector<std::size_t> derived;
  bool nilpotent = false;
  bool solvable = false;
  // Least k >= 1 with L^{k+1} = 0 (resp. L^(k+1) = 0); 0 when the flag is false.
  int nilpotency_step = 0;
  int solvability_step = 0;
};
LieDiagnostics lie_diagnostics(const LinRep& r);

// Matrix-valued series sum_{(w)<=n} mu(w) w against the decreasing product of
// exp(mu(P_l) S_l) (Pi/Sigma with the phi-shuffle over Y), and nu M eta against
// eval_truncated.
CheckReport mxstar_factorization_check(const LinRep& r, int n, const PhiTable& phi = PhiTable::stuffle());

struct TriangularDecomposition {
  TruncSeries reconstruction;
  // Least k with (D(X*) N(X))^k = 0 at this truncation.
  int nilpotency_order = 0;
  bool matches = false;
  std::string detail;
};
// mu(x) must be upper triangular for every letter.
TriangularDecomposition triangular_decompose(const LinRep& r, int n);

struct SweedlerVerdict {
  bool member = false;
  std::size_t rank = 0;
  std::string message;
  // Filled for LinRep input.
  std::vector<std::pair<LinRep, LinRep>> witnesses;
  // Filled when a bare series was realized.
  std::optional<LinRep> realization;
};
SweedlerVerdict sweedler_membership(const LinRep& r);
// Finite-window evidence only: searches a realization of rank <= r_max that
// reproduces every coefficient of s.
SweedlerVerdict sweedler_membership(const TruncSeries& s, std::size_t r_max);

}  // namespace ncs
