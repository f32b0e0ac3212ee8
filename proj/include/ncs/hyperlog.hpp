#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ncs/ncpoly.hpp"
#include "ncs/rational_series.hpp"

namespace ncs {

using cplx = std::complex<double>;

// A complex number with an absolute error estimate.
struct ComplexVal {
  cplx value{};
  double err = 0;

  ComplexVal& operator+=(const ComplexVal& o) {
    value += o.value;
    err += o.err;
    return *this;
  }
  friend ComplexVal operator+(ComplexVal a, const ComplexVal& b) { return a += b; }
  friend bool operator==(const ComplexVal&, const ComplexVal&) = default;
};

// Singularities s_1..s_m (s_0 = 0 is implicit) with rho_i = 1/s_i. Letter x_i
// of X = {x_0..x_m} belongs to s_i, and maps to the Y color i mod m.
class SingularitySet {
 public:
  explicit SingularitySet(std::vector<cplx> points, bool unit_modulus = false);
  // O_m: rho_i = exp(2 pi i k / m), so x_i carries the exact color i mod m.
  static SingularitySet roots_of_unity(int m);

  int size() const { return static_cast<int>(s_.size()); }
  // 1 <= i <= size()
  cplx s(int i) const;
  cplx rho(int i) const;
  // rho of the Y color c (color 0 stands for x_m).
  cplx rho_of_color(int c) const;
  int index_of_color(int c) const { return c == 0 ? size() : c; }
  int color_of_index(int i) const { return i % size(); }
  bool is_roots_of_unity() const { return roots_; }

  Alphabet x_alphabet() const { return Alphabet::x(size() + 1); }
  Alphabet y_alphabet() const { return Alphabet::y(size()); }
  double min_modulus() const;

 private:
  std::vector<cplx> s_;
  bool roots_ = false;
};

// Forms w_0 = dz/z and w_i = rho_i dz / (1 - rho_i z) = dz / (s_i - z).
struct FormFamily {
  SingularitySet sigma;
  cplx u(int i, double z) const;
};

// x_0^{s_1-1} x_{i_1} ... x_0^{s_r-1} x_{i_r}  <->  y_{s_1, c(i_1)} ... y_{s_r, c(i_r)}
Word pi_Y(const Word& w, const SingularitySet& sigma);
Word pi_X(const Word& w, const SingularitySet& sigma);

// H_w(n) over a (colored) Y word, rho taken from the colors.
ComplexVal harmonic_sum(const Word& w, long n, const SingularitySet& sigma);
// H_w(k) for k = 0..n in one pass.
std::vector<cplx> harmonic_sum_table(const Word& w, long n, const SingularitySet& sigma);
// Exact value; colors must stand for rho = +1 or -1 (m <= 2).
Rational harmonic_sum_exact(const Word& w, long n);

// Li_w(z) for |z| < 1. nmax = 0 picks the cutoff from the tail bound.
ComplexVal polylog(const Word& w, cplx z, const SingularitySet& sigma, long nmax = 0);

struct Residual {
  double residual = 0;
  // Error budget of the two sides being compared.
  double bound = 0;
};
// |(1 - z)^{-1} Li_w(z) - sum_{n <= depth} H_{pi_Y w}(n) z^n|
Residual generating_relation_check(const Word& w, cplx z, long depth, const SingularitySet& sigma);

// H_{pi_Y w}(nterms) as an approximation of the limit, with a first-order tail estimate.
// Accepts an X word (pi_Y applied) or a Y word.
ComplexVal polyzeta(const Word& w, long nterms, const SingularitySet& sigma);

struct QuadConfig {
  int order = 16;
  int initial_panels = 2;
  int max_panels = 1 << 12;
  double tol = 1e-12;
};

// Panel grid on [z0, z] with per-panel Gauss-Legendre nodes and the spectral
// integration matrix mapping node values to running integrals.
struct ChenGrid {
  double z0 = 0, z = 0;
  int order = 0, panels = 0;
  std::vector<double> nodes;         // panels * order absolute abscissae
  std::vector<double> weights;       // reference weights on [-1, 1]
  std::vector<double> integration;   // order x order, row-major, reference interval
  double half_width = 0;

  static ChenGrid make(double z0, double z, int order, int panels);
  std::size_t size() const { return nodes.size(); }
};

// alpha_{z0}^{z}(w) for every X word of length <= n.
TruncatedSeries<ComplexVal> chen_series(const FormFamily& forms, double z0, double z, int n,
                                        const QuadConfig& quad = {});

// sum_{|w| <= n} nu mu(w) eta alpha(w); err adds the last layer's magnitude.
ComplexVal system_output(const LinRep& r, const FormFamily& forms, double z0, double z, int n,
                         const QuadConfig& quad = {});

struct HypergeometricSystem {
  LinRep rep;
  FormFamily forms;
};
// mu(x_0) = -[0 0; t0 t1, t2], mu(x_1) = -[0 1; 0, t2 - t0 - t1], nu = (1, 0).
// eta defaults to (1, 0)^t; the first state then solves the Gauss equation.
HypergeometricSystem hypergeometric_system(const Rational& t0, const Rational& t1, const Rational& t2,
                                           std::optional<QMatrix> eta = std::nullopt);
// 2F1(a, b; c; z) and its derivative for |z| < 1.
std::pair<double, double> gauss_2f1(double a, double b, double c, double z);
// Initial state (y, -(1 - z0) y') for y = 2F1 at z0, as exact rationals of the doubles.
QMatrix hypergeometric_initial_state(double t0, double t1, double t2, double z0);

struct ColoredAlphabets {
  Alphabet x;
  Alphabet y;
  SingularitySet sigma;
};
ColoredAlphabets colored_alphabets(int m);

// Numeric rank of [H_w(n)]_{n = 1..samples, w in words}.
std::size_t linear_independence_rank(const std::vector<Word>& words, long samples, const SingularitySet& sigma);

}  // namespace ncs
