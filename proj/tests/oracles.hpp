#pragma once

// Slow, direct implementations used as references by the tests. Nothing here
// calls the library's product, coproduct, basis or series algorithms.

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "ncs/hyperlog.hpp"
#include "ncs/ncpoly.hpp"
#include "ncs/rational_series.hpp"

namespace oracle {

using namespace ncs;

// Lexicographic comparison read straight off Alphabet::less.
inline bool lex_less(const Word& a, const Word& b) {
  const Alphabet& al = a.alphabet();
  for (std::size_t i = 0; i < std::min(a.length(), b.length()); ++i) {
    if (al.less(a[i], b[i])) return true;
    if (al.less(b[i], a[i])) return false;
  }
  return a.length() < b.length();
}

inline bool lyndon_by_rotation(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.length(); ++k) {
    Word rot = w.subword(k) * w.subword(0, k);
    if (!lex_less(w, rot)) return false;
  }
  return true;
}

// Every word with letter weights summing to g, straight recursion.
inline void all_words(const Alphabet& a, int g, std::vector<Word>& out, Word prefix) {
  if (g == 0) {
    out.push_back(prefix);
    return;
  }
  for (const auto& l : a.letters_up_to(g))
    if (a.weight(l) <= g) all_words(a, g - a.weight(l), out, prefix.append(l));
}
inline std::vector<Word> words_upto(const Alphabet& a, int g) {
  std::vector<Word> out;
  for (int k = 0; k <= g; ++k) all_words(a, k, out, Word(a));
  return out;
}

// Shuffle by enumerating position subsets.
inline NCPoly shuffle(const Word& u, const Word& v) {
  const std::size_t n = u.length() + v.length();
  NCPoly out(u.alphabet());
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != u.length()) continue;
    std::vector<Letter> ls;
    std::size_t i = 0, j = 0;
    for (std::size_t p = 0; p < n; ++p) ls.push_back((mask >> p) & 1 ? u[i++] : v[j++]);
    out.add(Word(u.alphabet(), ls), 1);
  }
  return out;
}

// Quasi-shuffle through pairs of increasing maps u -> [k], v -> [k] jointly onto [k].
// A shared position merges the two letters with coefficient gamma(i, j).
inline NCPoly quasi_shuffle(const Word& u, const Word& v, const std::function<Rational(int, int)>& gamma) {
  const Alphabet& a = u.alphabet();
  const int m = a.color_order();
  const std::size_t p = u.length(), q = v.length();
  NCPoly out(a);
  for (std::size_t k = std::max(p, q); k <= p + q; ++k) {
    for (unsigned long A = 0; A < (1UL << k); ++A) {
      if (static_cast<std::size_t>(__builtin_popcountl(A)) != p) continue;
      for (unsigned long B = 0; B < (1UL << k); ++B) {
        if (static_cast<std::size_t>(__builtin_popcountl(B)) != q) continue;
        if ((A | B) != (1UL << k) - 1) continue;
        std::vector<Letter> ls;
        Rational c = 1;
        std::size_t i = 0, j = 0;
        for (std::size_t pos = 0; pos < k; ++pos) {
          bool inA = (A >> pos) & 1, inB = (B >> pos) & 1;
          if (inA && inB) {
            c *= gamma(u[i].index, v[j].index);
            ls.push_back({u[i].index + v[j].index, (u[i].color + v[j].color) % m});
            ++i;
            ++j;
          } else if (inA) {
            ls.push_back(u[i++]);
          } else {
            ls.push_back(v[j++]);
          }
        }
        if (sgn(c) != 0) out.add(Word(a, ls), c);
      }
    }
  }
  return out;
}

inline NCPoly poly_product(const NCPoly& p, const NCPoly& q, const std::function<NCPoly(const Word&, const Word&)>& f) {
  NCPoly out(p.alphabet());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) {
      const auto prod = f(u, v);
      for (const auto& [w, c] : prod.terms()) out.add(w, a * b * c);
    }
  return out;
}

// Eulerian projector from its defining sum over tuples of nonempty words.
inline NCPoly pi1(const Word& w, const std::function<Rational(int, int)>& gamma) {
  const Alphabet& a = w.alphabet();
  const int g = w.grading();
  NCPoly out(a);
  if (g == 0) return out;
  // tuples (u_1..u_k) of nonempty words with total grading g; product evaluated left to right
  std::function<void(int, std::vector<Word>&)> rec = [&](int left, std::vector<Word>& tuple) {
    if (left == 0) {
      const int k = static_cast<int>(tuple.size());
      NCPoly prod = NCPoly::word(tuple[0]);
      Word cat = tuple[0];
      for (int i = 1; i < k; ++i) {
        prod = poly_product(prod, NCPoly::word(tuple[i]),
                            [&](const Word& x, const Word& y) { return quasi_shuffle(x, y, gamma); });
        cat = cat * tuple[i];
      }
      Rational c = prod.coeff(w);
      if (sgn(c) != 0) out.add(cat, c * Rational(k % 2 ? 1 : -1) / k);
      return;
    }
    for (int h = 1; h <= left; ++h) {
      std::vector<Word> ws;
      all_words(a, h, ws, Word(a));
      for (const auto& u : ws) {
        tuple.push_back(u);
        rec(left - h, tuple);
        tuple.pop_back();
      }
    }
  };
  std::vector<Word> tuple;
  rec(g, tuple);
  return out;
}

// Word coefficient by explicit matrix products.
inline Rational coeff(const LinRep& r, const Word& w) {
  if (r.rank() == 0) return 0;
  QMatrix v = r.nu();
  for (const auto& l : w) v = v * r.mu(l);
  return (v * r.eta())(0, 0);
}

// Rank by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Rank of [<S, uv>] for |u|, |v| <= half.
inline std::size_t hankel_rank(const std::function<Rational(const Word&)>& s, const Alphabet& a, int half) {
  auto ws = words_upto(a, half);
  std::vector<std::vector<Rational>> h;
  for (const auto& u : ws) {
    std::vector<Rational> row;
    for (const auto& v : ws) row.push_back(s(u * v));
    h.push_back(std::move(row));
  }
  return rank(std::move(h));
}

// Same table for a representation, built from prefix rows nu mu(u) and suffix columns mu(v) eta.
inline std::size_t hankel_rank(const LinRep& r, int half) {
  auto ws = words_upto(r.alphabet(), half);
  std::vector<QMatrix> rows, cols;
  for (const auto& u : ws) {
    QMatrix v = r.nu(), c = r.eta();
    for (const auto& l : u) v = v * r.mu(l);
    for (std::size_t i = u.length(); i-- > 0;) c = r.mu(u[i]) * c;
    rows.push_back(v);
    cols.push_back(c);
  }
  std::vector<std::vector<Rational>> h;
  for (const auto& a : rows) {
    std::vector<Rational> row;
    for (const auto& b : cols) row.push_back((a * b)(0, 0));
    h.push_back(std::move(row));
  }
  return rank(std::move(h));
}

// Random rational in {-2..2} / {1,2}, zero with some probability.
inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-2, 2), den(1, 2);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational(rng);
  return m;
}

inline LinRep random_rep(std::mt19937& rng, const Alphabet& a, std::size_t n, int max_weight = 0) {
  std::map<Letter, QMatrix> mu;
  const int mw = a.is_x() ? 1 : max_weight;
  for (const auto& l : a.letters_up_to(mw)) mu.emplace(l, random_matrix(rng, n, n));
  return LinRep(a, random_matrix(rng, 1, n), std::move(mu), random_matrix(rng, n, 1), a.is_x() ? 0 : max_weight);
}

inline LinRep random_upper_triangular_rep(std::mt19937& rng, const Alphabet& a, std::size_t n) {
  LinRep r = random_rep(rng, a, n);
  std::map<Letter, QMatrix> mu = r.mu();
  for (auto& [l, m] : mu)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) m(i, j) = 0;
  return LinRep(a, r.nu(), std::move(mu), r.eta());
}

// Gauss equation z(1-z) y'' + (c - (a+b+1) z) y' - ab y = 0, stepped with local Taylor series.
inline double gauss_ode(double a, double b, double c, double z0, double y0, double dy0, double z1, int steps = 40,
                        int terms = 60) {
  double y = y0, dy = dy0, at = z0;
  const double h = (z1 - z0) / steps;
  for (int s = 0; s < steps; ++s) {
    // z = at + t: P2 = A0 + A1 t + A2 t^2, P1 = B0 + B1 t, P0 = C0
    double A0 = at * (1 - at), A1 = 1 - 2 * at, A2 = -1;
    double B0 = c - (a + b + 1) * at, B1 = -(a + b + 1), C0 = -a * b;
    std::vector<double> co(static_cast<std::size_t>(terms + 2), 0);
    co[0] = y;
    co[1] = dy;
    for (int n = 0; n + 2 < terms + 2; ++n) {
      double rhs = A1 * (n + 1) * n * co[n + 1] + A2 * n * (n - 1) * co[n] + B0 * (n + 1) * co[n + 1] +
                   B1 * n * co[n] + C0 * co[n];
      co[n + 2] = -rhs / (A0 * (n + 2) * (n + 1));
    }
    double ny = 0, ndy = 0, tp = 1;
    for (int n = 0; n < terms + 2; ++n) {
      ny += co[n] * tp;
      if (n + 1 < terms + 2) ndy += (n + 1) * co[n + 1] * tp;
      tp *= h;
    }
    y = ny;
    dy = ndy;
    at += h;
  }
  return y;
}

}  // namespace oracle
