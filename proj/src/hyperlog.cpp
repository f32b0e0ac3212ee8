#include "ncs/hyperlog.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ncs/kernels.hpp"

namespace ncs {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// exp(2 pi i c / m), exact at the quarter points.
cplx unit_root(long c, int m) {
  c %= m;
  if (c < 0) c += m;
  if (c == 0) return {1, 0};
  if (2 * c == m) return {-1, 0};
  if (4 * c == m) return {0, 1};
  if (4 * c == 3 * m) return {0, -1};
  return std::polar(1.0, 2 * kPi * static_cast<double>(c) / m);
}

void require_x_for(const Word& w, const SingularitySet& sigma) {
  if (!(w.alphabet() == sigma.x_alphabet()))
    throw ValidationError("word " + w.display() + " is not over " + sigma.x_alphabet().spec() +
                          " (one letter per singularity plus x0)");
}

void require_y_for(const Word& w, const SingularitySet& sigma) {
  if (!(w.alphabet() == sigma.y_alphabet()))
    throw ValidationError("word " + w.display() + " is not over " + sigma.y_alphabet().spec());
}

}  // namespace

// ---------------------------------------------------------------------------
// Singularities and forms

SingularitySet::SingularitySet(std::vector<cplx> points, bool unit_modulus) : s_(std::move(points)) {
  if (s_.empty()) throw ValidationError("singularity set needs at least one nonzero point");
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (std::abs(s_[i]) < 1e-300) throw ValidationError("s_0 = 0 is implicit; listed singularities must be nonzero");
    if (unit_modulus && std::abs(std::abs(s_[i]) - 1) > 1e-12)
      throw ValidationError("singularity " + std::to_string(i + 1) + " is not of unit modulus");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(s_[i] - s_[j]) < 1e-14) throw ValidationError("singularities must be pairwise distinct");
  }
}

SingularitySet SingularitySet::roots_of_unity(int m) {
  if (m < 1) throw ValidationError("roots of unity need m >= 1");
  std::vector<cplx> pts;
  for (int i = 1; i <= m; ++i) pts.push_back(unit_root(-i, m));
  SingularitySet s(std::move(pts), true);
  s.roots_ = true;
  return s;
}

cplx SingularitySet::s(int i) const {
  if (i < 1 || i > size()) throw ValidationError("unknown singularity index " + std::to_string(i));
  return s_[static_cast<std::size_t>(i - 1)];
}

cplx SingularitySet::rho(int i) const {
  if (roots_) {
    if (i < 1 || i > size()) throw ValidationError("unknown singularity index " + std::to_string(i));
    return unit_root(i, size());
  }
  return 1.0 / s(i);
}

cplx SingularitySet::rho_of_color(int c) const {
  if (c < 0 || c >= size()) throw ValidationError("color " + std::to_string(c) + " outside Z/" + std::to_string(size()));
  return rho(index_of_color(c));
}

double SingularitySet::min_modulus() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& p : s_) m = std::min(m, std::abs(p));
  return m;
}

cplx FormFamily::u(int i, double z) const {
  if (i == 0) return 1.0 / z;
  return 1.0 / (sigma.s(i) - z);
}

Word pi_Y(const Word& w, const SingularitySet& sigma) {
  require_x_for(w, sigma);
  if (!w.empty() && w.back().index == 0) throw ValidationError("pi_Y: word " + w.display() + " ends with x0");
  Alphabet y = sigma.y_alphabet();
  std::vector<Letter> out;
  int s = 1;
  for (const auto& l : w) {
    if (l.index == 0) {
      ++s;
      continue;
    }
    out.push_back({s, y.colored() ? sigma.color_of_index(l.index) : 0});
    s = 1;
  }
  return Word(y, std::move(out));
}

Word pi_X(const Word& w, const SingularitySet& sigma) {
  require_y_for(w, sigma);
  Alphabet x = sigma.x_alphabet();
  std::vector<Letter> out;
  for (const auto& l : w) {
    for (int k = 1; k < l.index; ++k) out.push_back({0, 0});
    out.push_back({sigma.index_of_color(l.color), 0});
  }
  return Word(x, std::move(out));
}

// ---------------------------------------------------------------------------
// Harmonic sums

namespace {

cplx rho_power(const SingularitySet& sigma, int color, long k) {
  if (sigma.is_roots_of_unity()) return unit_root(static_cast<long>(color) * (k % sigma.size()), sigma.size());
  return std::pow(sigma.rho_of_color(color), static_cast<double>(k));
}

// table[k] = H_w(k), k = 0..n, built from the last letter outwards.
std::vector<cplx> suffix_table(const Word& w, long n, const SingularitySet& sigma, std::size_t from = 0) {
  std::vector<cplx> cur(static_cast<std::size_t>(n + 1), cplx{1, 0}), next(cur.size());
  for (std::size_t pos = w.length(); pos-- > from;) {
    const Letter& l = w[pos];
    next[0] = 0;
    for (long k = 1; k <= n; ++k)
      next[k] = next[k - 1] + rho_power(sigma, l.color, k) * std::pow(static_cast<double>(k), -l.index) * cur[k - 1];
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace

std::vector<cplx> harmonic_sum_table(const Word& w, long n, const SingularitySet& sigma) {
  require_y_for(w, sigma);
  if (n < 0) throw ValidationError("harmonic sum needs n >= 0");
  return suffix_table(w, n, sigma);
}

ComplexVal harmonic_sum(const Word& w, long n, const SingularitySet& sigma) {
  auto t = harmonic_sum_table(w, n, sigma);
  cplx v = t.back();
  // Rounding: about one ulp per accumulated term and nesting level.
  double err = static_cast<double>(w.length()) * static_cast<double>(n) * kEps * std::max(1.0, std::abs(v));
  return {v, err};
}

Rational harmonic_sum_exact(const Word& w, long n) {
  const Alphabet& a = w.alphabet();
  if (!a.is_y() || a.color_order() > 2) throw ValidationError("exact harmonic sums need Y with at most 2 colors");
  if (n < 0) throw ValidationError("harmonic sum needs n >= 0");
  std::vector<Rational> cur(static_cast<std::size_t>(n + 1), Rational(1)), next(cur.size());
  for (std::size_t pos = w.length(); pos-- > 0;) {
    const Letter& l = w[pos];
    next[0] = 0;
    for (long k = 1; k <= n; ++k) {
      mpz_class kp;
      mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(l.index));
      Rational term = cur[k - 1] / Rational(kp);
      if (l.color == 1 && k % 2 == 1) term = -term;
      next[k] = next[k - 1] + term;
    }
    std::swap(cur, next);
  }
  return cur.back();
}

// ---------------------------------------------------------------------------
// Polylogarithms

namespace {

struct TailBound {
  double bound;
  bool finite;
};

// Bound on sum_{n > nmax} |rho_1 z|^n / n^s1 |H_v(n - 1)| with |H_v(k)| <= P^k (1 + ln k)^r.
TailBound polylog_tail(double q, int s1, int r, long nmax) {
  const double n1 = static_cast<double>(nmax + 1);
  const double lg = 1 + std::log(n1);
  double ratio = q * std::pow(1 + 1 / (n1 * lg), r);
  if (ratio >= 1) return {std::numeric_limits<double>::infinity(), false};
  double first = std::pow(q, n1) * std::pow(lg, r) / std::pow(n1, s1);
  return {first / (1 - ratio), true};
}

ComplexVal polylog_convergent(const Word& w, cplx z, const SingularitySet& sigma, long nmax) {
  Word y = pi_Y(w, sigma);
  const Letter head = y[0];
  const cplx rho1 = sigma.rho_of_color(head.color);
  double growth = 1;
  for (std::size_t i = 1; i < y.length(); ++i) growth *= std::max(1.0, std::abs(sigma.rho_of_color(y[i].color)));
  const double q = std::abs(rho1 * z) * growth;
  if (q >= 1) throw ValidationError("polylog series diverges: |rho_1 z| * growth = " + std::to_string(q) + " >= 1");
  const int r = static_cast<int>(y.length()) - 1;

  TailBound tail{0, true};
  if (nmax <= 0) {
    nmax = 32;
    while (true) {
      tail = polylog_tail(q, head.index, r, nmax);
      if (tail.finite && tail.bound < 1e-17) break;
      if (nmax >= (1L << 24)) break;
      nmax *= 2;
    }
  } else {
    tail = polylog_tail(q, head.index, r, nmax);
  }

  auto h = suffix_table(y, nmax, sigma, 1);
  cplx sum{}, zp{1, 0};
  double magnitude = 0;
  for (long n = 1; n <= nmax; ++n) {
    zp *= z;
    cplx term = rho_power(sigma, head.color, n) * zp * std::pow(static_cast<double>(n), -head.index) * h[n - 1];
    sum += term;
    magnitude += std::abs(term);
  }
  double err = tail.bound + 4 * kEps * magnitude * static_cast<double>(y.length() + 1);
  return {sum, err};
}

// Li_{a x0^k} from the shuffle relation with Li_{x0} = log z.
ComplexVal polylog_rec(const Word& w, cplx z, const SingularitySet& sigma, long nmax, std::map<Word, ComplexVal>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  ComplexVal out;
  const std::size_t len = w.length();
  std::size_t k = 0;
  while (k < len && w[len - 1 - k].index == 0) ++k;
  if (len == 0) {
    out = {{1, 0}, 0};
  } else if (k == len) {
    if (std::abs(z) == 0) throw ValidationError("log(z) undefined at z = 0");
    cplx lz = std::log(z);
    out = {std::pow(lz, static_cast<double>(k)) / std::tgamma(static_cast<double>(k) + 1), 4 * kEps * std::pow(std::abs(lz), static_cast<double>(k))};
  } else if (k == 0) {
    out = polylog_convergent(w, z, sigma, nmax);
  } else {
    if (std::abs(z) == 0) throw ValidationError("log(z) undefined at z = 0");
    Word a = w.subword(0, len - k);
    Word tail_x0 = w.subword(len - k + 1);  // x0^{k-1}
    cplx lz = std::log(z);
    ComplexVal base = polylog_rec(a * tail_x0, z, sigma, nmax, memo);
    cplx v = lz * base.value;
    double err = std::abs(lz) * base.err;
    for (std::size_t pos = 0; pos < a.length(); ++pos) {
      Word ins = a.subword(0, pos).append({0, 0}) * a.subword(pos);
      ComplexVal c = polylog_rec(ins * tail_x0, z, sigma, nmax, memo);
      v -= c.value;
      err += c.err;
    }
    out = {v / static_cast<double>(k), err / static_cast<double>(k)};
  }
  memo.emplace(w, out);
  return out;
}

}  // namespace

ComplexVal polylog(const Word& w, cplx z, const SingularitySet& sigma, long nmax) {
  require_x_for(w, sigma);
  const bool pure_x0 = std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.index == 0; });
  if (!pure_x0 && std::abs(z) >= 1)
    throw ValidationError("polylog needs |z| < 1 (boundary values go through harmonic-sum limits)");
  std::map<Word, ComplexVal> memo;
  return polylog_rec(w, z, sigma, nmax, memo);
}

Residual generating_relation_check(const Word& w, cplx z, long depth, const SingularitySet& sigma) {
  if (std::abs(z) >= 1) throw ValidationError("generating relation needs |z| < 1");
  if (depth < 0) throw ValidationError("depth must be >= 0");
  Word y = pi_Y(w, sigma);
  ComplexVal li = polylog(w, z, sigma);
  cplx lhs = li.value / (1.0 - z);
  auto h = suffix_table(y, depth, sigma);
  cplx rhs{}, zp{1, 0};
  double hmax = 0, magnitude = 0;
  for (long n = 0; n <= depth; ++n) {
    rhs += h[n] * zp;
    magnitude += std::abs(h[n] * zp);
    hmax = std::max(hmax, std::abs(h[n]));
    zp *= z;
  }
  // |H(n)| grows at most polynomially here; bound the tail by the largest seen value
  // times a doubled geometric tail.
  double az = std::abs(z);
  double tail = 2 * (hmax + 1) * std::pow(az, static_cast<double>(depth + 1)) * (depth + 2) / (1 - az);
  double bound = li.err / std::abs(1.0 - z) + tail + 8 * kEps * magnitude * static_cast<double>(y.length() + 1);
  return {std::abs(lhs - rhs), bound};
}

ComplexVal polyzeta(const Word& w, long nterms, const SingularitySet& sigma) {
  if (nterms < 1) throw ValidationError("polyzeta needs nterms >= 1");
  Word y = w.alphabet().is_x() ? pi_Y(w, sigma) : w;
  require_y_for(y, sigma);
  if (y.empty()) return {{1, 0}, 0};
  const Letter head = y[0];
  const cplx rho1 = sigma.rho_of_color(head.color);
  const bool unit = std::abs(rho1 - 1.0) < 1e-14;
  if (head.index == 1 && unit) throw ValidationError("non-admissible word " + w.display() + ": leading pair is (1, 1)");
  for (std::size_t i = 0; i < y.length(); ++i)
    if (std::abs(sigma.rho_of_color(y[i].color)) > 1 + 1e-12)
      throw ValidationError("polyzeta needs |rho| <= 1 for every letter");
  auto full = suffix_table(y, nterms, sigma);
  auto rest = suffix_table(y, nterms, sigma, 1);
  const double n = static_cast<double>(nterms);
  const double hv = std::abs(rest.back());
  double tail = unit ? hv * std::pow(n, 1.0 - head.index) / (head.index - 1)
                     : 2 * hv / (std::abs(1.0 - rho1) * std::pow(n, head.index));
  return {full.back(), tail + static_cast<double>(y.length()) * n * kEps};
}

// ---------------------------------------------------------------------------
// Chen series

namespace {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int q) {
  std::vector<double> x(static_cast<std::size_t>(q)), w(x.size());
  for (int i = 0; i < q; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (q + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = t;
      for (int k = 2; k <= q; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = q * (t * p1 - p0) / (t * t - 1);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) {
        w[i] = 2 / ((1 - t * t) * dp * dp);
        break;
      }
      w[i] = 2 / ((1 - t * t) * dp * dp);
    }
    x[i] = t;
  }
  // Ascending abscissae.
  std::vector<int> idx(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return x[a] < x[b]; });
  std::vector<double> xs, ws;
  for (int i : idx) {
    xs.push_back(x[i]);
    ws.push_back(w[i]);
  }
  return {xs, ws};
}

// P_0..P_{q} at t.
std::vector<double> legendre_all(int q, double t) {
  std::vector<double> p(static_cast<std::size_t>(q + 1));
  p[0] = 1;
  if (q >= 1) p[1] = t;
  for (int k = 2; k <= q; ++k) p[k] = ((2 * k - 1) * t * p[k - 1] - (k - 1) * p[k - 2]) / k;
  return p;
}

}  // namespace

ChenGrid ChenGrid::make(double z0, double z, int order, int panels) {
  if (order < 2 || panels < 1) throw ValidationError("quadrature needs order >= 2 and at least one panel");
  ChenGrid g;
  g.z0 = z0;
  g.z = z;
  g.order = order;
  g.panels = panels;
  auto [x, w] = gauss_legendre(order);
  g.weights = w;
  g.half_width = (z - z0) / (2.0 * panels);
  for (int p = 0; p < panels; ++p) {
    double mid = z0 + (2 * p + 1) * g.half_width;
    for (double t : x) g.nodes.push_back(mid + g.half_width * t);
  }
  // S_jk = w_k sum_n (2n+1)/2 P_n(x_k) int_{-1}^{x_j} P_n.
  g.integration.assign(static_cast<std::size_t>(order) * order, 0);
  std::vector<std::vector<double>> pk(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) pk[k] = legendre_all(order, x[k]);
  for (int j = 0; j < order; ++j) {
    auto pj = legendre_all(order, x[j]);
    for (int n = 0; n < order; ++n) {
      double integral = n == 0 ? x[j] + 1 : (pj[n + 1] - pj[n - 1]) / (2 * n + 1);
      for (int k = 0; k < order; ++k)
        g.integration[static_cast<std::size_t>(j) * order + k] += w[k] * (2 * n + 1) / 2.0 * pk[k][n] * integral;
    }
  }
  return g;
}

namespace {

void check_path(const FormFamily& forms, double z0, double z) {
  if (!(z0 > 0)) throw ValidationError("Chen series needs z0 > 0 (u_0 = 1/z is singular at 0)");
  if (!(z > z0)) throw ValidationError("Chen series needs z > z0");
  if (!(z < forms.sigma.min_modulus())) throw ValidationError("path reaches a singularity: need z < min |s_i|");
}

// Node values (plus the endpoint value) of every word of length <= n on one grid.
std::map<Word, kernels::NodeValues, GradedLess> chen_values(const FormFamily& forms, const ChenGrid& g, int n,
                                                             bool parallel) {
  Alphabet x = forms.sigma.x_alphabet();
  const int letters = x.size();
  std::vector<kernels::NodeValues> u(static_cast<std::size_t>(letters));
  for (int i = 0; i < letters; ++i)
    for (double t : g.nodes) u[i].push_back(forms.u(i, t));
  std::map<Word, kernels::NodeValues, GradedLess> vals;
  vals.emplace(Word(x), kernels::NodeValues(g.size() + 1, cplx{1, 0}));
  std::vector<Word> layer{Word(x)};
  for (int len = 1; len <= n; ++len) {
    std::vector<Word> next;
    std::vector<int> ls;
    std::vector<const kernels::NodeValues*> src;
    for (const auto& v : layer)
      for (int i = 0; i < letters; ++i) {
        next.push_back(v.prepend({i, 0}));
        ls.push_back(i);
        src.push_back(&vals.at(v));
      }
    std::vector<kernels::NodeValues> out;
    if (parallel)
      kernels::chen_layer_parallel(g, u, ls, src, out);
    else
      kernels::chen_layer_serial(g, u, ls, src, out);
    for (std::size_t t = 0; t < next.size(); ++t) vals.emplace(next[t], std::move(out[t]));
    layer = std::move(next);
  }
  return vals;
}

}  // namespace

TruncatedSeries<ComplexVal> chen_series(const FormFamily& forms, double z0, double z, int n, const QuadConfig& quad) {
  check_path(forms, z0, z);
  if (n < 0) throw ValidationError("truncation bound must be >= 0");
  Alphabet x = forms.sigma.x_alphabet();
  // Panel doubling driven by the letters alone.
  int panels = std::max(1, quad.initial_panels);
  auto letters_at = [&](int p) {
    auto v = chen_values(forms, ChenGrid::make(z0, z, quad.order, p), 1, true);
    std::vector<cplx> out;
    for (int i = 0; i < x.size(); ++i) out.push_back(v.at(Word::letter(x, {i, 0})).back());
    return out;
  };
  auto coarse = letters_at(panels);
  while (true) {
    auto fine = letters_at(2 * panels);
    double diff = 0;
    for (std::size_t i = 0; i < fine.size(); ++i) diff = std::max(diff, std::abs(fine[i] - coarse[i]));
    panels *= 2;
    if (diff < quad.tol || panels >= quad.max_panels) break;
    coarse = std::move(fine);
  }
  auto fine = chen_values(forms, ChenGrid::make(z0, z, quad.order, panels), n, true);
  auto rough = chen_values(forms, ChenGrid::make(z0, z, quad.order, panels / 2 > 0 ? panels / 2 : 1), n, true);
  TruncatedSeries<ComplexVal> s(x, n);
  for (const auto& [w, v] : fine) {
    cplx val = v.back();
    double err = std::abs(val - rough.at(w).back()) + 16 * kEps * std::max(1.0, std::abs(val));
    s.set(w, {val, w.empty() ? 0.0 : err});
  }
  return s;
}

ComplexVal system_output(const LinRep& r, const FormFamily& forms, double z0, double z, int n,
                         const QuadConfig& quad) {
  if (!(r.alphabet() == forms.sigma.x_alphabet()))
    throw ValidationError("representation alphabet does not match the forms (" + forms.sigma.x_alphabet().spec() + ")");
  auto alpha = chen_series(forms, z0, z, n, quad);
  auto coeffs = eval_truncated(r, n);
  ComplexVal out;
  cplx last{};
  for (const auto& [w, c] : coeffs.coeffs()) {
    if (sgn(c) == 0) continue;
    double cd = c.get_d();
    const ComplexVal& a = alpha.at(w);
    out.value += cd * a.value;
    out.err += std::abs(cd) * a.err;
    if (w.grading() == n) last += cd * a.value;
  }
  if (n > 0) out.err += std::abs(last);
  return out;
}

// ---------------------------------------------------------------------------
// Hypergeometric system

HypergeometricSystem hypergeometric_system(const Rational& t0, const Rational& t1, const Rational& t2,
                                           std::optional<QMatrix> eta) {
  Alphabet x = Alphabet::x(2);
  QMatrix m0 = QMatrix::from_rows({{0, 0}, {-(t0 * t1), -t2}});
  QMatrix m1 = QMatrix::from_rows({{0, -1}, {0, -(t2 - t0 - t1)}});
  QMatrix e = eta ? *eta : QMatrix::unit_column(2, 0);
  if (e.rows() != 2 || e.cols() != 1) throw ValidationError("hypergeometric initial state must be 2x1");
  LinRep rep(x, QMatrix::unit_row(2, 0), {{{0, 0}, m0}, {{1, 0}, m1}}, e);
  return {std::move(rep), FormFamily{SingularitySet({cplx{1, 0}})}};
}

std::pair<double, double> gauss_2f1(double a, double b, double c, double z) {
  if (std::abs(z) >= 1) throw ValidationError("2F1 series needs |z| < 1");
  double term = 1, sum = 1, dsum = 0;
  for (int n = 0; n < 100000; ++n) {
    double next = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z;
    // d/dz of next * z^0-normalized term: (n+1) next / z
    if (z != 0) dsum += (n + 1) * next / z;
    else if (n == 0) dsum += a * b / c;
    sum += next;
    term = next;
    if (std::abs(next) < 1e-18 * std::max(1.0, std::abs(sum)) && n > 4) break;
  }
  return {sum, dsum};
}

QMatrix hypergeometric_initial_state(double t0, double t1, double t2, double z0) {
  auto [y, dy] = gauss_2f1(t0, t1, t2, z0);
  QMatrix eta(2, 1);
  eta(0, 0) = Rational(y);
  eta(1, 0) = Rational(-(1 - z0) * dy);
  return eta;
}

ColoredAlphabets colored_alphabets(int m) {
  if (m < 1) throw ValidationError("colored alphabets need m >= 1");
  return {Alphabet::x(m + 1), Alphabet::y(m), SingularitySet::roots_of_unity(m)};
}

std::size_t linear_independence_rank(const std::vector<Word>& words, long samples, const SingularitySet& sigma) {
  if (words.empty() || samples <= 0) return 0;
  Eigen::MatrixXcd a(samples, static_cast<Eigen::Index>(words.size()));
  for (std::size_t j = 0; j < words.size(); ++j) {
    auto t = harmonic_sum_table(words[j], samples, sigma);
    for (long n = 1; n <= samples; ++n) a(n - 1, static_cast<Eigen::Index>(j)) = t[n];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * sv(0)) ++r;
  return r;
}

}  // namespace ncs
