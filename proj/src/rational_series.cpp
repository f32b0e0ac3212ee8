#include "ncs/rational_series.hpp"

#include <algorithm>
#include <deque>

namespace ncs {

namespace {

void require_same(const Alphabet& a, const Alphabet& b, const char* op) {
  if (!(a == b)) throw ValidationError(std::string("alphabet mismatch in ") + op);
}

std::vector<Rational> as_vector(const QMatrix& m) { return m.data(); }

QMatrix row_of(const std::vector<Rational>& v) { return QMatrix(1, v.size(), v); }
QMatrix column_of(const std::vector<Rational>& v) { return QMatrix(v.size(), 1, v); }

std::vector<Letter> expected_letters(const Alphabet& a, int max_weight) {
  if (a.is_x()) return a.letters_up_to(1);
  auto ls = a.letters_up_to(max_weight);
  std::sort(ls.begin(), ls.end());
  return ls;
}

}  // namespace

// ---------------------------------------------------------------------------
// LinRep

LinRep::LinRep(Alphabet alphabet, QMatrix nu, std::map<Letter, QMatrix> mu, QMatrix eta, int max_weight)
    : alphabet_(alphabet), nu_(std::move(nu)), mu_(std::move(mu)), eta_(std::move(eta)), max_weight_(max_weight) {
  if (alphabet_.is_x()) {
    max_weight_ = 1;
  } else if (max_weight_ <= 0) {
    for (const auto& [l, m] : mu_) max_weight_ = std::max(max_weight_, l.index);
  }
  const std::size_t n = nu_.cols();
  if (nu_.rows() != 1 && !(n == 0 && nu_.rows() == 0)) throw ValidationError("nu must be a row vector");
  if (eta_.rows() != n || (eta_.cols() != 1 && n != 0)) throw ValidationError("eta must be a column of size rank");
  if (n == 0) {
    nu_ = QMatrix(1, 0);
    eta_ = QMatrix(0, 1);
  }
  for (const auto& l : expected_letters(alphabet_, max_weight_)) {
    auto it = mu_.find(l);
    if (it == mu_.end()) {
      if (n == 0) {
        mu_.emplace(l, QMatrix(0, 0));
        continue;
      }
      throw ValidationError("no matrix for letter " + alphabet_.letter_name(l));
    }
  }
  for (const auto& [l, m] : mu_) {
    if (!alphabet_.contains(l)) throw ValidationError("matrix for a letter outside the alphabet");
    if (alphabet_.weight(l) > max_weight_) throw ValidationError("letter heavier than the declared weight bound");
    if (m.rows() != n || m.cols() != n)
      throw ValidationError("mu(" + alphabet_.letter_name(l) + ") must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
}

LinRep LinRep::zero(const Alphabet& a, std::size_t n, int max_weight) {
  std::map<Letter, QMatrix> mu;
  int mw = a.is_x() ? 1 : max_weight;
  for (const auto& l : expected_letters(a, mw)) mu.emplace(l, QMatrix(n, n));
  return LinRep(a, QMatrix(1, n), std::move(mu), QMatrix(n, 1), mw);
}

const QMatrix& LinRep::mu(const Letter& l) const {
  auto it = mu_.find(l);
  if (it == mu_.end())
    throw ValidationError("representation has no matrix for letter " + alphabet_.letter_name(l) +
                          " (weight bound " + std::to_string(max_weight_) + ")");
  return it->second;
}

std::vector<Letter> LinRep::letters() const {
  std::vector<Letter> out;
  for (const auto& [l, m] : mu_) out.push_back(l);
  return out;
}

QMatrix LinRep::mu_word(const Word& w) const {
  require_same(alphabet_, w.alphabet(), "mu");
  QMatrix m = QMatrix::identity(rank());
  for (const auto& l : w) m = m * mu(l);
  return m;
}

QMatrix LinRep::mu_poly(const NCPoly& p) const {
  QMatrix m(rank(), rank());
  for (const auto& [w, c] : p.terms()) m += c * mu_word(w);
  return m;
}

Rational coeff(const LinRep& r, const Word& w) {
  require_same(r.alphabet(), w.alphabet(), "coeff");
  if (r.rank() == 0) return 0;
  QMatrix v = r.nu();
  for (const auto& l : w) v = v * r.mu(l);
  return (v * r.eta())(0, 0);
}

LinRep rep_of_poly(const NCPoly& p, int max_weight) {
  const Alphabet& a = p.alphabet();
  if (a.is_y() && max_weight <= 0) max_weight = std::max(1, p.degree());
  // States are the prefixes of the support.
  std::map<Word, std::size_t, GradedLess> state;
  state.emplace(Word(a), 0);
  for (const auto& [w, c] : p.terms())
    for (std::size_t i = 1; i <= w.length(); ++i) state.try_emplace(w.subword(0, i), 0);
  std::size_t n = 0;
  for (auto& [w, idx] : state) idx = n++;
  std::map<Letter, QMatrix> mu;
  for (const auto& l : expected_letters(a, max_weight)) mu.emplace(l, QMatrix(n, n));
  QMatrix eta(n, 1);
  for (const auto& [w, idx] : state) {
    eta(idx, 0) = p.coeff(w);
    if (!w.empty()) {
      auto& m = mu.at(w.back());
      m(state.at(w.subword(0, w.length() - 1)), idx) = 1;
    }
  }
  return LinRep(a, QMatrix::unit_row(n, 0), std::move(mu), std::move(eta), max_weight);
}

LinRep left_shift(const LinRep& r, const NCPoly& p) {
  require_same(r.alphabet(), p.alphabet(), "left shift");
  return LinRep(r.alphabet(), r.nu() * r.mu_poly(p), r.mu(), r.eta(), r.max_weight());
}

LinRep right_shift(const LinRep& r, const NCPoly& p) {
  require_same(r.alphabet(), p.alphabet(), "right shift");
  return LinRep(r.alphabet(), r.nu(), r.mu(), r.mu_poly(p) * r.eta(), r.max_weight());
}

// ---------------------------------------------------------------------------
// Closure constructions

namespace {

int common_weight(const LinRep& a, const LinRep& b) { return std::min(a.max_weight(), b.max_weight()); }

QMatrix stack(const QMatrix& top, const QMatrix& bottom) {
  QMatrix m(top.rows() + bottom.rows(), top.cols());
  set_block(m, 0, 0, top);
  set_block(m, top.rows(), 0, bottom);
  return m;
}

QMatrix side_by_side(const QMatrix& left, const QMatrix& right) {
  QMatrix m(left.rows(), left.cols() + right.cols());
  set_block(m, 0, 0, left);
  set_block(m, 0, left.cols(), right);
  return m;
}

}  // namespace

LinRep rat_sum(const LinRep& a, const LinRep& b) {
  require_same(a.alphabet(), b.alphabet(), "sum");
  const int mw = common_weight(a, b);
  std::map<Letter, QMatrix> mu;
  for (const auto& l : expected_letters(a.alphabet(), mw)) mu.emplace(l, direct_sum(a.mu(l), b.mu(l)));
  return LinRep(a.alphabet(), side_by_side(a.nu(), b.nu()), std::move(mu), stack(a.eta(), b.eta()), mw);
}

// nu = (nu1, 0), mu(x) = [mu1(x), eta1 nu2 mu2(x); 0, mu2(x)], eta = (eta1 nu2 eta2; eta2).
LinRep rat_conc(const LinRep& a, const LinRep& b) {
  require_same(a.alphabet(), b.alphabet(), "conc");
  const int mw = common_weight(a, b);
  const std::size_t n1 = a.rank(), n2 = b.rank();
  QMatrix link = a.eta() * b.nu();  // n1 x n2
  std::map<Letter, QMatrix> mu;
  for (const auto& l : expected_letters(a.alphabet(), mw)) {
    QMatrix m = direct_sum(a.mu(l), b.mu(l));
    set_block(m, 0, n1, link * b.mu(l));
    mu.emplace(l, std::move(m));
  }
  QMatrix nu(1, n1 + n2);
  set_block(nu, 0, 0, a.nu());
  QMatrix eta = stack(link * b.eta(), b.eta());
  return LinRep(a.alphabet(), std::move(nu), std::move(mu), std::move(eta), mw);
}

// nu' = (0, 1), mu'(x) = [mu(x) + eta nu mu(x), 0; nu mu(x), 0], eta' = (eta; 1).
LinRep rat_star(const LinRep& r) {
  const std::size_t n = r.rank();
  if (n > 0 && sgn((r.nu() * r.eta())(0, 0)) != 0)
    throw ValidationError("star needs a proper series (nu eta = 0)");
  std::map<Letter, QMatrix> mu;
  QMatrix loop = r.eta() * r.nu();
  for (const auto& l : r.letters()) {
    QMatrix m(n + 1, n + 1);
    set_block(m, 0, 0, r.mu(l) + loop * r.mu(l));
    set_block(m, n, 0, r.nu() * r.mu(l));
    mu.emplace(l, std::move(m));
  }
  QMatrix eta(n + 1, 1);
  set_block(eta, 0, 0, r.eta());
  eta(n, 0) = 1;
  return LinRep(r.alphabet(), QMatrix::unit_row(n + 1, n), std::move(mu), std::move(eta), r.max_weight());
}

LinRep rat_shuffle(const LinRep& a, const LinRep& b) {
  require_same(a.alphabet(), b.alphabet(), "shuffle");
  const int mw = common_weight(a, b);
  QMatrix i1 = QMatrix::identity(a.rank()), i2 = QMatrix::identity(b.rank());
  std::map<Letter, QMatrix> mu;
  for (const auto& l : expected_letters(a.alphabet(), mw))
    mu.emplace(l, kron(a.mu(l), i2) + kron(i1, b.mu(l)));
  return LinRep(a.alphabet(), kron(a.nu(), b.nu()), std::move(mu), kron(a.eta(), b.eta()), mw);
}

LinRep rat_phi_shuffle(const LinRep& a, const LinRep& b, const PhiTable& phi) {
  require_same(a.alphabet(), b.alphabet(), "phi-shuffle");
  const Alphabet& al = a.alphabet();
  if (!al.is_y()) throw ValidationError("phi-shuffle needs a Y alphabet");
  const int mw = common_weight(a, b);
  const int m = al.color_order();
  QMatrix i1 = QMatrix::identity(a.rank()), i2 = QMatrix::identity(b.rank());
  std::map<Letter, QMatrix> mu;
  for (const auto& l : expected_letters(al, mw)) {
    QMatrix x = kron(a.mu(l), i2) + kron(i1, b.mu(l));
    for (int i = 1; i < l.index; ++i) {
      Rational g = phi.gamma(i, l.index - i);
      if (sgn(g) == 0) continue;
      for (int c1 = 0; c1 < m; ++c1) {
        int c2 = ((l.color - c1) % m + m) % m;
        x += g * kron(a.mu({i, c1}), b.mu({l.index - i, c2}));
      }
    }
    mu.emplace(l, std::move(x));
  }
  return LinRep(al, kron(a.nu(), b.nu()), std::move(mu), kron(a.eta(), b.eta()), mw);
}

// ---------------------------------------------------------------------------
// Minimization

namespace {

// Restricts r to the span of nu mu(w) (forward) or mu(w) eta (backward).
LinRep reduce_side(const LinRep& r, bool forward) {
  const std::size_t n = r.rank();
  const auto letters = r.letters();
  RowSpan span(n);
  std::deque<std::vector<Rational>> queue;
  auto push = [&](std::vector<Rational> v) {
    if (span.add(v)) queue.push_back(std::move(v));
  };
  push(as_vector(forward ? r.nu() : r.eta().transpose()));
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (const auto& l : letters) {
      if (forward)
        push(as_vector(row_of(v) * r.mu(l)));
      else
        push(as_vector((r.mu(l) * column_of(v)).transpose()));
    }
  }
  const auto& basis = span.basis();
  const std::size_t k = basis.size();
  auto coords = [&](const std::vector<Rational>& v) {
    auto c = span.coordinates(v);
    if (!c) throw ComputationError("minimize: vector escaped its invariant subspace");
    return *c;
  };
  std::map<Letter, QMatrix> mu;
  for (const auto& l : letters) {
    QMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      // forward: row i of the new matrix = coords of b_i mu(x); backward: column i = coords of mu(x) b_i.
      auto img = forward ? as_vector(row_of(basis[i]) * r.mu(l)) : as_vector((r.mu(l) * column_of(basis[i])).transpose());
      auto c = coords(img);
      for (std::size_t j = 0; j < k; ++j) (forward ? m(i, j) : m(j, i)) = c[j];
    }
    mu.emplace(l, std::move(m));
  }
  QMatrix nu(1, k), eta(k, 1);
  if (forward) {
    if (k > 0) {
      auto c = coords(as_vector(r.nu()));
      for (std::size_t j = 0; j < k; ++j) nu(0, j) = c[j];
    }
    for (std::size_t i = 0; i < k; ++i) eta(i, 0) = (row_of(basis[i]) * r.eta())(0, 0);
  } else {
    if (k > 0) {
      auto c = coords(as_vector(r.eta().transpose()));
      for (std::size_t j = 0; j < k; ++j) eta(j, 0) = c[j];
    }
    for (std::size_t i = 0; i < k; ++i) nu(0, i) = (r.nu() * column_of(basis[i]))(0, 0);
  }
  return LinRep(r.alphabet(), std::move(nu), std::move(mu), std::move(eta), r.max_weight());
}

}  // namespace

LinRep minimize(const LinRep& r) { return reduce_side(reduce_side(r, true), false); }

std::vector<std::pair<LinRep, LinRep>> delta_conc_decompose(const LinRep& r) {
  std::vector<std::pair<LinRep, LinRep>> out;
  const std::size_t n = r.rank();
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(LinRep(r.alphabet(), r.nu(), r.mu(), QMatrix::unit_column(n, i), r.max_weight()),
                     LinRep(r.alphabet(), QMatrix::unit_row(n, i), r.mu(), r.eta(), r.max_weight()));
  return out;
}

// ---------------------------------------------------------------------------
// Grouplike / primitive, log / exp

namespace {

template <class Rule>
bool check_coproduct(const TruncSeries& s, Law law, int n, const PhiTable& phi, Rule rule) {
  if (n > s.bound()) throw ValidationError("series known only up to grading " + std::to_string(s.bound()));
  const Alphabet& a = s.alphabet();
  if (law == Law::PhiShuffle && !a.is_y()) throw ValidationError("phi coproduct needs a Y alphabet");
  TensorPoly acc(a);
  for (const auto& [w, c] : s.coeffs()) {
    if (w.grading() > n || sgn(c) == 0) continue;
    for (const auto d = coproduct(law, w, phi); const auto& [k, e] : d.terms()) acc.add(k.first, k.second, c * e);
  }
  auto words = words_up_to(a, n);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.grading() + v.grading() > n) continue;
      if (acc.coeff(u, v) != rule(u, v)) return false;
    }
  return true;
}

TruncSeries conc_trunc(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r(a.alphabet(), a.bound());
  for (const auto& [w, c] : r.coeffs()) {
    (void)c;
    Rational sum = 0;
    for (std::size_t i = 0; i <= w.length(); ++i) sum += a.at(w.subword(0, i)) * b.at(w.subword(i));
    r.set(w, sum);
  }
  return r;
}

}  // namespace

bool is_grouplike(const TruncSeries& s, Law law, int n, const PhiTable& phi) {
  if (s.at(Word(s.alphabet())) != 1) return false;
  return check_coproduct(s, law, n, phi, [&](const Word& u, const Word& v) { return s.at(u) * s.at(v); });
}

bool is_primitive(const TruncSeries& s, Law law, int n, const PhiTable& phi) {
  return check_coproduct(s, law, n, phi, [&](const Word& u, const Word& v) {
    Rational r = 0;
    if (v.empty()) r += s.at(u);
    if (u.empty()) r += s.at(v);
    return r;
  });
}

TruncSeries log_trunc(const TruncSeries& s) {
  const Word one(s.alphabet());
  if (s.at(one) != 1) throw ValidationError("log needs constant term 1");
  TruncSeries t = s;
  t.set(one, 0);
  TruncSeries out(s.alphabet(), s.bound()), power = t;
  for (int k = 1; k <= s.bound(); ++k) {
    Rational f = Rational(k % 2 ? 1 : -1) / k;
    for (const auto& [w, c] : power.coeffs()) out.at(w) += f * c;
    power = conc_trunc(power, t);
  }
  return out;
}

TruncSeries exp_trunc(const TruncSeries& s) {
  const Word one(s.alphabet());
  if (s.at(one) != 0) throw ValidationError("exp needs constant term 0");
  TruncSeries out(s.alphabet(), s.bound()), power = s;
  out.set(one, 1);
  for (int k = 1; k <= s.bound(); ++k) {
    Rational f = 1 / factorial(k);
    for (const auto& [w, c] : power.coeffs()) out.at(w) += f * c;
    power = conc_trunc(power, s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lie diagnostics

namespace {

std::vector<QMatrix> bracket_span(const std::vector<QMatrix>& a, const std::vector<QMatrix>& b, std::size_t n) {
  RowSpan span(n * n);
  std::vector<QMatrix> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      QMatrix c = commutator(x, y);
      if (span.add(c.data())) out.push_back(std::move(c));
    }
  return out;
}

}  // namespace

LieDiagnostics lie_diagnostics(const LinRep& r) {
  const std::size_t n = r.rank();
  LieDiagnostics d;
  RowSpan span(n * n);
  for (const auto& [l, m] : r.mu())
    if (span.add(m.data())) d.basis.push_back(m);
  // Bracket closure: new elements are bracketed against everything found so far.
  for (std::size_t i = 0; i < d.basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      QMatrix c = commutator(d.basis[i], d.basis[j]);
      if (span.add(c.data())) d.basis.push_back(std::move(c));
    }

  std::vector<QMatrix> cur = d.basis;
  d.lower_central.push_back(cur.size());
  while (!cur.empty()) {
    auto next = bracket_span(d.basis, cur, n);
    if (next.size() == cur.size()) break;
    d.lower_central.push_back(next.size());
    cur = std::move(next);
  }
  d.nilpotent = cur.empty() || d.lower_central.back() == 0;
  if (d.nilpotent) d.nilpotency_step = std::max<int>(1, static_cast<int>(d.lower_central.size()) - 1);

  cur = d.basis;
  d.derived.push_back(cur.size());
  while (!cur.empty()) {
    auto next = bracket_span(cur, cur, n);
    if (next.size() == cur.size()) break;
    d.derived.push_back(next.size());
    cur = std::move(next);
  }
  d.solvable = cur.empty() || d.derived.back() == 0;
  if (d.solvable) d.solvability_step = std::max<int>(1, static_cast<int>(d.derived.size()) - 1);
  return d;
}

// ---------------------------------------------------------------------------
// Factorizations

namespace {

using MatSeries = std::map<Word, QMatrix, GradedLess>;

void add_to(MatSeries& s, const Word& w, const QMatrix& m) {
  auto [it, inserted] = s.try_emplace(w, m);
  if (!inserted) it->second += m;
}

}  // namespace

CheckReport mxstar_factorization_check(const LinRep& r, int n, const PhiTable& phi) {
  if (n < 1) throw ValidationError("mxstar check needs N >= 1");
  const Alphabet& a = r.alphabet();
  if (a.is_y() && r.max_weight() < n) throw ValidationError("representation weight bound below N");
  auto& cache = BasisCache::global();
  const bool pbw = a.is_x();
  const Law law = pbw ? Law::Shuffle : Law::PhiShuffle;
  const std::size_t k = r.rank();

  MatSeries lhs;
  for (const auto& w : words_up_to(a, n)) lhs.emplace(w, r.mu_word(w));

  // (A u)(B v) = AB (u * v), truncated at grading n.
  auto mul = [&](const MatSeries& x, const MatSeries& y) {
    MatSeries out;
    for (const auto& [u, a1] : x)
      for (const auto& [v, b1] : y) {
        if (u.grading() + v.grading() > n) continue;
        QMatrix ab = a1 * b1;
        if (ab.is_zero()) continue;
        for (const auto p = product(law, u, v, phi); const auto& [w, c] : p.terms()) add_to(out, w, c * ab);
      }
    return out;
  };

  auto lyn = lyndon_words(a, n);
  std::sort(lyn.begin(), lyn.end());
  std::reverse(lyn.begin(), lyn.end());
  MatSeries prod;
  prod.emplace(Word(a), QMatrix::identity(k));
  for (const auto& l : lyn) {
    QMatrix m = r.mu_poly(pbw ? cache.P(l) : cache.Pi(l, phi));
    NCPoly s = pbw ? cache.S(l) : cache.Sigma(l, phi);
    MatSeries t;
    for (const auto& [w, c] : s.terms()) add_to(t, w, c * m);
    MatSeries e, power;
    e.emplace(Word(a), QMatrix::identity(k));
    power.emplace(Word(a), QMatrix::identity(k));
    for (int j = 1; j * l.grading() <= n; ++j) {
      power = mul(power, t);
      for (const auto& [w, mm] : power) add_to(e, w, mm * (1 / factorial(j)));
    }
    prod = mul(prod, e);
  }

  for (const auto& [w, m] : lhs) {
    auto it = prod.find(w);
    QMatrix rhs = it == prod.end() ? QMatrix(k, k) : it->second;
    if (!(rhs == m))
      return {false, "matrix coefficient of " + w.display() + ": " + m.to_string() + " vs " + rhs.to_string()};
  }
  for (const auto& [w, m] : prod)
    if (!lhs.count(w) && !m.is_zero()) return {false, "spurious product term at " + w.display()};

  auto series = eval_truncated(r, n);
  for (const auto& [w, c] : series.coeffs()) {
    auto it = prod.find(w);
    Rational v = (k == 0 || it == prod.end()) ? Rational(0) : (r.nu() * it->second * r.eta())(0, 0);
    if (v != c) return {false, "nu M eta differs from the series at " + w.display()};
  }
  return {};
}

TriangularDecomposition triangular_decompose(const LinRep& r, int n) {
  const std::size_t k = r.rank();
  for (const auto& [l, m] : r.mu())
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (sgn(m(i, j)) != 0)
          throw ValidationError("mu(" + r.alphabet().letter_name(l) + ") is not upper triangular");
  const Alphabet& a = r.alphabet();
  auto words = words_up_to(a, n);

  // D(X*)(w) = prod of diagonal entries along w; N(X) lives on single letters.
  MatSeries dstar, strict;
  for (const auto& w : words) {
    QMatrix d = QMatrix::identity(k);
    for (const auto& l : w)
      for (std::size_t i = 0; i < k; ++i) d(i, i) *= r.mu(l)(i, i);
    dstar.emplace(w, std::move(d));
  }
  for (const auto& [l, m] : r.mu()) {
    Word w = Word::letter(a, l);
    if (w.grading() > n) continue;
    QMatrix s = m;
    for (std::size_t i = 0; i < k; ++i) s(i, i) = 0;
    strict.emplace(w, std::move(s));
  }
  auto conc_mat = [&](const MatSeries& x, const MatSeries& y) {
    MatSeries out;
    for (const auto& [u, a1] : x)
      for (const auto& [v, b1] : y) {
        if (u.grading() + v.grading() > n) continue;
        QMatrix ab = a1 * b1;
        if (!ab.is_zero()) add_to(out, u * v, ab);
      }
    return out;
  };
  auto is_zero_series = [](const MatSeries& s) {
    return std::all_of(s.begin(), s.end(), [](const auto& kv) { return kv.second.is_zero(); });
  };

  MatSeries dn = conc_mat(dstar, strict);
  MatSeries total, power;
  power.emplace(Word(a), QMatrix::identity(k));
  int order = 0;
  while (!is_zero_series(power)) {
    for (const auto& [w, m] : power) add_to(total, w, m);
    power = conc_mat(power, dn);
    ++order;
    if (order > static_cast<int>(k) + 1) throw ComputationError("D(X*)N(X) failed to be nilpotent");
  }
  MatSeries m = conc_mat(total, dstar);

  TriangularDecomposition out{TruncSeries(a, n), order, true, {}};
  auto direct = eval_truncated(r, n);
  for (const auto& w : words) {
    auto it = m.find(w);
    Rational v = (k == 0 || it == m.end()) ? Rational(0) : (r.nu() * it->second * r.eta())(0, 0);
    out.reconstruction.set(w, v);
    if (out.matches && v != direct.at(w)) {
      out.matches = false;
      out.detail = "reconstruction differs at " + w.display() + ": " + to_string(v) + " vs " + to_string(direct.at(w));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweedler dual membership

SweedlerVerdict sweedler_membership(const LinRep& r) {
  SweedlerVerdict v;
  v.member = true;
  v.rank = r.rank();
  v.witnesses = delta_conc_decompose(r);
  v.message = "rational: linear representation of rank " + std::to_string(r.rank()) + " with " +
              std::to_string(v.witnesses.size()) + " tensor witnesses";
  return v;
}

namespace {

// Tries the states spanned by prefix rows of grading <= p against suffixes of
// grading <= q. Returns nullopt when the window cannot support the candidate.
std::optional<LinRep> hankel_candidate(const TruncSeries& s, int p, int q) {
  const Alphabet& a = s.alphabet();
  const int n = s.bound();
  auto suffixes = words_up_to(a, q);
  auto row = [&](const Word& u) {
    std::vector<Rational> v;
    v.reserve(suffixes.size());
    for (const auto& x : suffixes) v.push_back(s.at(u * x));
    return v;
  };
  RowSpan small(suffixes.size()), big(suffixes.size());
  std::vector<Word> states;
  for (const auto& u : words_up_to(a, p))
    if (small.add(row(u))) states.push_back(u);
  for (const auto& u : words_up_to(a, p + 1)) big.add(row(u));
  if (big.size() != small.size() || states.empty()) return std::nullopt;

  const std::size_t r = states.size();
  const int mw = a.is_x() ? 1 : n;
  std::map<Letter, QMatrix> mu;
  for (const auto& l : expected_letters(a, mw)) {
    QMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      Word ux = states[i].append(l);
      if (ux.grading() + q > n) return std::nullopt;
      auto c = small.coordinates(row(ux));
      if (!c) return std::nullopt;
      for (std::size_t j = 0; j < r; ++j) m(i, j) = (*c)[j];
    }
    mu.emplace(l, std::move(m));
  }
  auto c = small.coordinates(row(Word(a)));
  if (!c) return std::nullopt;
  QMatrix nu(1, r), eta(r, 1);
  for (std::size_t j = 0; j < r; ++j) nu(0, j) = (*c)[j];
  for (std::size_t i = 0; i < r; ++i) eta(i, 0) = s.at(states[i]);
  return LinRep(a, std::move(nu), std::move(mu), std::move(eta), mw);
}

}  // namespace

SweedlerVerdict sweedler_membership(const TruncSeries& s, std::size_t r_max) {
  const int n = s.bound();
  const Alphabet& a = s.alphabet();
  SweedlerVerdict best;
  bool all_zero = std::all_of(s.coeffs().begin(), s.coeffs().end(), [](const auto& kv) { return sgn(kv.second) == 0; });
  if (all_zero) {
    best.member = true;
    best.realization = LinRep::zero(a, 0, a.is_x() ? 1 : n);
    best.message = "rational up to " + std::to_string(n) + " with rank 0";
    return best;
  }
  // One grade of the window is kept back so that stabilization is observed, not assumed.
  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q + 1 <= n - 1; ++q) {
      auto cand = hankel_candidate(s, p, q);
      if (!cand || cand->rank() > r_max) continue;
      if (best.realization && cand->rank() >= best.rank) continue;
      if (!(eval_truncated(*cand, n) == s)) continue;
      best.member = true;
      best.rank = cand->rank();
      best.realization = std::move(cand);
    }
  if (best.member)
    best.message = "rational up to " + std::to_string(n) + " with rank " + std::to_string(best.rank);
  else
    best.message = "no realization of rank <= " + std::to_string(r_max) + " within window " + std::to_string(n);
  return best;
}

}  // namespace ncs
