#include "ncs/ncpoly.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace ncs {

namespace {

void require_same(const Alphabet& a, const Alphabet& b, const char* op) {
  if (!(a == b)) throw ValidationError(std::string("alphabet mismatch in ") + op);
}

void require_y(const Alphabet& a, const char* op) {
  if (!a.is_y()) throw ValidationError(std::string(op) + " needs a Y alphabet");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// |c| as text, sign reported separately.
std::string coeff_text(const Rational& c, bool& negative) {
  negative = sgn(c) < 0;
  return to_string(negative ? Rational(-c) : c);
}

}  // namespace

// ---------------------------------------------------------------------------
// NCPoly

NCPoly NCPoly::word(const Word& w, const Rational& c) {
  NCPoly p(w.alphabet());
  p.add(w, c);
  return p;
}

NCPoly NCPoly::parse(const Alphabet& a, std::string_view text) {
  NCPoly p(a);
  text = trim(text);
  if (text.empty() || text == "0") return p;
  std::size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw ValidationError("malformed polynomial '" + std::string(text) + "'");
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    std::string_view term = trim(text.substr(i, j - i));
    if (term.empty()) throw ValidationError("empty term in polynomial '" + std::string(text) + "'");
    std::size_t k = 0;
    while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/')) ++k;
    Rational c = 1;
    if (k > 0) c = parse_rational(term.substr(0, k));
    std::string_view rest = trim(term.substr(k));
    if (!rest.empty() && rest.front() == '*') rest = trim(rest.substr(1));
    p.add(Word::parse(a, rest), sign * c);
    first = false;
    i = j;
  }
  return p;
}

Rational NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int NCPoly::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, w.grading());
  return d;
}

bool NCPoly::homogeneous() const {
  if (terms_.empty()) return true;
  int g = terms_.begin()->first.grading();
  for (const auto& [w, c] : terms_)
    if (w.grading() != g) return false;
  return true;
}

void NCPoly::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  require_same(alphabet_, w.alphabet(), "polynomial term");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  require_same(alphabet_, o.alphabet_, "+");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  require_same(alphabet_, o.alphabet_, "-");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NCPoly NCPoly::truncated(int max_grading) const {
  NCPoly p(alphabet_);
  for (const auto& [w, c] : terms_)
    if (w.grading() <= max_grading) p.terms_.emplace_hint(p.terms_.end(), w, c);
  return p;
}

NCPoly NCPoly::homogeneous_part(int g) const {
  NCPoly p(alphabet_);
  for (const auto& [w, c] : terms_)
    if (w.grading() == g) p.terms_.emplace_hint(p.terms_.end(), w, c);
  return p;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool neg;
    std::string ct = coeff_text(c, neg);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (w.empty()) {
      out += ct;
    } else {
      if (ct != "1") out += ct + " ";
      out += w.str();
    }
    first = false;
  }
  return out;
}

Rational pairing(const NCPoly& p, const NCPoly& q) {
  require_same(p.alphabet(), q.alphabet(), "pairing");
  const auto& small = p.size() <= q.size() ? p : q;
  const auto& big = p.size() <= q.size() ? q : p;
  Rational s = 0;
  for (const auto& [w, c] : small.terms()) s += c * big.coeff(w);
  return s;
}

// ---------------------------------------------------------------------------
// TensorPoly

bool TensorPoly::KeyLess::operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
  GradedLess lt;
  if (lt(a.first, b.first)) return true;
  if (lt(b.first, a.first)) return false;
  return lt(a.second, b.second);
}

Rational TensorPoly::coeff(const Word& u, const Word& v) const {
  auto it = terms_.find({u, v});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorPoly::add(const Word& u, const Word& v, const Rational& c) {
  if (sgn(c) == 0) return;
  require_same(alphabet_, u.alphabet(), "tensor term");
  require_same(alphabet_, v.alphabet(), "tensor term");
  auto [it, inserted] = terms_.try_emplace({u, v}, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  require_same(alphabet_, o.alphabet_, "+");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  require_same(alphabet_, o.alphabet_, "-");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

std::string TensorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  auto side = [](const Word& w) { return w.empty() ? std::string("1") : w.str(); };
  for (const auto& [k, c] : terms_) {
    bool neg;
    std::string ct = coeff_text(c, neg);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (ct != "1") out += ct + " ";
    out += side(k.first) + "\xE2\x8A\x97" + side(k.second);
    first = false;
  }
  return out;
}

TensorPoly tensor(const NCPoly& p, const NCPoly& q) {
  require_same(p.alphabet(), q.alphabet(), "tensor");
  TensorPoly t(p.alphabet());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) t.add(u, v, a * b);
  return t;
}

// ---------------------------------------------------------------------------
// PhiTable

PhiTable PhiTable::zero() { return PhiTable(); }

PhiTable PhiTable::stuffle() { return constant(1); }

PhiTable PhiTable::constant(const Rational& c) {
  PhiTable t;
  t.fill_ = c;
  return t;
}

PhiTable PhiTable::from_entries(const std::map<std::pair<int, int>, Rational>& entries, int validate_grade) {
  PhiTable t;
  for (const auto& [k, c] : entries) {
    if (k.first < 1 || k.second < 1) throw ValidationError("gamma indices must be >= 1");
    for (auto key : {k, std::make_pair(k.second, k.first)}) {
      auto [it, inserted] = t.entries_.try_emplace(key, c);
      if (!inserted && it->second != c)
        throw ValidationError("gamma(" + std::to_string(k.first) + "," + std::to_string(k.second) +
                              ") conflicts with its mirrored entry");
    }
  }
  for (auto it = t.entries_.begin(); it != t.entries_.end();)
    it = sgn(it->second) == 0 ? t.entries_.erase(it) : std::next(it);
  if (validate_grade > 0)
    if (auto err = t.validate(validate_grade)) throw ValidationError("phi table rejected: " + *err);
  return t;
}

Rational PhiTable::gamma(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? fill_ : it->second;
}

bool PhiTable::is_zero() const { return sgn(fill_) == 0 && entries_.empty(); }

std::string PhiTable::fingerprint() const {
  std::string s = "fill=" + to_string(fill_);
  for (const auto& [k, c] : entries_)
    s += ";" + std::to_string(k.first) + "," + std::to_string(k.second) + "=" + to_string(c);
  return s;
}

std::optional<std::string> PhiTable::validate(int grade) const {
  Alphabet y = Alphabet::y();
  std::vector<Word> words;
  for (auto& w : words_up_to(y, grade))
    if (!w.empty()) words.push_back(std::move(w));
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.grading() + v.grading() > grade) continue;
      if (!(phi_shuffle(u, v, *this) == phi_shuffle(v, u, *this)))
        return "not commutative on (" + u.display() + ", " + v.display() + ")";
      for (const auto& w : words) {
        if (u.grading() + v.grading() + w.grading() > grade) continue;
        NCPoly uw = NCPoly::word(w);
        NCPoly left = phi_shuffle(phi_shuffle(u, v, *this), uw, *this);
        NCPoly right = phi_shuffle(NCPoly::word(u), phi_shuffle(v, w, *this), *this);
        if (!(left == right))
          return "not associative on (" + u.display() + ", " + v.display() + ", " + w.display() + ")";
      }
    }
  return std::nullopt;
}

std::pair<Letter, Rational> merge_letters(const Alphabet& a, const Letter& p, const Letter& q, const PhiTable& phi) {
  require_y(a, "phi");
  Letter m{p.index + q.index, (p.color + q.color) % a.color_order()};
  return {m, phi.gamma(p.index, q.index)};
}

Law parse_law(std::string_view name) {
  if (name == "conc") return Law::Conc;
  if (name == "shuffle") return Law::Shuffle;
  if (name == "phi" || name == "stuffle" || name == "phishuffle" || name == "phi_shuffle") return Law::PhiShuffle;
  throw ValidationError("unknown law '" + std::string(name) + "'");
}

std::string law_name(Law law) {
  switch (law) {
    case Law::Conc: return "conc";
    case Law::Shuffle: return "shuffle";
    case Law::PhiShuffle: return "phi";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Products

NCPoly conc(const NCPoly& p, const NCPoly& q) {
  require_same(p.alphabet(), q.alphabet(), "conc");
  NCPoly r(p.alphabet());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) r.add(u * v, a * b);
  return r;
}

namespace {

NCPoly prepend(const Letter& l, const NCPoly& p) {
  NCPoly r(p.alphabet());
  for (const auto& [w, c] : p.terms()) r.add(w.prepend(l), c);
  return r;
}

// T[i][j] = u_i v_j-suffix product; the rows are rolled from the back.
NCPoly suffix_dp(const Word& u, const Word& v, const PhiTable* phi) {
  const std::size_t p = u.length(), q = v.length();
  std::vector<NCPoly> next, cur;
  next.reserve(q + 1);
  cur.reserve(q + 1);
  for (std::size_t j = 0; j <= q; ++j) next.push_back(NCPoly::word(v.subword(j)));
  for (std::size_t i = p; i-- > 0;) {
    cur.assign(q + 1, NCPoly(u.alphabet()));
    cur[q] = NCPoly::word(u.subword(i));
    for (std::size_t j = q; j-- > 0;) {
      NCPoly t = prepend(u[i], next[j]);
      t += prepend(v[j], cur[j + 1]);
      if (phi) {
        auto [m, g] = merge_letters(u.alphabet(), u[i], v[j], *phi);
        if (sgn(g) != 0) t += g * prepend(m, next[j + 1]);
      }
      cur[j] = std::move(t);
    }
    std::swap(cur, next);
  }
  return next[0];
}

template <class WordOp>
NCPoly bilinear(const NCPoly& p, const NCPoly& q, WordOp op) {
  NCPoly r(p.alphabet());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) r += (a * b) * op(u, v);
  return r;
}

}  // namespace

NCPoly shuffle(const Word& u, const Word& v) {
  require_same(u.alphabet(), v.alphabet(), "shuffle");
  return suffix_dp(u, v, nullptr);
}

NCPoly phi_shuffle(const Word& u, const Word& v, const PhiTable& phi) {
  require_same(u.alphabet(), v.alphabet(), "phi-shuffle");
  require_y(u.alphabet(), "phi-shuffle");
  return suffix_dp(u, v, phi.is_zero() ? nullptr : &phi);
}

NCPoly shuffle(const NCPoly& p, const NCPoly& q) {
  require_same(p.alphabet(), q.alphabet(), "shuffle");
  return bilinear(p, q, [](const Word& u, const Word& v) { return shuffle(u, v); });
}

NCPoly phi_shuffle(const NCPoly& p, const NCPoly& q, const PhiTable& phi) {
  require_same(p.alphabet(), q.alphabet(), "phi-shuffle");
  require_y(p.alphabet(), "phi-shuffle");
  return bilinear(p, q, [&](const Word& u, const Word& v) { return phi_shuffle(u, v, phi); });
}

NCPoly product(Law law, const NCPoly& p, const NCPoly& q, const PhiTable& phi) {
  switch (law) {
    case Law::Conc: return conc(p, q);
    case Law::Shuffle: return shuffle(p, q);
    case Law::PhiShuffle: return phi_shuffle(p, q, phi);
  }
  throw ValidationError("unknown law");
}

NCPoly product(Law law, const Word& u, const Word& v, const PhiTable& phi) {
  switch (law) {
    case Law::Conc: return NCPoly::word(u * v);
    case Law::Shuffle: return shuffle(u, v);
    case Law::PhiShuffle: return phi_shuffle(u, v, phi);
  }
  throw ValidationError("unknown law");
}

NCPoly lie_bracket(const NCPoly& p, const NCPoly& q) { return conc(p, q) - conc(q, p); }

// ---------------------------------------------------------------------------
// Coproducts

TensorPoly delta_conc(const Word& w) {
  TensorPoly t(w.alphabet());
  for (std::size_t i = 0; i <= w.length(); ++i) t.add(w.subword(0, i), w.subword(i), 1);
  return t;
}

namespace {

// Conc-morphism extension: multiply letter images from the left.
TensorPoly morphism_image(const Word& w, const std::function<TensorPoly(const Letter&)>& image) {
  const Alphabet& a = w.alphabet();
  TensorPoly acc(a);
  acc.add(Word(a), Word(a), 1);
  for (const auto& l : w) {
    TensorPoly li = image(l);
    TensorPoly next(a);
    for (const auto& [k, c] : acc.terms())
      for (const auto& [kl, cl] : li.terms()) next.add(k.first * kl.first, k.second * kl.second, c * cl);
    acc = std::move(next);
  }
  return acc;
}

template <class WordOp>
TensorPoly linear(const NCPoly& p, WordOp op) {
  TensorPoly t(p.alphabet());
  for (const auto& [w, c] : p.terms())
    for (const auto tmp = op(w); const auto& [k, d] : tmp.terms()) t.add(k.first, k.second, c * d);
  return t;
}

}  // namespace

TensorPoly delta_shuffle(const Word& w) {
  const Alphabet& a = w.alphabet();
  return morphism_image(w, [&](const Letter& l) {
    TensorPoly t(a);
    t.add(Word::letter(a, l), Word(a), 1);
    t.add(Word(a), Word::letter(a, l), 1);
    return t;
  });
}

TensorPoly delta_phi(const Word& w, const PhiTable& phi) {
  const Alphabet& a = w.alphabet();
  require_y(a, "phi coproduct");
  const int m = a.color_order();
  return morphism_image(w, [&](const Letter& l) {
    TensorPoly t(a);
    t.add(Word::letter(a, l), Word(a), 1);
    t.add(Word(a), Word::letter(a, l), 1);
    for (int i = 1; i < l.index; ++i) {
      Rational g = phi.gamma(i, l.index - i);
      if (sgn(g) == 0) continue;
      for (int c1 = 0; c1 < m; ++c1) {
        int c2 = ((l.color - c1) % m + m) % m;
        t.add(Word::letter(a, {i, c1}), Word::letter(a, {l.index - i, c2}), g);
      }
    }
    return t;
  });
}

TensorPoly delta_conc(const NCPoly& p) { return linear(p, [](const Word& w) { return delta_conc(w); }); }
TensorPoly delta_shuffle(const NCPoly& p) { return linear(p, [](const Word& w) { return delta_shuffle(w); }); }
TensorPoly delta_phi(const NCPoly& p, const PhiTable& phi) {
  require_y(p.alphabet(), "phi coproduct");
  return linear(p, [&](const Word& w) { return delta_phi(w, phi); });
}

TensorPoly coproduct(Law law, const Word& w, const PhiTable& phi) {
  switch (law) {
    case Law::Conc: return delta_conc(w);
    case Law::Shuffle: return delta_shuffle(w);
    case Law::PhiShuffle: return delta_phi(w, phi);
  }
  throw ValidationError("unknown law");
}

TensorPoly coproduct(Law law, const NCPoly& p, const PhiTable& phi) {
  return linear(p, [&](const Word& w) { return coproduct(law, w, phi); });
}

// ---------------------------------------------------------------------------
// Eulerian idempotent: pi1 = log(id) = sum_k (-1)^(k-1)/k J^{*k}, J = id - eps,
// with the convolution taken against the (phi-)shuffle coproduct.

NCPoly pi1(const Word& w, const PhiTable& phi) {
  const Alphabet& a = w.alphabet();
  NCPoly out(a);
  if (w.empty()) return out;
  if (a.is_x() && !phi.is_zero()) throw ValidationError("pi1 over X requires phi = 0");
  const Law law = a.is_y() ? Law::PhiShuffle : Law::Shuffle;
  std::vector<std::map<Word, NCPoly>> memo(w.grading() + 1);
  std::function<NCPoly(int, const Word&)> power = [&](int k, const Word& v) -> NCPoly {
    if (k == 1) return NCPoly::word(v);
    auto it = memo[k].find(v);
    if (it != memo[k].end()) return it->second;
    NCPoly r(a);
    if (v.grading() >= k) {
      for (const auto tmp = coproduct(law, v, phi); const auto& [key, c] : tmp.terms()) {
        if (key.first.empty() || key.second.empty()) continue;
        r += c * conc(NCPoly::word(key.first), power(k - 1, key.second));
      }
    }
    memo[k].emplace(v, r);
    return r;
  };
  for (int k = 1; k <= w.grading(); ++k) {
    Rational s = Rational(k % 2 ? 1 : -1) / k;
    out += s * power(k, w);
  }
  return out;
}

NCPoly pi1(const NCPoly& p, const PhiTable& phi) {
  NCPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms()) out += c * pi1(w, phi);
  return out;
}

// ---------------------------------------------------------------------------
// Truncated series

TruncSeries series_from_poly(const NCPoly& p, int bound) {
  TruncSeries s(p.alphabet(), bound);
  for (const auto& [w, c] : p.terms())
    if (w.grading() <= bound) s.set(w, c);
  return s;
}

NCPoly poly_from_series(const TruncSeries& s) {
  NCPoly p(s.alphabet());
  for (const auto& [w, c] : s.coeffs()) p.add(w, c);
  return p;
}

namespace {

template <class Rule>
bool check_pairs(const TruncSeries& s, Law law, int n, const PhiTable& phi, Rule rule) {
  if (n > s.bound()) throw ValidationError("series known only up to grading " + std::to_string(s.bound()));
  if (law == Law::PhiShuffle) require_y(s.alphabet(), "phi law");
  auto words = words_up_to(s.alphabet(), n);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.grading() + v.grading() > n) continue;
      Rational lhs = 0;
      for (const auto tmp = product(law, u, v, phi); const auto& [w, c] : tmp.terms()) lhs += c * s.at(w);
      if (lhs != rule(u, v)) return false;
    }
  return true;
}

}  // namespace

bool is_character(const TruncSeries& s, Law law, int n, const PhiTable& phi) {
  Word one(s.alphabet());
  if (s.at(one) != 1) return false;
  return check_pairs(s, law, n, phi, [&](const Word& u, const Word& v) { return s.at(u) * s.at(v); });
}

bool is_infinitesimal_character(const TruncSeries& s, Law law, int n, const PhiTable& phi) {
  return check_pairs(s, law, n, phi, [&](const Word& u, const Word& v) {
    Rational r = 0;
    if (v.empty()) r += s.at(u);
    if (u.empty()) r += s.at(v);
    return r;
  });
}

}  // namespace ncs
