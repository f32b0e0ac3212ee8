#include "ncs/hopf_bases.hpp"

#include <algorithm>

#include "ncs/matrix.hpp"

namespace ncs {

namespace {

std::string tensor_diff(const TensorPoly& a, const TensorPoly& b, const char* what) {
  TensorPoly d = a - b;
  if (d.is_zero()) return {};
  const auto& [k, c] = *d.terms().begin();
  return std::string(what) + ": coefficient of " + k.first.display() + "\xE2\x8A\x97" + k.second.display() +
         " differs by " + to_string(c);
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction (uncached recursion goes through the cache for subterms)

NCPoly build_P(const Word& w) {
  const Alphabet& a = w.alphabet();
  if (w.length() <= 1) return NCPoly::word(w);
  auto& cache = BasisCache::global();
  auto factors = lyndon_factorization(w);
  if (factors.size() == 1) {
    auto [s, r] = standard_factorization(w);
    return lie_bracket(cache.P(s), cache.P(r));
  }
  NCPoly p = NCPoly::one(a);
  for (const auto& l : factors) p = conc(p, cache.P(l));
  return p;
}

NCPoly build_S(const Word& w) {
  const Alphabet& a = w.alphabet();
  if (w.length() <= 1) return NCPoly::word(w);
  auto& cache = BasisCache::global();
  auto factors = lyndon_factorization(w);
  if (factors.size() == 1) {
    NCPoly r(a);
    for (const auto tmp = cache.S(w.subword(1)); const auto& [v, c] : tmp.terms()) r.add(v.prepend(w.front()), c);
    return r;
  }
  NCPoly p = NCPoly::one(a);
  Rational denom = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    run = (i > 0 && factors[i] == factors[i - 1]) ? run + 1 : 1;
    denom *= run;
    p = shuffle(p, cache.S(factors[i]));
  }
  return p * (1 / denom);
}

NCPoly build_Pi(const Word& w, const PhiTable& phi) {
  const Alphabet& a = w.alphabet();
  if (!a.is_y()) throw ValidationError("Pi basis needs a Y alphabet");
  std::map<Letter, NCPoly> images;
  NCPoly out(a);
  for (const auto tmp = BasisCache::global().P(w); const auto& [v, c] : tmp.terms()) {
    NCPoly term = NCPoly::one(a);
    for (const auto& l : v) {
      auto it = images.find(l);
      if (it == images.end()) it = images.emplace(l, pi1(Word::letter(a, l), phi)).first;
      term = conc(term, it->second);
    }
    out += c * term;
  }
  return out;
}

namespace {

// Sigma_u for every word u of grading g.
std::vector<std::pair<Word, NCPoly>> sigma_layer(const Alphabet& a, int g, const PhiTable& phi) {
  auto words = words_of_grading(a, g);
  const std::size_t n = words.size();
  QMatrix m(n, n);  // m(u, v) = <Pi_v, u>
  for (std::size_t j = 0; j < n; ++j) {
    NCPoly pv = BasisCache::global().Pi(words[j], phi);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = pv.coeff(words[i]);
  }
  QMatrix inv;
  try {
    inv = inverse(m);
  } catch (const ComputationError&) {
    throw ComputationError("singular Pi duality system at grading " + std::to_string(g));
  }
  std::vector<std::pair<Word, NCPoly>> out;
  for (std::size_t i = 0; i < n; ++i) {
    NCPoly s(a);
    for (std::size_t k = 0; k < n; ++k) s.add(words[k], inv(i, k));
    out.emplace_back(words[i], std::move(s));
  }
  return out;
}

}  // namespace

NCPoly build_Sigma(const Word& w, const PhiTable& phi) {
  if (!w.alphabet().is_y()) throw ValidationError("Sigma basis needs a Y alphabet");
  for (auto& [u, s] : sigma_layer(w.alphabet(), w.grading(), phi))
    if (u == w) return s;
  throw ComputationError("Sigma: word missing from its graded piece");
}

// ---------------------------------------------------------------------------
// BasisCache

BasisCache& BasisCache::global() {
  static BasisCache cache;
  return cache;
}

BasisCache::Entry& BasisCache::entry(const Alphabet& a, const std::string& phi_key) {
  std::string key = a.spec() + "|" + phi_key;
  auto& slot = entries_[key];
  if (!slot) slot = std::make_unique<Entry>();
  return *slot;
}

namespace {

// Looks up under the lock, computes outside it, then inserts. Two threads may
// compute the same value; the results are identical so either insert wins.
template <class Map, class Compute>
NCPoly lookup(std::mutex& mu, Map& map, const Word& w, Compute compute) {
  {
    std::lock_guard lock(mu);
    auto it = map.find(w);
    if (it != map.end()) return it->second;
  }
  NCPoly value = compute();
  std::lock_guard lock(mu);
  return map.try_emplace(w, std::move(value)).first->second;
}

}  // namespace

NCPoly BasisCache::P(const Word& w) {
  Entry* e;
  {
    std::lock_guard lock(mu_);
    e = &entry(w.alphabet(), "");
  }
  return lookup(mu_, e->p, w, [&] { return build_P(w); });
}

NCPoly BasisCache::S(const Word& w) {
  Entry* e;
  {
    std::lock_guard lock(mu_);
    e = &entry(w.alphabet(), "");
  }
  return lookup(mu_, e->s, w, [&] { return build_S(w); });
}

NCPoly BasisCache::Pi(const Word& w, const PhiTable& phi) {
  Entry* e;
  {
    std::lock_guard lock(mu_);
    e = &entry(w.alphabet(), phi.fingerprint());
  }
  return lookup(mu_, e->pi, w, [&] { return build_Pi(w, phi); });
}

NCPoly BasisCache::Sigma(const Word& w, const PhiTable& phi) {
  if (!w.alphabet().is_y()) throw ValidationError("Sigma basis needs a Y alphabet");
  Entry* e;
  {
    std::lock_guard lock(mu_);
    e = &entry(w.alphabet(), phi.fingerprint());
    auto it = e->sigma.find(w);
    if (it != e->sigma.end()) return it->second;
  }
  auto layer = sigma_layer(w.alphabet(), w.grading(), phi);
  std::lock_guard lock(mu_);
  for (auto& [u, s] : layer) e->sigma.try_emplace(u, std::move(s));
  return e->sigma.at(w);
}

void BasisCache::clear() {
  std::lock_guard lock(mu_);
  entries_.clear();
}

// ---------------------------------------------------------------------------
// Checks

CheckReport duality_check(const Alphabet& a, int n, const PhiTable& phi) {
  auto& cache = BasisCache::global();
  const bool pbw = a.is_x() || phi.is_zero();
  auto words = words_up_to(a, n);
  std::vector<NCPoly> dual, primal;
  for (const auto& w : words) {
    dual.push_back(pbw ? cache.S(w) : cache.Sigma(w, phi));
    primal.push_back(pbw ? cache.P(w) : cache.Pi(w, phi));
  }
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      Rational p = pairing(dual[i], primal[j]);
      if (p != (i == j ? 1 : 0))
        return {false, std::string(pbw ? "<S_" : "<Sigma_") + words[i].display() + (pbw ? ", P_" : ", Pi_") +
                           words[j].display() + "> = " + to_string(p)};
    }
  return {};
}

CheckReport diagonal_factorization_check(const Alphabet& a, int n, const PhiTable& phi, bool increasing) {
  if (n < 1) throw ValidationError("diagonal check needs N >= 1");
  auto& cache = BasisCache::global();
  const bool pbw = a.is_x() || phi.is_zero();
  const Law left_law = a.is_x() ? Law::Shuffle : Law::PhiShuffle;

  // (a (x) b)(c (x) d) = (a * c) (x) bd, dropping left gradings above n.
  auto mul = [&](const TensorPoly& x, const TensorPoly& y) {
    TensorPoly r(a);
    for (const auto& [k1, c1] : x.terms())
      for (const auto& [k2, c2] : y.terms()) {
        if (k1.first.grading() + k2.first.grading() > n) continue;
        Word right = k1.second * k2.second;
        for (const auto tmp = product(left_law, k1.first, k2.first, phi); const auto& [w, c] : tmp.terms()) r.add(w, right, c * c1 * c2);
      }
    return r;
  };

  TensorPoly diag(a), basis(a);
  for (const auto& w : words_up_to(a, n)) {
    diag.add(w, w, 1);
    NCPoly s = pbw ? cache.S(w) : cache.Sigma(w, phi);
    NCPoly p = pbw ? cache.P(w) : cache.Pi(w, phi);
    basis += tensor(s, p);
  }

  auto lyn = lyndon_words(a, n);
  std::sort(lyn.begin(), lyn.end());
  if (!increasing) std::reverse(lyn.begin(), lyn.end());
  TensorPoly prod(a);
  prod.add(Word(a), Word(a), 1);
  for (const auto& l : lyn) {
    TensorPoly t = tensor(pbw ? cache.S(l) : cache.Sigma(l, phi), pbw ? cache.P(l) : cache.Pi(l, phi));
    TensorPoly e(a), power(a);
    e.add(Word(a), Word(a), 1);
    power.add(Word(a), Word(a), 1);
    for (int k = 1; k * l.grading() <= n; ++k) {
      power = mul(power, t);
      TensorPoly scaled(a);
      for (const auto& [key, c] : power.terms()) scaled.add(key.first, key.second, c / factorial(k));
      e += scaled;
    }
    prod = mul(prod, e);
  }

  if (auto d = tensor_diff(diag, basis, "word diagonal vs basis sum"); !d.empty()) return {false, d};
  if (auto d = tensor_diff(diag, prod, "word diagonal vs Lyndon product"); !d.empty()) return {false, d};
  return {};
}

}  // namespace ncs
