#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ncs/error.hpp"
#include "ncs/rational.hpp"
#include "ncs/words.hpp"

namespace ncs {

// Finitely supported map Word -> Q. Zero coefficients are never stored.
class NCPoly {
 public:
  using Terms = std::map<Word, Rational, GradedLess>;

  explicit NCPoly(Alphabet alphabet) : alphabet_(alphabet) {}
  static NCPoly one(const Alphabet& a) { return word(Word(a)); }
  static NCPoly word(const Word& w, const Rational& c = 1);
  static NCPoly letter(const Alphabet& a, Letter l, const Rational& c = 1) { return word(Word::letter(a, l), c); }
  // Text form, e.g. "x0 - 1/2 x1x0 + 3"; a bare coefficient is a multiple of the empty word.
  static NCPoly parse(const Alphabet& a, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& w) const;
  // Largest grading present; -1 for the zero polynomial.
  int degree() const;
  bool homogeneous() const;

  void add(const Word& w, const Rational& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& s);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(NCPoly a) { return a *= Rational(-1); }
  friend NCPoly operator*(const Rational& s, NCPoly a) { return a *= s; }
  friend NCPoly operator*(NCPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  // Terms of grading <= max_grading (resp. exactly g).
  NCPoly truncated(int max_grading) const;
  NCPoly homogeneous_part(int g) const;

  // "2 y1y1 + y2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Alphabet alphabet_;
  Terms terms_;
};

// <P, Q> = sum_w <P,w><Q,w>.
Rational pairing(const NCPoly& p, const NCPoly& q);

// Finitely supported map (Word, Word) -> Q.
class TensorPoly {
 public:
  struct KeyLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const;
  };
  using Terms = std::map<std::pair<Word, Word>, Rational, KeyLess>;

  explicit TensorPoly(Alphabet alphabet) : alphabet_(alphabet) {}
  const Alphabet& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Word& u, const Word& v) const;
  void add(const Word& u, const Word& v, const Rational& c);

  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  // "1⊗x0 + x0⊗1"
  std::string to_string() const;

 private:
  Alphabet alphabet_;
  Terms terms_;
};

// P ⊗ Q
TensorPoly tensor(const NCPoly& p, const NCPoly& q);

// Coefficients gamma(i, j) of the letter merge phi(y_i, y_j) = gamma(i, j) y_{i+j}.
// Colored letters merge by adding weights and adding color indices mod m.
// Unlisted pairs take `fill` (0 for explicit tables, 1 for the stuffle table).
class PhiTable {
 public:
  static PhiTable zero();
  static PhiTable stuffle();
  static PhiTable constant(const Rational& c);
  // Explicit entries keyed by (i, j); a pair given one way is mirrored. Conflicting
  // mirrored entries and tables whose phi-shuffle fails associativity on all word
  // triples of total weight <= validate_grade are rejected with ValidationError.
  static PhiTable from_entries(const std::map<std::pair<int, int>, Rational>& entries, int validate_grade = 6);

  Rational gamma(int i, int j) const;
  bool is_zero() const;
  // Stable identity used for cache keys.
  std::string fingerprint() const;
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
  const Rational& fill() const { return fill_; }

  // Checks commutativity and associativity of the phi-shuffle on all triples of
  // words of total weight <= grade; returns a description of the first failure.
  std::optional<std::string> validate(int grade) const;

 private:
  PhiTable() = default;
  std::map<std::pair<int, int>, Rational> entries_;
  Rational fill_;
};

// phi(a, b) on Y letters: the merged letter and its coefficient.
std::pair<Letter, Rational> merge_letters(const Alphabet& a, const Letter& p, const Letter& q, const PhiTable& phi);

enum class Law { Conc, Shuffle, PhiShuffle };
Law parse_law(std::string_view name);
std::string law_name(Law law);

NCPoly conc(const NCPoly& p, const NCPoly& q);
NCPoly shuffle(const NCPoly& p, const NCPoly& q);
NCPoly phi_shuffle(const NCPoly& p, const NCPoly& q, const PhiTable& phi);
// Word-level forms, the workhorses behind the polynomial products.
NCPoly shuffle(const Word& u, const Word& v);
NCPoly phi_shuffle(const Word& u, const Word& v, const PhiTable& phi);
// Product selected by law; phi is only consulted for Law::PhiShuffle.
NCPoly product(Law law, const NCPoly& p, const NCPoly& q, const PhiTable& phi);
NCPoly product(Law law, const Word& u, const Word& v, const PhiTable& phi);

// [P, Q] = PQ - QP
NCPoly lie_bracket(const NCPoly& p, const NCPoly& q);

TensorPoly delta_conc(const NCPoly& p);
TensorPoly delta_shuffle(const NCPoly& p);
TensorPoly delta_phi(const NCPoly& p, const PhiTable& phi);
TensorPoly delta_conc(const Word& w);
TensorPoly delta_shuffle(const Word& w);
TensorPoly delta_phi(const Word& w, const PhiTable& phi);
TensorPoly coproduct(Law law, const Word& w, const PhiTable& phi);
TensorPoly coproduct(Law law, const NCPoly& p, const PhiTable& phi);

// Eulerian idempotent for the phi-shuffle (Y) or, with phi == 0, the shuffle (X or Y).
NCPoly pi1(const NCPoly& p, const PhiTable& phi);
NCPoly pi1(const Word& w, const PhiTable& phi);

// Series known on every word of grading <= bound. Missing words read as zero
// only through `get`; `at` insists the word lies inside the window.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries(Alphabet alphabet, int bound) : alphabet_(alphabet), bound_(bound) {
    if (bound < 0) throw ValidationError("truncation bound must be >= 0");
    for (auto& w : words_up_to(alphabet, bound)) coeffs_.emplace(std::move(w), T{});
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int bound() const { return bound_; }
  const std::map<Word, T, GradedLess>& coeffs() const { return coeffs_; }

  const T& at(const Word& w) const {
    auto it = coeffs_.find(w);
    if (it == coeffs_.end()) throw ValidationError("word " + w.display() + " outside truncation window");
    return it->second;
  }
  T& at(const Word& w) {
    auto it = coeffs_.find(w);
    if (it == coeffs_.end()) throw ValidationError("word " + w.display() + " outside truncation window");
    return it->second;
  }
  void set(const Word& w, T value) { at(w) = std::move(value); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.alphabet_ == b.alphabet_ && a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Alphabet alphabet_;
  int bound_;
  std::map<Word, T, GradedLess> coeffs_;
};

using TruncSeries = TruncatedSeries<Rational>;

TruncSeries series_from_poly(const NCPoly& p, int bound);
NCPoly poly_from_series(const TruncSeries& s);

// Character / infinitesimal character tests on all pairs (u, v) with (u) + (v) <= N.
bool is_character(const TruncSeries& s, Law law, int n, const PhiTable& phi = PhiTable::zero());
bool is_infinitesimal_character(const TruncSeries& s, Law law, int n, const PhiTable& phi = PhiTable::zero());

}  // namespace ncs
