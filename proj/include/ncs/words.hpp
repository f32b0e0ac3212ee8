#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncs {

enum class AlphabetKind { X, Y };

// A letter of X (x_index, weight 1) or of Y (y_index with weight = index,
// optionally carrying a color c in Z/mZ).
struct Letter {
  int index = 0;
  int color = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  // Structural order used for map keys only; the alphabet order is
  // Alphabet::less.
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// X = {x_0, ..., x_{size-1}} ordered x_0 < x_1 < ..., or
// Y = {y_k : k >= 1} ordered y_1 > y_2 > ... (optionally colored by Z/mZ,
// colors breaking ties in increasing order). Y is infinite; it is
// materialized up to a weight bound wherever letters are enumerated.
class Alphabet {
 public:
  static Alphabet x(int size);
  static Alphabet y(int color_order = 1);

  // "x2", "y", "y@3".
  static Alphabet parse(std::string_view spec);
  std::string spec() const;

  AlphabetKind kind() const { return kind_; }
  bool is_x() const { return kind_ == AlphabetKind::X; }
  bool is_y() const { return kind_ == AlphabetKind::Y; }
  // Number of letters of X; 0 for Y.
  int size() const { return size_; }
  // m for a colored Y alphabet; 1 means uncolored.
  int color_order() const { return colors_; }
  bool colored() const { return kind_ == AlphabetKind::Y && colors_ > 1; }

  bool contains(const Letter& l) const;
  int weight(const Letter& l) const { return kind_ == AlphabetKind::X ? 1 : l.index; }
  // Strict total order on letters.
  bool less(const Letter& a, const Letter& b) const;
  // Letters of weight <= max_weight, increasing in the alphabet order.
  std::vector<Letter> letters_up_to(int max_weight) const;

  std::string letter_name(const Letter& l) const;
  Letter parse_letter(std::string_view token) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet(AlphabetKind kind, int size, int colors) : kind_(kind), size_(size), colors_(colors) {}
  AlphabetKind kind_ = AlphabetKind::X;
  int size_ = 0;
  int colors_ = 1;
};

// Immutable-by-convention word over a fixed alphabet.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);
  Word(Alphabet alphabet, std::initializer_list<Letter> letters)
      : Word(alphabet, std::vector<Letter>(letters)) {}

  // Accepts "x0 x1", "x0x1", "y2@1 y1@0"; "" and "ε" give the empty word.
  static Word parse(const Alphabet& alphabet, std::string_view text);
  static Word letter(const Alphabet& alphabet, Letter l) { return Word(alphabet, {l}); }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Length for X, total weight for Y.
  int grading() const;

  Word subword(std::size_t pos, std::size_t count = std::string::npos) const;
  Word prepend(const Letter& l) const;
  Word append(const Letter& l) const;
  Word operator*(const Word& other) const;

  // Concatenated letter names ("x0x1"); the empty word prints as "".
  std::string str() const;
  // Same, with "ε" for the empty word.
  std::string display() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }
  // Lexicographic order induced by the letter order; a proper prefix is smaller.
  friend bool operator<(const Word& a, const Word& b);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// Grading first, then lexicographic on letter indices (colors breaking ties).
// The canonical order of polynomial terms; for Y it differs from the Lyndon
// order, which ranks y1 above y2.
struct GradedLess {
  bool operator()(const Word& a, const Word& b) const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

int grading(const Word& w);

// All words of the given grading (resp. grading <= max), in GradedLess order.
std::vector<Word> words_of_grading(const Alphabet& a, int g);
std::vector<Word> words_up_to(const Alphabet& a, int max_grading);

bool is_lyndon(const Word& w);

// Lyndon words of grading <= max_grade, sorted by (grading, lexicographic).
std::vector<Word> lyndon_words(const Alphabet& a, int max_grade);

// l = s r with r the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& l);

// Unique non-increasing factorization w = l_1 l_2 ... l_k into Lyndon words.
std::vector<Word> lyndon_factorization(const Word& w);

}  // namespace ncs
