#include "ncs/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ncs/error.hpp"

namespace ncs {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet Alphabet::x(int size) {
  if (size < 1) throw ValidationError("X alphabet needs at least one letter");
  return Alphabet(AlphabetKind::X, size, 1);
}

Alphabet Alphabet::y(int color_order) {
  if (color_order < 1) throw ValidationError("color group order must be positive");
  return Alphabet(AlphabetKind::Y, 0, color_order);
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ValidationError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

Alphabet Alphabet::parse(std::string_view spec) {
  if (spec.empty()) throw ValidationError("empty alphabet spec");
  if (spec.front() == 'x') return x(parse_int(spec.substr(1), "alphabet size"));
  if (spec.front() == 'y') {
    if (spec.size() == 1) return y();
    if (spec[1] != '@') throw ValidationError("malformed alphabet spec '" + std::string(spec) + "'");
    return y(parse_int(spec.substr(2), "color order"));
  }
  throw ValidationError("unknown alphabet spec '" + std::string(spec) + "'");
}

std::string Alphabet::spec() const {
  if (is_x()) return "x" + std::to_string(size_);
  return colors_ > 1 ? "y@" + std::to_string(colors_) : "y";
}

bool Alphabet::contains(const Letter& l) const {
  if (is_x()) return l.index >= 0 && l.index < size_ && l.color == 0;
  return l.index >= 1 && l.color >= 0 && l.color < colors_;
}

bool Alphabet::less(const Letter& a, const Letter& b) const {
  if (is_x()) return a.index < b.index;
  if (a.index != b.index) return a.index > b.index;
  return a.color < b.color;
}

std::vector<Letter> Alphabet::letters_up_to(int max_weight) const {
  std::vector<Letter> out;
  if (max_weight < 1) return out;
  if (is_x()) {
    for (int i = 0; i < size_; ++i) out.push_back({i, 0});
    return out;
  }
  for (int k = max_weight; k >= 1; --k)
    for (int c = 0; c < colors_; ++c) out.push_back({k, c});
  return out;
}

std::string Alphabet::letter_name(const Letter& l) const {
  if (is_x()) return "x" + std::to_string(l.index);
  std::string s = "y" + std::to_string(l.index);
  if (colors_ > 1) s += "@" + std::to_string(l.color);
  return s;
}

Letter Alphabet::parse_letter(std::string_view token) const {
  if (token.empty()) throw ValidationError("empty letter");
  char head = token.front();
  if ((head == 'x') != is_x() || (head != 'x' && head != 'y'))
    throw ValidationError("letter '" + std::string(token) + "' does not belong to alphabet " + spec());
  auto at = token.find('@');
  Letter l;
  l.index = parse_int(token.substr(1, at == std::string_view::npos ? std::string_view::npos : at - 1), "letter index");
  if (at != std::string_view::npos) {
    if (is_x()) throw ValidationError("X letters carry no color: '" + std::string(token) + "'");
    l.color = parse_int(token.substr(at + 1), "letter color");
  }
  if (!contains(l)) throw ValidationError("letter '" + std::string(token) + "' not in alphabet " + spec());
  return l;
}

// ---------------------------------------------------------------------------
// Word

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (!alphabet_.contains(l))
      throw ValidationError("letter " + alphabet_.letter_name(l) + " not in alphabet " + alphabet_.spec());
}

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
  static constexpr std::string_view kEpsilon = "\xCE\xB5";
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (text.substr(i, kEpsilon.size()) == kEpsilon) {
      i += kEpsilon.size();
      continue;
    }
    if (c != 'x' && c != 'y') throw ValidationError("malformed word '" + std::string(text) + "'");
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j < text.size() && text[j] == '@') {
      ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    }
    letters.push_back(alphabet.parse_letter(text.substr(i, j - i)));
    i = j;
  }
  return Word(alphabet, std::move(letters));
}

int Word::grading() const {
  if (alphabet_.is_x()) return static_cast<int>(letters_.size());
  int g = 0;
  for (const auto& l : letters_) g += l.index;
  return g;
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  Word w(alphabet_);
  if (pos >= letters_.size()) return w;
  std::size_t end = count == std::string::npos ? letters_.size() : std::min(letters_.size(), pos + count);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return w;
}

Word Word::prepend(const Letter& l) const {
  Word w(alphabet_);
  w.letters_.reserve(letters_.size() + 1);
  w.letters_.push_back(l);
  w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end());
  return w;
}

Word Word::append(const Letter& l) const {
  Word w = *this;
  w.letters_.push_back(l);
  return w;
}

Word Word::operator*(const Word& other) const {
  if (!(alphabet_ == other.alphabet_)) throw ValidationError("alphabet mismatch in concatenation");
  Word w = *this;
  w.letters_.insert(w.letters_.end(), other.letters_.begin(), other.letters_.end());
  return w;
}

std::string Word::str() const {
  std::string s;
  for (const auto& l : letters_) s += alphabet_.letter_name(l);
  return s;
}

std::string Word::display() const { return empty() ? std::string("\xCE\xB5") : str(); }

bool operator<(const Word& a, const Word& b) {
  const auto& alpha = a.alphabet_;
  std::size_t n = std::min(a.letters_.size(), b.letters_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.letters_[i] == b.letters_[i]) continue;
    return alpha.less(a.letters_[i], b.letters_[i]);
  }
  return a.letters_.size() < b.letters_.size();
}

bool GradedLess::operator()(const Word& a, const Word& b) const {
  int ga = a.grading(), gb = b.grading();
  if (ga != gb) return ga < gb;
  // Index order on letters (y1 before y2), independent of the Lyndon order.
  return a.letters() < b.letters();
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = std::hash<int>{}(static_cast<int>(w.alphabet().kind()));
  for (const auto& l : w.letters()) {
    h ^= std::hash<int>{}(l.index * 131 + l.color) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int grading(const Word& w) { return w.grading(); }

namespace {

void enumerate(const Alphabet& a, const std::vector<Letter>& letters, int remaining, std::vector<Letter>& prefix,
               std::vector<Word>& out) {
  if (remaining == 0) {
    out.emplace_back(a, prefix);
    return;
  }
  for (const auto& l : letters) {
    int wt = a.weight(l);
    if (wt > remaining) continue;
    prefix.push_back(l);
    enumerate(a, letters, remaining - wt, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> words_of_grading(const Alphabet& a, int g) {
  std::vector<Word> out;
  if (g < 0) return out;
  auto letters = a.letters_up_to(g);
  std::sort(letters.begin(), letters.end());
  std::vector<Letter> prefix;
  enumerate(a, letters, g, prefix, out);
  return out;
}

std::vector<Word> words_up_to(const Alphabet& a, int max_grading) {
  std::vector<Word> out;
  for (int g = 0; g <= max_grading; ++g) {
    auto layer = words_of_grading(a, g);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

std::vector<Word> lyndon_factorization(const Word& w) {
  // Duval's algorithm.
  const auto& a = w.alphabet();
  const auto& s = w.letters();
  std::size_t n = s.size(), i = 0;
  std::vector<Word> out;
  auto leq = [&](const Letter& p, const Letter& q) { return p == q || a.less(p, q); };
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && leq(s[k], s[j])) {
      k = (s[k] == s[j]) ? k + 1 : i;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.subword(i, j - k));
      i += j - k;
    }
  }
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw ValidationError("is_lyndon: empty word");
  return lyndon_factorization(w).size() == 1;
}

std::pair<Word, Word> standard_factorization(const Word& l) {
  if (l.length() < 2) throw ValidationError("standard factorization needs a word of length >= 2");
  if (!is_lyndon(l)) throw ValidationError("standard factorization of non-Lyndon word " + l.display());
  for (std::size_t i = 1; i < l.length(); ++i) {
    Word r = l.subword(i);
    if (is_lyndon(r)) return {l.subword(0, i), r};
  }
  // The last letter is always a Lyndon suffix.
  throw ComputationError("standard factorization: unreachable");
}

std::vector<Word> lyndon_words(const Alphabet& a, int max_grade) {
  if (max_grade < 1) throw ValidationError("lyndon_words: maxGrade must be >= 1");
  std::vector<Word> out;
  if (a.is_x()) {
    // Fredricksen-Kessler-Maiorana generation; emits every Lyndon word of
    // length <= max_grade in lexicographic order.
    const int k = a.size();
    std::vector<int> w{0};
    while (!w.empty()) {
      std::vector<Letter> letters;
      for (int c : w) letters.push_back({c, 0});
      out.emplace_back(a, std::move(letters));
      const std::size_t m = w.size();
      while (w.size() < static_cast<std::size_t>(max_grade)) w.push_back(w[w.size() - m]);
      while (!w.empty() && w.back() == k - 1) w.pop_back();
      if (!w.empty()) ++w.back();
    }
    std::stable_sort(out.begin(), out.end(), [](const Word& p, const Word& q) { return p.length() < q.length(); });
    return out;
  }
  for (int g = 1; g <= max_grade; ++g) {
    std::size_t start = out.size();
    for (auto& w : words_of_grading(a, g))
      if (is_lyndon(w)) out.push_back(std::move(w));
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  }
  return out;
}

}  // namespace ncs
