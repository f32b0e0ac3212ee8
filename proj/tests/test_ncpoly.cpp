#include <doctest.h>

#include "ncs/error.hpp"
#include "ncs/ncpoly.hpp"
#include "oracles.hpp"

using namespace ncs;

namespace {
Alphabet X2 = Alphabet::x(2);
Alphabet Y = Alphabet::y();
NCPoly px(const char* s) { return NCPoly::parse(X2, s); }
NCPoly py(const char* s) { return NCPoly::parse(Y, s); }
Rational stuffle_gamma(int, int) { return 1; }
}  // namespace

TEST_CASE("polynomial text form") {
  CHECK(px("x0 - 1/2 x1x0 + 3").to_string() == "3 + x0 - 1/2 x1x0");
  CHECK(px("0").to_string() == "0");
  CHECK(px("x0 - x0").is_zero());
  CHECK(px("2*x0x1").coeff(Word::parse(X2, "x0x1")) == 2);
  CHECK(NCPoly::parse(X2, px("x0x1 - 2/3 x1 + 1").to_string()) == px("x0x1 - 2/3 x1 + 1"));
  CHECK_THROWS_AS(px("x0 +"), ValidationError);
  CHECK_THROWS_AS(px("1/0 x0"), ValidationError);
}

TEST_CASE("conc") {
  CHECK(conc(px("x0"), px("x1")) == px("x0x1"));
  CHECK(conc(px("x0 + x1"), px("x0")) == px("x0x0 + x1x0"));
  CHECK(conc(NCPoly::one(X2), px("x0 - 2 x1x1")) == px("x0 - 2 x1x1"));
  CHECK_THROWS_AS(conc(px("x0"), py("y1")), ValidationError);
}

TEST_CASE("shuffle examples") {
  CHECK(shuffle(px("x0"), px("x1")) == px("x0x1 + x1x0"));
  CHECK(shuffle(px("x0"), px("x0")) == px("2 x0x0"));
  CHECK(shuffle(px("x0x1"), px("x0")) == px("2 x0x0x1 + x0x1x0"));
}

TEST_CASE("phi-shuffle examples") {
  CHECK(phi_shuffle(py("y1"), py("y1"), PhiTable::stuffle()) == py("2 y1y1 + y2"));
  CHECK(phi_shuffle(py("y1"), py("y1"), PhiTable::zero()) == py("2 y1y1"));
  Alphabet y3 = Alphabet::y(3);
  auto r = phi_shuffle(NCPoly::parse(y3, "y1@1"), NCPoly::parse(y3, "y1@2"), PhiTable::stuffle());
  CHECK(r == NCPoly::parse(y3, "y1@1y1@2 + y1@2y1@1 + y2@0"));
  CHECK_THROWS_AS(phi_shuffle(px("x0"), px("x1"), PhiTable::stuffle()), ValidationError);
}

TEST_CASE("shuffle and phi-shuffle match the brute-force oracles") {
  auto xs = oracle::words_upto(X2, 4);
  for (const auto& u : xs)
    for (const auto& v : xs) {
      if (u.grading() + v.grading() > 6) continue;
      CHECK(shuffle(u, v) == oracle::shuffle(u, v));
    }
  for (const auto& a : {Y, Alphabet::y(2)}) {
    auto ys = oracle::words_upto(a, 4);
    for (const auto& u : ys)
      for (const auto& v : ys) {
        if (u.grading() + v.grading() > 6) continue;
        CHECK(phi_shuffle(u, v, PhiTable::stuffle()) == oracle::quasi_shuffle(u, v, stuffle_gamma));
      }
  }
  PhiTable half = PhiTable::constant(Rational(1, 2));
  auto ys = oracle::words_upto(Y, 3);
  for (const auto& u : ys)
    for (const auto& v : ys)
      CHECK(phi_shuffle(u, v, half) == oracle::quasi_shuffle(u, v, [](int, int) { return Rational(1, 2); }));
}

TEST_CASE("commutativity and associativity up to grading 6") {
  auto xs = oracle::words_upto(X2, 4);
  for (const auto& u : xs)
    for (const auto& v : xs) {
      if (u.grading() + v.grading() > 6) continue;
      CHECK(shuffle(u, v) == shuffle(v, u));
      for (const auto& w : xs) {
        if (u.grading() + v.grading() + w.grading() > 6) continue;
        CHECK(shuffle(shuffle(u, v), NCPoly::word(w)) == shuffle(NCPoly::word(u), shuffle(v, w)));
      }
    }
  PhiTable st = PhiTable::stuffle();
  auto ys = oracle::words_upto(Y, 4);
  for (const auto& u : ys)
    for (const auto& v : ys) {
      if (u.grading() + v.grading() > 6) continue;
      CHECK(phi_shuffle(u, v, st) == phi_shuffle(v, u, st));
      for (const auto& w : ys) {
        if (u.grading() + v.grading() + w.grading() > 6) continue;
        CHECK(phi_shuffle(phi_shuffle(u, v, st), NCPoly::word(w), st) ==
              phi_shuffle(NCPoly::word(u), phi_shuffle(v, w, st), st));
      }
    }
}

TEST_CASE("phi table validation") {
  CHECK(PhiTable::stuffle().gamma(3, 4) == 1);
  CHECK(PhiTable::zero().is_zero());
  auto t = PhiTable::from_entries({{{1, 1}, Rational(2)}});
  CHECK(t.gamma(1, 1) == 2);
  CHECK(t.gamma(1, 2) == 0);
  // mirrored entries are filled in
  auto m = PhiTable::from_entries({{{1, 2}, Rational(0)}, {{1, 1}, Rational(0)}});
  CHECK(m.is_zero());
  CHECK_THROWS_AS(PhiTable::from_entries({{{1, 2}, Rational(1)}, {{2, 1}, Rational(2)}}), ValidationError);
  // associative as long as the letter merge is: gamma(1,1) alone passes,
  // gamma(1,1) gamma(2,2) != gamma(1,2) gamma(1,3) fails at weight 4
  CHECK_NOTHROW(PhiTable::from_entries({{{1, 1}, Rational(1)}}));
  CHECK_THROWS_AS(PhiTable::from_entries({{{1, 1}, Rational(1)}, {{1, 2}, Rational(1)}, {{2, 2}, Rational(1)}}),
                  ValidationError);
  CHECK(PhiTable::stuffle().fingerprint() != PhiTable::zero().fingerprint());
}

TEST_CASE("delta_conc") {
  CHECK(delta_conc(px("x0")).to_string() == "1⊗x0 + x0⊗1");
  auto d = delta_conc(px("x0x1"));
  CHECK(d.coeff(Word(X2), Word::parse(X2, "x0x1")) == 1);
  CHECK(d.coeff(Word::parse(X2, "x0"), Word::parse(X2, "x1")) == 1);
  CHECK(d.coeff(Word::parse(X2, "x0x1"), Word(X2)) == 1);
  CHECK(d.terms().size() == 3);
  CHECK(delta_conc(NCPoly::one(X2)).to_string() == "1⊗1");
  for (const auto& w : oracle::words_upto(X2, 5)) {
    auto t = delta_conc(w);
    for (const auto& u : oracle::words_upto(X2, 5))
      for (const auto& v : oracle::words_upto(X2, 5))
        if (u.grading() + v.grading() == w.grading()) CHECK(t.coeff(u, v) == (u * v == w ? 1 : 0));
  }
}

TEST_CASE("delta_shuffle and delta_phi duality") {
  CHECK(delta_shuffle(px("x0x0")).to_string() == "1⊗x0x0 + 2 x0⊗x0 + x0x0⊗1");
  CHECK(delta_shuffle(px("x0x1")).coeff(Word::parse(X2, "x0"), Word::parse(X2, "x1")) == 1);
  CHECK(delta_phi(py("y2"), PhiTable::stuffle()).to_string() == "1⊗y2 + y1⊗y1 + y2⊗1");
  CHECK(delta_phi(py("y1"), PhiTable::stuffle()).to_string() == "1⊗y1 + y1⊗1");
  CHECK(delta_phi(py("y1y1"), PhiTable::stuffle()).coeff(Word::parse(Y, "y1"), Word::parse(Y, "y1")) == 2);
  CHECK_THROWS_AS(delta_phi(px("x0"), PhiTable::stuffle()), ValidationError);

  auto xs = oracle::words_upto(X2, 6);
  for (const auto& w : xs) {
    auto t = delta_shuffle(w);
    for (const auto& u : xs)
      for (const auto& v : xs)
        if (u.grading() + v.grading() == w.grading()) CHECK(t.coeff(u, v) == oracle::shuffle(u, v).coeff(w));
  }
  for (const auto& a : {Y, Alphabet::y(2)}) {
    auto ys = oracle::words_upto(a, a.colored() ? 5 : 6);
    for (const auto& w : ys) {
      auto t = delta_phi(w, PhiTable::stuffle());
      for (const auto& u : ys)
        for (const auto& v : ys)
          if (u.grading() + v.grading() == w.grading())
            CHECK(t.coeff(u, v) == oracle::quasi_shuffle(u, v, stuffle_gamma).coeff(w));
    }
  }
}

TEST_CASE("pi1 examples") {
  CHECK(pi1(py("y1"), PhiTable::stuffle()) == py("y1"));
  CHECK(pi1(py("y2"), PhiTable::stuffle()) == py("y2 - 1/2 y1y1"));
  CHECK(pi1(px("x0x0"), PhiTable::zero()).is_zero());
  CHECK(pi1(px("x0x1"), PhiTable::zero()) == px("1/2 x0x1 - 1/2 x1x0"));
  CHECK(pi1(NCPoly::one(Y), PhiTable::stuffle()).is_zero());
}

TEST_CASE("pi1 agrees with the tuple expansion") {
  for (const auto& w : oracle::words_upto(Y, 5)) {
    if (w.empty()) continue;
    CHECK(pi1(w, PhiTable::stuffle()) == oracle::pi1(w, stuffle_gamma));
  }
  for (const auto& w : oracle::words_upto(X2, 4)) {
    if (w.empty()) continue;
    CHECK(pi1(w, PhiTable::zero()) == oracle::pi1(w, [](int, int) { return Rational(0); }));
  }
}

TEST_CASE("pi1 is idempotent and lands in primitives") {
  PhiTable st = PhiTable::stuffle();
  for (const auto& w : oracle::words_upto(Y, 6)) {
    NCPoly p = pi1(w, st);
    CHECK(pi1(p, st) == p);
  }
  for (int k = 1; k <= 6; ++k) {
    NCPoly p = pi1(Word(Y, {Letter{k, 0}}), st);
    TensorPoly d = delta_phi(p, st);
    d -= tensor(NCPoly::one(Y), p);
    d -= tensor(p, NCPoly::one(Y));
    CHECK(d.is_zero());
  }
}

TEST_CASE("phi_pi1 is unitriangular on each graded piece") {
  // y_k -> pi1(y_k) = y_k + (terms of longer length), so the image of a word w is
  // w plus words of the same weight and greater length.
  PhiTable st = PhiTable::stuffle();
  for (int g = 1; g <= 6; ++g)
    for (const auto& w : words_of_grading(Y, g)) {
      NCPoly img = NCPoly::one(Y);
      for (const auto& l : w) img = conc(img, pi1(Word(Y, {l}), st));
      CHECK(img.coeff(w) == 1);
      for (const auto& [v, c] : img.terms()) {
        CHECK(v.grading() == g);
        if (!(v == w)) CHECK(v.length() > w.length());
      }
    }
}

TEST_CASE("character tests") {
  // sum_w w / |w|! is a shuffle character; sum_w w is a conc character but not a shuffle one.
  TruncSeries e(X2, 4), all(X2, 4);
  for (const auto& w : words_up_to(X2, 4)) {
    e.set(w, 1 / factorial(static_cast<unsigned>(w.length())));
    all.set(w, 1);
  }
  CHECK(is_character(e, Law::Shuffle, 4));
  CHECK(is_character(all, Law::Conc, 4));
  CHECK_FALSE(is_character(all, Law::Shuffle, 4));
  TruncSeries s = series_from_poly(px("1 + x0"), 2);
  CHECK_FALSE(is_character(s, Law::Shuffle, 2));
  CHECK_FALSE(is_character(series_from_poly(px("x0"), 2), Law::Conc, 2));

  CHECK(is_infinitesimal_character(series_from_poly(px("x0"), 3), Law::Shuffle, 3));
  CHECK_FALSE(is_infinitesimal_character(series_from_poly(NCPoly::one(X2), 3), Law::Shuffle, 3));
  CHECK(is_infinitesimal_character(series_from_poly(pi1(py("y2"), PhiTable::stuffle()), 4), Law::PhiShuffle, 4,
                                   PhiTable::stuffle()));
  CHECK_FALSE(is_infinitesimal_character(series_from_poly(py("y2"), 4), Law::PhiShuffle, 4, PhiTable::stuffle()));
}
