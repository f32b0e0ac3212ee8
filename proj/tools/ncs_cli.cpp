// ncs: command-line front end.
//
//   ncs lyndon --alphabet x2 --max 3
//   ncs mul --law stuffle y1 y1
//   ncs eval li --word x1 --z 0.5
//
// Exit status: 0 success, 2 bad input, 1 computation failure (including a failed check).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ncs/error.hpp"
#include "ncs/hopf_bases.hpp"
#include "ncs/hyperlog.hpp"
#include "ncs/json_io.hpp"
#include "ncs/kernels.hpp"
#include "ncs/ncpoly.hpp"
#include "ncs/rational_series.hpp"
#include "ncs/words.hpp"

using namespace ncs;
using Json = nlohmann::json;

namespace {

enum class Format { Text, Json, Csv };

struct Options {
  std::string format = "text";
  int jobs = 0;
  std::string alphabet;
  std::string gamma;
};

Format format_of(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  throw ValidationError("unknown format " + f + " (json|csv|text)");
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// JSON numbers carry the same 15 digits as the text forms.
Json jnum(double v) { return std::stod(num(v)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the argument looks like JSON, a file path otherwise.
Json load_json(const std::string& arg) {
  auto pos = arg.find_first_not_of(" \t\n");
  if (pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '[')) return ncs::json::parse(arg);
  return ncs::json::parse(slurp(arg));
}

PhiTable gamma_table(const Options& o) {
  if (o.gamma.empty()) return PhiTable::stuffle();
  return ncs::json::gamma_from_json(load_json(o.gamma));
}

// Alphabet from --alphabet, else guessed from the words: any y gives Y, else X
// large enough for the highest x index seen.
Alphabet pick_alphabet(const Options& o, const std::vector<std::string>& texts) {
  if (!o.alphabet.empty()) return Alphabet::parse(o.alphabet);
  int xmax = 1;
  for (const auto& t : texts) {
    if (t.find('@') != std::string::npos) throw ValidationError("colored words need --alphabet y@m");
    if (t.find('y') != std::string::npos) return Alphabet::y();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] == 'x') {
        std::size_t j = i + 1;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        if (j > i + 1) xmax = std::max(xmax, std::stoi(t.substr(i + 1, j - i - 1)));
      }
  }
  return Alphabet::x(xmax + 1);
}

cplx parse_complex(std::string t) {
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty()) throw ValidationError("empty complex number");
  try {
    if (t.back() != 'i') return {std::stod(t), 0};
    std::string body = t.substr(0, t.size() - 1);
    // split at the last sign that is not an exponent sign or the leading one
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        cut = k;
        break;
      }
    auto imag = [](const std::string& s) {
      if (s.empty() || s == "+") return 1.0;
      if (s == "-") return -1.0;
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    };
    if (cut == std::string::npos) return {0, imag(body)};
    std::size_t used = 0;
    std::string re = body.substr(0, cut);
    double r = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(re);
    return {r, imag(body.substr(cut))};
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed complex number \"" + t + "\"");
  } catch (const std::out_of_range&) {
    throw ValidationError("complex number out of range \"" + t + "\"");
  }
}

SingularitySet singularities(int roots, const std::string& sigma, bool unit) {
  if (roots > 0 && !sigma.empty()) throw ValidationError("give either --roots-of-unity or --sigma");
  if (roots > 0) return SingularitySet::roots_of_unity(roots);
  if (sigma.empty()) return SingularitySet({cplx{1, 0}}, unit);
  std::vector<cplx> pts;
  std::stringstream ss(sigma);
  for (std::string item; std::getline(ss, item, ',');) pts.push_back(parse_complex(item));
  return SingularitySet(std::move(pts), unit);
}

// ---------------------------------------------------------------------------
// Printing

struct Printer {
  Format f;
  std::ostream& os = std::cout;

  void poly(const NCPoly& p) {
    switch (f) {
      case Format::Text: os << p.to_string() << "\n"; break;
      case Format::Json: os << ncs::json::to_json(p).dump() << "\n"; break;
      case Format::Csv:
        os << "word,coeff\n";
        for (const auto& [w, c] : p.terms()) os << w.str() << "," << ncs::to_string(c) << "\n";
        break;
    }
  }

  void tensor(const TensorPoly& t) {
    switch (f) {
      case Format::Text: os << t.to_string() << "\n"; break;
      case Format::Json: os << ncs::json::to_json(t).dump() << "\n"; break;
      case Format::Csv:
        os << "left,right,coeff\n";
        for (const auto& [k, c] : t.terms()) os << k.first.str() << "," << k.second.str() << "," << ncs::to_string(c) << "\n";
        break;
    }
  }

  void words(const std::vector<Word>& ws) {
    if (f == Format::Json) {
      Json a = Json::array();
      for (const auto& w : ws) a.push_back(w.str());
      os << a.dump() << "\n";
      return;
    }
    if (f == Format::Csv) os << "word\n";
    for (const auto& w : ws) os << w.str() << "\n";
  }

  void values(const std::vector<std::pair<std::string, ComplexVal>>& vs) {
    switch (f) {
      case Format::Json: {
        Json a = Json::array();
        for (const auto& [w, v] : vs)
          a.push_back({{"word", w}, {"re", jnum(v.value.real())}, {"im", jnum(v.value.imag())}, {"err", jnum(v.err)}});
        os << a.dump() << "\n";
        break;
      }
      case Format::Csv:
        os << "word,re,im,err\n";
        for (const auto& [w, v] : vs)
          os << w << "," << num(v.value.real()) << "," << num(v.value.imag()) << "," << num(v.err) << "\n";
        break;
      case Format::Text:
        for (const auto& [w, v] : vs) {
          os << (vs.size() > 1 ? (w.empty() ? "ε" : w) + "  " : "") << num(v.value.real());
          if (v.value.imag() != 0) os << (v.value.imag() < 0 ? " - " : " + ") << num(std::abs(v.value.imag())) << "i";
          os << "  +- " << num(v.err) << "\n";
        }
        break;
    }
  }

  void rational(const Rational& r) {
    if (f == Format::Json)
      os << Json(ncs::to_string(r)).dump() << "\n";
    else
      os << ncs::to_string(r) << "\n";
  }

  void series(const TruncSeries& s) {
    if (f == Format::Json) {
      os << ncs::json::to_json(s).dump() << "\n";
      return;
    }
    if (f == Format::Csv) os << "word,coeff\n";
    for (const auto& [w, c] : s.coeffs()) {
      if (sgn(c) == 0) continue;
      if (f == Format::Csv)
        os << w.str() << "," << ncs::to_string(c) << "\n";
      else
        os << w.display() << "  " << ncs::to_string(c) << "\n";
    }
  }

  void rep(const LinRep& r) {
    if (f == Format::Csv) throw ValidationError("representations have no csv form; use --format json");
    os << ncs::json::to_json(r).dump(f == Format::Text ? 2 : -1) << "\n";
  }

  // Returns the exit status.
  int check(const std::string& name, const CheckReport& r) {
    if (f == Format::Json)
      os << Json{{"check", name}, {"ok", r.ok}, {"detail", r.detail}}.dump() << "\n";
    else if (f == Format::Csv)
      os << "check,ok,detail\n" << name << "," << (r.ok ? "true" : "false") << ",\"" << r.detail << "\"\n";
    else
      os << name << ": " << (r.ok ? "ok" : "FAILED") << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    return r.ok ? 0 : 1;
  }
};

LinRep load_rep(const std::string& arg, const Options& o) {
  std::optional<Alphabet> fb;
  if (!o.alphabet.empty()) fb = Alphabet::parse(o.alphabet);
  return ncs::json::rep_from_json(load_json(arg), fb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative rational series, Hopf bases and hyperlogarithms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", opt.jobs, "Threads for the parallel kernels (0 = runtime default)");
  app.add_option("--alphabet", opt.alphabet, "Alphabet: x<n>, y or y@<m>");
  app.add_option("--gamma", opt.gamma, "Gamma table for phi-shuffle, JSON {\"i,j\": \"p/q\"} (inline or file)");

  std::function<int()> action;

  // lyndon
  auto* lyn = app.add_subcommand("lyndon", "List Lyndon words");
  int lyn_max = 3;
  lyn->add_option("--max", lyn_max, "Largest grading")->required();
  lyn->callback([&] {
    action = [&] {
      Alphabet a = Alphabet::parse(opt.alphabet.empty() ? "x2" : opt.alphabet);
      Printer{format_of(opt.format)}.words(lyndon_words(a, lyn_max));
      return 0;
    };
  });

  // mul
  auto* mul = app.add_subcommand("mul", "Product of two polynomials");
  std::string mul_law = "conc";
  std::vector<std::string> mul_args;
  mul->add_option("--law", mul_law, "conc, shuffle, stuffle or phi");
  mul->add_option("operands", mul_args, "Two polynomials")->expected(2)->required();
  mul->callback([&] {
    action = [&] {
      Alphabet a = pick_alphabet(opt, mul_args);
      NCPoly p = NCPoly::parse(a, mul_args[0]), q = NCPoly::parse(a, mul_args[1]);
      NCPoly r(a);
      if (mul_law == "stuffle") {
        if (!opt.gamma.empty()) throw ValidationError("--law stuffle takes no --gamma; use --law phi");
        r = product(Law::PhiShuffle, p, q, PhiTable::stuffle());
      } else {
        r = product(parse_law(mul_law), p, q, gamma_table(opt));
      }
      Printer{format_of(opt.format)}.poly(r);
      return 0;
    };
  });

  // coprod
  auto* cop = app.add_subcommand("coprod", "Coproduct of a polynomial");
  std::string cop_law = "conc", cop_arg;
  cop->add_option("--law", cop_law, "conc, shuffle or phi");
  cop->add_option("poly", cop_arg, "Polynomial")->required();
  cop->callback([&] {
    action = [&] {
      Alphabet a = pick_alphabet(opt, {cop_arg});
      Printer{format_of(opt.format)}.tensor(coproduct(parse_law(cop_law), NCPoly::parse(a, cop_arg), gamma_table(opt)));
      return 0;
    };
  });

  // pi1
  auto* pi = app.add_subcommand("pi1", "Eulerian projector applied to a polynomial");
  std::string pi_arg;
  pi->add_option("poly", pi_arg, "Polynomial")->required();
  pi->callback([&] {
    action = [&] {
      Alphabet a = pick_alphabet(opt, {pi_arg});
      PhiTable phi = a.is_x() ? PhiTable::zero() : gamma_table(opt);
      Printer{format_of(opt.format)}.poly(pi1(NCPoly::parse(a, pi_arg), phi));
      return 0;
    };
  });

  // basis
  auto* bas = app.add_subcommand("basis", "One element of the P, S, Pi or Sigma basis");
  std::string bas_family, bas_word;
  bas->add_option("--family", bas_family, "P, S, Pi or Sigma")->required()->check(CLI::IsMember({"P", "S", "Pi", "Sigma"}));
  bas->add_option("--word", bas_word, "Indexing word")->required();
  bas->callback([&] {
    action = [&] {
      Alphabet a = pick_alphabet(opt, {bas_word});
      Word w = Word::parse(a, bas_word);
      auto& cache = BasisCache::global();
      NCPoly r(a);
      if (bas_family == "P") r = cache.P(w);
      else if (bas_family == "S") r = cache.S(w);
      else if (bas_family == "Pi") r = cache.Pi(w, gamma_table(opt));
      else r = cache.Sigma(w, gamma_table(opt));
      Printer{format_of(opt.format)}.poly(r);
      return 0;
    };
  });

  // check
  auto* chk = app.add_subcommand("check", "Run an identity check");
  std::string chk_kind, chk_rep;
  int chk_n = 3;
  chk->add_option("kind", chk_kind, "duality, diagonal, mxstar or triangular")
      ->required()
      ->check(CLI::IsMember({"duality", "diagonal", "mxstar", "triangular"}));
  chk->add_option("--N", chk_n, "Truncation grading")->required();
  chk->add_option("--rep", chk_rep, "Representation (mxstar, triangular)");
  chk->callback([&] {
    action = [&]() -> int {
      Printer out{format_of(opt.format)};
      if (chk_kind == "duality" || chk_kind == "diagonal") {
        Alphabet a = Alphabet::parse(opt.alphabet.empty() ? "x2" : opt.alphabet);
        PhiTable phi = a.is_x() ? PhiTable::zero() : gamma_table(opt);
        return out.check(chk_kind, chk_kind == "duality" ? duality_check(a, chk_n, phi)
                                                         : diagonal_factorization_check(a, chk_n, phi));
      }
      if (chk_rep.empty()) throw ValidationError("check " + chk_kind + " needs --rep");
      LinRep r = load_rep(chk_rep, opt);
      if (chk_kind == "mxstar") return out.check(chk_kind, mxstar_factorization_check(r, chk_n, gamma_table(opt)));
      auto d = triangular_decompose(r, chk_n);
      CheckReport rep{d.matches, d.detail};
      if (rep.detail.empty()) rep.detail = "nilpotency order " + std::to_string(d.nilpotency_order);
      return out.check(chk_kind, rep);
    };
  });

  // rat
  auto* rat = app.add_subcommand("rat", "Operations on linear representations");
  std::string rat_op, rat_word;
  std::vector<std::string> rat_reps;
  int rat_n = -1;
  rat->add_option("op", rat_op, "coeff, sum, conc, star, shuffle, phistar, minimize, decompose, sweedler")
      ->required()
      ->check(CLI::IsMember({"coeff", "sum", "conc", "star", "shuffle", "phistar", "phishuffle", "minimize", "decompose",
                             "sweedler"}));
  rat->add_option("--rep", rat_reps, "Representation JSON (inline or file); binary ops take two")->required();
  rat->add_option("--word", rat_word, "Word for coeff");
  rat->add_option("--N", rat_n, "coeff: print every coefficient up to this grading");
  rat->callback([&] {
    action = [&]() -> int {
      Printer out{format_of(opt.format)};
      auto need = [&](std::size_t k) {
        if (rat_reps.size() != k)
          throw ValidationError("rat " + rat_op + " takes " + std::to_string(k) + " --rep argument" + (k > 1 ? "s" : ""));
      };
      const bool binary = rat_op == "sum" || rat_op == "conc" || rat_op == "shuffle" || rat_op == "phistar" ||
                          rat_op == "phishuffle";
      need(binary ? 2 : 1);
      LinRep a = load_rep(rat_reps[0], opt);
      if (rat_op == "coeff") {
        if (rat_n >= 0) {
          out.series(eval_truncated(a, rat_n));
        } else {
          out.rational(coeff(a, Word::parse(a.alphabet(), rat_word)));
        }
        return 0;
      }
      if (rat_op == "star") {
        out.rep(rat_star(a));
        return 0;
      }
      if (rat_op == "minimize") {
        out.rep(minimize(a));
        return 0;
      }
      if (rat_op == "decompose") {
        auto parts = delta_conc_decompose(a);
        Json arr = Json::array();
        for (const auto& [g, d] : parts) arr.push_back({{"G", ncs::json::to_json(g)}, {"D", ncs::json::to_json(d)}});
        if (out.f == Format::Csv) throw ValidationError("decompose has no csv form; use --format json");
        std::cout << arr.dump(out.f == Format::Text ? 2 : -1) << "\n";
        return 0;
      }
      if (rat_op == "sweedler") {
        auto v = sweedler_membership(a);
        if (out.f == Format::Json)
          std::cout << Json{{"member", v.member}, {"rank", v.rank}, {"message", v.message}}.dump() << "\n";
        else
          std::cout << v.message << "\n";
        return 0;
      }
      LinRep b = load_rep(rat_reps[1], opt);
      if (rat_op == "sum") out.rep(rat_sum(a, b));
      else if (rat_op == "conc") out.rep(rat_conc(a, b));
      else if (rat_op == "shuffle") out.rep(rat_shuffle(a, b));
      else out.rep(rat_phi_shuffle(a, b, gamma_table(opt)));
      return 0;
    };
  });

  // eval
  auto* ev = app.add_subcommand("eval", "Numeric hyperlogarithms, harmonic sums, polyzetas, Chen series");
  std::string ev_kind, ev_word, ev_sigma, ev_z = "0.5", ev_rep;
  double ev_z0 = 0;
  int ev_roots = 0, ev_n = 3, ev_order = 16;
  long ev_terms = 10000, ev_nmax = 0;
  bool ev_unit = false;
  double ev_tol = 1e-12;
  ev->add_option("kind", ev_kind, "li, h, zeta, chen or output")
      ->required()
      ->check(CLI::IsMember({"li", "h", "zeta", "chen", "output"}));
  ev->add_option("--word", ev_word, "Word over X (li, zeta) or Y (h, zeta)");
  ev->add_option("--z", ev_z, "Evaluation point (complex for li)");
  ev->add_option("--z0", ev_z0, "Base point of the Chen path");
  ev->add_option("--roots-of-unity", ev_roots, "Singularities at the m-th roots of unity");
  ev->add_option("--sigma", ev_sigma, "Singularities s_1,...,s_m, e.g. \"1,-1,0.5+0.5i\"");
  ev->add_flag("--unit-modulus", ev_unit, "Reject singularities off the unit circle");
  ev->add_option("--n", ev_terms, "h: upper index; zeta: number of terms");
  ev->add_option("--nmax", ev_nmax, "li: series cutoff (0 = from the tail bound)");
  ev->add_option("--N", ev_n, "chen, output: truncation length");
  ev->add_option("--rep", ev_rep, "output: representation over X");
  ev->add_option("--order", ev_order, "Gauss-Legendre nodes per panel");
  ev->add_option("--tol", ev_tol, "Panel doubling tolerance");
  ev->callback([&] {
    action = [&]() -> int {
      Printer out{format_of(opt.format)};
      SingularitySet sigma = singularities(ev_roots, ev_sigma, ev_unit);
      QuadConfig quad;
      quad.order = ev_order;
      quad.tol = ev_tol;
      auto word_for = [&](bool y_ok) {
        if (ev_word.empty() && ev_kind != "chen" && ev_kind != "output") throw ValidationError("--word is required");
        if (y_ok && ev_word.find('y') != std::string::npos) return Word::parse(sigma.y_alphabet(), ev_word);
        return Word::parse(sigma.x_alphabet(), ev_word);
      };
      if (ev_kind == "li") {
        Word w = word_for(false);
        out.values({{w.str(), polylog(w, parse_complex(ev_z), sigma, ev_nmax)}});
      } else if (ev_kind == "h") {
        Word w = word_for(true);
        if (w.alphabet().is_x()) w = pi_Y(w, sigma);
        out.values({{w.str(), harmonic_sum(w, ev_terms, sigma)}});
      } else if (ev_kind == "zeta") {
        Word w = word_for(true);
        out.values({{w.str(), polyzeta(w, ev_terms, sigma)}});
      } else {
        cplx z = parse_complex(ev_z);
        if (z.imag() != 0) throw ValidationError("Chen paths run along the real axis; --z must be real");
        FormFamily forms{sigma};
        if (ev_kind == "chen") {
          auto s = chen_series(forms, ev_z0, z.real(), ev_n, quad);
          std::vector<std::pair<std::string, ComplexVal>> vs;
          for (const auto& [w, v] : s.coeffs()) vs.emplace_back(w.str(), v);
          if (!ev_word.empty()) {
            Word w = word_for(false);
            vs = {{w.str(), s.at(w)}};
          }
          out.values(vs);
        } else {
          if (ev_rep.empty()) throw ValidationError("eval output needs --rep");
          LinRep r = load_rep(ev_rep, opt);
          out.values({{"output", system_output(r, forms, ev_z0, z.real(), ev_n, quad)}});
        }
      }
      return 0;
    };
  });

  // demo
  auto* demo = app.add_subcommand("demo", "Worked examples");
  auto* hyp = demo->add_subcommand("hypergeometric", "Gauss hypergeometric equation as a linear system");
  demo->require_subcommand(1);
  std::string t0s = "1/2", t1s = "1/2", t2s = "1";
  double hz0 = 0.05, hz = 0.4;
  int hn = 8;
  hyp->add_option("--t0", t0s, "Parameter t0 (rational)");
  hyp->add_option("--t1", t1s, "Parameter t1 (rational)");
  hyp->add_option("--t2", t2s, "Parameter t2 (rational)");
  hyp->add_option("--z0", hz0, "Base point");
  hyp->add_option("--z", hz, "End point");
  hyp->add_option("--N", hn, "Truncation length");
  hyp->callback([&] {
    action = [&]() -> int {
      Rational t0 = parse_rational(t0s), t1 = parse_rational(t1s), t2 = parse_rational(t2s);
      QMatrix eta = hypergeometric_initial_state(t0.get_d(), t1.get_d(), t2.get_d(), hz0);
      auto sys = hypergeometric_system(t0, t1, t2, eta);
      ComplexVal v = system_output(sys.rep, sys.forms, hz0, hz, hn);
      double ref = gauss_2f1(t0.get_d(), t1.get_d(), t2.get_d(), hz).first;
      Format f = format_of(opt.format);
      if (f == Format::Json) {
        std::cout << Json{{"output", jnum(v.value.real())}, {"err", jnum(v.err)}, {"2F1", jnum(ref)},
                          {"diff", jnum(std::abs(v.value.real() - ref))}}
                         .dump()
                  << "\n";
      } else if (f == Format::Csv) {
        std::cout << "output,err,2F1,diff\n"
                  << num(v.value.real()) << "," << num(v.err) << "," << num(ref) << ","
                  << num(std::abs(v.value.real() - ref)) << "\n";
      } else {
        std::cout << "output  " << num(v.value.real()) << "  +- " << num(v.err) << "\n"
                  << "2F1     " << num(ref) << "\n"
                  << "diff    " << num(std::abs(v.value.real() - ref)) << "\n";
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    format_of(opt.format);
    kernels::set_jobs(opt.jobs);
    return action ? action() : 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 1;
  }
}
