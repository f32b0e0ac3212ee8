#include "ncs/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

namespace ncs::kernels {

namespace {

int g_jobs = 0;

std::vector<Letter> eval_letters(const LinRep& r, int n) {
  const Alphabet& a = r.alphabet();
  if (a.is_y() && n > r.max_weight())
    throw ValidationError("representation only covers letters of weight <= " + std::to_string(r.max_weight()) +
                          ", cannot evaluate up to grading " + std::to_string(n));
  auto ls = a.letters_up_to(n);
  std::sort(ls.begin(), ls.end());
  return ls;
}

using Out = std::vector<std::pair<Word, Rational>>;

// Depth-first walk sharing v = nu mu(prefix) between all extensions.
void walk(const LinRep& r, const std::vector<Letter>& letters, const Word& prefix, const QMatrix& v, int remaining,
          Out& out) {
  out.emplace_back(prefix, (v * r.eta())(0, 0));
  for (const auto& l : letters) {
    int wt = r.alphabet().weight(l);
    if (wt > remaining) continue;
    walk(r, letters, prefix.append(l), v * r.mu(l), remaining - wt, out);
  }
}

void collect(const LinRep& r, const std::vector<Letter>& letters, const Word& prefix, const QMatrix& v,
             int remaining, std::size_t depth, Out& shallow, std::vector<std::pair<Word, QMatrix>>& roots) {
  if (prefix.length() == depth) {
    roots.emplace_back(prefix, v);
    return;
  }
  shallow.emplace_back(prefix, (v * r.eta())(0, 0));
  for (const auto& l : letters) {
    int wt = r.alphabet().weight(l);
    if (wt > remaining) continue;
    collect(r, letters, prefix.append(l), v * r.mu(l), remaining - wt, depth, shallow, roots);
  }
}

}  // namespace

void set_jobs(int jobs) {
  g_jobs = jobs;
  if (jobs > 0) omp_set_num_threads(jobs);
}

int jobs() { return g_jobs > 0 ? g_jobs : omp_get_max_threads(); }

TruncSeries eval_truncated_serial(const LinRep& r, int n) {
  if (n < 0) throw ValidationError("truncation bound must be >= 0");
  TruncSeries s(r.alphabet(), n);
  if (r.rank() == 0) return s;
  auto letters = eval_letters(r, n);
  Out out;
  walk(r, letters, Word(r.alphabet()), r.nu(), n, out);
  for (auto& [w, c] : out) s.set(w, std::move(c));
  return s;
}

TruncSeries eval_truncated_parallel(const LinRep& r, int n) {
  if (n < 0) throw ValidationError("truncation bound must be >= 0");
  TruncSeries s(r.alphabet(), n);
  if (r.rank() == 0) return s;
  auto letters = eval_letters(r, n);
  Out shallow;
  std::vector<std::pair<Word, QMatrix>> roots;
  collect(r, letters, Word(r.alphabet()), r.nu(), n, 2, shallow, roots);
  std::vector<Out> parts(roots.size());
  const long count = static_cast<long>(roots.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < count; ++t) {
    const auto& [w, v] = roots[static_cast<std::size_t>(t)];
    walk(r, letters, w, v, n - w.grading(), parts[static_cast<std::size_t>(t)]);
  }
  for (auto& [w, c] : shallow) s.set(w, std::move(c));
  for (auto& part : parts)
    for (auto& [w, c] : part) s.set(w, std::move(c));
  return s;
}

namespace {

void integrate_one(const ChenGrid& g, const NodeValues& u, const NodeValues& src, NodeValues& out) {
  const int q = g.order;
  out.assign(g.size() + 1, cplx{});
  std::vector<cplx> f(static_cast<std::size_t>(q));
  cplx acc{};
  for (int p = 0; p < g.panels; ++p) {
    const std::size_t base = static_cast<std::size_t>(p) * q;
    cplx total{};
    for (int k = 0; k < q; ++k) {
      f[k] = u[base + k] * src[base + k];
      total += g.weights[k] * f[k];
    }
    for (int j = 0; j < q; ++j) {
      cplx part{};
      for (int k = 0; k < q; ++k) part += g.integration[static_cast<std::size_t>(j) * q + k] * f[k];
      out[base + j] = acc + g.half_width * part;
    }
    acc += g.half_width * total;
  }
  out[g.size()] = acc;
}

}  // namespace

void chen_layer_serial(const ChenGrid& g, const std::vector<NodeValues>& u, const std::vector<int>& letters,
                       const std::vector<const NodeValues*>& src, std::vector<NodeValues>& out) {
  out.resize(letters.size());
  for (std::size_t t = 0; t < letters.size(); ++t) integrate_one(g, u[letters[t]], *src[t], out[t]);
}

void chen_layer_parallel(const ChenGrid& g, const std::vector<NodeValues>& u, const std::vector<int>& letters,
                         const std::vector<const NodeValues*>& src, std::vector<NodeValues>& out) {
  out.resize(letters.size());
  const long count = static_cast<long>(letters.size());
#pragma omp parallel for schedule(static)
  for (long t = 0; t < count; ++t) {
    auto i = static_cast<std::size_t>(t);
    integrate_one(g, u[letters[i]], *src[i], out[i]);
  }
}

std::vector<ComplexVal> harmonic_sums_serial(const std::vector<Word>& words, long n, const SingularitySet& sigma) {
  std::vector<ComplexVal> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(harmonic_sum(w, n, sigma));
  return out;
}

std::vector<ComplexVal> harmonic_sums_parallel(const std::vector<Word>& words, long n, const SingularitySet& sigma) {
  std::vector<ComplexVal> out(words.size());
  const long count = static_cast<long>(words.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < count; ++t) {
    try {
      out[static_cast<std::size_t>(t)] = harmonic_sum(words[static_cast<std::size_t>(t)], n, sigma);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ncs::kernels

namespace ncs {

TruncSeries eval_truncated(const LinRep& r, int n) { return kernels::eval_truncated_parallel(r, n); }

}  // namespace ncs
