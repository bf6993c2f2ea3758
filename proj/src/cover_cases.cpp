#include "lamina/cover_cases.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace lamina {

namespace {

// sigma(a): fixed point 1, cycle (2 3 ... N+1); 0-based internally
Permutation alpha_monodromy(int n) {
  std::vector<int> images(n + 1);
  images[0] = 0;
  for (int i = 1; i <= n; ++i) images[i] = (i == n) ? 1 : i + 1;
  return Permutation::from_images(std::move(images));
}

// target cycle (1 2 ... N), fixing N+1
Permutation shift_cycle(int n) {
  std::vector<int> images(n + 1);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
  images[n] = n;
  return Permutation::from_images(std::move(images));
}

// Lexicographically least b with b o target o b^-1 == conjugate, found by a
// plain scan over S_d. Fixed points must correspond, which rejects nearly
// every candidate in one comparison.
struct ConjugatorSearch {
  Permutation witness;
  long searched = 0;
  bool found = false;
};

ConjugatorSearch find_conjugator(const Permutation& target,
                                 const Permutation& conjugate) {
  int d = target.degree();
  ConjugatorSearch out;
  std::vector<int> b(d);
  std::iota(b.begin(), b.end(), 0);
  do {
    ++out.searched;
    bool ok = true;
    for (int x = 0; x < d && ok; ++x)
      if (b[target(x)] != conjugate(b[x])) ok = false;
    if (ok) {
      out.witness = Permutation::from_images(b);
      out.found = true;
      return out;
    }
  } while (std::next_permutation(b.begin(), b.end()));
  return out;
}

// All permutations of degree d supported on the first `window` points,
// ascending.
std::vector<Permutation> windowed_permutations(int d, int window) {
  window = std::min(window, d);
  std::vector<int> w(window);
  std::iota(w.begin(), w.end(), 0);
  std::vector<Permutation> out;
  do {
    std::vector<int> images(d);
    std::iota(images.begin(), images.end(), 0);
    for (int i = 0; i < window; ++i) images[i] = w[i];
    out.push_back(Permutation::from_images(std::move(images)));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

struct CommutatorSearch {
  Permutation b, c;
  long searched = 0;
  bool found = false;
};

// Pair (b, c) with c^-1 b^-1 c b == target, scanned over a bounded support
// window in deterministic order; a seed shuffles the order.
CommutatorSearch find_commutator_pair(const Permutation& target, int window,
                                      unsigned seed) {
  CommutatorSearch out;
  auto cands = windowed_permutations(target.degree(), window);
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(cands.begin(), cands.end(), rng);
  }
  for (const auto& b : cands) {
    Permutation bi = b.inverse();
    for (const auto& c : cands) {
      ++out.searched;
      Permutation value = c.inverse().after(bi.after(c.after(b)));
      if (value == target) {
        out.b = b;
        out.c = c;
        out.found = true;
        return out;
      }
    }
  }
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<int, int>, CaseConstruction>& case_cache() {
  static std::map<std::pair<int, int>, CaseConstruction> cache;
  return cache;
}

}  // namespace

std::string CaseConstruction::report() const {
  std::string out = "case " + std::to_string(case_id) +
                    ", N=" + std::to_string(n) + ", degree " +
                    std::to_string(cover.degree) + "\n";
  out += "  alpha=" + alpha.str() + ": spectrum " + alpha_spectrum.str() +
         (alpha_ok ? " = {1, N}" : " MISMATCH") +
         (alpha_nonseparating ? ", non-separating" : "") + "\n";
  out += "  beta=" + beta.str() + ": spectrum " + beta_spectrum.str() +
         (beta_ok ? ", no (1:1) lift" : " HAS A (1:1) LIFT") + "\n";
  if (!witness_note.empty()) out += "  " + witness_note + "\n";
  return out;
}

CaseConstruction build_case(int case_id, int n, unsigned seed) {
  if (case_id < 1 || case_id > 4)
    throw std::invalid_argument("case must be 1..4");
  int min_n = case_id <= 2 ? 1 : (case_id == 3 ? 2 : 4);
  if (n < min_n)
    throw std::invalid_argument("case " + std::to_string(case_id) +
                                " needs N >= " + std::to_string(min_n));
  if (seed == 0) {
    std::lock_guard lock(cache_mutex());
    auto it = case_cache().find({case_id, n});
    if (it != case_cache().end()) return it->second;
  }

  int d = n + 1;
  CaseConstruction cc;
  cc.case_id = case_id;
  cc.n = n;
  std::map<std::string, Permutation> mono;
  mono.emplace("a", alpha_monodromy(n));
  std::vector<std::string> alphabet{"a", "b"};
  cc.alpha = Word::parse("a");

  switch (case_id) {
    case 1:
    case 2: {
      // sigma(b): one cycle of length N+1
      std::vector<int> images(d);
      for (int i = 0; i < d; ++i) images[i] = (i + 1) % d;
      mono.emplace("b", Permutation::from_images(std::move(images)));
      cc.beta = Word::parse("b");
      break;
    }
    case 3: {
      // want sigma(b a^-1 b^-1) == (1 2 ... N), i.e. b conjugates the shift
      // cycle to sigma(a)^-1
      auto search =
          find_conjugator(shift_cycle(n), alpha_monodromy(n).inverse());
      cc.searched = search.searched;
      if (!search.found)
        throw std::runtime_error(
            "witness search failed after " + std::to_string(search.searched) +
            " candidates in S_" + std::to_string(d));
      mono.emplace("b", search.witness);
      cc.beta = Word::parse("a b a^-1 b^-1");
      cc.witness_note =
          "sigma(b)=" + search.witness.cycle_string() + " found after " +
          std::to_string(search.searched) + " of " + std::to_string(d) +
          "! candidates";
      break;
    }
    case 4: {
      // want sigma(b c b^-1 c^-1) == (1 3 5)
      Permutation target = Permutation::from_cycles(d, {{1, 3, 5}});
      auto search = find_commutator_pair(target, 6, seed);
      cc.searched = search.searched;
      if (!search.found)
        throw std::runtime_error(
            "witness pair search failed after " +
            std::to_string(search.searched) + " candidates (support window 6)");
      mono.emplace("b", search.b);
      mono.emplace("c", search.c);
      alphabet.push_back("c");
      cc.beta = Word::parse("a b c b^-1 c^-1");
      cc.witness_note = "sigma(b)=" + search.b.cycle_string() +
                        ", sigma(c)=" + search.c.cycle_string() +
                        " found after " + std::to_string(search.searched) +
                        " pairs";
      break;
    }
  }

  cc.cover = make_cover(d, alphabet, std::move(mono));
  cc.alpha_spectrum = lift_spectrum(cc.cover, cc.alpha);
  cc.beta_spectrum = lift_spectrum(cc.cover, cc.beta);
  std::vector<int> expected{1, n};
  std::sort(expected.begin(), expected.end());
  cc.alpha_ok = cc.alpha_spectrum.degrees == expected;
  cc.beta_ok = !std::count(cc.beta_spectrum.degrees.begin(),
                           cc.beta_spectrum.degrees.end(), 1);
  cc.alpha_nonseparating =
      word_nonseparating_mod2(cc.alpha, cc.cover.alphabet);
  if (seed == 0) {
    std::lock_guard lock(cache_mutex());
    case_cache().emplace(std::make_pair(case_id, n), cc);
  }
  return cc;
}

namespace {

PermCover extend_alphabet(const PermCover& c,
                          const std::vector<std::string>& alphabet) {
  std::map<std::string, Permutation> mono = c.monodromy;
  for (const auto& gen : alphabet)
    if (!mono.count(gen)) mono.emplace(gen, Permutation(c.degree));
  return make_cover(c.degree, alphabet, std::move(mono));
}

}  // namespace

std::string DriverReport::str() const {
  std::string out = "driver: N=" + std::to_string(n) + ", product degree " +
                    std::to_string(product.product.degree) + ", " +
                    std::to_string(product.components.size()) +
                    " component(s), basepoint component size " +
                    std::to_string(basepoint_component_size) + "\n";
  out += "  alpha: " + std::to_string(alpha_degree1_in_component) +
         " (1:1) lift(s) on basepoint component, " +
         std::to_string(alpha_degree1_total) + " total\n";
  for (std::size_t i = 0; i < cases.size(); ++i)
    out += "  beta[" + std::to_string(i) + "] (case " +
           std::to_string(cases[i].case_id) + ", " + cases[i].beta.str() +
           "): " + std::to_string(beta_degree1_total[i]) + " (1:1) lift(s)\n";
  if (length_ratio)
    out += std::string("  threshold N*l1 > l2: ") +
           (threshold_ok ? "holds" : "FAILS") + " (l2/l1 = " +
           std::to_string(*length_ratio) + ")\n";
  out += ok ? "  verdict: pass\n" : "  verdict: FAIL\n";
  return out;
}

DriverReport second_systole_driver(const std::vector<DriverBeta>& betas,
                                   int n, std::optional<double> length_ratio,
                                   unsigned seed) {
  if (betas.empty()) throw std::invalid_argument("no beta words supplied");
  DriverReport rep;
  rep.n = n;
  rep.length_ratio = length_ratio;

  std::set<std::string> alphabet_set{"a"};
  std::vector<Word> words;
  for (const auto& b : betas) {
    CaseConstruction cc = build_case(b.case_id, n, seed);
    Word w = b.word.value_or(cc.beta);
    // the supplied beta word must be killed by its own case cover
    auto spec = lift_spectrum(cc.cover, w);
    if (std::count(spec.degrees.begin(), spec.degrees.end(), 1))
      throw std::invalid_argument("beta word '" + w.str() +
                                  "' keeps a (1:1) lift in its case cover");
    for (const auto& l : w.letters) alphabet_set.insert(l.gen);
    for (const auto& g : cc.cover.alphabet) alphabet_set.insert(g);
    words.push_back(w);
    rep.cases.push_back(std::move(cc));
  }
  std::vector<std::string> alphabet(alphabet_set.begin(), alphabet_set.end());

  std::vector<PermCover> factors;
  for (const auto& cc : rep.cases)
    factors.push_back(extend_alphabet(cc.cover, alphabet));
  rep.product = product_cover(factors);

  const auto& comp =
      rep.product.components[rep.product.basepoint_component];
  rep.basepoint_component_size = static_cast<int>(comp.size());

  Permutation alpha_image = evaluate_word(rep.product.product, Word::parse("a"));
  for (int x : alpha_image.fixed_points()) {
    ++rep.alpha_degree1_total;
    if (std::binary_search(comp.begin(), comp.end(), x))
      ++rep.alpha_degree1_in_component;
  }
  bool betas_ok = true;
  for (const auto& w : words) {
    Permutation img = evaluate_word(rep.product.product, w);
    int fixed = static_cast<int>(img.fixed_points().size());
    rep.beta_degree1_total.push_back(fixed);
    if (fixed != 0) betas_ok = false;
  }
  rep.threshold_ok = !length_ratio || static_cast<double>(n) > *length_ratio;
  rep.ok = rep.alpha_degree1_in_component == 1 && betas_ok &&
           rep.threshold_ok;
  return rep;
}

}  // namespace lamina
