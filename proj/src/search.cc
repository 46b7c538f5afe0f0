#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "circmagic/oracle.h"

namespace circmagic {
namespace {

using Clock = std::chrono::steady_clock;

// Multipliers q (units of Z_n) that permute the offset set of g.
std::vector<Int> offset_stabilizer(const Circulant& g) {
  std::vector<Int> offs = g.offsets();
  std::sort(offs.begin(), offs.end());
  std::vector<Int> out;
  for (Int q : units(g.n())) {
    std::vector<Int> img;
    img.reserve(offs.size());
    for (Int s : offs) img.push_back(mul_mod(q, s, g.n()));
    std::sort(img.begin(), img.end());
    if (img == offs) out.push_back(q);
  }
  return out;
}

// Bitset of unused labels 1..n with fast smallest/largest-k sums.
class LabelPool {
 public:
  explicit LabelPool(Int n) : n_(n), words_(static_cast<size_t>(n / 64 + 1), 0) {
    for (Int l = 1; l <= n; ++l) set(l);
  }
  bool free(Int l) const { return (words_[static_cast<size_t>(l >> 6)] >> (l & 63)) & 1; }
  void take(Int l) { words_[static_cast<size_t>(l >> 6)] &= ~(std::uint64_t{1} << (l & 63)); }
  void set(Int l) { words_[static_cast<size_t>(l >> 6)] |= std::uint64_t{1} << (l & 63); }

  // Sum of the `count` smallest free labels in [lo, hi]; -1 if too few.
  Int sum_smallest(int count, Int lo, Int hi) const {
    Int sum = 0;
    for (Int l = next_free(lo); count > 0; l = next_free(l + 1)) {
      if (l > hi) return -1;
      sum += l;
      --count;
    }
    return sum;
  }
  Int sum_largest(int count, Int lo, Int hi) const {
    Int sum = 0;
    for (Int l = prev_free(hi); count > 0; l = prev_free(l - 1)) {
      if (l < lo) return -1;
      sum += l;
      --count;
    }
    return sum;
  }

 private:
  // Smallest free label >= l, or n + 1.
  Int next_free(Int l) const {
    if (l > n_) return n_ + 1;
    size_t w = static_cast<size_t>(l >> 6);
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (l & 63));
    while (bits == 0) {
      if (++w == words_.size()) return n_ + 1;
      bits = words_[w];
    }
    return static_cast<Int>(w * 64 + static_cast<size_t>(std::countr_zero(bits)));
  }
  // Largest free label <= l, or 0.
  Int prev_free(Int l) const {
    if (l < 1) return 0;
    size_t w = static_cast<size_t>(l >> 6);
    const int sh = 63 - static_cast<int>(l & 63);
    std::uint64_t bits = (words_[w] << sh) >> sh;
    while (bits == 0) {
      if (w == 0) return 0;
      bits = words_[--w];
    }
    const Int l2 = static_cast<Int>(w * 64 + 63 - static_cast<size_t>(std::countl_zero(bits)));
    return l2 >= 1 ? l2 : 0;
  }

  Int n_;
  std::vector<std::uint64_t> words_;
};

// Linear constraint sum(coef_i * label(var_i)) == rhs with coef_i = ±1.
// Every neighbourhood gives one with rhs kappa; each pair of overlapping
// neighbourhoods N(x), N(x + t) gives the implied difference constraint on
// their symmetric difference with rhs 0.
struct Constraint {
  std::vector<Int> vars;
  std::vector<int> coefs;
  Int rhs = 0;
};

std::vector<Constraint> build_constraints(const Circulant& g, bool implied) {
  const Int n = g.n();
  const auto offs = g.offsets();
  const Int kappa = magic_constant(g);
  std::vector<Constraint> out;
  for (Int x = 0; x < n; ++x) {
    Constraint c;
    for (Int s : offs) {
      c.vars.push_back(mod(x + s, n));
      c.coefs.push_back(1);
    }
    c.rhs = kappa;
    out.push_back(std::move(c));
  }
  if (!implied) return out;
  std::vector<Int> sorted = offs;
  std::sort(sorted.begin(), sorted.end());
  for (Int t = 1; t <= n / 2; ++t) {
    // Offsets s with s - t also an offset are shared by N(x) and N(x + t).
    std::vector<Int> only_x, only_xt;
    for (Int s : offs) {
      if (!std::binary_search(sorted.begin(), sorted.end(), mod(s - t, n))) only_x.push_back(s);
      if (!std::binary_search(sorted.begin(), sorted.end(), mod(s + t, n))) only_xt.push_back(s);
    }
    if (only_x.size() + 2 > offs.size()) continue;  // overlap below 2
    const Int xs = t == n - t ? n / 2 : n;
    for (Int x = 0; x < xs; ++x) {
      Constraint c;
      for (Int s : only_x) {
        c.vars.push_back(mod(x + s, n));
        c.coefs.push_back(1);
      }
      for (Int s : only_xt) {
        c.vars.push_back(mod(x + t + s, n));
        c.coefs.push_back(-1);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

// Kernel consequences. A magic labeling l has l - (n+1)/2 in the 0-eigenspace,
// so the sums c_r of l over the residue classes r mod d have vanishing
// Fourier coefficients except at kernel characters. If every kernel
// character of order dividing d has order dividing p, then c_r = c_{r+p};
// for p = 1 each class sum is n(n+1)/(2d).
std::vector<Constraint> coset_constraints(const Circulant& g) {
  const Int n = g.n();
  const auto offs = g.offsets();
  std::vector<Int> orders;
  try {
    const CharacterOracle oracle(n);
    std::vector<Int> exps(offs.size());
    for (Int j = 1; j < n; ++j) {
      for (size_t i = 0; i < offs.size(); ++i) exps[i] = mul_mod(j, offs[i], n);
      if (oracle.vanishes(exps)) orders.push_back(n / gcd(j, n));
    }
  } catch (const std::overflow_error&) {
    return {};  // the extra constraints are optional
  }
  std::vector<Constraint> out;
  for (Int d : divisors(n)) {
    if (d == 1 || d == n) continue;
    Int p = 1;
    for (Int o : orders) {
      if (d % o == 0) p = std::lcm(p, o);
    }
    if (p == d) continue;
    const Int total = n * (n + 1) / 2;
    for (Int r = 0; r < (p == 1 ? d : d - p); ++r) {
      Constraint c;
      for (Int x = r; x < n; x += d) {
        c.vars.push_back(x);
        c.coefs.push_back(1);
      }
      if (p == 1) {
        // A non-integral share leaves an unsatisfiable constraint behind.
        c.rhs = total % d == 0 ? total / d : -1;
      } else {
        for (Int x = r + p; x < n; x += d) {
          c.vars.push_back(x);
          c.coefs.push_back(-1);
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

class Searcher {
 public:
  Searcher(const Circulant& g, const SearchConstraints& cons, const SearchBudget& budget,
           const SearchOptions& opts)
      : g_(g),
        n_(g.n()),
        kappa_(magic_constant(g)),
        cons_(cons),
        budget_(budget),
        opts_(opts),
        label_(static_cast<size_t>(n_), 0),
        pool_(n_) {
    cs_ = build_constraints(g, opts.implied_constraints);
    if (opts.coset_constraints) {
      for (auto& c : coset_constraints(g)) cs_.push_back(std::move(c));
    }
    // Constrained searches branch on neighbourhoods only; free searches on
    // whichever constraint is tightest. Both orders measured best on their
    // own workloads.
    ranked_ = cons.pairing || cons.parity_block ? static_cast<size_t>(n_) : cs_.size();
    acc_.assign(cs_.size(), 0);
    free_.assign(cs_.size(), 0);
    occ_.resize(static_cast<size_t>(n_));
    for (size_t i = 0; i < cs_.size(); ++i) {
      free_[i] = static_cast<int>(cs_[i].vars.size());
      for (size_t j = 0; j < cs_[i].vars.size(); ++j) {
        occ_[static_cast<size_t>(cs_[i].vars[j])].push_back({static_cast<int>(i), cs_[i].coefs[j]});
      }
    }
    half_ = n_ / 2;
    if (opts.symmetry_breaking) {
      anchor_ = cons.parity_block ? half_ : n_;
      secondary_ = anchor_ - 1;
      is_rep_.assign(static_cast<size_t>(n_), true);
      for (Int q : offset_stabilizer(g)) {
        for (Int v = 0; v < n_; ++v) {
          if (mul_mod(q, v, n_) < v) is_rep_[static_cast<size_t>(v)] = false;
        }
      }
    }
  }

  SearchOutcome run() {
    start_ = Clock::now();
    SearchOutcome out;
    bool found = false;
    if (anchor_ > 0) {
      found = assign(0, anchor_) && propagate() && dfs(0);
    } else {
      found = propagate() && dfs(0);
    }
    out.stats.nodes = nodes_;
    out.stats.max_depth = max_depth_;
    out.stats.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (found) {
      Labeling l(label_);
      if (verify(g_, l) != kappa_) throw std::logic_error("search produced an invalid labeling");
      out.kind = SearchOutcome::Kind::kFound;
      out.labeling = std::move(l);
      return out;
    }
    if (aborted_) {
      out.kind = SearchOutcome::Kind::kBudgetExceeded;
      return out;
    }
    out.stats.covered = true;
    const Int cap = opts_.hard_cap < 0 ? default_hard_cap() : opts_.hard_cap;
    out.kind = n_ <= cap ? SearchOutcome::Kind::kExhausted : SearchOutcome::Kind::kBudgetExceeded;
    return out;
  }

 private:
  struct Occurrence {
    int con;
    int coef;
  };

  Int lo(Int v) const { return cons_.parity_block && (v & 1) ? half_ + 1 : 1; }
  Int hi(Int v) const { return cons_.parity_block && !(v & 1) ? half_ : n_; }

  // Places l at v (and the complementary label at the partner when pairing).
  // Every modification is trailed, so a false return is undone by undo().
  bool assign(Int v, Int l) {
    if (!place(v, l)) return false;
    if (cons_.pairing) {
      const Int p = mod(v + half_, n_);
      const Int pl = n_ + 1 - l;
      if (label_[static_cast<size_t>(p)] != 0) return label_[static_cast<size_t>(p)] == pl;
      return place(p, pl);
    }
    return true;
  }

  bool place(Int v, Int l) {
    if (l < lo(v) || l > hi(v) || !pool_.free(l)) return false;
    if (l == secondary_ && !is_rep_.empty() && !is_rep_[static_cast<size_t>(v)]) return false;
    label_[static_cast<size_t>(v)] = l;
    pool_.take(l);
    trail_.push_back(v);
    for (const auto& o : occ_[static_cast<size_t>(v)]) {
      acc_[static_cast<size_t>(o.con)] += o.coef * l;
      --free_[static_cast<size_t>(o.con)];
      queue_.push_back(o.con);
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      const Int v = trail_.back();
      trail_.pop_back();
      const Int l = label_[static_cast<size_t>(v)];
      label_[static_cast<size_t>(v)] = 0;
      pool_.set(l);
      for (const auto& o : occ_[static_cast<size_t>(v)]) {
        acc_[static_cast<size_t>(o.con)] -= o.coef * l;
        ++free_[static_cast<size_t>(o.con)];
      }
    }
    queue_.clear();
  }

  // Range of sum(coef * label) over the free variables of constraint c,
  // relaxing distinctness between the positive and negative parts.
  bool free_range(const Constraint& c, Int& mn, Int& mx) const {
    int cnt[2][2] = {{0, 0}, {0, 0}};  // [coef < 0][odd vertex under parity blocks]
    for (size_t j = 0; j < c.vars.size(); ++j) {
      const Int v = c.vars[j];
      if (label_[static_cast<size_t>(v)] != 0) continue;
      ++cnt[c.coefs[j] < 0][cons_.parity_block && (v & 1)];
    }
    mn = mx = 0;
    for (int neg = 0; neg < 2; ++neg) {
      for (int odd = 0; odd < 2; ++odd) {
        const int k = cnt[neg][odd];
        if (k == 0) continue;
        const Int a = cons_.parity_block ? (odd ? half_ + 1 : 1) : 1;
        const Int b = cons_.parity_block ? (odd ? n_ : half_) : n_;
        const Int small = pool_.sum_smallest(k, a, b);
        if (small < 0) return false;
        const Int large = pool_.sum_largest(k, a, b);
        if (neg) {
          mn -= large;
          mx -= small;
        } else {
          mn += small;
          mx += large;
        }
      }
    }
    return true;
  }

  // Two free variables u, w with cu l(u) + cw l(w) = r: fails when no pair
  // of distinct free labels fits, assigns both when exactly one does.
  bool pair_support(const Constraint& c, Int r) {
    Int u = -1, w = -1;
    int cu = 0, cw = 0;
    for (size_t j = 0; j < c.vars.size(); ++j) {
      if (label_[static_cast<size_t>(c.vars[j])] != 0) continue;
      if (u < 0) {
        u = c.vars[j];
        cu = c.coefs[j];
      } else {
        w = c.vars[j];
        cw = c.coefs[j];
      }
    }
    Int only_x = 0, only_y = 0;
    int count = 0;
    for (Int x = lo(u); x <= hi(u); ++x) {
      if (!pool_.free(x)) continue;
      const Int y = cw * (r - cu * x);  // cw = ±1
      if (y == x || y < lo(w) || y > hi(w) || !pool_.free(y)) continue;
      if (cons_.pairing) {
        // Partners must take complementary labels; anyone else must not.
        const bool partners = mod(u + half_, n_) == w;
        if ((n_ + 1 - x == y) != partners) continue;
        if (!partners && !pool_.free(n_ + 1 - x)) continue;
      }
      if (++count > 1) return true;
      only_x = x;
      only_y = y;
    }
    if (count == 0) return false;
    return assign(u, only_x) && (label_[static_cast<size_t>(w)] != 0 ? label_[static_cast<size_t>(w)] == only_y : assign(w, only_y));
  }

  bool propagate() {
    while (!queue_.empty()) {
      const auto ci = static_cast<size_t>(queue_.back());
      queue_.pop_back();
      const Constraint& c = cs_[ci];
      const int f = free_[ci];
      const Int r = c.rhs - acc_[ci];
      if (f == 0) {
        if (r != 0) return false;
      } else if (f == 1) {
        Int u = -1;
        int coef = 1;
        for (size_t j = 0; j < c.vars.size(); ++j) {
          if (label_[static_cast<size_t>(c.vars[j])] == 0) {
            u = c.vars[j];
            coef = c.coefs[j];
          }
        }
        const Int l = coef * r;
        if (l < 1 || l > n_ || !assign(u, l)) return false;
      } else {
        Int mn = 0, mx = 0;
        if (!free_range(c, mn, mx) || r < mn || r > mx) return false;
        if (f == 2 && !pair_support(c, r)) return false;
      }
    }
    return true;
  }

  // Unlabeled vertex in the ranked constraint with the fewest free slots;
  // ties by vertex index.
  Int choose() const {
    Int best = -1;
    int best_score = std::numeric_limits<int>::max();
    for (Int v = 0; v < n_; ++v) {
      if (label_[static_cast<size_t>(v)] != 0) continue;
      int score = std::numeric_limits<int>::max();
      for (const auto& o : occ_[static_cast<size_t>(v)]) {
        if (static_cast<size_t>(o.con) < ranked_) {
          score = std::min(score, free_[static_cast<size_t>(o.con)]);
        }
      }
      if (score < best_score) {
        best_score = score;
        best = v;
        if (score <= 1) break;
      }
    }
    return best;
  }

  bool out_of_budget() {
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) return true;
    if (budget_.max_seconds > 0 && (nodes_ & 255) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > budget_.max_seconds) {
      return true;
    }
    return false;
  }

  bool dfs(int depth) {
    max_depth_ = std::max(max_depth_, depth);
    const Int v = choose();
    if (v < 0) return true;
    for (Int l = lo(v); l <= hi(v); ++l) {
      if (!pool_.free(l)) continue;
      if (cons_.pairing && !pool_.free(n_ + 1 - l)) continue;
      ++nodes_;
      if (out_of_budget()) {
        aborted_ = true;
        return false;
      }
      const size_t mark = trail_.size();
      if (assign(v, l) && propagate()) {
        if (dfs(depth + 1)) return true;
        if (aborted_) return false;
      }
      undo(mark);
    }
    return false;
  }

  const Circulant& g_;
  Int n_;
  Int kappa_;
  Int half_ = 0;
  SearchConstraints cons_;
  SearchBudget budget_;
  SearchOptions opts_;
  Int anchor_ = 0, secondary_ = 0;
  std::vector<bool> is_rep_;
  std::vector<Constraint> cs_;  // cs_[0, n) are the neighbourhood sums
  size_t ranked_ = 0;           // cs_[0, ranked_) steer the branching order
  std::vector<Int> acc_;
  std::vector<int> free_;
  std::vector<std::vector<Occurrence>> occ_;
  std::vector<Int> label_;
  LabelPool pool_;
  std::vector<Int> trail_;
  std::vector<int> queue_;
  std::uint64_t nodes_ = 0;
  int max_depth_ = 0;
  bool aborted_ = false;
  Clock::time_point start_;
};

}  // namespace

std::string to_string(SearchOutcome::Kind k) {
  switch (k) {
    case SearchOutcome::Kind::kFound:
      return "found";
    case SearchOutcome::Kind::kExhausted:
      return "exhausted";
    case SearchOutcome::Kind::kBudgetExceeded:
      return "budget";
  }
  return "?";
}

Int default_hard_cap() {
  if (const char* env = std::getenv("CIRCMAGIC_HARD_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 16;
}

SearchOutcome search_labeling(const ConnectionSet& s, const SearchBudget& budget,
                              const SearchOptions& options) {
  if (!s.connected()) throw DomainError("search_labeling: " + s.to_string() + " is disconnected");
  if (options.prefilter && !candidate_filter(s).passed()) {
    SearchOutcome out;
    out.kind = SearchOutcome::Kind::kExhausted;
    out.stats.covered = true;
    out.stats.prefiltered = true;
    return out;
  }
  return search_labeling(Circulant(s), budget, options);
}

SearchOutcome search_labeling(const Circulant& g, const SearchBudget& budget,
                              const SearchOptions& options) {
  return Searcher(g, {}, budget, options).run();
}

SearchOutcome search_constrained(const Circulant& g, const SearchConstraints& constraints,
                                 const SearchBudget& budget, const SearchOptions& options) {
  if (g.n() % 2 != 0) {
    throw DomainError("search_constrained: pairing and parity blocks need even n, got " +
                      std::to_string(g.n()));
  }
  if (constraints.pairing && constraints.parity_block && (g.n() / 2) % 2 == 0) {
    throw DomainError("search_constrained: n/2 must be odd to pair vertices across parity classes");
  }
  return Searcher(g, constraints, budget, options).run();
}

}  // namespace circmagic
