#include "ucayley/indsets.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "ucayley/error.hpp"

namespace ucayley {

std::string to_string(SearchStatus s) {
  return s == SearchStatus::complete ? "complete" : "budget_exhausted";
}

namespace {

class SearchControl {
 public:
  explicit SearchControl(const Budget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Counts one search node; false once the budget is spent.
  bool tick() {
    if (stop_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_.max_nodes != 0 && n > budget_.max_nodes) {
      stop_.store(true, std::memory_order_relaxed);
      return false;
    }
    if (budget_.max_seconds > 0 && (n & 255) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) {
        stop_.store(true, std::memory_order_relaxed);
        return false;
      }
    }
    return true;
  }

  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

// Complement adjacency: comp[v] = vertices other than v not adjacent to v.
std::vector<DynBitset> complement_rows(const UGraph& g) {
  std::vector<DynBitset> comp;
  comp.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    DynBitset row = g.neighbors(v).complement();
    row.reset(v);
    comp.push_back(std::move(row));
  }
  return comp;
}

class MisEnumerator {
 public:
  using Sink = std::function<void(const VertexSet&)>;

  MisEnumerator(const UGraph& g, SearchControl& ctl) : n_(g.vertex_count()), comp_(complement_rows(g)), ctl_(ctl) {}

  std::size_t size() const { return n_; }
  const DynBitset& comp(Vertex v) const { return comp_[v]; }

  Vertex pivot(const DynBitset& p, const DynBitset& x) const {
    const DynBitset px = p | x;
    Vertex best = 0;
    std::size_t best_count = 0;
    bool first = true;
    px.for_each([&](std::size_t u) {
      const std::size_t c = p.count_and(comp_[u]);
      if (first || c > best_count) {
        best = static_cast<Vertex>(u);
        best_count = c;
        first = false;
      }
    });
    return best;
  }

  void expand(std::vector<Vertex>& current, DynBitset p, DynBitset x, const Sink& sink) {
    if (!ctl_.tick()) return;
    if (p.none()) {
      if (x.none()) sink(VertexSet(current));
      return;
    }
    DynBitset branch = p;
    branch.subtract(comp_[pivot(p, x)]);
    for (std::size_t v = branch.find_first(); v < n_; v = branch.find_next(v + 1)) {
      current.push_back(static_cast<Vertex>(v));
      expand(current, p & comp_[v], x & comp_[v], sink);
      current.pop_back();
      if (ctl_.stopped()) return;
      p.reset(v);
      x.set(v);
    }
  }

 private:
  std::size_t n_;
  std::vector<DynBitset> comp_;
  SearchControl& ctl_;
};

}  // namespace

EnumerationStats enumerate_maximal_independent(const UGraph& g, const Budget& budget,
                                               const std::function<void(const VertexSet&)>& sink) {
  SearchControl ctl(budget);
  MisEnumerator e(g, ctl);
  EnumerationStats stats;
  std::vector<Vertex> current;
  DynBitset all(g.vertex_count());
  all.set_all();
  e.expand(current, all, DynBitset(g.vertex_count()), [&](const VertexSet& s) {
    ++stats.emitted;
    sink(s);
  });
  stats.nodes = ctl.nodes();
  stats.status = ctl.stopped() ? SearchStatus::budget_exhausted : SearchStatus::complete;
  return stats;
}

MaximalSets collect_maximal_independent(const UGraph& g, const Budget& budget, unsigned threads) {
  MaximalSets out;
  const std::size_t n = g.vertex_count();
  if (threads <= 1 || n == 0) {
    out.stats = enumerate_maximal_independent(g, budget, [&](const VertexSet& s) { out.sets.push_back(s); });
    std::sort(out.sets.begin(), out.sets.end());
    return out;
  }

  SearchControl ctl(budget);
  MisEnumerator e(g, ctl);
  ctl.tick();  // root node

  struct Task {
    Vertex v;
    DynBitset p, x;
  };
  std::vector<Task> tasks;
  DynBitset p(n), x(n);
  p.set_all();
  DynBitset branch = p;
  branch.subtract(e.comp(e.pivot(p, x)));
  for (std::size_t v = branch.find_first(); v < n; v = branch.find_next(v + 1)) {
    tasks.push_back({static_cast<Vertex>(v), p & e.comp(static_cast<Vertex>(v)), x & e.comp(static_cast<Vertex>(v))});
    p.reset(v);
    x.set(v);
  }

  std::atomic<std::size_t> next{0};
  std::mutex merge;
  auto worker = [&] {
    std::vector<VertexSet> local;
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      std::vector<Vertex> current{tasks[i].v};
      e.expand(current, tasks[i].p, tasks[i].x, [&](const VertexSet& s) { local.push_back(s); });
      if (ctl.stopped()) break;
    }
    std::lock_guard<std::mutex> lock(merge);
    out.sets.insert(out.sets.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::sort(out.sets.begin(), out.sets.end());
  out.stats.nodes = ctl.nodes();
  out.stats.emitted = out.sets.size();
  out.stats.status = ctl.stopped() ? SearchStatus::budget_exhausted : SearchStatus::complete;
  return out;
}

namespace {

class MaxIndependent {
 public:
  MaxIndependent(const UGraph& g, SearchControl& ctl) : n_(g.vertex_count()), comp_(complement_rows(g)), ctl_(ctl) {}

  void run(VertexSet initial) {
    best_ = std::vector<Vertex>(initial.begin(), initial.end());
    DynBitset all(n_);
    all.set_all();
    std::vector<Vertex> current;
    expand(current, std::move(all));
  }

  const std::vector<Vertex>& best() const { return best_; }

 private:
  // Clique search on the complement; colour classes bound the clique size.
  void expand(std::vector<Vertex>& current, DynBitset p) {
    if (!ctl_.tick()) return;
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      DynBitset next = p & comp_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      if (ctl_.stopped()) return;
      p.reset(v);
    }
  }

  void colour(const DynBitset& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
    DynBitset uncoloured = p;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      DynBitset q = uncoloured;
      for (std::size_t v = q.find_first(); v < n_; v = q.find_first()) {
        uncoloured.reset(v);
        q.reset(v);
        q.subtract(comp_[v]);
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(c);
      }
    }
  }

  std::size_t n_;
  std::vector<DynBitset> comp_;
  SearchControl& ctl_;
  std::vector<Vertex> best_;
};

}  // namespace

AlphaResult maximum_independent_set(const UGraph& g, const Budget& budget) {
  SearchControl ctl(budget);
  MaxIndependent search(g, ctl);
  search.run(greedy_extend(g, {}));
  AlphaResult r;
  r.witness = VertexSet(search.best());
  r.alpha = r.witness.size();
  r.exact = !ctl.stopped();
  r.nodes = ctl.nodes();
  return r;
}

std::size_t independence_number(const UGraph& g, const Budget& budget) {
  const AlphaResult r = maximum_independent_set(g, budget);
  if (!r.exact) {
    throw BudgetExceeded("independence number search exceeded its budget (lower bound " + std::to_string(r.alpha) + ")");
  }
  return r.alpha;
}

VertexSet greedy_extend(const UGraph& g, const VertexSet& seed) {
  for (Vertex v : seed) {
    if (v >= g.vertex_count()) throw std::out_of_range("greedy_extend: seed vertex out of range");
  }
  if (!is_independent(g, seed)) throw DomainError("greedy_extend: seed is not an independent set");
  const std::size_t n = g.vertex_count();
  DynBitset chosen = seed.to_bitset(n);
  DynBitset blocked = chosen;
  for (Vertex v : seed) blocked |= g.neighbors(v);
  for (std::size_t v = 0; v < n; ++v) {
    if (blocked.test(v)) continue;
    chosen.set(v);
    blocked.set(v);
    blocked |= g.neighbors(static_cast<Vertex>(v));
  }
  return VertexSet::from_bitset(chosen);
}

WellCoveredReport is_well_covered(const UGraph& g, const WellCoveredOptions& options) {
  WellCoveredReport rep;
  std::optional<VertexSet> smallest, largest;
  auto observe = [&](const VertexSet& s) {
    if (!smallest || s.size() < smallest->size() || (s.size() == smallest->size() && s < *smallest)) smallest = s;
    if (!largest || s.size() > largest->size() || (s.size() == largest->size() && s < *largest)) largest = s;
  };
  auto finish_no = [&] {
    rep.answer = Answer::no;
    rep.witness_small = smallest;
  };

  if (!options.seeds.empty()) {
    observe(greedy_extend(g, {}));
    for (const auto& seed : options.seeds) observe(greedy_extend(g, seed));
    if (smallest->size() < largest->size()) {
      finish_no();
      rep.alpha = largest->size();
      rep.witness_large = largest;
      return rep;
    }
  }

  std::map<std::size_t, std::uint64_t> counts;
  EnumerationStats stats;
  if (options.threads > 1) {
    MaximalSets all = collect_maximal_independent(g, options.budget, options.threads);
    for (const auto& s : all.sets) {
      ++counts[s.size()];
      observe(s);
    }
    stats = all.stats;
  } else {
    stats = enumerate_maximal_independent(g, options.budget, [&](const VertexSet& s) {
      ++counts[s.size()];
      observe(s);
    });
  }
  rep.nodes = stats.nodes;
  rep.fully_enumerated = stats.status == SearchStatus::complete;
  if (largest) {
    rep.alpha = largest->size();
    rep.witness_large = largest;
  }
  if (rep.fully_enumerated) {
    rep.counts = std::move(counts);
    rep.alpha_exact = true;
    if (rep.counts.size() > 1) {
      finish_no();
    } else {
      rep.answer = Answer::yes;
    }
  } else if (smallest && largest && smallest->size() < largest->size()) {
    finish_no();
  } else {
    rep.answer = Answer::inconclusive;
  }
  return rep;
}

VertexSet radical_saturate(const RingHandle& r, const VertexSet& radical, const VertexSet& a) {
  std::vector<Vertex> out;
  out.reserve(a.size() * radical.size());
  for (Vertex x : a) {
    for (Vertex j : radical) out.push_back(r.add(x, j));
  }
  return VertexSet(std::move(out));
}

}  // namespace ucayley
