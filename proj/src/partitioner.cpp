#include "staircut/partitioner.hpp"

#include <queue>
#include <set>

#include "staircut/rng.hpp"

namespace staircut {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::BFS: return "BFS";
    case Mode::DFS: return "DFS";
    case Mode::RAND: return "RAND";
  }
  return "?";
}

Mode mode_from_name(const std::string& s) {
  if (s == "BFS" || s == "bfs") return Mode::BFS;
  if (s == "DFS" || s == "dfs") return Mode::DFS;
  if (s == "RAND" || s == "rand") return Mode::RAND;
  throw Error("unknown mode '" + s + "'");
}

namespace {

// Shared growth state: the left set, the running chain, and admission.
struct Growth {
  const Bag& bag;
  const Floorplan& fp;
  const std::vector<Net>& nets;
  const Params& p;
  std::vector<char> in;
  std::vector<int> left;
  Chain chain;

  Growth(const Bag& b, const Floorplan& f, const std::vector<Net>& ns, const Params& pp,
         Mode mode, int trial)
      : bag(b), fp(f), nets(ns), p(pp), in(b.n, 0) {
    chain.mode = mode;
    chain.trial = trial;
  }

  bool closed(int v) const {
    for (int u : bag.preds[v])
      if (!in[u]) return false;
    return true;
  }

  void admit(int v) {
    in[v] = 1;
    left.push_back(v);
    CutEval ev = evaluate_cut(fp, bag, nets, left, p);
    chain.max_segments = std::max(chain.max_segments, ev.segments);
    chain.cuts.push_back(std::move(ev));
  }

  int done() const { return static_cast<int>(left.size()); }

  // Smallest admissible vertex outside the left set; -1 when none. Used when
  // the edge frontier stalls on multi-minimal graphs (degenerate
  // sub-floorplans); on a proper dissection it is never needed.
  int stalled_candidate() const {
    for (int v = 0; v < bag.n; ++v)
      if (!in[v] && v != bag.sink && closed(v)) return v;
    return -1;
  }
};

SearchResult finish(std::vector<Chain> chains, const Params& p) {
  SearchResult res;
  std::set<std::vector<int>> seen;
  for (const Chain& c : chains) {
    res.max_segments = std::max(res.max_segments, c.max_segments);
    for (const CutEval& ev : c.cuts)
      if (seen.insert(ev.left).second) res.explored.push_back(ev);
  }
  if (res.explored.empty()) throw Error("search: no cuts found");
  res.best = res.explored.front();
  for (const CutEval& ev : res.explored)
    if (cut_better(ev, res.best, p)) res.best = ev;
  res.chains = std::move(chains);
  return res;
}

void require_searchable(const Bag& bag) {
  if (bag.n < 2) throw Error("search: need at least 2 blocks");
  if (bag.preds.empty()) throw Error("search: bag has no predecessor lists");
}

}  // namespace

SearchResult search_bfs(const Bag& bag, const Floorplan& fp, const std::vector<Net>& nets,
                        const Params& p) {
  require_searchable(bag);
  Growth g(bag, fp, nets, p, Mode::BFS, 0);
  std::queue<int> q;
  g.admit(bag.source);
  q.push(bag.source);
  while (g.done() < bag.n - 1) {
    if (q.empty()) {
      int v = g.stalled_candidate();
      if (v < 0) throw Error("search: unreachable vertices (not a dissection)");
      g.admit(v);
      q.push(v);
      continue;
    }
    int u = q.front();
    q.pop();
    for (const auto& e : bag.adj[u]) {
      int v = e.to;
      if (v == bag.sink || g.in[v] || !g.closed(v)) continue;
      g.admit(v);
      q.push(v);
      if (g.done() == bag.n - 1) break;
    }
  }
  return finish({std::move(g.chain)}, p);
}

namespace {

void dfs_expand(Growth& g, int u) {
  for (const auto& e : g.bag.adj[u]) {
    int v = e.to;
    if (g.done() == g.bag.n - 1) return;
    if (v == g.bag.sink || g.in[v] || !g.closed(v)) continue;
    g.admit(v);
    dfs_expand(g, v);
  }
}

}  // namespace

SearchResult search_dfs(const Bag& bag, const Floorplan& fp, const std::vector<Net>& nets,
                        const Params& p) {
  require_searchable(bag);
  Growth g(bag, fp, nets, p, Mode::DFS, 0);
  g.admit(bag.source);
  dfs_expand(g, bag.source);
  while (g.done() < bag.n - 1) {
    int v = g.stalled_candidate();
    if (v < 0) throw Error("search: unreachable vertices (not a dissection)");
    g.admit(v);
    dfs_expand(g, v);
  }
  return finish({std::move(g.chain)}, p);
}

SearchResult search_rand(const Bag& bag, const Floorplan& fp, const std::vector<Net>& nets,
                         const Params& p, std::uint64_t seed, int trials) {
  require_searchable(bag);
  if (trials < 1) throw Error("search: need at least one trial");
  std::vector<Chain> chains;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    Growth g(bag, fp, nets, p, Mode::RAND, t);
    g.admit(bag.source);
    std::vector<std::pair<int, int>> pool;
    while (g.done() < bag.n - 1) {
      // Unexplored cut edges out of the current left set.
      pool.clear();
      for (int u = 0; u < bag.n; ++u) {
        if (!g.in[u]) continue;
        for (const auto& e : bag.adj[u])
          if (!g.in[e.to] && e.to != bag.sink) pool.emplace_back(u, e.to);
      }
      bool admitted = false;
      while (!pool.empty()) {
        size_t i = static_cast<size_t>(rng.below(pool.size()));
        int v = pool[i].second;
        if (g.closed(v)) {
          g.admit(v);
          admitted = true;
          break;
        }
        pool[i] = pool.back();
        pool.pop_back();
      }
      if (!admitted) {
        // No admissible cut edge: pull a uniformly random admissible vertex
        // (multi-minimal graphs only).
        std::vector<int> cands;
        for (int v = 0; v < bag.n; ++v)
          if (!g.in[v] && v != bag.sink && g.closed(v)) cands.push_back(v);
        if (cands.empty()) throw Error("search: unreachable vertices (not a dissection)");
        g.admit(cands[rng.below(cands.size())]);
      }
    }
    chains.push_back(std::move(g.chain));
  }
  return finish(std::move(chains), p);
}

SearchResult run_search(Mode mode, const Bag& bag, const Floorplan& fp,
                        const std::vector<Net>& nets, const Params& p, std::uint64_t seed,
                        int trials) {
  switch (mode) {
    case Mode::BFS: return search_bfs(bag, fp, nets, p);
    case Mode::DFS: return search_dfs(bag, fp, nets, p);
    case Mode::RAND: return search_rand(bag, fp, nets, p, seed, trials);
  }
  throw Error("unknown mode");
}

PickHistogram neighbor_pick_distribution(const Bag& bag, int vertex, std::int64_t samples,
                                         std::uint64_t seed) {
  if (vertex < 0 || vertex >= bag.n) throw Error("pick: vertex out of range");
  size_t p = bag.adj[vertex].size();
  if (p == 0) throw Error("pick: vertex has no successors");
  if (samples <= 0) throw Error("pick: need a positive sample count");
  PickHistogram h;
  h.counts.assign(p, 0);
  SplitMix64 rng(seed);
  for (std::int64_t i = 0; i < samples; ++i) ++h.counts[rng.below(p)];
  double acc = 0.0;
  for (size_t i = 0; i < p; ++i) acc += static_cast<double>(h.counts[i]) * (i + 1);
  h.mean = acc / static_cast<double>(samples);
  return h;
}

}  // namespace staircut
