#include "ordersum/iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ordersum {

namespace {

struct Fingerprint {
  int order;
  int centralizerSize;
  auto operator<=>(const Fingerprint&) const = default;
};

std::vector<Fingerprint> fingerprints(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Fingerprint> fp(n);
  for (int x = 0; x < n; ++x) {
    int cz = 0;
    for (int y = 0; y < n; ++y) {
      if (g.mul(x, y) == g.mul(y, x)) ++cz;
    }
    fp[x] = {g.element_order(x), cz};
  }
  return fp;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  SubgroupSet closure = trivial_subgroup(g);
  while (closure.size() < g.order()) {
    int best = -1;
    for (int x = 0; x < g.order(); ++x) {
      if (closure.contains(x)) continue;
      if (best < 0 || g.element_order(x) > g.element_order(best)) best = x;
    }
    gens.push_back(best);
    closure = generated_subgroup(g, gens);
  }
  return gens;
}

// Shared state of the generator-image search. Extending the partial map
// closes it under products, so a full assignment of generator images is a
// verified isomorphism of the generated subgroups.
struct MapSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  const std::vector<Fingerprint>& fpG;
  const std::vector<Fingerprint>& fpH;
  std::vector<int> gmap;        // g-index -> h-index or -1
  std::vector<char> hused;
  std::vector<int> mapped;      // g-elements with images, in insertion order
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  MapSearch(const FiniteGroup& g_, const FiniteGroup& h_, const std::vector<Fingerprint>& fg,
            const std::vector<Fingerprint>& fh, std::uint64_t budget_)
      : g(g_), h(h_), fpG(fg), fpH(fh), gmap(g_.order(), -1), hused(h_.order(), 0), budget(budget_) {
    gmap[0] = 0;
    hused[0] = 1;
    mapped.push_back(0);
  }

  bool set_pair(int a, int b) {
    if (gmap[a] == b) return true;
    if (gmap[a] != -1 || hused[b]) return false;
    if (fpG[a] != fpH[b]) return false;
    gmap[a] = b;
    hused[b] = 1;
    mapped.push_back(a);
    return true;
  }

  // Extend the map by x -> y and close under products; returns false and
  // leaves cleanup to the caller (via the mapped-list watermark) on clash.
  bool extend(int x, int y) {
    std::size_t start = mapped.size();
    if (!set_pair(x, y)) return false;
    for (std::size_t i = start; i < mapped.size(); ++i) {
      int p = mapped[i];
      int q = gmap[p];
      for (std::size_t j = 0; j < mapped.size(); ++j) {
        int m = mapped[j];
        int w = gmap[m];
        if (!set_pair(g.mul(p, m), h.mul(q, w))) return false;
        if (!set_pair(g.mul(m, p), h.mul(w, q))) return false;
      }
    }
    return true;
  }

  void rollback(std::size_t watermark) {
    while (mapped.size() > watermark) {
      int a = mapped.back();
      mapped.pop_back();
      hused[gmap[a]] = 0;
      gmap[a] = -1;
    }
  }
};

bool verify_witness(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& w) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  for (int v : w) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (w[g.mul(a, b)] != h.mul(w[a], w[b])) return false;
    }
  }
  return true;
}

// Depth-first over generator images; onComplete may stop the search by
// returning true.
template <typename OnComplete>
bool search(MapSearch& st, const std::vector<int>& gens, std::size_t depth, OnComplete&& onComplete) {
  if (depth == gens.size()) {
    return onComplete(st.gmap);
  }
  int gen = gens[depth];
  if (st.gmap[gen] != -1) {
    // image already forced by closure
    return search(st, gens, depth + 1, onComplete);
  }
  for (int y = 0; y < st.h.order(); ++y) {
    if (st.hused[y] || st.fpH[y] != st.fpG[gen]) continue;
    if (++st.nodes > st.budget) throw ResourceLimitError("isomorphism search budget exceeded");
    std::size_t mark = st.mapped.size();
    if (st.extend(gen, y)) {
      if (search(st, gens, depth + 1, onComplete)) return true;
    }
    st.rollback(mark);
  }
  return false;
}

bool invariants_match(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Fingerprint>& fg,
                      const std::vector<Fingerprint>& fh) {
  if (g.order() != h.order()) return false;
  auto a = fg;
  auto b = fh;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                 std::uint64_t node_budget) {
  if (g.order() != h.order()) return std::nullopt;
  auto fg = fingerprints(g);
  auto fh = fingerprints(h);
  if (!invariants_match(g, h, fg, fh)) return std::nullopt;
  auto gens = greedy_generators(g);
  MapSearch st(g, h, fg, fh, node_budget);
  std::optional<std::vector<int>> found;
  search(st, gens, 0, [&](const std::vector<int>& w) {
    if (verify_witness(g, h, w)) {
      found = w;
      return true;
    }
    return false;
  });
  return found;
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

int PermGroup::index_of(const std::vector<int>& p) const {
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (perms[i] == p) return static_cast<int>(i);
  }
  return -1;
}

int PermGroup::compose(int i, int j) const {
  const auto& a = perms[i];
  const auto& b = perms[j];
  std::vector<int> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  int idx = index_of(out);
  if (idx < 0) throw std::logic_error("PermGroup: composition left the group");
  return idx;
}

int PermGroup::order_of(int i) const {
  int cur = i;
  int o = 1;
  while (cur != 0) {
    cur = compose(cur, i);
    ++o;
  }
  return o;
}

PermGroup automorphism_group(const FiniteGroup& g) {
  auto fp = fingerprints(g);
  auto gens = greedy_generators(g);
  MapSearch st(g, g, fp, fp, 500'000'000ULL);
  PermGroup out;
  search(st, gens, 0, [&](const std::vector<int>& w) {
    if (verify_witness(g, g, w)) out.perms.push_back(w);
    return false;  // keep enumerating
  });
  // identity first, rest in deterministic lexicographic order
  std::sort(out.perms.begin(), out.perms.end());
  return out;
}

std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& b, const PermGroup& target) {
  const int n = b.order();
  const int t = static_cast<int>(target.perms.size());
  auto gens = greedy_generators(b);
  std::vector<std::vector<int>> result;
  std::vector<int> image(n, -1);
  image[0] = 0;

  // Close a partial map b-element -> perm index under products; kernel
  // collisions are fine (homomorphisms need not be injective).
  auto close = [&]() -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; ++x) {
        if (image[x] < 0) continue;
        for (int y = 0; y < n; ++y) {
          if (image[y] < 0) continue;
          int xy = b.mul(x, y);
          int want = target.compose(image[x], image[y]);
          if (image[xy] < 0) {
            image[xy] = want;
            changed = true;
          } else if (image[xy] != want) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::vector<int> genOrder(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) genOrder[i] = b.element_order(gens[i]);

  std::vector<int> saved;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      bool total = std::all_of(image.begin(), image.end(), [](int v) { return v >= 0; });
      if (total) result.push_back(image);
      return;
    }
    if (image[gens[depth]] >= 0) {
      self(self, depth + 1);
      return;
    }
    for (int cand = 0; cand < t; ++cand) {
      if (genOrder[depth] % target.order_of(cand) != 0) continue;
      auto snapshot = image;
      image[gens[depth]] = cand;
      if (close()) self(self, depth + 1);
      image = snapshot;
    }
  };
  rec(rec, 0);
  return result;
}

}  // namespace ordersum
