#include "mpec/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "mpec/errors.hpp"

namespace mpec {
namespace {

// Primal-dual blossom algorithm in the classic "endpoint" formulation
// (Galil's survey; the formulation popularized by van Rantwijk's reference
// implementation). Vertices are 0..n-1, blossoms n..2n-1. Edge k has
// endpoints 2k and 2k+1; endpoint p belongs to vertex endpoint_[p].
// Dual variables are stored at twice the LP scale so every delta update
// stays integral for integer weights.
class Blossom {
 public:
  Blossom(int n, const std::vector<WeightedEdge>& edges) : n_(n), edges_(edges) {
    const int m = static_cast<int>(edges_.size());
    long long maxweight = 0;
    for (const auto& e : edges_) maxweight = std::max(maxweight, e.weight);
    endpoint_.resize(2 * m);
    neighbend_.assign(n_, {});
    for (int k = 0; k < m; ++k) {
      endpoint_[2 * k] = edges_[k].u;
      endpoint_[2 * k + 1] = edges_[k].v;
      neighbend_[edges_[k].u].push_back(2 * k + 1);
      neighbend_[edges_[k].v].push_back(2 * k);
    }
    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    for (int v = 0; v < n_; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n_, -1);
    blossomchilds_.assign(2 * n_, {});
    blossombase_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * n_, {});
    for (int b = 2 * n_ - 1; b >= n_; --b) unusedblossoms_.push_back(b);
    dualvar_.assign(2 * n_, 0);
    for (int v = 0; v < n_; ++v) dualvar_[v] = maxweight;
    allowedge_.assign(m, false);
  }

  std::vector<int> solve() {
    if (edges_.empty()) return mate_;
    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();
      for (int v = 0; v < n_; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          internal_check(label_[inblossom_[v]] == 1, "queued vertex is not an S-vertex");
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            if (!allowedge_[k] && slack(k) <= 0) allowedge_[k] = true;
            if (!allowedge_[k]) continue;
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              internal_check(label_[inblossom_[w]] == 2, "expected a T-blossom");
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          }
        }
        if (augmented) break;

        // No further tight edges: compute the dual adjustment. Type 1 ends
        // the algorithm, types 2/3 make an edge tight, type 4 expands a
        // T-blossom whose dual hit zero.
        int deltatype = 1;
        long long delta = std::numeric_limits<long long>::max();
        int deltaedge = -1;
        int deltablossom = -1;
        for (int v = 0; v < n_; ++v) delta = std::min(delta, dualvar_[v]);
        delta = std::max(delta, 0LL);
        for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
          int bu = inblossom_[edges_[k].u];
          int bv = inblossom_[edges_[k].v];
          if (bu == bv) continue;
          int lu = label_[bu] & 3;
          int lv = label_[bv] & 3;
          if ((lu == 1 && lv == 0) || (lu == 0 && lv == 1)) {
            long long d = slack(k);
            if (d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = k;
            }
          } else if (lu == 1 && lv == 1) {
            long long s = slack(k);
            internal_check(s % 2 == 0, "odd slack between S-blossoms");
            long long d = s / 2;
            if (d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = k;
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              dualvar_[b] < delta) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }

        for (int v = 0; v < n_; ++v) {
          int l = label_[inblossom_[v]] & 3;
          if (l == 1)
            dualvar_[v] -= delta;
          else if (l == 2)
            dualvar_[v] += delta;
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1)
              dualvar_[b] += delta;
            else if (label_[b] == 2)
              dualvar_[b] -= delta;
          }
        }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          int i = edges_[deltaedge].u;
          if (label_[inblossom_[i]] == 0) i = edges_[deltaedge].v;
          internal_check(label_[inblossom_[i]] == 1, "delta-2 edge lost its S-side");
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          internal_check(label_[inblossom_[edges_[deltaedge].u]] == 1,
                         "delta-3 edge lost its S-side");
          queue_.push_back(edges_[deltaedge].u);
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
            dualvar_[b] == 0) {
          expand_blossom(b, true);
        }
      }
    }
    verify_optimum();
    std::vector<int> mate(n_, -1);
    for (int v = 0; v < n_; ++v)
      if (mate_[v] >= 0) mate[v] = endpoint_[mate_[v]];
    return mate;
  }

 private:
  long long slack(int k) const {
    return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * edges_[k].weight;
  }

  void leaves_of(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) leaves_of(t, out);
  }

  // Python-style index into a blossom child list (negative wraps).
  static int wrap(const std::vector<int>& xs, int j) {
    return j < 0 ? xs[xs.size() + j] : xs[j];
  }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    internal_check(label_[w] == 0 && label_[b] == 0, "relabeling a labeled vertex");
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    if (t == 1) {
      std::vector<int> ls;
      leaves_of(b, ls);
      queue_.insert(queue_.end(), ls.begin(), ls.end());
    } else {
      int base = blossombase_[b];
      internal_check(mate_[base] >= 0, "T-blossom base is unmatched");
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Traces back from both ends of a tight S-S edge; returns the base of the
  // first common ancestor, or -1 when the trees have different roots (an
  // augmenting path exists).
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      internal_check(label_[b] == 1, "trace through a non-S blossom");
      path.push_back(b);
      label_[b] = 5;
      internal_check(labelend_[b] == mate_[blossombase_[b]], "broken tree edge");
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        internal_check(label_[b] == 2, "expected T-blossom on trace");
        internal_check(labelend_[b] >= 0, "T-blossom without tree edge");
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    internal_check(!unusedblossoms_.empty(), "ran out of blossom slots");
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      internal_check(labelend_[bv] >= 0, "blossom path without tree edge");
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      internal_check(labelend_[bw] >= 0, "blossom path without tree edge");
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    internal_check(label_[bb] == 1, "blossom base is not an S-blossom");
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    std::vector<int> ls;
    leaves_of(b, ls);
    for (int x : ls) {
      if (label_[inblossom_[x]] == 2) queue_.push_back(x);
      inblossom_[x] = b;
    }
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        std::vector<int> ls;
        leaves_of(s, ls);
        for (int v : ls) inblossom_[v] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      // The blossom sat on an alternating path; relabel the even half and
      // clear the rest so they can be reached again later this stage.
      internal_check(labelend_[b] >= 0, "expanding an unreached T-blossom");
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      const auto& childs = blossomchilds_[b];
      const auto& endps = blossomendps_[b];
      int len = static_cast<int>(childs.size());
      int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) -
                               childs.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[wrap(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[wrap(endps, j - endptrick) / 2] = true;
        j += jstep;
        p = wrap(endps, j - endptrick) ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      int bv = wrap(childs, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      j += jstep;
      while (wrap(childs, j) != entrychild) {
        bv = wrap(childs, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        std::vector<int> ls;
        leaves_of(bv, ls);
        int labeled = -1;
        for (int v : ls) {
          if (label_[v] != 0) {
            labeled = v;
            break;
          }
        }
        if (labeled >= 0) {
          internal_check(label_[labeled] == 2, "expected a T-vertex inside blossom");
          internal_check(inblossom_[labeled] == bv, "stale containment during expand");
          label_[labeled] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(labeled, 2, labelend_[labeled]);
        }
        j += jstep;
      }
    }
    label_[b] = -1;
    labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    unusedblossoms_.push_back(b);
  }

  // Rotates the matching inside blossom b so that vertex v becomes its base.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= n_) augment_blossom(t, v);
    auto& childs = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    int len = static_cast<int>(childs.size());
    int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = wrap(childs, j);
      int p = wrap(endps, j - endptrick) ^ endptrick;
      if (t >= n_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = wrap(childs, j);
      if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[b] = blossombase_[childs[0]];
    internal_check(blossombase_[b] == v, "blossom base rotation failed");
  }

  // Swaps matched/unmatched status along the augmenting path through edge k.
  void augment_matching(int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    for (auto [s, p] : {std::pair<int, int>{v, 2 * k + 1}, std::pair<int, int>{w, 2 * k}}) {
      while (true) {
        int bs = inblossom_[s];
        internal_check(label_[bs] == 1, "augmenting through a non-S blossom");
        internal_check(labelend_[bs] == mate_[blossombase_[bs]], "broken tree edge");
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        internal_check(label_[bt] == 2, "expected a T-blossom on augment path");
        internal_check(labelend_[bt] >= 0, "T-blossom without tree edge");
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        internal_check(blossombase_[bt] == t, "augment path misaligned");
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  // Complementary-slackness certificate for the final matching. The true LP
  // slack of an edge includes the duals of every blossom containing both
  // endpoints.
  void verify_optimum() const {
    for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
      long long s = slack(k);
      std::vector<int> iup{edges_[k].u}, jup{edges_[k].v};
      while (blossomparent_[iup.back()] != -1) iup.push_back(blossomparent_[iup.back()]);
      while (blossomparent_[jup.back()] != -1) jup.push_back(blossomparent_[jup.back()]);
      std::reverse(iup.begin(), iup.end());
      std::reverse(jup.begin(), jup.end());
      for (size_t i = 0; i < std::min(iup.size(), jup.size()); ++i) {
        if (iup[i] != jup[i]) break;
        if (iup[i] >= n_) s += 2 * dualvar_[iup[i]];
      }
      internal_check(s >= 0, "negative slack in matching certificate");
      bool matched_here = (mate_[edges_[k].u] >= 0 && mate_[edges_[k].u] / 2 == k);
      if (matched_here) {
        internal_check(mate_[edges_[k].v] >= 0 && mate_[edges_[k].v] / 2 == k,
                       "one-sided matched edge");
        internal_check(s == 0, "matched edge is not tight");
      }
    }
    for (int v = 0; v < n_; ++v) {
      internal_check(dualvar_[v] >= 0, "negative vertex dual");
      internal_check(mate_[v] >= 0 || dualvar_[v] == 0, "unmatched vertex with positive dual");
    }
    for (int b = n_; b < 2 * n_; ++b) {
      if (blossombase_[b] < 0 || dualvar_[b] <= 0) continue;
      internal_check(blossomendps_[b].size() % 2 == 1, "even blossom in certificate");
      for (size_t i = 1; i < blossomendps_[b].size(); i += 2) {
        int p = blossomendps_[b][i];
        internal_check(mate_[endpoint_[p]] == (p ^ 1), "loose blossom edge");
        internal_check(mate_[endpoint_[p ^ 1]] == p, "loose blossom edge");
      }
    }
  }

  int n_;
  std::vector<WeightedEdge> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;  // vertex -> endpoint index, -1 if unmatched
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> unusedblossoms_;
  std::vector<long long> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

MatchingResult max_weight_matching(const WeightedGraph& g) {
  if (g.num_nodes < 0) throw Error("negative node count");
  for (const auto& e : g.edges)
    if (e.u < 0 || e.u >= g.num_nodes || e.v < 0 || e.v >= g.num_nodes)
      throw Error("matching edge references a node out of range");

  // Reduce to a simple graph with positive weights.
  std::map<std::pair<NodeId, NodeId>, long long> best;
  for (const auto& e : g.edges) {
    if (e.u == e.v || e.weight <= 0) continue;
    auto key = std::minmax(e.u, e.v);
    auto [it, fresh] = best.emplace(key, e.weight);
    if (!fresh) it->second = std::max(it->second, e.weight);
  }
  std::vector<WeightedEdge> reduced;
  reduced.reserve(best.size());
  for (const auto& [key, wt] : best) reduced.push_back({key.first, key.second, wt});

  MatchingResult result;
  result.mate.assign(g.num_nodes, -1);
  if (!reduced.empty()) {
    Blossom algo(g.num_nodes, reduced);
    result.mate = algo.solve();
  }
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    NodeId w = result.mate[v];
    if (w > v) {
      result.edges.emplace_back(v, w);
      result.total_weight += best.at({v, w});
    }
  }
  return result;
}

}  // namespace mpec
