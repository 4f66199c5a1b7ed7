#pragma once

// Covering quivers, finite traced posets, and weakly perfectly clustering
// pairs of crowns.
//
// The covering quiver of a presentation with solved signs has nodes
// (vertex, sign) and one edge per syllable x, running from
// S(x) = (s(x), -sigma(x)) to T(x) = (t(x), eps(x)). A string is exactly a
// path in the covering quiver. Orienting direct edges downwards (target
// below source) and inverse edges upwards gives a strict partial order on
// the nodes whenever the underlying quiver is acyclic.
//
// Traces record, for an ordered node pair, the node chain of the unique
// one-sign string connecting the pair (direct strings descend, inverse
// strings ascend). A traced poset abstracts this data; the axioms checked by
// validate_traced_poset are strong enough to rebuild a string algebra
// presentation from the poset alone (recover_presentation).

#include <functional>

#include "strings.hpp"

#include "json.hpp"

namespace bandbrick {

// ---------------------------------------------------------------------------
// Covering quiver
// ---------------------------------------------------------------------------

inline int cover_node(int vertex, int sign) { return 2 * vertex + (sign > 0 ? 0 : 1); }
inline int cover_node_vertex(int node) { return node / 2; }
inline int cover_node_sign(int node) { return node % 2 == 0 ? +1 : -1; }

inline int node_source(const Presentation& p, Syllable s) {
  return cover_node(syll_source(p, s), -syll_sigma(p, s));
}
inline int node_target(const Presentation& p, Syllable s) {
  return cover_node(syll_target(p, s), syll_eps(p, s));
}

inline std::string cover_node_name(const Presentation& p, int node) {
  return "(" + p.quiver.vertices[cover_node_vertex(node)] + "," +
         (cover_node_sign(node) > 0 ? "+1" : "-1") + ")";
}

struct CoveringQuiverEdge {
  std::string label;
  int from, to;
};

struct CoveringQuiver {
  std::vector<std::string> nodes;
  std::vector<CoveringQuiverEdge> edges;
};

inline CoveringQuiver covering_quiver(const Presentation& p) {
  if (!p.has_signs()) throw error("covering_quiver: presentation needs sign maps");
  CoveringQuiver cq;
  for (int n = 0; n < 2 * (int)p.quiver.vertices.size(); ++n)
    cq.nodes.push_back(cover_node_name(p, n));
  for (int a = 0; a < (int)p.quiver.arrows.size(); ++a) {
    Syllable d{a, false}, i{a, true};
    cq.edges.push_back(
        {p.quiver.arrows[a].name, node_source(p, d), node_target(p, d)});
    cq.edges.push_back(
        {p.quiver.arrows[a].name + "^-1", node_source(p, i), node_target(p, i)});
  }
  return cq;
}

inline std::string covering_quiver_dot(const CoveringQuiver& cq) {
  std::ostringstream out;
  out << "digraph covering_quiver {\n";
  for (const auto& n : cq.nodes) out << "  \"" << n << "\";\n";
  for (const auto& e : cq.edges)
    out << "  \"" << cq.nodes[e.from] << "\" -> \"" << cq.nodes[e.to] << "\" [label=\""
        << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Traced poset
// ---------------------------------------------------------------------------

struct Trace {
  std::vector<int> nodes;          // from nodes.front() to nodes.back()
  std::vector<Syllable> witness;   // one-sign string, walk order; may be empty
};

struct TracedPoset {
  std::vector<std::string> elems;
  std::vector<std::vector<bool>> lt;  // strict order, transitively closed
  std::vector<int> mu;
  std::map<std::pair<int, int>, Trace> traces;  // keyed by (from, to), length >= 2

  int size() const { return (int)elems.size(); }
  bool less(int a, int b) const { return lt[a][b]; }
  bool comparable(int a, int b) const { return lt[a][b] || lt[b][a]; }

  const Trace* trace(int from, int to) const {
    auto it = traces.find({from, to});
    return it == traces.end() ? nullptr : &it->second;
  }

  bool is_cover(int lo, int hi) const {
    if (!lt[lo][hi]) return false;
    for (int z = 0; z < size(); ++z)
      if (lt[lo][z] && lt[z][hi]) return false;
    return true;
  }

  std::vector<std::pair<int, int>> cover_pairs() const {  // (lower, upper)
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b)
        if (is_cover(a, b)) out.push_back({a, b});
    return out;
  }

  // Maximal traces: not a contiguous subsequence of a longer trace.
  std::vector<std::vector<int>> maximal_traces() const {
    std::vector<std::vector<int>> out;
    for (const auto& [key, tr] : traces) {
      bool contained = false;
      for (const auto& [key2, tr2] : traces) {
        if (tr2.nodes.size() <= tr.nodes.size()) continue;
        for (size_t i = 0; i + tr.nodes.size() <= tr2.nodes.size() && !contained; ++i)
          contained = std::equal(tr.nodes.begin(), tr.nodes.end(),
                                 tr2.nodes.begin() + i);
        if (contained) break;
      }
      if (!contained) out.push_back(tr.nodes);
    }
    return out;
  }
};

inline void transitive_close(std::vector<std::vector<bool>>& lt) {
  const int n = (int)lt.size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (lt[i][k])
        for (int j = 0; j < n; ++j)
          if (lt[k][j]) lt[i][j] = true;
}

// ---------------------------------------------------------------------------
// Axiom validation
// ---------------------------------------------------------------------------

struct TracedPosetReport {
  bool ok = true;
  std::vector<std::pair<std::string, std::string>> violations;
  void add(const std::string& axiom, const std::string& witness) {
    ok = false;
    violations.push_back({axiom, witness});
  }
};

inline TracedPosetReport validate_traced_poset(const TracedPoset& t) {
  TracedPosetReport rep;
  const int n = t.size();

  for (const auto& [key, tr] : t.traces) {
    if ((int)tr.nodes.size() < 2 || tr.nodes.front() != key.first ||
        tr.nodes.back() != key.second) {
      rep.add("structure", "trace endpoints do not match its key");
      continue;
    }
    bool asc = true, desc = true;
    for (size_t i = 0; i + 1 < tr.nodes.size(); ++i) {
      if (!t.less(tr.nodes[i], tr.nodes[i + 1])) asc = false;
      if (!t.less(tr.nodes[i + 1], tr.nodes[i])) desc = false;
    }
    if (!asc && !desc)
      rep.add("monotone", "trace " + t.elems[key.first] + " -> " + t.elems[key.second] +
                              " is not strictly monotone");
    // (3)/(3'): every consecutive pair of a trace is a single step, i.e.
    // itself carries the two-element trace in the same direction. (A step
    // need not be a cover of the ambient order: a one-syllable connector can
    // run in parallel with a longer chain through other elements, as happens
    // already for the four-vertex triangle algebra.)
    for (size_t i = 0; i + 1 < tr.nodes.size(); ++i) {
      int a = tr.nodes[i], b = tr.nodes[i + 1];
      const Trace* step = t.trace(a, b);
      if ((asc || desc) && (!step || step->nodes.size() != 2))
        rep.add("3", "trace step " + t.elems[a] + " -> " + t.elems[b] +
                         " is not a single-step trace");
    }
    // closure under contiguous subsequences
    for (size_t i = 0; i < tr.nodes.size(); ++i)
      for (size_t j = i + 1; j < tr.nodes.size(); ++j) {
        if (j - i + 1 == tr.nodes.size()) continue;
        const Trace* sub = t.trace(tr.nodes[i], tr.nodes[j]);
        std::vector<int> want(tr.nodes.begin() + i, tr.nodes.begin() + j + 1);
        if (!sub || sub->nodes != want)
          rep.add("closure", "contiguous subsequence " + t.elems[tr.nodes[i]] + " -> " +
                                 t.elems[tr.nodes[j]] + " missing or different");
      }
  }

  // (1)/(1')
  for (int a = 0; a < n; ++a) {
    int above = 0, below = 0;
    for (int b = 0; b < n; ++b) {
      if (t.is_cover(a, b)) ++above;
      if (t.is_cover(b, a)) ++below;
    }
    if (above > 2) rep.add("1", t.elems[a] + " is covered by more than two elements");
    if (below > 2) rep.add("1'", t.elems[a] + " covers more than two elements");
  }

  // (4)/(4'): ascending two-element traces, at most one per start / per end.
  std::vector<int> asc2_from(n, 0), asc2_to(n, 0);
  for (const auto& [key, tr] : t.traces)
    if (tr.nodes.size() == 2 && t.less(key.first, key.second)) {
      asc2_from[key.first]++;
      asc2_to[key.second]++;
    }
  for (int a = 0; a < n; ++a) {
    if (asc2_from[a] > 1)
      rep.add("4", "two ascending two-element traces start at " + t.elems[a]);
    if (asc2_to[a] > 1)
      rep.add("4'", "two ascending two-element traces end at " + t.elems[a]);
  }

  // (5)
  for (int a = 0; a < n; ++a) {
    if (t.mu[a] == a) rep.add("5", "mu fixes " + t.elems[a]);
    if (t.mu[t.mu[a]] != a) rep.add("5", "mu is not an involution at " + t.elems[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.less(a, b) != t.less(t.mu[a], t.mu[b])) {
        rep.add("5", "mu is not an order isomorphism at (" + t.elems[a] + "," +
                         t.elems[b] + ")");
        goto done5;
      }
done5:;

  // (6)
  for (const auto& [key, tr] : t.traces) {
    std::vector<int> want;
    for (auto it = tr.nodes.rbegin(); it != tr.nodes.rend(); ++it)
      want.push_back(t.mu[*it]);
    const Trace* dual = t.trace(t.mu[key.second], t.mu[key.first]);
    if (!dual || dual->nodes != want)
      rep.add("6", "mu-dual of trace " + t.elems[key.first] + " -> " +
                       t.elems[key.second] + " missing or different");
  }

  return rep;
}

// Builds the traced poset of a presentation with solved signs over an
// acyclic quiver. Traces come from all one-sign strings: every relation-free
// directed path and every inverse of one.
inline TracedPoset build_traced_poset(const Presentation& p) {
  if (!p.has_signs()) throw error("build_traced_poset: presentation needs sign maps");
  {
    auto rep = validate(p);
    if (!rep.is_string_algebra)
      throw error("build_traced_poset: not a string algebra");
    if (!rep.is_acyclic)
      throw error("build_traced_poset: underlying quiver must be acyclic");
  }

  TracedPoset t;
  const int n = 2 * (int)p.quiver.vertices.size();
  for (int i = 0; i < n; ++i) t.elems.push_back(cover_node_name(p, i));
  t.lt.assign(n, std::vector<bool>(n, false));
  t.mu.resize(n);
  for (int v = 0; v < (int)p.quiver.vertices.size(); ++v) {
    t.mu[cover_node(v, +1)] = cover_node(v, -1);
    t.mu[cover_node(v, -1)] = cover_node(v, +1);
  }

  for (int a = 0; a < (int)p.quiver.arrows.size(); ++a) {
    Syllable d{a, false}, i{a, true};
    t.lt[node_target(p, d)][node_source(p, d)] = true;  // direct edges descend
    t.lt[node_source(p, i)][node_target(p, i)] = true;  // inverse edges ascend
  }
  transitive_close(t.lt);
  for (int i = 0; i < n; ++i)
    if (t.lt[i][i])
      throw error("build_traced_poset: antisymmetry violated at " + t.elems[i]);

  auto insert_trace = [&](const std::vector<Syllable>& walk) {
    Trace tr;
    tr.witness = walk;
    for (auto s : walk) tr.nodes.push_back(node_source(p, s));
    tr.nodes.push_back(node_target(p, walk.back()));
    auto key = std::make_pair(tr.nodes.front(), tr.nodes.back());
    auto [it, fresh] = t.traces.insert({key, tr});
    if (!fresh && it->second.nodes != tr.nodes)
      throw error("build_traced_poset: two one-sign strings connect " +
                  t.elems[key.first] + " and " + t.elems[key.second]);
  };

  // DFS over relation-free directed paths; acyclicity bounds their length.
  std::vector<int> walk;
  auto dfs = [&](auto&& self) -> void {
    std::vector<Syllable> dir, inv;
    for (int x : walk) dir.push_back({x, false});
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) inv.push_back({*it, true});
    insert_trace(dir);
    insert_trace(inv);
    int at = p.quiver.arrows[walk.back()].tgt;
    for (int a : p.quiver.arrows_from(at)) {
      walk.push_back(a);
      if (!p.has_forbidden_subpath(walk)) self(self);
      walk.pop_back();
    }
  };
  for (int a = 0; a < (int)p.quiver.arrows.size(); ++a) {
    walk.assign(1, a);
    dfs(dfs);
  }

  auto rep = validate_traced_poset(t);
  if (!rep.ok)
    throw error("build_traced_poset: construction violates axiom (" +
                rep.violations.front().first + "): " + rep.violations.front().second);
  return t;
}

// ---------------------------------------------------------------------------
// Recovering a presentation from a traced poset.
//
// Arrows are the descending two-element traces (single syllable steps). A
// composable arrow pair is a relation when its covering lift breaks (the
// second arrow starts at the mu-partner of where the first one ends; sign
// axiom (c) forbids that for non-relations), or when it lifts but the
// full descending trace is absent. Longer relations are the minimal
// descending arrow chains whose full trace is absent while every proper
// sub-trace is present.
// ---------------------------------------------------------------------------

inline Presentation recover_presentation(const TracedPoset& t) {
  {
    auto rep = validate_traced_poset(t);
    if (!rep.ok) {
      std::string what = "recover_presentation: invalid traced poset:";
      for (const auto& [a, w] : rep.violations) what += " [" + a + "] " + w + ";";
      throw error(what);
    }
  }
  const int n = t.size();

  std::vector<int> orbit(n, -1);
  int norb = 0;
  for (int e = 0; e < n; ++e)
    if (orbit[e] < 0) {
      orbit[e] = norb;
      orbit[t.mu[e]] = norb;
      ++norb;
    }

  Presentation out;
  for (int i = 0; i < norb; ++i) out.quiver.vertices.push_back("w" + std::to_string(i + 1));

  struct RecArrow {
    int upper, lower;  // descending trace pair
  };
  std::vector<RecArrow> arr;
  for (int hi = 0; hi < n; ++hi)
    for (int lo = 0; lo < n; ++lo) {
      const Trace* tr = t.trace(hi, lo);
      if (!tr || tr->nodes.size() != 2 || !t.less(lo, hi)) continue;
      arr.push_back({hi, lo});
      out.quiver.arrows.push_back({"x" + std::to_string(arr.size()), orbit[hi],
                                   orbit[lo]});
    }

  // Length-2 relations from unchained composable pairs.
  for (int e = 0; e < (int)arr.size(); ++e)
    for (int f = 0; f < (int)arr.size(); ++f) {
      if (orbit[arr[e].lower] != orbit[arr[f].upper]) continue;
      if (arr[f].upper == t.mu[arr[e].lower]) out.relations.push_back({e, f});
    }

  // Chained chains with a minimally missing full trace.
  std::vector<std::vector<int>> by_upper(n);
  for (int f = 0; f < (int)arr.size(); ++f) by_upper[arr[f].upper].push_back(f);

  std::vector<int> chain_arrows;
  std::vector<int> chain_nodes;
  auto dfs = [&](auto&& self) -> void {
    for (int f : by_upper[chain_nodes.back()]) {
      int nxt = arr[f].lower;
      bool missing_full = (t.trace(chain_nodes.front(), nxt) == nullptr);
      bool missing_inner = false;  // pairs (chain_nodes[i], nxt) for i >= 1
      for (size_t i = 1; i < chain_nodes.size(); ++i)
        if (!t.trace(chain_nodes[i], nxt)) missing_inner = true;
      if (missing_inner) continue;  // a shorter relation sits inside; not minimal
      chain_arrows.push_back(f);
      chain_nodes.push_back(nxt);
      if (missing_full) {
        if (chain_arrows.size() >= 2) out.relations.push_back(chain_arrows);
      } else {
        self(self);
      }
      chain_arrows.pop_back();
      chain_nodes.pop_back();
    }
  };
  for (int e = 0; e < (int)arr.size(); ++e) {
    chain_arrows.assign(1, e);
    chain_nodes.assign({arr[e].upper, arr[e].lower});
    dfs(dfs);
  }

  std::sort(out.relations.begin(), out.relations.end());
  out.relations.erase(std::unique(out.relations.begin(), out.relations.end()),
                      out.relations.end());
  return out;
}

// ---------------------------------------------------------------------------
// Crowns over a traced poset and weakly perfectly clustering pairs.
// ---------------------------------------------------------------------------

struct PosetCrown {
  std::vector<int> letters;
  int length() const { return (int)letters.size(); }
};

// Valid crown: cyclically alternating and every consecutive ordered pair
// (including the wrap) carries a nonempty trace. Crowns have even length.
inline bool crown_is_valid(const TracedPoset& t, const PosetCrown& w) {
  const int k = w.length();
  if (k < 2 || k % 2 != 0) return false;
  for (int i = 0; i < k; ++i) {
    int a = w.letters[i], b = w.letters[(i + 1) % k], c = w.letters[(i + 2) % k];
    if (!t.comparable(a, b)) return false;
    if (t.less(a, b) == t.less(b, c)) return false;
    if (!t.trace(a, b)) return false;
  }
  return true;
}

inline bool crown_is_special(const TracedPoset& t, const PosetCrown& w) {
  return w.length() >= 2 && t.less(w.letters[0], w.letters[1]);
}

inline bool crown_is_primitive(const PosetCrown& w) {
  return is_primitive_sequence(w.letters);
}

// The pair (w1, w2) is weakly perfectly clustering when neither obstruction
// of the pair definition occurs among cyclic permutations of w1^(2|w2|) and
// w2^(2|w1|). Rotations of a power are rotations of the base word, so shift
// pairs (i, j) with factor comparison up to length 2|w1||w2| cover the
// definition exactly.
inline bool wpc_pair(const TracedPoset& t, const PosetCrown& w1, const PosetCrown& w2) {
  if (!crown_is_valid(t, w1) || !crown_is_valid(t, w2))
    throw error("wpc_pair: arguments must be valid crowns over the traced poset");
  const int n1 = w1.length(), n2 = w2.length();
  const int cap = 2 * n1 * n2;
  auto at1 = [&](int i, int q) { return w1.letters[(i + q) % n1]; };
  auto at2 = [&](int j, int q) { return w2.letters[(j + q) % n2]; };

  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      // condition (1)
      if (t.less(w1.letters[i], w2.letters[j])) {
        for (int L = 1; L <= cap - 2; ++L) {
          if (at1(i, L) != at2(j, L)) break;
          if (t.less(at1(i, L + 1), at2(j, L + 1))) return false;
        }
      }
      // condition (2)
      int a1 = w1.letters[i], b1 = at1(i, 1);
      int a2 = w2.letters[j], b2 = at2(j, 1);
      if (t.less(a1, a2) && t.less(b1, b2) && (t.less(a1, b1) == t.less(a2, b2))) {
        const Trace* tr1 = t.trace(a1, b1);
        const Trace* tr2 = t.trace(a2, b2);
        std::set<int> s1(tr1->nodes.begin(), tr1->nodes.end());
        bool inter = false;
        for (int x : tr2->nodes)
          if (s1.count(x)) inter = true;
        if (inter) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// JSON and DOT exports
// ---------------------------------------------------------------------------

inline nlohmann::json traced_poset_to_json(const TracedPoset& t) {
  nlohmann::json j;
  j["schema"] = 1;
  j["elements"] = t.elems;
  j["mu"] = t.mu;
  auto covers = nlohmann::json::array();
  for (auto [lo, hi] : t.cover_pairs()) covers.push_back({lo, hi});
  j["covers"] = covers;
  auto traces = nlohmann::json::array();
  for (const auto& [key, tr] : t.traces)
    traces.push_back({{"from", key.first}, {"to", key.second}, {"nodes", tr.nodes}});
  j["traces"] = traces;
  return j;
}

inline TracedPoset traced_poset_from_json(const nlohmann::json& j) {
  if (!j.contains("schema") || j["schema"] != 1)
    throw error("traced_poset_from_json: unsupported schema");
  TracedPoset t;
  t.elems = j.at("elements").get<std::vector<std::string>>();
  t.mu = j.at("mu").get<std::vector<int>>();
  const int n = t.size();
  if ((int)t.mu.size() != n) throw error("traced_poset_from_json: bad mu length");
  t.lt.assign(n, std::vector<bool>(n, false));
  for (const auto& c : j.at("covers")) {
    int lo = c.at(0).get<int>(), hi = c.at(1).get<int>();
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw error("traced_poset_from_json: cover index out of range");
    t.lt[lo][hi] = true;
  }
  transitive_close(t.lt);
  for (int i = 0; i < n; ++i)
    if (t.lt[i][i]) throw error("traced_poset_from_json: covers contain a cycle");
  for (const auto& tr : j.at("traces")) {
    Trace trace;
    trace.nodes = tr.at("nodes").get<std::vector<int>>();
    if (trace.nodes.size() < 2) throw error("traced_poset_from_json: short trace");
    t.traces[{tr.at("from").get<int>(), tr.at("to").get<int>()}] = trace;
  }
  return t;
}

inline std::string hasse_dot(const TracedPoset& t) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& e : t.elems) out << "  \"" << e << "\";\n";
  for (auto [lo, hi] : t.cover_pairs())
    out << "  \"" << t.elems[lo] << "\" -> \"" << t.elems[hi] << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bandbrick
