#pragma once

// Quiver-with-relations presentations of string algebras.
//
// A presentation is a finite quiver together with a set of monomial
// relations (directed paths of length >= 2, composed right-to-left) and,
// optionally, a pair of sign maps sigma, eps : arrows -> {-1,+1} subject to
//   (a) distinct arrows with equal source have opposite sigma,
//   (b) distinct arrows with equal target have opposite eps,
//   (c) if the two-arrow path [b then a] is composable and not a relation,
//       then sigma(a) = -eps(b).
//
// This header provides parsing/serialization of the line-oriented file
// format, the string-algebra/gentle/acyclicity validator, a deterministic
// sign-map solver, the trisection construction, and a presentation
// isomorphism test used by round-trip checks.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bandbrick {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int src = -1;
  int tgt = -1;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(std::string_view name) const {
    for (int i = 0; i < (int)vertices.size(); ++i)
      if (vertices[i] == name) return i;
    return -1;
  }
  int arrow_index(std::string_view name) const {
    for (int i = 0; i < (int)arrows.size(); ++i)
      if (arrows[i].name == name) return i;
    return -1;
  }
  std::vector<int> arrows_from(int v) const {
    std::vector<int> out;
    for (int i = 0; i < (int)arrows.size(); ++i)
      if (arrows[i].src == v) out.push_back(i);
    return out;
  }
  std::vector<int> arrows_into(int v) const {
    std::vector<int> out;
    for (int i = 0; i < (int)arrows.size(); ++i)
      if (arrows[i].tgt == v) out.push_back(i);
    return out;
  }
  bool is_acyclic() const {
    // colors: 0 unvisited, 1 on stack, 2 done
    std::vector<int> color(vertices.size(), 0);
    std::vector<std::vector<int>> next(vertices.size());
    for (const auto& a : arrows) next[a.src].push_back(a.tgt);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < (int)vertices.size(); ++s) {
      if (color[s] != 0) continue;
      stack.push_back({s, 0});
      color[s] = 1;
      while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < next[v].size()) {
          int w = next[v][idx++];
          if (color[w] == 1) return false;
          if (color[w] == 0) {
            color[w] = 1;
            stack.push_back({w, 0});
          }
        } else {
          color[v] = 2;
          stack.pop_back();
        }
      }
    }
    return true;
  }
};

struct SignMaps {
  std::vector<int> sigma;  // indexed by arrow, values in {-1,+1}
  std::vector<int> eps;
};

// Relations are stored in walk order: relations[r][0] is the first arrow the
// path traverses (the rightmost factor in the written monomial).
struct Presentation {
  Quiver quiver;
  std::vector<std::vector<int>> relations;
  std::optional<SignMaps> signs;

  int max_relation_length() const {
    size_t m = 0;
    for (const auto& r : relations) m = std::max(m, r.size());
    return (int)m;
  }

  bool is_relation(const std::vector<int>& walk) const {
    for (const auto& r : relations)
      if (r == walk) return true;
    return false;
  }

  // True iff some contiguous subpath of `walk` is a relation.
  bool has_forbidden_subpath(const std::vector<int>& walk) const {
    for (const auto& r : relations) {
      if (r.size() > walk.size()) continue;
      for (size_t i = 0; i + r.size() <= walk.size(); ++i)
        if (std::equal(r.begin(), r.end(), walk.begin() + i)) return true;
    }
    return false;
  }

  bool has_signs() const { return signs.has_value(); }
  int sigma(int arrow) const {
    if (!signs) throw error("presentation has no sign maps; run solve_signs first");
    return signs->sigma[arrow];
  }
  int eps(int arrow) const {
    if (!signs) throw error("presentation has no sign maps; run solve_signs first");
    return signs->eps[arrow];
  }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_sign_token(const std::string& tok) {
  if (tok == "1" || tok == "+1") return 1;
  if (tok == "-1") return -1;
  return 0;
}

}  // namespace detail

// Checks (a)-(c) for an explicit sign assignment; returns a diagnostic or
// the empty string when all three hold.
inline std::string check_sign_axioms(const Presentation& p) {
  const auto& q = p.quiver;
  if (!p.signs) return "no sign maps present";
  for (int a = 0; a < (int)q.arrows.size(); ++a)
    for (int b = a + 1; b < (int)q.arrows.size(); ++b) {
      if (q.arrows[a].src == q.arrows[b].src && p.sigma(a) == p.sigma(b))
        return "axiom (a): arrows " + q.arrows[a].name + ", " + q.arrows[b].name +
               " share a source but have equal sigma";
      if (q.arrows[a].tgt == q.arrows[b].tgt && p.eps(a) == p.eps(b))
        return "axiom (b): arrows " + q.arrows[a].name + ", " + q.arrows[b].name +
               " share a target but have equal eps";
    }
  for (int b = 0; b < (int)q.arrows.size(); ++b)
    for (int a = 0; a < (int)q.arrows.size(); ++a) {
      if (q.arrows[a].src != q.arrows[b].tgt) continue;
      if (p.is_relation({b, a})) continue;
      if (p.sigma(a) != -p.eps(b))
        return "axiom (c): composable non-relation pair " + q.arrows[b].name + " -> " +
               q.arrows[a].name + " with sigma(" + q.arrows[a].name + ") != -eps(" +
               q.arrows[b].name + ")";
    }
  return "";
}

// ---------------------------------------------------------------------------
// File format
//
//   vertices: v1 v2 ...
//   arrow <id> : <src> -> <tgt>
//   relation <id1>*<id2>*...      (rightmost arrow applied first)
//   sign <arrow id> <sigma> <eps>
//
// '#' starts a comment; blank lines are ignored.
// ---------------------------------------------------------------------------

inline Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::map<int, std::pair<int, int>> sign_lines;  // arrow -> (sigma, eps)
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_vertices = false;

  auto fail = [&](const std::string& msg) -> void {
    throw error("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;

    if (toks[0] == "vertices:") {
      if (have_vertices) fail("duplicate vertices line");
      have_vertices = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (p.quiver.vertex_index(toks[i]) >= 0) fail("duplicate vertex id " + toks[i]);
        p.quiver.vertices.push_back(toks[i]);
      }
      if (p.quiver.vertices.empty()) fail("empty vertex list");
    } else if (toks[0] == "arrow") {
      // arrow <id> : <src> -> <tgt>
      if (!have_vertices) fail("arrow declared before vertices");
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        fail("expected: arrow <id> : <src> -> <tgt>");
      if (p.quiver.arrow_index(toks[1]) >= 0) fail("duplicate arrow id " + toks[1]);
      if (toks[1].find('^') != std::string::npos || toks[1].find('*') != std::string::npos)
        fail("arrow id may not contain '^' or '*'");
      int s = p.quiver.vertex_index(toks[3]);
      int t = p.quiver.vertex_index(toks[5]);
      if (s < 0) fail("unknown source vertex " + toks[3]);
      if (t < 0) fail("unknown target vertex " + toks[5]);
      p.quiver.arrows.push_back({toks[1], s, t});
    } else if (toks[0] == "relation") {
      if (toks.size() != 2) fail("expected: relation <id1>*<id2>*...");
      std::vector<int> written;  // left to right as written
      std::string cur;
      std::istringstream rs(toks[1]);
      while (std::getline(rs, cur, '*')) {
        int a = p.quiver.arrow_index(cur);
        if (a < 0) fail("unknown arrow " + cur + " in relation");
        written.push_back(a);
      }
      if (written.size() < 2) fail("relation must have length >= 2");
      std::vector<int> walk(written.rbegin(), written.rend());
      for (size_t i = 0; i + 1 < walk.size(); ++i)
        if (p.quiver.arrows[walk[i]].tgt != p.quiver.arrows[walk[i + 1]].src)
          fail("relation is not a directed path (composed right-to-left)");
      if (p.is_relation(walk)) fail("duplicate relation");
      p.relations.push_back(walk);
    } else if (toks[0] == "sign") {
      if (toks.size() != 4) fail("expected: sign <arrow> <sigma> <eps>");
      int a = p.quiver.arrow_index(toks[1]);
      if (a < 0) fail("unknown arrow " + toks[1] + " in sign line");
      int s = detail::parse_sign_token(toks[2]);
      int e = detail::parse_sign_token(toks[3]);
      if (s == 0 || e == 0) fail("sign values must be -1 or 1");
      if (sign_lines.count(a)) fail("duplicate sign line for arrow " + toks[1]);
      sign_lines[a] = {s, e};
    } else {
      fail("unrecognized directive '" + toks[0] + "'");
    }
  }

  if (!have_vertices) throw error("missing vertices line");
  if (!sign_lines.empty()) {
    if ((int)sign_lines.size() != (int)p.quiver.arrows.size())
      throw error("sign lines present for some arrows but not all");
    SignMaps sm;
    sm.sigma.resize(p.quiver.arrows.size());
    sm.eps.resize(p.quiver.arrows.size());
    for (auto [a, se] : sign_lines) {
      sm.sigma[a] = se.first;
      sm.eps[a] = se.second;
    }
    p.signs = std::move(sm);
    if (auto msg = check_sign_axioms(p); !msg.empty())
      throw error("declared sign maps invalid: " + msg);
  }
  return p;
}

inline std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : p.quiver.vertices) out << ' ' << v;
  out << '\n';
  for (const auto& a : p.quiver.arrows)
    out << "arrow " << a.name << " : " << p.quiver.vertices[a.src] << " -> "
        << p.quiver.vertices[a.tgt] << '\n';
  for (const auto& r : p.relations) {
    out << "relation ";
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
      if (it != r.rbegin()) out << '*';
      out << p.quiver.arrows[*it].name;
    }
    out << '\n';
  }
  if (p.signs)
    for (int a = 0; a < (int)p.quiver.arrows.size(); ++a)
      out << "sign " << p.quiver.arrows[a].name << ' ' << p.signs->sigma[a] << ' '
          << p.signs->eps[a] << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationReport {
  bool is_string_algebra = false;
  bool is_gentle = false;
  bool is_acyclic = false;
  std::vector<std::pair<std::string, std::string>> violations;  // (axiom id, witness)

  bool violated(std::string_view axiom) const {
    for (const auto& [a, w] : violations)
      if (a == axiom) return true;
    return false;
  }
};

// Condition III: some M bounds the length of every path with no subpath in
// rho. Equivalently the "window automaton" is acyclic: its states are the
// relation-free paths of length max|r|-1, its transitions shift by one arrow
// and reject when the combined window picks up a relation.
namespace detail {

inline bool relation_free_paths_bounded(const Presentation& p) {
  const auto& q = p.quiver;
  int W = std::max(1, p.max_relation_length() - 1);

  std::vector<std::vector<int>> states;
  {
    std::vector<std::vector<int>> frontier;
    for (int a = 0; a < (int)q.arrows.size(); ++a) frontier.push_back({a});
    for (int len = 1; len < W; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : frontier)
        for (int a : q.arrows_from(q.arrows[w.back()].tgt)) {
          auto ext = w;
          ext.push_back(a);
          if (!p.has_forbidden_subpath(ext)) next.push_back(ext);
        }
      frontier = std::move(next);
    }
    for (auto& w : frontier)
      if (!p.has_forbidden_subpath(w)) states.push_back(std::move(w));
  }

  auto state_index = [&](const std::vector<int>& w) -> int {
    for (int i = 0; i < (int)states.size(); ++i)
      if (states[i] == w) return i;
    return -1;
  };

  std::vector<std::vector<int>> succ(states.size());
  for (int i = 0; i < (int)states.size(); ++i)
    for (int a : q.arrows_from(q.arrows[states[i].back()].tgt)) {
      auto window = states[i];
      window.push_back(a);
      if (p.has_forbidden_subpath(window)) continue;
      std::vector<int> nxt(window.begin() + 1, window.end());
      int j = state_index(nxt);
      if (j >= 0) succ[i].push_back(j);
    }

  std::vector<int> color(states.size(), 0);
  std::vector<std::pair<int, size_t>> stack;
  for (int s = 0; s < (int)states.size(); ++s) {
    if (color[s] != 0) continue;
    stack.push_back({s, 0});
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < succ[v].size()) {
        int w = succ[v][idx++];
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace detail

inline ValidationReport validate(const Presentation& p) {
  ValidationReport rep;
  const auto& q = p.quiver;

  for (int v = 0; v < (int)q.vertices.size(); ++v) {
    if (q.arrows_from(v).size() > 2)
      rep.violations.push_back({"I", "vertex " + q.vertices[v] + " has out-degree > 2"});
    if (q.arrows_into(v).size() > 2)
      rep.violations.push_back({"I", "vertex " + q.vertices[v] + " has in-degree > 2"});
  }

  // Condition II and the gentle refinements count continuations of each arrow.
  bool gentle_unique = true;
  for (int a = 0; a < (int)q.arrows.size(); ++a) {
    int succ_free = 0, succ_rel = 0;  // pairs [a then x]
    for (int x : q.arrows_from(q.arrows[a].tgt))
      (p.is_relation({a, x}) ? succ_rel : succ_free)++;
    int pred_free = 0, pred_rel = 0;  // pairs [x then a]
    for (int x : q.arrows_into(q.arrows[a].src))
      (p.is_relation({x, a}) ? pred_rel : pred_free)++;
    if (succ_free > 1)
      rep.violations.push_back(
          {"II", "arrow " + q.arrows[a].name + " has " + std::to_string(succ_free) +
                     " relation-free continuations"});
    if (pred_free > 1)
      rep.violations.push_back(
          {"II", "arrow " + q.arrows[a].name + " is a relation-free continuation of " +
                     std::to_string(pred_free) + " arrows"});
    if (succ_rel > 1 || pred_rel > 1) gentle_unique = false;
  }

  if (!detail::relation_free_paths_bounded(p))
    rep.violations.push_back({"III", "relation-free paths of unbounded length exist"});

  rep.is_acyclic = q.is_acyclic();
  rep.is_string_algebra =
      !rep.violated("I") && !rep.violated("II") && !rep.violated("III");

  bool len2 = true;
  for (const auto& r : p.relations)
    if (r.size() != 2) len2 = false;
  rep.is_gentle = rep.is_string_algebra && len2 && gentle_unique;
  if (rep.is_string_algebra && !rep.is_gentle) {
    if (!len2)
      rep.violations.push_back({"gentle", "some relation has length > 2"});
    else
      rep.violations.push_back({"gentle", "relation-side uniqueness (IIa/IIb) fails"});
  }
  if (!rep.is_acyclic)
    rep.violations.push_back({"acyclic", "underlying quiver has a directed cycle"});
  return rep;
}

// ---------------------------------------------------------------------------
// Sign-map solver
//
// Every constraint identifies two sign variables up to negation, so solving
// is parity propagation over the constraint graph. Free components are fixed
// deterministically: variables are visited in declaration order
// (sigma(a0), eps(a0), sigma(a1), ...) and an unassigned one is set to +1.
// ---------------------------------------------------------------------------

inline Presentation solve_signs(const Presentation& p) {
  {
    auto rep = validate(p);
    if (!rep.is_string_algebra) {
      std::string what = "solve_signs: not a string algebra:";
      for (const auto& [a, w] : rep.violations)
        if (a == "I" || a == "II" || a == "III") what += " [" + a + "] " + w + ";";
      throw error(what);
    }
  }
  if (p.signs) throw error("solve_signs: sign maps already present");

  const auto& q = p.quiver;
  const int n = 2 * (int)q.arrows.size();  // var 2a = sigma(a), 2a+1 = eps(a)
  // All constraints say "opposite value".
  std::vector<std::vector<int>> opp(n);
  auto connect = [&](int u, int v) {
    opp[u].push_back(v);
    opp[v].push_back(u);
  };
  for (int a = 0; a < (int)q.arrows.size(); ++a)
    for (int b = a + 1; b < (int)q.arrows.size(); ++b) {
      if (q.arrows[a].src == q.arrows[b].src) connect(2 * a, 2 * b);
      if (q.arrows[a].tgt == q.arrows[b].tgt) connect(2 * a + 1, 2 * b + 1);
    }
  for (int b = 0; b < (int)q.arrows.size(); ++b)
    for (int a = 0; a < (int)q.arrows.size(); ++a)
      if (q.arrows[a].src == q.arrows[b].tgt && !p.is_relation({b, a}))
        connect(2 * a, 2 * b + 1);

  auto var_name = [&](int v) {
    return std::string(v % 2 == 0 ? "sigma(" : "eps(") + q.arrows[v / 2].name + ")";
  };

  std::vector<int> val(n, 0), parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (val[s] != 0) continue;
    val[s] = 1;
    std::vector<int> queue{s};
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int v : opp[u]) {
        if (val[v] == 0) {
          val[v] = -val[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (val[v] != -val[u]) {
          // Conflict: report the odd cycle of constraints through u and v.
          std::string cyc = var_name(v);
          for (int w = u; w != -1; w = parent[w]) cyc = var_name(w) + " - " + cyc;
          throw error("solve_signs: unsatisfiable sign constraints along cycle: " + cyc);
        }
      }
    }
  }

  Presentation out = p;
  SignMaps sm;
  sm.sigma.resize(q.arrows.size());
  sm.eps.resize(q.arrows.size());
  for (int a = 0; a < (int)q.arrows.size(); ++a) {
    sm.sigma[a] = val[2 * a];
    sm.eps[a] = val[2 * a + 1];
  }
  out.signs = std::move(sm);
  if (auto msg = check_sign_axioms(out); !msg.empty())
    throw error("solve_signs: internal error: " + msg);
  return out;
}

inline Presentation ensure_signs(const Presentation& p) {
  return p.signs ? p : solve_signs(p);
}

// ---------------------------------------------------------------------------
// Trisection: split every arrow a into  s(a) --a_1--> v_a^1 <--a_2-- v_a^2
// --a_3--> t(a), with rho' = { a_1 b_3 : [b then a] in rho }. The result has
// an acyclic quiver for any input. Relations of length > 2 do not transfer
// to the trisection (no direct path there is longer than 2); inputs carrying
// them are accepted, but band preservation is only guaranteed for gentle
// input.
// ---------------------------------------------------------------------------

inline Presentation trisect(const Presentation& p) {
  {
    auto rep = validate(p);
    if (!rep.is_string_algebra) throw error("trisect: input is not a string algebra");
  }
  const auto& q = p.quiver;
  Presentation out;
  out.quiver.vertices = q.vertices;
  for (const auto& a : q.arrows) {
    out.quiver.vertices.push_back(a.name + "_v1");
    out.quiver.vertices.push_back(a.name + "_v2");
  }
  const int nv = (int)q.vertices.size();
  auto v1 = [&](int a) { return nv + 2 * a; };
  auto v2 = [&](int a) { return nv + 2 * a + 1; };
  for (int a = 0; a < (int)q.arrows.size(); ++a) {
    out.quiver.arrows.push_back({q.arrows[a].name + "_1", q.arrows[a].src, v1(a)});
    out.quiver.arrows.push_back({q.arrows[a].name + "_2", v2(a), v1(a)});
    out.quiver.arrows.push_back({q.arrows[a].name + "_3", v2(a), q.arrows[a].tgt});
  }
  for (const auto& r : p.relations) {
    if (r.size() != 2) continue;
    // walk [b then a] becomes [b_3 then a_1]
    out.relations.push_back({3 * r[0] + 2, 3 * r[1]});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentation isomorphism (names and sign maps ignored): a bijection of
// vertices and of arrows preserving sources, targets and the relation set.
// Backtracking with degree-signature pruning; fine at the sizes we handle.
// ---------------------------------------------------------------------------

namespace detail {

struct IsoSearch {
  const Presentation& A;
  const Presentation& B;
  std::vector<int> vmap;        // A vertex -> B vertex
  std::vector<bool> used;       // B vertex used
  std::vector<int> amap;        // A arrow -> B arrow

  bool arrows_match() {
    const int na = (int)A.quiver.arrows.size();
    std::vector<bool> busy(na, false);
    amap.assign(na, -1);
    return match_arrow(0, busy);
  }

  bool match_arrow(int i, std::vector<bool>& busy) {
    const int na = (int)A.quiver.arrows.size();
    if (i == na) {
      std::set<std::vector<int>> ra, rb(B.relations.begin(), B.relations.end());
      for (const auto& r : A.relations) {
        std::vector<int> m;
        for (int x : r) m.push_back(amap[x]);
        ra.insert(m);
      }
      return ra == rb;
    }
    for (int j = 0; j < na; ++j) {
      if (busy[j]) continue;
      if (B.quiver.arrows[j].src != vmap[A.quiver.arrows[i].src]) continue;
      if (B.quiver.arrows[j].tgt != vmap[A.quiver.arrows[i].tgt]) continue;
      busy[j] = true;
      amap[i] = j;
      if (match_arrow(i + 1, busy)) return true;
      busy[j] = false;
    }
    return false;
  }

  bool match_vertex(int i) {
    const int nv = (int)A.quiver.vertices.size();
    if (i == nv) return arrows_match();
    for (int j = 0; j < nv; ++j) {
      if (used[j]) continue;
      if (A.quiver.arrows_from(i).size() != B.quiver.arrows_from(j).size()) continue;
      if (A.quiver.arrows_into(i).size() != B.quiver.arrows_into(j).size()) continue;
      used[j] = true;
      vmap[i] = j;
      if (match_vertex(i + 1)) return true;
      used[j] = false;
    }
    return false;
  }
};

}  // namespace detail

inline bool presentations_isomorphic(const Presentation& a, const Presentation& b) {
  if (a.quiver.vertices.size() != b.quiver.vertices.size()) return false;
  if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
  std::multiset<size_t> ra, rb;
  for (const auto& r : a.relations) ra.insert(r.size());
  for (const auto& r : b.relations) rb.insert(r.size());
  if (ra != rb) return false;
  detail::IsoSearch s{a, b, std::vector<int>(a.quiver.vertices.size(), -1),
                      std::vector<bool>(b.quiver.vertices.size(), false), {}};
  return s.match_vertex(0);
}

}  // namespace bandbrick
