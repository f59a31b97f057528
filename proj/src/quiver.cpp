#include "hypermat/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hypermat {

int Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("quiver: unknown arrow " + name);
}

std::optional<int> Quiver::arrow_between(const std::string& src, const std::string& dst) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src == src && arrows[i].dst == dst) return static_cast<int>(i);
  return std::nullopt;
}

std::string Quiver::path_str(const std::vector<int>& path) const {
  if (path.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += arrows[path[i]].name;
  }
  return out;
}

namespace {

struct Builder {
  Quiver q;

  void vertex(const std::string& v) { q.vertices.push_back(v); }

  void arrow(const std::string& name, const std::string& src, const std::string& dst) {
    q.arrows.push_back({name, src, dst});
  }

  void pair_arrows(const std::string& u, const std::string& v) {
    arrow("a" + u + "_" + v, u, v);
    arrow("a" + v + "_" + u, v, u);
  }

  void zero_path(std::initializer_list<const char*> names) {
    Relation r;
    Relation::Term t;
    for (const char* nm : names) t.path.push_back(q.arrow_index(nm));
    validate_composable(t.path);
    r.terms.push_back(std::move(t));
    q.relations.push_back(std::move(r));
  }

  void zero_path_ids(std::vector<int> path) {
    validate_composable(path);
    Relation r;
    r.terms.push_back({1, std::move(path)});
    q.relations.push_back(std::move(r));
  }

  void validate_composable(const std::vector<int>& path) const {
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (q.arrows[path[i]].dst != q.arrows[path[i + 1]].src)
        throw std::logic_error("quiver: relation path not composable");
  }

  void all_two_cycles() {
    for (size_t i = 0; i < q.arrows.size(); ++i)
      for (size_t j = 0; j < q.arrows.size(); ++j)
        if (i != j && q.arrows[i].dst == q.arrows[j].src && q.arrows[j].dst == q.arrows[i].src)
          zero_path_ids({static_cast<int>(i), static_cast<int>(j)});
  }
};

Quiver build_n3() {
  Builder b;
  b.q.n = 3;
  for (const char* v : {"0", "1", "2", "3", "4", "5", "6", "6'", "7", "8"}) b.vertex(v);
  // the long row, the wing through 6', and the two diagonals
  b.arrow("a1", "0", "1");
  b.arrow("b1", "1", "0");
  b.arrow("a2", "1", "2");
  b.arrow("b2", "2", "1");
  b.arrow("a5", "2", "5");
  b.arrow("b5", "5", "2");
  b.arrow("a6", "5", "6");
  b.arrow("b6", "6", "5");
  b.arrow("a7", "6", "7");
  b.arrow("b7", "7", "6");
  b.arrow("a8", "7", "8");
  b.arrow("b8", "8", "7");
  b.arrow("a1'", "1", "6'");
  b.arrow("b1'", "6'", "1");
  b.arrow("a3", "3", "6'");
  b.arrow("b3", "6'", "3");
  b.arrow("a4", "6'", "4");
  b.arrow("b4", "4", "6'");
  b.arrow("a7'", "6'", "7");
  b.arrow("b7'", "7", "6'");

  b.all_two_cycles();
  b.zero_path({"a1", "a2"});
  b.zero_path({"b2", "b1"});
  b.zero_path({"a2", "a5"});
  b.zero_path({"b5", "b2"});
  b.zero_path({"a5", "a6"});
  b.zero_path({"b6", "b5"});
  b.zero_path({"a6", "a7"});
  b.zero_path({"b7", "b6"});
  b.zero_path({"a7", "a8"});
  b.zero_path({"b8", "b7"});
  b.zero_path({"b2", "a1'"});
  b.zero_path({"b1'", "a2"});
  b.zero_path({"a7", "b7'"});
  b.zero_path({"a7'", "b7"});
  b.zero_path({"a1'", "b3"});
  b.zero_path({"a3", "b1'"});
  b.zero_path({"a1'", "a4"});
  b.zero_path({"b4", "b1'"});
  b.zero_path({"b7'", "b3"});
  b.zero_path({"a3", "a7'"});
  b.zero_path({"b7'", "a4"});
  b.zero_path({"b4", "a7'"});
  return b.q;
}

Quiver build_n4() {
  Builder b;
  b.q.n = 4;
  for (const char* v : {"0", "1", "2", "3", "4", "5", "6", "6'", "7", "8", "9"}) b.vertex(v);
  b.pair_arrows("0", "2");
  b.pair_arrows("2", "6");
  b.pair_arrows("6", "8");
  b.pair_arrows("8", "9");
  b.pair_arrows("3", "6'");
  b.pair_arrows("6'", "4");
  b.pair_arrows("1", "2");
  b.pair_arrows("5", "6");
  b.pair_arrows("7", "8");

  b.all_two_cycles();
  // every length-two path starting or ending at one of the codimension-one
  // orbit vertices vanishes
  const std::set<std::string> tips = {"1", "5", "7"};
  std::set<std::vector<int>> seen;
  for (const Relation& r : b.q.relations) seen.insert(r.terms[0].path);
  for (size_t i = 0; i < b.q.arrows.size(); ++i)
    for (size_t j = 0; j < b.q.arrows.size(); ++j) {
      if (b.q.arrows[i].dst != b.q.arrows[j].src) continue;
      if (!tips.count(b.q.arrows[i].src) && !tips.count(b.q.arrows[j].dst)) continue;
      std::vector<int> path = {static_cast<int>(i), static_cast<int>(j)};
      if (seen.insert(path).second) b.zero_path_ids(std::move(path));
    }
  return b.q;
}

Quiver build_n5() {
  Builder b;
  b.q.n = 5;
  for (const char* v : {"0", "1", "2", "3", "4", "5", "6", "6'", "7", "8", "9"}) b.vertex(v);
  b.pair_arrows("1", "2");
  b.pair_arrows("5", "6");
  b.pair_arrows("7", "8");
  b.pair_arrows("3", "6'");
  b.pair_arrows("6'", "4");
  b.all_two_cycles();
  return b.q;
}

} // namespace

Quiver build_quiver(int n) {
  if (n < 3) throw std::invalid_argument("build_quiver: requires n >= 3");
  if (n == 3) return build_n3();
  if (n == 4) return build_n4();
  Quiver q = build_n5();
  q.n = n;
  return q;
}

namespace {

// Monomial relation ideal: a path vanishes iff it contains a relation path
// as a contiguous factor.  All built-in relation lists are of this shape;
// anything else is reported rather than guessed at.
std::vector<std::vector<int>> monomial_relation_paths(const Quiver& q) {
  std::vector<std::vector<int>> out;
  for (const Relation& r : q.relations) {
    if (!r.monomial())
      throw std::invalid_argument("path_space: non-monomial relation; reduction not supported");
    out.push_back(r.terms[0].path);
  }
  return out;
}

void enumerate_paths(const Quiver& q, const std::string& from, int depth_cap,
                     const std::function<void(const std::vector<int>&, const std::string&)>& visit) {
  const auto rels = monomial_relation_paths(q);
  std::vector<int> path;
  std::function<void(const std::string&)> rec = [&](const std::string& at) {
    visit(path, at);
    if (static_cast<int>(path.size()) >= depth_cap) return;
    for (size_t i = 0; i < q.arrows.size(); ++i) {
      if (q.arrows[i].src != at) continue;
      path.push_back(static_cast<int>(i));
      bool dead = false;
      for (const auto& r : rels)
        if (r.size() <= path.size() &&
            std::equal(r.begin(), r.end(), path.end() - r.size())) {
          dead = true;
          break;
        }
      if (!dead) rec(q.arrows[i].dst);
      path.pop_back();
    }
  };
  rec(from);
}

} // namespace

PathSpace path_space(const Quiver& q, const std::string& i, const std::string& j, int depth_cap) {
  if (std::find(q.vertices.begin(), q.vertices.end(), i) == q.vertices.end() ||
      std::find(q.vertices.begin(), q.vertices.end(), j) == q.vertices.end())
    throw std::invalid_argument("path_space: unknown vertex");
  PathSpace out;
  out.source = i;
  out.target = j;
  bool cap_hit = false;
  enumerate_paths(q, i, depth_cap, [&](const std::vector<int>& path, const std::string& at) {
    if (static_cast<int>(path.size()) == depth_cap) cap_hit = true;
    if (at == j) out.basis.push_back(path);
  });
  if (cap_hit)
    throw std::runtime_error("path_space: a nonzero path reached the depth cap; finiteness uncertified");
  return out;
}

int longest_nonzero_path(const Quiver& q, int depth_cap) {
  int longest = 0;
  for (const std::string& v : q.vertices)
    enumerate_paths(q, v, depth_cap, [&](const std::vector<int>& path, const std::string&) {
      longest = std::max(longest, static_cast<int>(path.size()));
    });
  return longest;
}

namespace {

std::map<std::string, std::string> fourier_vertex_map(const Quiver& q) {
  std::map<std::string, std::string> m;
  for (const std::string& v : q.vertices) m[v] = v;
  if (q.n == 3) {
    m["0"] = "8"; m["8"] = "0";
    m["1"] = "7"; m["7"] = "1";
    m["2"] = "6"; m["6"] = "2";
  } else {
    m["0"] = "9"; m["9"] = "0";
    m["1"] = "7"; m["7"] = "1";
    m["2"] = "8"; m["8"] = "2";
  }
  return m;
}

// relation multisets as canonical strings for comparison
std::multiset<std::string> relation_multiset(const Quiver& q,
                                             const std::function<std::vector<int>(const std::vector<int>&)>& map_path) {
  std::multiset<std::string> out;
  for (const Relation& r : q.relations) {
    std::vector<std::string> terms;
    for (const Relation::Term& t : r.terms) {
      std::ostringstream os;
      os << t.coeff << ":";
      for (int a : map_path(t.path)) os << a << ",";
      terms.push_back(os.str());
    }
    std::sort(terms.begin(), terms.end());
    std::string joined;
    for (const auto& s : terms) joined += s + "|";
    out.insert(joined);
  }
  return out;
}

} // namespace

SymReport check_symmetries(const Quiver& q) {
  SymReport rep;
  std::ostringstream detail;

  // induced arrow map under the Fourier vertex permutation
  const auto vmap = fourier_vertex_map(q);
  std::vector<int> arrow_image(q.arrows.size(), -1);
  bool total = true;
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    auto img = q.arrow_between(vmap.at(q.arrows[i].src), vmap.at(q.arrows[i].dst));
    if (!img) {
      total = false;
      detail << "no image for arrow " << q.arrows[i].name << "; ";
      break;
    }
    arrow_image[i] = *img;
  }
  if (total) {
    auto mapped = relation_multiset(q, [&](const std::vector<int>& p) {
      std::vector<int> out;
      for (int a : p) out.push_back(arrow_image[a]);
      return out;
    });
    auto plain = relation_multiset(q, [](const std::vector<int>& p) { return p; });
    rep.fourier_automorphism = (mapped == plain);
    if (!rep.fourier_automorphism) detail << "fourier image of a relation is not a relation; ";
    bool involution = true;
    for (size_t i = 0; i < q.arrows.size(); ++i)
      involution = involution && arrow_image[arrow_image[i]] == static_cast<int>(i);
    rep.fourier_involution_on_arrows = involution;
  }

  // duality: reverse every arrow
  std::vector<int> reversed(q.arrows.size(), -1);
  bool rev_total = true;
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    auto img = q.arrow_between(q.arrows[i].dst, q.arrows[i].src);
    if (!img) {
      rev_total = false;
      break;
    }
    reversed[i] = *img;
  }
  if (rev_total) {
    auto mapped = relation_multiset(q, [&](const std::vector<int>& p) {
      std::vector<int> out;
      for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(reversed[*it]);
      return out;
    });
    auto plain = relation_multiset(q, [](const std::vector<int>& p) { return p; });
    rep.reversal_preserves_relations = (mapped == plain);
    if (!rep.reversal_preserves_relations) detail << "reversed relation set differs; ";
  } else {
    detail << "some arrow has no reverse; ";
  }

  rep.detail = detail.str();
  return rep;
}

std::vector<std::pair<std::vector<std::string>, std::string>> component_census(const Quiver& q) {
  std::map<std::string, int> comp;
  int ncomp = 0;
  for (const std::string& v : q.vertices)
    if (!comp.count(v)) {
      const int id = ncomp++;
      std::vector<std::string> stack = {v};
      comp[v] = id;
      while (!stack.empty()) {
        std::string at = stack.back();
        stack.pop_back();
        for (const Arrow& a : q.arrows) {
          std::string other;
          if (a.src == at) other = a.dst;
          else if (a.dst == at) other = a.src;
          else continue;
          if (!comp.count(other)) {
            comp[other] = id;
            stack.push_back(other);
          }
        }
      }
    }
  std::vector<std::pair<std::vector<std::string>, std::string>> out(ncomp);
  for (const std::string& v : q.vertices) out[comp[v]].first.push_back(v);
  for (auto& [verts, kind] : out) {
    std::sort(verts.begin(), verts.end());
    int arrows = 0;
    for (const Arrow& a : q.arrows)
      if (std::find(verts.begin(), verts.end(), a.src) != verts.end()) ++arrows;
    if (verts.size() == 1 && arrows == 0) kind = "isolated";
    else if (verts.size() == 2 && arrows == 2) kind = "doubled-A2";
    else if (verts.size() == 3 && arrows == 4) kind = "doubled-A3";
    else kind = "other";
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> doubled_a2_indecomposables(const Quiver& q, const std::string& vertex) {
  for (const auto& [verts, kind] : component_census(q))
    if (std::find(verts.begin(), verts.end(), vertex) != verts.end()) {
      if (kind != "doubled-A2")
        throw std::invalid_argument("indecomposables: component of " + vertex + " is " + kind);
      const std::string &u = verts[0], &v = verts[1];
      return {"simple(" + u + ")", "simple(" + v + ")", "extension(" + u + "->" + v + ")",
              "extension(" + v + "->" + u + ")"};
    }
  throw std::invalid_argument("indecomposables: unknown vertex " + vertex);
}

std::string quiver_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (const std::string& v : q.vertices) os << "  \"" << v << "\";\n";
  for (const Arrow& a : q.arrows)
    os << "  \"" << a.src << "\" -> \"" << a.dst << "\" [label=\"" << a.name << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace hypermat
