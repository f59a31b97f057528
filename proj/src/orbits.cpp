#include "hypermat/orbits.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hypermat {

std::string to_string(SimpleLabel s) {
  switch (s) {
    case SimpleLabel::D0: return "D0";
    case SimpleLabel::D1: return "D1";
    case SimpleLabel::D2: return "D2";
    case SimpleLabel::D3: return "D3";
    case SimpleLabel::D4: return "D4";
    case SimpleLabel::D5: return "D5";
    case SimpleLabel::D6: return "D6";
    case SimpleLabel::D6p: return "D6'";
    case SimpleLabel::D7: return "D7";
    case SimpleLabel::D8: return "D8";
    case SimpleLabel::D9: return "D9";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(ModLabel s) {
  switch (s) {
    case ModLabel::E: return "E";
    case ModLabel::S: return "S";
    case ModLabel::Q1: return "Q1";
    case ModLabel::Q2: return "Q2";
    case ModLabel::Q3: return "Q3";
    default: return to_string(static_cast<SimpleLabel>(s));
  }
}

SimpleLabel parse_simple(const std::string& s) {
  static const std::map<std::string, SimpleLabel> table = {
      {"D0", SimpleLabel::D0},  {"D1", SimpleLabel::D1}, {"D2", SimpleLabel::D2},
      {"D3", SimpleLabel::D3},  {"D4", SimpleLabel::D4}, {"D5", SimpleLabel::D5},
      {"D6", SimpleLabel::D6},  {"D6'", SimpleLabel::D6p}, {"D6p", SimpleLabel::D6p},
      {"D7", SimpleLabel::D7},  {"D8", SimpleLabel::D8}, {"D9", SimpleLabel::D9}};
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown simple label: " + s);
  return it->second;
}

ModLabel simple_to_mod(SimpleLabel s) { return static_cast<ModLabel>(s); }

std::vector<SimpleLabel> simples_for(int n) {
  std::vector<SimpleLabel> out = {SimpleLabel::D0, SimpleLabel::D1, SimpleLabel::D2,
                                  SimpleLabel::D3, SimpleLabel::D4, SimpleLabel::D5,
                                  SimpleLabel::D6, SimpleLabel::D6p, SimpleLabel::D7,
                                  SimpleLabel::D8};
  if (n >= 4) out.push_back(SimpleLabel::D9);
  return out;
}

bool simple_valid(SimpleLabel s, int n) { return s != SimpleLabel::D9 || n >= 4; }

std::vector<SimpleLabel> expand_label(ModLabel m, int n) {
  switch (m) {
    case ModLabel::E: return {SimpleLabel::D0};
    case ModLabel::S: return {n == 3 ? SimpleLabel::D8 : SimpleLabel::D9};
    case ModLabel::Q1: return {SimpleLabel::D2, SimpleLabel::D0};
    case ModLabel::Q2: return {SimpleLabel::D6, SimpleLabel::D2, SimpleLabel::D0};
    case ModLabel::Q3: return {SimpleLabel::D8, SimpleLabel::D6, SimpleLabel::D2, SimpleLabel::D0};
    default: {
      SimpleLabel s = static_cast<SimpleLabel>(m);
      if (!simple_valid(s, n)) throw std::invalid_argument("label absent for this n: " + to_string(s));
      return {s};
    }
  }
}

long long orbit_dim(int index, int n) {
  switch (index) {
    case 0: return 0;
    case 1: return n + 2;
    case 2: return n + 3;
    case 3:
    case 4: return 2LL * n + 1;
    case 5: return 2LL * n + 3;
    case 6: return 2LL * n + 4;
    case 7: return 3LL * n + 2;
    case 8: return 3LL * n + 3;
    case 9: return 4LL * n;
  }
  throw std::invalid_argument("orbit index out of range");
}

int orbit_of_simple(SimpleLabel s) {
  switch (s) {
    case SimpleLabel::D6p: return 6;
    default: return static_cast<int>(s) - (static_cast<int>(s) > static_cast<int>(SimpleLabel::D6p) ? 1 : 0);
  }
}

SimpleLabel ic_simple_of_orbit(int index) {
  switch (index) {
    case 0: return SimpleLabel::D0;
    case 1: return SimpleLabel::D1;
    case 2: return SimpleLabel::D2;
    case 3: return SimpleLabel::D3;
    case 4: return SimpleLabel::D4;
    case 5: return SimpleLabel::D5;
    case 6: return SimpleLabel::D6;
    case 7: return SimpleLabel::D7;
    case 8: return SimpleLabel::D8;
    case 9: return SimpleLabel::D9;
  }
  throw std::invalid_argument("orbit index out of range");
}

namespace {

int top_orbit(int n) { return n == 3 ? 8 : 9; }

std::vector<std::pair<int, int>> hasse_edges(int n) {
  std::vector<std::pair<int, int>> e = {{8, 7}, {7, 6}, {6, 5}, {5, 4}, {5, 2},
                                        {5, 3}, {4, 1}, {2, 1}, {3, 1}, {1, 0}};
  if (n >= 4) e.insert(e.begin(), {9, 8});
  return e;
}

std::string rep_string(int index) {
  switch (index) {
    case 0: return "0";
    case 1: return "a1*b1*c1";
    case 2: return "a1*b1*c1 + a2*b2*c1";
    case 3: return "a1*b1*c1 + a1*b2*c2";
    case 4: return "a1*b1*c1 + a2*b1*c2";
    case 5: return "a1*(b1*c1 + b2*c2) + a2*b1*c2";
    case 6: return "a1*b1*c1 + a2*b2*c2";
    case 7: return "a1*(b1*c1 + b2*c3) + a2*b1*c2";
    case 8: return "a1*(b1*c1 + b2*c2) + a2*(b1*c2 + b2*c3)";
    case 9: return "a1*(b1*c1 + b2*c3) + a2*(b1*c2 + b2*c4)";
  }
  throw std::invalid_argument("orbit index out of range");
}

} // namespace

int dual_orbit_index(int index, int n) {
  if (n == 3) {
    switch (index) {
      case 0: return 8;
      case 8: return 0;
      case 1: return 7;
      case 7: return 1;
      case 2: return 6;
      case 6: return 2;
      default: return index;
    }
  }
  switch (index) {
    case 0: return 9;
    case 9: return 0;
    case 1: return 7;
    case 7: return 1;
    case 2: return 8;
    case 8: return 2;
    default: return index;
  }
}

SimpleLabel fourier(SimpleLabel s, int n) {
  if (!simple_valid(s, n)) throw std::invalid_argument("fourier: label absent for this n");
  if (s == SimpleLabel::D6p) return s;
  if (n >= 4 && s == SimpleLabel::D6) return s;
  const int o = orbit_of_simple(s);
  return ic_simple_of_orbit(dual_orbit_index(o, n));
}

std::vector<std::string> conormal_cycle(SimpleLabel s, int n) {
  if (!simple_valid(s, n)) throw std::invalid_argument("conormal_cycle: label absent for this n");
  switch (s) {
    case SimpleLabel::D5: return {"O5", "O4", "O3"};
    case SimpleLabel::D6p:
      return n == 3 ? std::vector<std::string>{"O6", "O5", "O2"}
                    : std::vector<std::string>{"O6", "O5"};
    default: return {"O" + std::to_string(orbit_of_simple(s))};
  }
}

bool closure_contains(int outer, int inner, int n) {
  if (outer == inner) return true;
  std::set<int> seen = {outer};
  std::vector<int> stack = {outer};
  const auto edges = hasse_edges(n);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [hi, lo] : edges)
      if (hi == v && !seen.count(lo)) {
        if (lo == inner) return true;
        seen.insert(lo);
        stack.push_back(lo);
      }
  }
  return false;
}

std::vector<OrbitEntry> orbit_catalog(int n) {
  if (n < 3) throw std::invalid_argument("orbit_catalog: requires n >= 3");
  std::vector<OrbitEntry> out;
  const auto edges = hasse_edges(n);
  for (int i = 0; i <= top_orbit(n); ++i) {
    OrbitEntry e;
    e.index = i;
    e.label = "O" + std::to_string(i);
    e.dim = orbit_dim(i, n);
    e.representative = rep_string(i);
    for (const auto& [hi, lo] : edges)
      if (hi == i) e.closure_covers.push_back("O" + std::to_string(lo));
    switch (i) {
      case 1: e.subspace_id = {{1, 1, 1}}; break;
      case 2: e.subspace_id = {{2, 2, 1}}; break;
      case 3: e.subspace_id = {{1, 2, 2}}; break;
      case 4: e.subspace_id = {{2, 1, 2}}; break;
      case 6: e.subspace_id = {{2, 2, 2}}; break;
      case 8: e.subspace_id = {{2, 2, 3}}; break;
      case 9: e.subspace_id = {{2, 2, 4}}; break;
      default: break;
    }
    switch (i) {
      case 0: e.determinantal_id = "Z0[(AB)xC]"; break;
      case 2: e.determinantal_id = "Z1[(AB)xC]"; break;
      case 6: e.determinantal_id = "Z2[(AB)xC]"; break;
      case 8: e.determinantal_id = "Z3[(AB)xC]"; break;
      case 3: e.determinantal_id = "Z1[(BC)xA]"; break;
      case 4: e.determinantal_id = "Z1[(AC)xB]"; break;
      default: break;
    }
    e.z2_component_group = (i == 6);
    e.dual_orbit = "O" + std::to_string(dual_orbit_index(i, n));
    e.conormal_cycle = conormal_cycle(ic_simple_of_orbit(i), n);
    e.hypersurface = (e.dim == 4LL * n - 1);
    e.dense = (e.dim == 4LL * n);
    e.rank_conditions_cut_union_only = (i == 3 || i == 4);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<BFunctionRoot> semi_invariant_b_roots_n3() {
  return {{-1, 1, 2}, {-3, 2, 2}, {-2, 1, 2}};
}

std::string hasse_dot(int n) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=TB;\n";
  for (int i = top_orbit(n); i >= 0; --i)
    os << "  O" << i << " [label=\"O" << i << " (dim " << orbit_dim(i, n) << ")\"];\n";
  for (const auto& [hi, lo] : hasse_edges(n)) os << "  O" << hi << " -> O" << lo << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace hypermat
