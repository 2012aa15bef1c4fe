#include "parse.hpp"

#include <cctype>
#include <functional>
#include <map>

namespace hyc {

namespace {

struct Node {
  std::vector<Node> children;  // empty <=> root marker "r"
  bool is_root = false;
  Q subscript = 0;             // relative depth (absolute on the outermost node)
  int sign = 0;                // 0 none, +1, -1
  size_t pos = 0;
};

struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }

  Q read_rational() {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (i < s.size() && s[i] == '/') {
      ++i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    }
    if (i == start) fail("expected a rational subscript");
    try {
      return parse_rational(s.substr(start, i - start));
    } catch (const std::exception&) {
      throw ParseError("malformed rational", start);
    }
  }

  Node parse_cluster() {
    skip_ws();
    Node n;
    n.pos = i;
    if (i >= s.size() || s[i] != '[') fail("expected '['");
    ++i;
    while (true) {
      skip_ws();
      if (i >= s.size()) fail("unterminated cluster");
      if (s[i] == ']') { ++i; break; }
      if (s[i] == 'r') {
        Node leaf;
        leaf.is_root = true;
        leaf.pos = i;
        ++i;
        n.children.push_back(std::move(leaf));
      } else if (s[i] == '[') {
        n.children.push_back(parse_cluster());
      } else {
        fail("expected 'r', '[' or ']'");
      }
    }
    if (n.children.empty()) throw ParseError("empty cluster", n.pos);
    if (i >= s.size() || s[i] != '_') fail("expected '_' after ']'");
    ++i;
    n.subscript = read_rational();
    if (i + 1 < s.size() && s[i] == '^' && (s[i + 1] == '+' || s[i + 1] == '-')) {
      n.sign = s[i + 1] == '+' ? 1 : -1;
      i += 2;
    }
    return n;
  }
};

int count_roots(const Node& n) {
  if (n.is_root) return 1;
  int c = 0;
  for (const auto& ch : n.children) c += count_roots(ch);
  return c;
}

}  // namespace

ParsedPicture parse_picture(const std::string& text, const Z& leading_valuation) {
  Parser parser(text);
  Node tree = parser.parse_cluster();
  parser.skip_ws();
  if (parser.i != text.size()) parser.fail("trailing input");

  ClusterPicture p;
  p.root_count = count_roots(tree);
  p.leading_valuation = leading_valuation;

  struct Pending { std::vector<int> members; Q depth; int sign; size_t pos; };
  std::vector<Pending> flat;
  int next_root = 0;
  std::function<std::vector<int>(const Node&, const Q&)> walk =
      [&](const Node& n, const Q& parent_depth) -> std::vector<int> {
    if (n.is_root) return {next_root++};
    Q abs_depth = parent_depth + n.subscript;
    std::vector<int> members;
    for (const auto& ch : n.children) {
      if (!ch.is_root && ch.subscript <= 0)
        throw ParseError("non-positive relative depth", ch.pos);
      auto sub = walk(ch, abs_depth);
      members.insert(members.end(), sub.begin(), sub.end());
    }
    flat.push_back({members, abs_depth, n.sign, n.pos});
    return members;
  };
  walk(tree, Q(0));

  for (size_t a = 0; a < flat.size(); ++a)
    for (size_t b = a + 1; b < flat.size(); ++b)
      if (flat[a].members == flat[b].members)
        throw ParseError("duplicate cluster", flat[b].pos);
  for (const auto& f : flat)
    p.clusters.push_back({f.members, f.depth, -1, {}});
  if (!p.normalize()) throw ParseError("clusters are not nested", 0);

  GaloisData g = GaloisData::trivial(p.root_count);
  for (const auto& f : flat) {
    if (f.sign == 0) continue;
    int idx = p.find([&] {
      auto m = f.members;
      std::sort(m.begin(), m.end());
      return m;
    }());
    if (f.members.size() % 2 == 1 &&
        !classify_cluster(p, idx).cotwin)
      throw ParseError("sign on an odd non-cotwin cluster", f.pos);
    g.epsilon[idx] = f.sign;
  }
  return {std::move(p), std::move(g)};
}

std::string serialize_picture(const ClusterPicture& p, const GaloisData* g) {
  std::function<std::string(int)> emit = [&](int s) -> std::string {
    std::string out = "[";
    bool first = true;
    for (int c : p.clusters[s].children) {
      if (!first) out += " ";
      first = false;
      if (p.size(c) == 1)
        out += "r";
      else
        out += emit(c);
    }
    if (p.clusters[s].children.empty()) out += "r";  // top singleton, unreachable
    out += "]_";
    Q sub = p.clusters[s].parent < 0 ? p.depth(s) : p.delta(s);
    out += show_rational(sub);
    if (g) {
      int e = epsilon_of(*g, s);
      if (e) out += e > 0 ? "^+" : "^-";
    }
    return out;
  };
  return emit(p.top);
}

}  // namespace hyc
