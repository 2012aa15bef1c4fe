#include "equiv.hpp"

#include <algorithm>
#include <sstream>

namespace hyc {

namespace {

using Node = std::pair<std::vector<int>, Q>;

ClusterPicture rebuild(int root_count, const Z& lead, std::vector<Node> nodes) {
  ClusterPicture p = make_picture(root_count, lead, std::move(nodes));
  auto errs = validate_picture(p);
  if (!errs.empty())
    throw std::logic_error("move produced an invalid picture: " + errs[0]);
  return p;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ClusterPicture apply_move(const ClusterPicture& p, const Move& mv) {
  const Q& d_top = p.depth(p.top);
  switch (mv.kind) {
    case Move::Shift: {
      std::vector<Node> nodes;
      for (int s : proper_clusters(p))
        nodes.push_back({p.clusters[s].members, Q(p.depth(s) + mv.amount)});
      return rebuild(p.root_count, p.leading_valuation, std::move(nodes));
    }
    case Move::AddRoot: {
      if (p.root_count % 2 == 0)
        throw std::invalid_argument("add_root: root set must be odd");
      std::vector<Node> nodes;
      for (int s : proper_clusters(p))
        if (s != p.top) nodes.push_back({p.clusters[s].members, p.depth(s)});
      std::vector<int> all(p.root_count + 1);
      for (int i = 0; i <= p.root_count; ++i) all[i] = i;
      nodes.push_back({all, d_top});
      return rebuild(p.root_count + 1, p.leading_valuation, std::move(nodes));
    }
    case Move::RemoveRoot: {
      if (p.root_count % 2 != 0)
        throw std::invalid_argument("remove_root: root set must be even");
      int r = mv.root;
      if (r < 0 || r >= p.root_count)
        throw std::invalid_argument("remove_root: no such root");
      if (p.parent(p.singleton(r)) != p.top)
        throw std::invalid_argument("remove_root: root is not a child of the top cluster");
      std::vector<int> rest;
      for (int i = 0; i < p.root_count; ++i)
        if (i != r) rest.push_back(i);
      if (p.find(rest) >= 0)
        throw std::invalid_argument("remove_root: complement is already a cluster");
      auto renum = [&](std::vector<int> m) {
        for (int& x : m)
          if (x > r) --x;
        return m;
      };
      std::vector<Node> nodes;
      for (int s : proper_clusters(p))
        if (s != p.top) nodes.push_back({renum(p.clusters[s].members), p.depth(s)});
      std::vector<int> all(p.root_count - 1);
      for (int i = 0; i + 1 < p.root_count; ++i) all[i] = i;
      nodes.push_back({all, d_top});
      return rebuild(p.root_count - 1, p.leading_valuation, std::move(nodes));
    }
    case Move::Redistribute: {
      if (p.root_count % 2 != 0)
        throw std::invalid_argument("redistribute: root set must be even");
      int s = p.find(mv.cluster);
      if (s < 0 || s == p.top || p.parent(s) != p.top)
        throw std::invalid_argument("redistribute: not a child of the top cluster");
      const Q& m = mv.amount;
      if (p.is_proper(s) && m < d_top - p.depth(s))
        throw std::invalid_argument("redistribute: m below -delta of the cluster");
      std::vector<int> comp;
      for (int i = 0; i < p.root_count; ++i)
        if (!std::binary_search(mv.cluster.begin(), mv.cluster.end(), i))
          comp.push_back(i);
      int sc = p.find(comp);
      Q delta_comp = 0;  // absent complement has relative depth 0
      bool comp_unbounded = (int)comp.size() == 1;
      if (sc >= 0 && p.is_proper(sc)) delta_comp = p.depth(sc) - d_top;
      if (!comp_unbounded && m > delta_comp)
        throw std::invalid_argument("redistribute: m above delta of the complement");

      std::vector<Node> nodes;
      for (int t : proper_clusters(p)) {
        if (t == p.top) continue;
        const auto& mem = p.clusters[t].members;
        Q d = p.depth(t);
        nodes.push_back({mem, subset(mem, mv.cluster) ? Q(d + m) : Q(d - m)});
      }
      if (sc < 0 && comp.size() > 1) nodes.push_back({comp, Q(d_top - m)});
      // drop whichever of s, s^c ends at relative depth zero
      std::erase_if(nodes, [&](const Node& nd) {
        return (nd.first == mv.cluster || nd.first == comp) && nd.second == d_top;
      });
      std::vector<int> all(p.root_count);
      for (int i = 0; i < p.root_count; ++i) all[i] = i;
      nodes.push_back({all, d_top});
      return rebuild(p.root_count, p.leading_valuation, std::move(nodes));
    }
  }
  throw std::invalid_argument("unknown move");
}

bool is_balanced(const ClusterPicture& p) {
  if (p.root_count % 2 != 0 || p.depth(p.top) != 0) return false;
  int half = p.root_count / 2;  // g + 1
  std::vector<int> halves;
  for (int s : proper_clusters(p)) {
    if (s == p.top) continue;
    if (p.size(s) > half) return false;
    if (p.size(s) == half) halves.push_back(s);
  }
  if (halves.empty()) return true;
  return halves.size() == 2 && p.depth(halves[0]) == p.depth(halves[1]);
}

BalanceResult balance(const ClusterPicture& p) {
  BalanceResult res{p, {}};
  auto step = [&](Move mv) {
    res.picture = apply_move(res.picture, mv);
    res.moves.push_back(std::move(mv));
  };
  if (res.picture.root_count % 2 != 0) step({Move::AddRoot});
  if (res.picture.depth(res.picture.top) != 0)
    step({Move::Shift, -res.picture.depth(res.picture.top)});

  int half = res.picture.root_count / 2;
  for (;;) {
    const ClusterPicture& q = res.picture;
    int big = -1;
    for (int s : proper_clusters(q))
      if (s != q.top && q.size(s) > half && (big < 0 || q.size(s) > q.size(big)))
        big = s;
    if (big < 0) break;
    step({Move::Redistribute, -q.depth(big), -1, q.clusters[big].members});
  }
  {
    const ClusterPicture& q = res.picture;
    std::vector<int> halves;
    for (int s : proper_clusters(q))
      if (s != q.top && q.size(s) == half) halves.push_back(s);
    if (halves.size() == 1)
      step({Move::Redistribute, -q.depth(halves[0]) / 2, -1,
            q.clusters[halves[0]].members});
    else if (halves.size() == 2 && q.depth(halves[0]) != q.depth(halves[1]))
      step({Move::Redistribute, (q.depth(halves[1]) - q.depth(halves[0])) / 2,
            -1, q.clusters[halves[0]].members});
  }
  if (!is_balanced(res.picture))
    throw std::logic_error("balancing did not reach a balanced picture");
  return res;
}

namespace {

std::string canonical_node(const ClusterPicture& p, int s, const Q& base) {
  if (!p.is_proper(s)) return "r";
  std::vector<std::string> parts;
  for (int c : p.clusters[s].children)
    parts.push_back(canonical_node(p, c, p.depth(s)));
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
  os << "]_" << show_rational(p.depth(s) - base);
  return os.str();
}

}  // namespace

std::string canonical_form(const ClusterPicture& p) {
  return canonical_node(p, p.top, 0);
}

bool equivalent(const ClusterPicture& a, const ClusterPicture& b) {
  return canonical_form(balance(a).picture) == canonical_form(balance(b).picture);
}

}  // namespace hyc
