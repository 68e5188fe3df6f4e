#include "turan/trees.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace turan {
namespace {

void require_spider_order(std::string_view name, int n) {
  if (n < 6) {
    throw DomainError(std::string(name) + " requires n >= 6 (got " +
                      std::to_string(n) + ")");
  }
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

TreeFamily TreeFamily::t3(int n) {
  require_spider_order("T3", n);
  return {FamilyKind::T3, n};
}

TreeFamily TreeFamily::tpp(int n) {
  require_spider_order("T''", n);
  return {FamilyKind::TDoublePrime, n};
}

TreeFamily TreeFamily::tppp(int n) {
  require_spider_order("T'''", n);
  return {FamilyKind::TTriplePrime, n};
}

TreeFamily TreeFamily::path(int n) {
  if (n < 2) throw DomainError("path requires n >= 2");
  return {FamilyKind::Path, n};
}

TreeFamily TreeFamily::star(int s) {
  if (s < 1) throw DomainError("star requires s >= 1");
  return {FamilyKind::Star, s};
}

TreeFamily TreeFamily::explicit_tree(SimpleGraph tree) {
  if (!tree.is_tree()) throw DomainError("explicit family is not a tree");
  TreeFamily f(FamilyKind::Explicit, tree.order());
  f.explicit_ = std::move(tree);
  return f;
}

int TreeFamily::order() const {
  return kind_ == FamilyKind::Star ? param_ + 1 : param_;
}

std::string TreeFamily::name() const {
  switch (kind_) {
    case FamilyKind::T3: return "t3:" + std::to_string(param_);
    case FamilyKind::TDoublePrime: return "tpp:" + std::to_string(param_);
    case FamilyKind::TTriplePrime: return "tppp:" + std::to_string(param_);
    case FamilyKind::Path: return "path:" + std::to_string(param_);
    case FamilyKind::Star: return "star:" + std::to_string(param_);
    case FamilyKind::Explicit: return "explicit:" + std::to_string(param_);
  }
  return {};
}

SimpleGraph realize(const TreeFamily& f) {
  const int n = f.order();
  SimpleGraph g(n);
  switch (f.kind()) {
    case FamilyKind::T3:
    case FamilyKind::TDoublePrime:
    case FamilyKind::TTriplePrime: {
      for (Vertex i = 1; i <= n - 4; ++i) g.add_edge(0, i);
      const bool tpp = f.kind() == FamilyKind::TDoublePrime;
      const bool tppp = f.kind() == FamilyKind::TTriplePrime;
      g.add_edge(1, n - 3);
      g.add_edge(tppp ? 2 : 1, n - 2);
      g.add_edge(tppp ? 3 : (tpp ? 2 : 1), n - 1);
      break;
    }
    case FamilyKind::Path:
      for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      break;
    case FamilyKind::Star:
      for (Vertex i = 1; i < n; ++i) g.add_edge(0, i);
      break;
    case FamilyKind::Explicit:
      return *f.explicit_graph();
  }
  return g;
}

int max_degree_of(const TreeFamily& f) {
  const int n = f.order();
  switch (f.kind()) {
    case FamilyKind::T3:
      // v1 has degree 4; v0 dominates once n >= 8.
      return std::max(n - 4, 4);
    case FamilyKind::TDoublePrime:
      return std::max(n - 4, 3);
    case FamilyKind::TTriplePrime:
      return std::max(n - 4, 2);
    case FamilyKind::Path:
      return n >= 3 ? 2 : 1;
    case FamilyKind::Star:
      return f.parameter();
    case FamilyKind::Explicit:
      return f.explicit_graph()->max_degree();
  }
  return 0;
}

SkeletonDecomposition skeleton(const TreeFamily& f) {
  if (!f.is_spider()) {
    throw DomainError("skeleton is defined for t3/tpp/tppp only, not " + f.name());
  }
  const SimpleGraph tree = realize(f);
  SkeletonDecomposition sk;
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) >= 2) sk.internal.push_back(v);
  }
  sk.leaves.resize(sk.internal.size());
  for (std::size_t i = 0; i < sk.internal.size(); ++i) {
    for (Vertex w : tree.neighbors(sk.internal[i])) {
      if (tree.degree(w) == 1) {
        sk.leaves[i].push_back(w);
      } else if (sk.internal[i] < w) {
        sk.edges.emplace_back(sk.internal[i], w);
      }
    }
  }
  return sk;
}

TreeFamily make_family(std::string_view kind, int parameter) {
  if (kind == "t3") return TreeFamily::t3(parameter);
  if (kind == "tpp") return TreeFamily::tpp(parameter);
  if (kind == "tppp") return TreeFamily::tppp(parameter);
  if (kind == "path") return TreeFamily::path(parameter);
  if (kind == "star") return TreeFamily::star(parameter);
  throw DomainError("unknown tree family '" + std::string(kind) + "'");
}

TreeFamily parse_family_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("family spec '" + std::string(spec) + "' lacks ':'");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (kind == "file") {
    std::ifstream in{std::string(arg)};
    if (!in) throw std::runtime_error("cannot read tree file '" + std::string(arg) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return TreeFamily::explicit_tree(from_edge_list(buf.str()));
  }
  return make_family(kind, parse_int(arg, "family parameter"));
}

}  // namespace turan
