#include "gsearch/convert.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "gsearch/error.hpp"
#include "gsearch/graph6.hpp"

namespace gsearch {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void check_in_range(int n, int v) {
  if (v < 0 || v >= n) {
    throw FormatError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
  }
}

// Nested list of non-negative integers: either a number or a list.
struct ListNode {
  std::optional<int> number;
  std::vector<ListNode> items;
};

class ListParser {
 public:
  explicit ListParser(std::string_view text) : text_(text) {}

  ListNode parse() {
    ListNode root = parse_node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return root;
  }

 private:
  ListNode parse_node() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '[') {
      ++pos_;
      ListNode node;
      skip_space();
      if (peek() == ']') {
        ++pos_;
        return node;
      }
      while (true) {
        node.items.push_back(parse_node());
        skip_space();
        if (peek() == ',') {
          ++pos_;
        } else if (peek() == ']') {
          ++pos_;
          return node;
        } else {
          fail("expected ',' or ']'");
        }
      }
    }
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected a number or '['");
    pos_ += static_cast<std::size_t>(ptr - first);
    return ListNode{value, {}};
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("malformed list at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<int> as_int_list(const ListNode& node) {
  if (node.number) throw FormatError("expected a list, found a number");
  std::vector<int> out;
  for (const auto& item : node.items) {
    if (!item.number) throw FormatError("expected a number, found a list");
    out.push_back(*item.number);
  }
  return out;
}

std::vector<std::vector<int>> as_int_lists(const ListNode& node) {
  if (node.number) throw FormatError("expected a list of lists");
  std::vector<std::vector<int>> out;
  for (const auto& item : node.items) out.push_back(as_int_list(item));
  return out;
}

void render_list(std::ostringstream& os, const std::vector<int>& xs) {
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ']';
}

}  // namespace

GraphFormat format_of(const GraphValue& value) noexcept {
  return static_cast<GraphFormat>(value.index());
}

std::string_view format_name(GraphFormat f) noexcept {
  switch (f) {
    case GraphFormat::adj_matrix: return "adj_matrix";
    case GraphFormat::adj_list: return "adj_list";
    case GraphFormat::edge_list: return "edge_list";
    case GraphFormat::graph6_atom: return "graph6_atom";
  }
  return "?";
}

std::optional<GraphFormat> parse_format_name(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '-', '_');
  if (s == "adj_matrix" || s == "matrix") return GraphFormat::adj_matrix;
  if (s == "adj_list") return GraphFormat::adj_list;
  if (s == "edge_list" || s == "edges") return GraphFormat::edge_list;
  if (s == "graph6" || s == "graph6_atom" || s == "g6") return GraphFormat::graph6_atom;
  return std::nullopt;
}

Graph to_graph(int n, const GraphValue& value) {
  return std::visit(
      overloaded{
          [&](const AdjMatrix& m) {
            if (static_cast<int>(m.rows.size()) != n) {
              throw SizeMismatchError("adjacency matrix has " + std::to_string(m.rows.size()) +
                                      " rows, expected " + std::to_string(n));
            }
            return Graph::from_matrix(m.rows);
          },
          [&](const AdjList& l) {
            if (static_cast<int>(l.neighbors.size()) != n) {
              throw SizeMismatchError("adjacency list has " + std::to_string(l.neighbors.size()) +
                                      " entries, expected " + std::to_string(n));
            }
            Graph g(n);
            for (int u = 0; u < n; ++u) {
              for (int v : l.neighbors[u]) {
                check_in_range(n, v);
                if (u == v) throw NotSimpleError("self-loop at vertex " + std::to_string(u));
              }
            }
            for (int u = 0; u < n; ++u) {
              for (int v : l.neighbors[u]) {
                const auto& back = l.neighbors[v];
                if (std::find(back.begin(), back.end(), u) == back.end()) {
                  throw NotSimpleError("adjacency list is not symmetric: " + std::to_string(v) +
                                       " lists no " + std::to_string(u));
                }
                g.set_edge(u, v, true);
              }
            }
            return g;
          },
          [&](const EdgeList& e) {
            for (auto [u, v] : e.edges) {
              check_in_range(n, u);
              check_in_range(n, v);
            }
            return Graph::from_edges(n, e.edges);
          },
          [&](const Graph6Atom& a) {
            Graph g = decode_graph6(a.text);
            if (g.order() != n) {
              throw SizeMismatchError("graph6 atom encodes " + std::to_string(g.order()) +
                                      " vertices, expected " + std::to_string(n));
            }
            return g;
          },
      },
      value);
}

GraphValue from_graph(const Graph& g, GraphFormat to) {
  switch (to) {
    case GraphFormat::adj_matrix: return AdjMatrix{g.to_matrix()};
    case GraphFormat::adj_list: {
      AdjList l;
      l.neighbors.resize(static_cast<std::size_t>(g.order()));
      for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
          if (g.has_edge(u, v)) l.neighbors[u].push_back(v);
      return l;
    }
    case GraphFormat::edge_list: return EdgeList{g.edges()};
    case GraphFormat::graph6_atom: return Graph6Atom{encode_graph6(g)};
  }
  throw FormatError("unknown graph format");
}

GraphValue graph_convert(int n, GraphFormat from, GraphFormat to, const GraphValue& value) {
  if (format_of(value) != from) {
    throw FormatError("value is " + std::string(format_name(format_of(value))) + ", declared " +
                      std::string(format_name(from)));
  }
  return from_graph(to_graph(n, value), to);
}

GraphValue parse_value(GraphFormat f, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  switch (f) {
    case GraphFormat::graph6_atom: return Graph6Atom{std::string(text)};
    case GraphFormat::adj_matrix: return AdjMatrix{as_int_lists(ListParser(text).parse())};
    case GraphFormat::adj_list: return AdjList{as_int_lists(ListParser(text).parse())};
    case GraphFormat::edge_list: {
      EdgeList e;
      for (auto& pair : as_int_lists(ListParser(text).parse())) {
        if (pair.size() != 2) throw FormatError("edge list entries must be pairs");
        e.edges.emplace_back(pair[0], pair[1]);
      }
      return e;
    }
  }
  throw FormatError("unknown graph format");
}

std::string render_value(const GraphValue& value) {
  return std::visit(overloaded{
                        [](const Graph6Atom& a) { return a.text; },
                        [](const EdgeList& e) {
                          std::ostringstream os;
                          os << '[';
                          for (std::size_t i = 0; i < e.edges.size(); ++i) {
                            if (i) os << ',';
                            os << '[' << e.edges[i].first << ',' << e.edges[i].second << ']';
                          }
                          os << ']';
                          return os.str();
                        },
                        [](const auto& lists) {
                          const auto& rows = [&]() -> const std::vector<std::vector<int>>& {
                            if constexpr (std::is_same_v<std::decay_t<decltype(lists)>, AdjMatrix>)
                              return lists.rows;
                            else
                              return lists.neighbors;
                          }();
                          std::ostringstream os;
                          os << '[';
                          for (std::size_t i = 0; i < rows.size(); ++i) {
                            if (i) os << ',';
                            render_list(os, rows[i]);
                          }
                          os << ']';
                          return os.str();
                        },
                    },
                    value);
}

}  // namespace gsearch
