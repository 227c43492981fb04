#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nutforge/error.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/pregraph.hpp"
#include "nutforge/voltage.hpp"

namespace nutforge {

// Pregraph text format, line oriented, '#' starts a comment:
//
//   l=<order>
//   n=<modulus>          optional; when present every record carries voltages
//   E u v m [g1 .. gm]   m parallel edges u-v; g_i is the voltage of the
//                        i-th dart u -> v
//   L v k [g1 .. gk]     k loops at v
//   S v k [g1 .. gk]     k semi-edges at v
//
// Darts are numbered in record order: every edge or loop takes two ids (the
// forward dart, then its inverse), every semi-edge one. A file may hold
// several blocks, each starting at its own l= line.

struct PregraphText {
  Pregraph pregraph;
  std::optional<VoltagePregraph> voltages;
};

namespace detail {

struct LineCursor {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  [[nodiscard]] bool done() {
    skip_space();
    return pos >= text.size();
  }
  [[nodiscard]] std::size_t column() const { return pos + 1; }

  long integer(const char* what) {
    skip_space();
    long v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || (ptr != last && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw ParseError(line, column(), std::string("expected ") + what);
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
  }
};

inline std::string_view strip_comment(std::string_view s) {
  if (auto h = s.find('#'); h != std::string_view::npos) s = s.substr(0, h);
  return s;
}

}  // namespace detail

inline std::vector<PregraphText> parse_pregraphs(std::istream& in) {
  std::vector<PregraphText> out;
  std::optional<PregraphBuilder> builder;
  std::optional<long> modulus;
  std::vector<int> volts;
  std::size_t block_line = 0;

  auto finish = [&]() {
    if (!builder) return;
    PregraphText block{builder->build(), std::nullopt};
    if (modulus) {
      try {
        block.voltages.emplace(block.pregraph, static_cast<int>(*modulus), volts);
      } catch (const InvalidParamsError& e) {
        throw ParseError(block_line, 1, e.what());
      }
    }
    out.push_back(std::move(block));
    builder.reset();
    modulus.reset();
    volts.clear();
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    detail::LineCursor cur{detail::strip_comment(raw), line_no};
    if (cur.done()) continue;
    const char head = cur.text[cur.pos];
    if (head == 'l' || head == 'n') {
      ++cur.pos;
      cur.skip_space();
      if (cur.pos >= cur.text.size() || cur.text[cur.pos] != '=')
        throw ParseError(line_no, cur.column(), "expected '='");
      ++cur.pos;
      const long v = cur.integer(head == 'l' ? "order" : "modulus");
      if (!cur.done()) throw ParseError(line_no, cur.column(), "trailing input");
      if (head == 'l') {
        finish();
        if (v < 1) throw ParseError(line_no, 1, "order must be positive");
        builder.emplace(static_cast<int>(v));
        block_line = line_no;
      } else {
        if (!builder) throw ParseError(line_no, 1, "n= before l=");
        if (modulus) throw ParseError(line_no, 1, "duplicate n=");
        if (builder->build().dart_count() > 0)
          throw ParseError(line_no, 1, "n= must precede the records of its block");
        if (v < 1) throw ParseError(line_no, 1, "modulus must be positive");
        modulus = v;
      }
      continue;
    }
    if (head != 'E' && head != 'L' && head != 'S')
      throw ParseError(line_no, cur.column(), std::string("unknown record '") + head + "'");
    if (!builder) throw ParseError(line_no, 1, "record before l=");
    ++cur.pos;
    const long u = cur.integer("vertex");
    const long v = head == 'E' ? cur.integer("vertex") : u;
    const std::size_t count_col = (cur.skip_space(), cur.column());
    const long k = cur.integer("count");
    if (k < 1) throw ParseError(line_no, count_col, "count must be positive");
    std::vector<long> g;
    while (!cur.done()) g.push_back(cur.integer("voltage"));
    if (modulus && g.size() != static_cast<std::size_t>(k))
      throw ParseError(line_no, cur.column(),
                       "expected " + std::to_string(k) + " voltages, got " + std::to_string(g.size()));
    if (!modulus && !g.empty())
      throw ParseError(line_no, 1, "voltages given but no n= for this block");
    try {
      for (long i = 0; i < k; ++i) {
        if (head == 'S') {
          builder->add_semi_edge(static_cast<int>(u));
          if (modulus) volts.push_back(mod(g[static_cast<std::size_t>(i)], static_cast<int>(*modulus)));
        } else {
          builder->add_edge(static_cast<int>(u), static_cast<int>(v));
          if (modulus) {
            const int gi = mod(g[static_cast<std::size_t>(i)], static_cast<int>(*modulus));
            volts.push_back(gi);
            volts.push_back(mod(-static_cast<long>(gi), static_cast<int>(*modulus)));
          }
        }
      }
    } catch (const InvalidParamsError& e) {
      throw ParseError(line_no, 1, e.what());
    }
  }
  finish();
  return out;
}

inline std::vector<PregraphText> parse_pregraphs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_pregraphs(in);
}

/// Writes one block. Dart ids survive a round trip when each inverse pair
/// occupies consecutive ids, as produced by the parser and PregraphBuilder.
/// Consecutive records of the same kind on the same vertices are merged.
inline std::string format_pregraph(const Pregraph& p, const VoltagePregraph* vp = nullptr) {
  struct Record {
    char kind;
    Vertex u, v;
    int count;
    std::vector<int> g;
  };
  std::vector<Record> recs;
  for (Dart a = 0; a < p.dart_count(); ++a) {
    if (a > p.inv(a)) continue;
    const char kind = p.is_semi_edge(a) ? 'S' : (p.is_loop(a) ? 'L' : 'E');
    const Vertex u = p.beg(a);
    const Vertex v = p.end(a);
    if (recs.empty() || recs.back().kind != kind || recs.back().u != u || recs.back().v != v)
      recs.push_back({kind, u, v, 0, {}});
    ++recs.back().count;
    if (vp) recs.back().g.push_back(vp->voltage(a));
  }
  std::ostringstream os;
  os << "l=" << p.vertex_count() << '\n';
  if (vp) os << "n=" << vp->modulus() << '\n';
  for (const auto& r : recs) {
    os << r.kind << ' ' << r.u;
    if (r.kind == 'E') os << ' ' << r.v;
    os << ' ' << r.count;
    for (int g : r.g) os << ' ' << g;
    os << '\n';
  }
  return os.str();
}

inline std::string format_voltage_pregraph(const VoltagePregraph& vp) {
  return format_pregraph(vp.base(), &vp);
}

// graph6: N(n) followed by the upper triangle of the adjacency matrix,
// column by column, six bits per printable character (offset 63).

inline std::string to_graph6(const Graph& g) {
  const auto n = static_cast<unsigned long>(g.order());
  std::string out;
  auto put6 = [&](unsigned long v, int groups) {
    for (int i = groups - 1; i >= 0; --i) out += static_cast<char>(63 + ((v >> (6 * i)) & 63));
  };
  if (n <= 62) {
    put6(n, 1);
  } else if (n <= 258047) {
    out += '~';
    put6(n, 3);
  } else {
    out += "~~";
    put6(n, 6);
  }
  int acc = 0;
  int bits = 0;
  for (unsigned long j = 1; j < n; ++j) {
    for (unsigned long i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

/// Decodes one graph6 string; `line` is used for error positions.
inline Graph from_graph6(std::string_view s, std::size_t line = 1) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t offset = 0;
  if (s.substr(0, header.size()) == header) offset = header.size();
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ')) s.remove_suffix(1);
  std::size_t pos = offset;
  auto take = [&]() -> unsigned long {
    if (pos >= s.size()) throw ParseError(line, pos + 1, "graph6 string ends early");
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError(line, pos + 1, "invalid graph6 character");
    ++pos;
    return c - 63UL;
  };
  auto groups = [&](int count) {
    unsigned long v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | take();
    return v;
  };
  unsigned long n = 0;
  if (pos < s.size() && s[pos] == '~') {
    ++pos;
    if (pos < s.size() && s[pos] == '~') {
      ++pos;
      n = groups(6);
    } else {
      n = groups(3);
    }
  } else {
    n = take();
  }
  if (n > 1'000'000) throw ParseError(line, offset + 1, "graph6 order is too large");
  Graph g(static_cast<int>(n));
  unsigned long acc = 0;
  int left = 0;
  for (unsigned long j = 1; j < n; ++j) {
    for (unsigned long i = 0; i < j; ++i) {
      if (left == 0) {
        acc = take();
        left = 6;
      }
      --left;
      if ((acc >> left) & 1UL) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (pos != s.size()) throw ParseError(line, pos + 1, "trailing characters after graph6 data");
  return g;
}

/// Edge list: first non-comment line is the vertex count, then one "u v"
/// pair per line, vertices numbered from 0.
inline Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Graph> g;
  while (std::getline(in, raw)) {
    ++line_no;
    detail::LineCursor cur{detail::strip_comment(raw), line_no};
    if (cur.done()) continue;
    if (!g) {
      const long n = cur.integer("vertex count");
      if (n < 0) throw ParseError(line_no, 1, "vertex count must be nonnegative");
      if (!cur.done()) throw ParseError(line_no, cur.column(), "trailing input");
      g.emplace(static_cast<int>(n));
      continue;
    }
    const std::size_t col = (cur.skip_space(), cur.column());
    const long u = cur.integer("vertex");
    const long v = cur.integer("vertex");
    if (!cur.done()) throw ParseError(line_no, cur.column(), "trailing input");
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
      throw ParseError(line_no, col, "vertex out of range");
    if (u == v) throw ParseError(line_no, col, "loops are not allowed");
    if (g->has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError(line_no, col, "duplicate edge");
    g->add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!g) throw ParseError(line_no + 1, 1, "missing vertex count");
  return std::move(*g);
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace nutforge
