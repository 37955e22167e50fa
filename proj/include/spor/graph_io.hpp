#pragma once

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spor/graph.hpp"

namespace spor {

// Text format: "n m" then m lines "u v" with u < v.

inline void write_text(std::ostream& out, std::size_t n, std::span<const Edge> edges) {
  out << n << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) {
    const Edge c = Edge::canonical(e.u, e.v);
    out << c.u << ' ' << c.v << '\n';
  }
}

inline void write_text(std::ostream& out, const Graph& g) {
  write_text(out, g.num_nodes(), g.edges());
}

struct EdgeListFile {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

inline EdgeListFile read_edge_list_text(std::istream& in) {
  EdgeListFile f;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  if (!(in >> n >> m)) throw GraphError(GraphError::Kind::Parse, "missing 'n m' header");
  f.n = n;
  f.edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!(in >> u >> v)) {
      throw GraphError(GraphError::Kind::Parse,
                       "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    if (u >= n || v >= n) {
      throw GraphError(GraphError::Kind::EndpointOutOfRange,
                       "edge line " + std::to_string(i + 2) + " references a node >= n");
    }
    if (u >= v) {
      throw GraphError(GraphError::Kind::Parse,
                       "edge line " + std::to_string(i + 2) + " is not in u < v form");
    }
    f.edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  std::string rest;
  if (in >> rest) throw GraphError(GraphError::Kind::Parse, "trailing data after edge list");
  return f;
}

inline Graph read_text(std::istream& in) {
  EdgeListFile f = read_edge_list_text(in);
  return Graph::from_edge_list(f.n, f.edges);
}

// Binary format: magic "SPOR1", u64 n, u64 m, (n+1) u64 offsets, 2m u64
// neighbor ids. All integers little-endian.

inline constexpr std::array<char, 5> kBinaryMagic = {'S', 'P', 'O', 'R', '1'};

namespace detail {

inline void put_u64(std::ostream& out, std::uint64_t x) {
  std::array<unsigned char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

inline std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 8)) {
    throw GraphError(GraphError::Kind::Parse, "truncated binary graph");
  }
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return x;
}

}  // namespace detail

inline void write_binary(std::ostream& out, const Graph& g) {
  out.write(kBinaryMagic.data(), kBinaryMagic.size());
  detail::put_u64(out, g.num_nodes());
  detail::put_u64(out, g.num_edges());
  for (std::uint64_t off : g.offsets()) detail::put_u64(out, off);
  for (NodeId w : g.adjacency()) detail::put_u64(out, w);
}

inline Graph read_binary(std::istream& in) {
  std::array<char, 5> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kBinaryMagic) {
    throw GraphError(GraphError::Kind::Parse, "bad magic, expected SPOR1");
  }
  const std::uint64_t n = detail::get_u64(in);
  const std::uint64_t m = detail::get_u64(in);
  if (n > 0xffffffffULL) throw GraphError(GraphError::Kind::BadSize, "node count exceeds 32-bit ids");
  std::vector<std::uint64_t> offsets(n + 1);
  for (auto& off : offsets) off = detail::get_u64(in);
  if (offsets.back() != 2 * m) throw GraphError(GraphError::Kind::Parse, "offsets do not match 2m");
  std::vector<NodeId> nbrs(2 * m);
  for (auto& w : nbrs) {
    const std::uint64_t x = detail::get_u64(in);
    if (x >= n) throw GraphError(GraphError::Kind::EndpointOutOfRange, "neighbor id out of range");
    w = static_cast<NodeId>(x);
  }
  return Graph::from_csr(std::move(offsets), std::move(nbrs));
}

/// Reads either format, sniffing the magic bytes.
inline Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError(GraphError::Kind::Io, "cannot open " + path);
  std::array<char, 5> head{};
  in.read(head.data(), head.size());
  const bool binary = in.gcount() == 5 && head == kBinaryMagic;
  in.clear();
  in.seekg(0);
  return binary ? read_binary(in) : read_text(in);
}

inline EdgeListFile load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphError::Kind::Io, "cannot open " + path);
  return read_edge_list_text(in);
}

inline void save_graph(const std::string& path, const Graph& g, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError(GraphError::Kind::Io, "cannot write " + path);
  if (binary) {
    write_binary(out, g);
  } else {
    write_text(out, g);
  }
  if (!out) throw GraphError(GraphError::Kind::Io, "write failed for " + path);
}

}  // namespace spor
