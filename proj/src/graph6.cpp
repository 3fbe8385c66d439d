#include "orthospace/graph6.hpp"

namespace orthospace {

// Short form: one size byte n+63, then the upper triangle read column by
// column (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed into 6-bit groups
// most significant bit first, each group offset by 63 into printable ASCII.

std::string to_graph6(const OrthoSpace& space) {
  int n = space.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6 short form is limited to 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (space.orthogonal(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

OrthoSpace from_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  int n = static_cast<unsigned char>(text[0]) - 63;
  if (n < 0 || n > 62)
    throw std::invalid_argument("graph6: size header is not a short-form count (0..62)");
  if (n == 0) throw std::invalid_argument("graph6: a space needs at least one point");

  std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t body_len = (pairs + 5) / 6;
  if (text.size() - 1 != body_len)
    throw std::invalid_argument("graph6: body length does not match size header");

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  int i = 0, j = 1;
  for (std::size_t k = 1; k < text.size(); ++k) {
    int c = static_cast<unsigned char>(text[k]) - 63;
    if (c < 0 || c > 63)
      throw std::invalid_argument("graph6: body character outside graph6 alphabet");
    for (int b = 5; b >= 0; --b, ++bit) {
      bool set = (c >> b) & 1;
      if (bit >= pairs) {
        if (set) throw std::invalid_argument("graph6: non-zero padding bits");
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return OrthoSpace::from_edges(n, edges);
}

}  // namespace orthospace
