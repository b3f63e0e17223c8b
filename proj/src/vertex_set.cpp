#include "forcekit/vertex_set.hpp"

#include <algorithm>
#include <sstream>

namespace forcekit {

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) bits_ |= std::uint64_t{1} << v;
}

std::vector<int> VertexSet::members() const { return {begin(), end()}; }

std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

bool lex_less(VertexSet a, VertexSet b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace forcekit
