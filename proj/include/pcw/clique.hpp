#ifndef PCW_CLIQUE_HPP
#define PCW_CLIQUE_HPP

#include <cstddef>
#include <vector>

namespace pcw {

// Symmetric adjacency matrix without self loops.
using Graph = std::vector<std::vector<bool>>;

// An exact maximum clique by branch and bound with a greedy colouring bound.
// Vertices of the returned clique are sorted.
std::vector<std::size_t> maximum_clique(const Graph& adj);

}  // namespace pcw

#endif  // PCW_CLIQUE_HPP
