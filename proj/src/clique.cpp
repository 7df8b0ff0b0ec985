#include "pcw/clique.hpp"

#include <algorithm>

namespace pcw {

namespace {

class Search {
 public:
  explicit Search(const Graph& adj) : adj_(adj) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> all(adj_.size());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    // Higher degree first tends to find large cliques early.
    std::stable_sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
      return degree(a) > degree(b);
    });
    expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::size_t degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count(adj_[v].begin(), adj_[v].end(), true));
  }

  // Greedy colouring; colour[k] bounds the clique size among cand[0..k].
  void colour(const std::vector<std::size_t>& cand, std::vector<std::size_t>& order,
              std::vector<std::size_t>& bound) const {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : cand) {
      std::size_t c = 0;
      while (c < classes.size() &&
             std::any_of(classes[c].begin(), classes[c].end(),
                         [&](std::size_t u) { return adj_[u][v]; })) {
        ++c;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    order.clear();
    bound.clear();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t v : classes[c]) {
        order.push_back(v);
        bound.push_back(c + 1);
      }
    }
  }

  void expand(const std::vector<std::size_t>& cand) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    colour(cand, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + bound[k] <= best_.size()) return;
      const std::size_t v = order[k];
      current_.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t u = order[i];
        if (adj_[v][u]) next.push_back(u);
      }
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
    }
  }

  const Graph& adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> maximum_clique(const Graph& adj) { return Search(adj).run(); }

}  // namespace pcw
