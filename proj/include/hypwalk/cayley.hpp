#pragma once

#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypwalk/errors.hpp"
#include "hypwalk/framing.hpp"

namespace hypwalk {

struct CayleyEdge {
  int src;
  int dst;
  int letter;
};

struct CayleyBall {
  std::string framing;
  int radius = 0;
  std::vector<std::string> labels;  // normal form of each vertex
  std::vector<int> distance;
  std::vector<CayleyEdge> edges;  // edges with both ends inside the ball

  std::size_t size() const { return labels.size(); }
  std::string to_csv() const;  // src,dst,generator
};

inline constexpr int kDefaultMaxRadius = 12;

// Breadth-first ball of the Cayley graph for any framing.
CayleyBall cayley_ball(const Framing& f, int radius, int max_radius = kDefaultMaxRadius,
                       std::size_t max_vertices = 20'000'000);

// Generic BFS used by the oracles: key type K, right-multiplication step(K, letter).
template <class K, class Hash, class Step>
struct BallSearch {
  std::vector<K> elements;
  std::vector<int> distance;
  std::unordered_map<K, int, Hash> index;
  std::vector<CayleyEdge> edges;

  BallSearch(const K& identity, const std::vector<int>& moves, Step step, int radius, std::size_t max_vertices,
             bool keep_edges = false) {
    elements.push_back(identity);
    distance.push_back(0);
    index.emplace(identity, 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      int dv = distance[v];
      for (int m : moves) {
        K next = step(elements[v], m);
        auto it = index.find(next);
        int id;
        if (it == index.end()) {
          if (dv + 1 > radius) continue;
          if (elements.size() >= max_vertices)
            throw Error(ErrorKind::ResourceLimit, "Cayley ball exceeds the vertex limit");
          id = static_cast<int>(elements.size());
          elements.push_back(std::move(next));
          distance.push_back(dv + 1);
          index.emplace(elements.back(), id);
          queue.push_back(id);
        } else {
          id = it->second;
        }
        if (keep_edges) edges.push_back({v, id, m});
      }
    }
  }
};

}  // namespace hypwalk
