#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monoseq {

// Raised when a point set violates general position: three collinear points
// or two parallel supporting lines (which includes vertical supporting lines,
// since those tie in the starting horizontal projection).
class DegeneratePosition : public std::runtime_error {
 public:
  using Triple = std::vector<int>;
  using PairOfPairs = std::pair<std::pair<int, int>, std::pair<int, int>>;

  DegeneratePosition(std::vector<Triple> collinear, std::vector<PairOfPairs> parallel,
                     std::vector<std::pair<int, int>> vertical);

  const std::vector<Triple>& collinear_triples() const { return collinear_; }
  const std::vector<PairOfPairs>& parallel_pairs() const { return parallel_; }
  const std::vector<std::pair<int, int>>& vertical_pairs() const { return vertical_; }

 private:
  std::vector<Triple> collinear_;
  std::vector<PairOfPairs> parallel_;
  std::vector<std::pair<int, int>> vertical_;
};

// Two points have the same inner product with a projection direction.
class ProjectionTie : public std::runtime_error {
 public:
  ProjectionTie(int a, int b);
  std::pair<int, int> pair() const { return {a_, b_}; }

 private:
  int a_;
  int b_;
};

// Two dual lines meet a vertical line at the same ordinate.
class OrdinateTie : public std::runtime_error {
 public:
  OrdinateTie(int a, int b);
  std::pair<int, int> pair() const { return {a_, b_}; }

 private:
  int a_;
  int b_;
};

class DegenerateMap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidWiring : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monoseq
