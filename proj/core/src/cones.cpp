#include "lspan/cones.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lspan/graph.hpp"

namespace lspan {

namespace {

constexpr int kMaxCones = 1 << 22;
constexpr double kTol = 1e-12;

double angle_between(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

}  // namespace

struct ConeFamily::Tree {
  struct Node {
    int leaf = -1;
    int child[2] = {-1, -1};
    // Inverse generator matrix of child[0]: direction x lies in that cone iff
    // every coordinate of inv * x is nonnegative.
    Eigen::MatrixXd inv;
  };
  std::vector<Node> nodes;
  std::vector<int> roots;  // one per orthant

  int build(std::vector<Eigen::VectorXd> gens, double angle, int& leaves) {
    int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    const int d = static_cast<int>(gens.size());
    int ba = 0, bb = 1;
    double widest = -1.0;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        double t = angle_between(gens[a], gens[b]);
        if (t > widest) {
          widest = t;
          ba = a;
          bb = b;
        }
      }
    if (widest <= angle) {
      if (leaves >= kMaxCones) throw InvalidInput("cone partition too fine for this dimension and angle");
      nodes[id].leaf = leaves++;
      return id;
    }
    Eigen::VectorXd mid = (gens[ba] + gens[bb]).normalized();
    std::vector<Eigen::VectorXd> left = gens, right = std::move(gens);
    left[bb] = mid;
    right[ba] = mid;
    Eigen::MatrixXd m(d, d);
    for (int j = 0; j < d; ++j) m.col(j) = left[j];
    nodes[id].inv = m.inverse();
    int l = build(std::move(left), angle, leaves);
    int r = build(std::move(right), angle, leaves);
    nodes[id].child[0] = l;
    nodes[id].child[1] = r;
    return id;
  }

  int lookup(int node, const Eigen::VectorXd& x) const {
    while (nodes[node].leaf < 0) {
      const Node& nd = nodes[node];
      Eigen::VectorXd lambda = nd.inv * x;
      double scale = x.norm();
      node = lambda.minCoeff() >= -kTol * scale ? nd.child[0] : nd.child[1];
    }
    return nodes[node].leaf;
  }
};

ConeFamily::ConeFamily(int d, double angle) : d_(d), angle_(angle) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  if (!(angle > 0.0)) throw InvalidInput("cone angle must be positive");
  if (d == 1) {
    count_ = 2;
  } else if (d == 2) {
    count_ = static_cast<int>(std::ceil(2.0 * std::numbers::pi / angle - 1e-9));
    count_ = std::max(count_, 1);
  } else {
    tree_ = std::make_unique<Tree>();
    int leaves = 0;
    for (int orth = 0; orth < (1 << d); ++orth) {
      std::vector<Eigen::VectorXd> gens(d, Eigen::VectorXd::Zero(d));
      for (int j = 0; j < d; ++j) gens[j][j] = (orth >> j & 1) ? -1.0 : 1.0;
      tree_->roots.push_back(tree_->build(std::move(gens), angle, leaves));
    }
    count_ = leaves;
  }
}

ConeFamily::~ConeFamily() = default;
ConeFamily::ConeFamily(ConeFamily&&) noexcept = default;
ConeFamily& ConeFamily::operator=(ConeFamily&&) noexcept = default;

int ConeFamily::cone_of(const double* dir) const {
  if (d_ == 1) return dir[0] >= 0.0 ? 0 : 1;
  if (d_ == 2) {
    if (dir[0] == 0.0 && dir[1] == 0.0) return 0;
    double a = std::atan2(dir[1], dir[0]);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    int j = static_cast<int>(std::floor(a / angle_));
    return std::clamp(j, 0, count_ - 1);
  }
  Eigen::Map<const Eigen::VectorXd> x(dir, d_);
  if (x.squaredNorm() == 0.0) return 0;
  int orth = 0;
  for (int j = 0; j < d_; ++j)
    if (dir[j] < 0.0) orth |= 1 << j;
  return tree_->lookup(tree_->roots[orth], x);
}

double yao_cone_angle(double epsBase) {
  if (!(epsBase > 0.0)) throw InvalidInput("base epsilon must be positive");
  // cos t - sin t = sqrt(2) cos(t + pi/4).
  double c = 1.0 / ((1.0 + epsBase) * std::numbers::sqrt2);
  return std::acos(c) - std::numbers::pi / 4.0;
}

}  // namespace lspan
